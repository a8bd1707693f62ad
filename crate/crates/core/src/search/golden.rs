use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Column, TableRow};
use crate::error::{Error, Result};
use crate::gf::Field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub n: u32,
    pub cl: usize,
    pub cells: BTreeMap<Column, Option<u32>>,
}

/// A table in the CSV layout written by [`super::to_csv`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenTable {
    pub columns: Vec<Column>,
    pub rows: Vec<GoldenRow>,
}

impl GoldenTable {
    pub fn from_rows(field: Field, rows: &[TableRow]) -> Self {
        let columns = Column::for_field(field).to_vec();
        let rows = rows
            .iter()
            .map(|r| GoldenRow {
                n: r.n,
                cl: r.code_length,
                cells: columns.iter().map(|&c| (c, r.value(c))).collect(),
            })
            .collect();
        GoldenTable { columns, rows }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let headers = reader.headers().map_err(|e| Error::Parse(e.to_string()))?.clone();
        if headers.len() < 3 || &headers[0] != "n" || &headers[1] != "cl" {
            return Err(Error::Parse("table header must start with n,cl and name at least one column".into()));
        }
        let columns = headers
            .iter()
            .skip(2)
            .map(|h| Column::from_header(h).ok_or_else(|| Error::Parse(format!("unknown column {h:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let mut rows = Vec::new();
        for (line, record) in reader.records().enumerate() {
            let record = record.map_err(|e| Error::Parse(e.to_string()))?;
            if record.len() != headers.len() {
                return Err(Error::Parse(format!("row {}: expected {} fields", line + 1, headers.len())));
            }
            let num = |s: &str| s.parse::<u32>().map_err(|_| Error::Parse(format!("row {}: bad number {s:?}", line + 1)));
            let n = num(&record[0])?;
            let cl = num(&record[1])? as usize;
            let mut cells = BTreeMap::new();
            for (c, v) in columns.iter().zip(record.iter().skip(2)) {
                cells.insert(*c, if v.is_empty() { None } else { Some(num(v)?) });
            }
            rows.push(GoldenRow { n, cl, cells });
        }
        Ok(GoldenTable { columns, rows })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellStatus {
    Equal,
    Mismatch,
    /// The computed table has no row for this `(n, cl)`.
    Absent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffEntry {
    pub n: u32,
    pub cl: usize,
    pub column: Column,
    pub expected: Option<u32>,
    pub got: Option<u32>,
    pub status: CellStatus,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    pub entries: Vec<DiffEntry>,
}

impl DiffReport {
    pub fn count(&self, status: CellStatus) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn has_mismatch(&self) -> bool {
        self.count(CellStatus::Mismatch) > 0
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &DiffEntry> {
        self.entries.iter().filter(|e| e.status == CellStatus::Mismatch)
    }
}

fn show(v: Option<u32>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            if e.status != CellStatus::Equal {
                let tag = if e.status == CellStatus::Mismatch { "MISMATCH" } else { "absent" };
                writeln!(f, "{tag} n={} cl={} {}: expected {} got {}", e.n, e.cl, e.column, show(e.expected), show(e.got))?;
            }
        }
        write!(
            f,
            "{} equal, {} mismatch, {} absent",
            self.count(CellStatus::Equal),
            self.count(CellStatus::Mismatch),
            self.count(CellStatus::Absent)
        )
    }
}

/// Compares every cell of `expected` with `computed`. Rows of `computed`
/// missing from `expected` are ignored.
pub fn compare_with_expected(computed: &GoldenTable, expected: &GoldenTable) -> DiffReport {
    let index: BTreeMap<(u32, usize), &GoldenRow> = computed.rows.iter().map(|r| ((r.n, r.cl), r)).collect();
    let mut entries = Vec::new();
    for row in &expected.rows {
        let got_row = index.get(&(row.n, row.cl));
        for &column in &expected.columns {
            let want = row.cells.get(&column).copied().flatten();
            let (got, status) = match got_row {
                None => (None, CellStatus::Absent),
                Some(r) => {
                    let got = r.cells.get(&column).copied().flatten();
                    (got, if got == want { CellStatus::Equal } else { CellStatus::Mismatch })
                }
            };
            entries.push(DiffEntry { n: row.n, cl: row.cl, column, expected: want, got, status });
        }
    }
    DiffReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: &str = "n,cl,SD(I),SD(II),NSD\n3,6,2,,3\n3,8,2,4,3\n";

    #[test]
    fn parse_and_self_compare() {
        let t = GoldenTable::parse(T).unwrap();
        assert_eq!(t.columns, vec![Column::SdI, Column::SdII, Column::Nsd]);
        assert_eq!(t.rows[0].cells[&Column::SdII], None);
        assert_eq!(t.rows[1].cells[&Column::SdII], Some(4));
        let d = compare_with_expected(&t, &t);
        assert_eq!(d.count(CellStatus::Equal), 6);
        assert!(!d.has_mismatch());
    }

    #[test]
    fn corrupted_cell_and_missing_row() {
        let t = GoldenTable::parse(T).unwrap();
        let bad = GoldenTable::parse("n,cl,SD(I),SD(II),NSD\n3,6,2,,4\n3,8,2,4,3\n").unwrap();
        let d = compare_with_expected(&t, &bad);
        assert_eq!(d.count(CellStatus::Mismatch), 1);
        let m = d.mismatches().next().unwrap();
        assert_eq!((m.n, m.cl, m.column, m.expected, m.got), (3, 6, Column::Nsd, Some(4), Some(3)));

        let partial = GoldenTable { columns: t.columns.clone(), rows: vec![t.rows[0].clone()] };
        let d = compare_with_expected(&partial, &t);
        assert_eq!(d.count(CellStatus::Absent), 3);
        assert!(!d.has_mismatch());
    }

    #[test]
    fn malformed_tables() {
        assert!(GoldenTable::parse("a,b,c\n").is_err());
        assert!(GoldenTable::parse("n,cl,SD(X)\n").is_err());
        assert!(GoldenTable::parse("n,cl,SD\n3,6,x\n").is_err());
    }
}
