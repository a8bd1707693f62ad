//! Table scans over every coset splitting and every parameter tuple.
//!
//! For each odd `n`, every canonical `base`-cyclotomic coset splitting is
//! combined with all `(r, s, t)` in `F_q^3` (and, for bordered codes, all
//! `(alpha, beta, gamma)` in `F_q^3`). Each code is classified by duality and
//! its exact minimum distance computed; each table column keeps the largest
//! distance seen together with one witness code.

mod golden;
mod registry;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use golden::{compare_with_expected, CellStatus, DiffEntry, DiffReport, GoldenRow, GoldenTable};
pub use registry::{example_ids, lookup_example, registry, reproduce_example, ExampleSpec};

use crate::codeprops::{classify_generator, distance_only, BinaryType, DualityClass};
use crate::ddc::{build, CodeKind, DdcCode, DdcCodeJson};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::par;
use crate::splitting::{enumerate_coset_splittings, gcd, Splitting};

/// A table column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Column {
    #[serde(rename = "SD(I)")]
    SdI,
    #[serde(rename = "SD(II)")]
    SdII,
    #[serde(rename = "SD")]
    Sd,
    #[serde(rename = "SD(E)")]
    SdE,
    #[serde(rename = "SD(H)")]
    SdH,
    #[serde(rename = "NSD")]
    Nsd,
}

impl Column {
    pub const ALL: [Column; 6] =
        [Column::SdI, Column::SdII, Column::Sd, Column::SdE, Column::SdH, Column::Nsd];

    pub fn header(self) -> &'static str {
        match self {
            Column::SdI => "SD(I)",
            Column::SdII => "SD(II)",
            Column::Sd => "SD",
            Column::SdE => "SD(E)",
            Column::SdH => "SD(H)",
            Column::Nsd => "NSD",
        }
    }

    pub fn from_header(h: &str) -> Option<Column> {
        Column::ALL.into_iter().find(|c| c.header() == h.trim())
    }

    /// Duality columns reported for codes over `field`.
    pub fn for_field(field: Field) -> &'static [Column] {
        match field.q() {
            2 => &[Column::SdI, Column::SdII, Column::Nsd],
            4 => &[Column::SdE, Column::SdH, Column::Nsd],
            _ => &[Column::Sd, Column::Nsd],
        }
    }

    /// Columns a code with the given duality class counts towards.
    pub fn classify(field: Field, duality: &DualityClass) -> Vec<Column> {
        let euclidean = duality.self_dual_euclidean;
        match field.q() {
            2 => vec![match duality.binary_type {
                Some(BinaryType::I) => Column::SdI,
                Some(BinaryType::II) => Column::SdII,
                None => Column::Nsd,
            }],
            4 => {
                let hermitian = duality.self_dual_hermitian == Some(true);
                let mut cols = Vec::new();
                if euclidean {
                    cols.push(Column::SdE);
                }
                if hermitian {
                    cols.push(Column::SdH);
                }
                if cols.is_empty() {
                    cols.push(Column::Nsd);
                }
                cols
            }
            _ => vec![if euclidean { Column::Sd } else { Column::Nsd }],
        }
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.header())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub field: Field,
    pub base: u32,
    pub n_values: Vec<u32>,
    pub kinds: Vec<CodeKind>,
    /// Skip `(r, s, t)` with `s > t`: over a canonical splitting such a code
    /// is equivalent to the one with `s` and `t` exchanged.
    pub dedup: bool,
    pub workers: Option<usize>,
}

impl SearchConfig {
    pub fn new(field: Field, base: u32, n_values: impl IntoIterator<Item = u32>) -> Self {
        SearchConfig {
            field,
            base,
            n_values: n_values.into_iter().collect(),
            kinds: vec![CodeKind::Pure, CodeKind::Bordered],
            dedup: true,
            workers: None,
        }
    }

    /// Odd `n` in `min..=max`.
    pub fn odd_range(min: u32, max: u32) -> Vec<u32> {
        (min.max(3)..=max).filter(|n| !n.is_multiple_of(2)).collect()
    }
}

/// Largest distance seen in one column and the code achieving it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub distance: u32,
    pub witness: DdcCodeJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u32,
    pub code_length: usize,
    pub kind: CodeKind,
    pub cells: BTreeMap<Column, Cell>,
    /// Number of codes examined for this row.
    pub codes: usize,
}

impl TableRow {
    pub fn value(&self, column: Column) -> Option<u32> {
        self.cells.get(&column).map(|c| c.distance)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOutcome {
    pub q: u8,
    pub base: u32,
    pub rows: Vec<TableRow>,
    /// Moduli skipped because `gcd(base, n) != 1`.
    pub skipped: Vec<u32>,
    /// Codes that failed to build or analyze, with the error.
    pub failures: Vec<String>,
}

/// Tie-break key: splitting `s1`, then the parameter codes.
type WitnessKey = (Vec<u32>, [u8; 6]);

struct Evaluated {
    columns: Vec<Column>,
    distance: u32,
    key: WitnessKey,
    witness: DdcCode,
}

fn parameter_tuples(q: u8, dedup: bool) -> Vec<[u8; 3]> {
    let mut out = Vec::new();
    for r in 0..q {
        for s in 0..q {
            for t in 0..q {
                if !dedup || s <= t {
                    out.push([r, s, t]);
                }
            }
        }
    }
    out
}

fn border_tuples(q: u8) -> Vec<[u8; 3]> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for g in 0..q {
                out.push([a, b, g]);
            }
        }
    }
    out
}

fn evaluate(field: Field, kind: CodeKind, sp: &Splitting, rst: [u8; 3], border: Option<[u8; 3]>) -> Result<Evaluated> {
    let code = build(kind, field, sp, rst, border)?;
    let duality = classify_generator(&code.generator, None, kind == CodeKind::Pure, 0)?;
    let distance = distance_only(&code.generator)?;
    let b = border.unwrap_or([0; 3]);
    Ok(Evaluated {
        columns: Column::classify(field, &duality),
        distance,
        key: (sp.s1.clone(), [rst[0], rst[1], rst[2], b[0], b[1], b[2]]),
        witness: code,
    })
}

/// Scans one `(n, kind)` row given the splittings of `n`.
fn scan_row(config: &SearchConfig, n: u32, kind: CodeKind, splittings: &[Splitting]) -> (Option<TableRow>, Vec<String>) {
    let q = config.field.q();
    let rst = parameter_tuples(q, config.dedup);
    let borders: Vec<Option<[u8; 3]>> = match kind {
        CodeKind::Pure => vec![None],
        CodeKind::Bordered => border_tuples(q).into_iter().map(Some).collect(),
    };
    let mut tasks = Vec::with_capacity(splittings.len() * rst.len() * borders.len());
    for (si, _) in splittings.iter().enumerate() {
        for &p in &rst {
            for &b in &borders {
                tasks.push((si, p, b));
            }
        }
    }
    let results = par::map_collect(&tasks, |&(si, p, b)| evaluate(config.field, kind, &splittings[si], p, b));

    let mut best: BTreeMap<Column, (u32, WitnessKey, DdcCode)> = BTreeMap::new();
    let mut failures = Vec::new();
    for (task, res) in tasks.iter().zip(results) {
        match res {
            Ok(ev) => {
                for col in ev.columns.iter().copied() {
                    let better = match best.get(&col) {
                        None => true,
                        Some((d, key, _)) => ev.distance > *d || (ev.distance == *d && ev.key < *key),
                    };
                    if better {
                        best.insert(col, (ev.distance, ev.key.clone(), ev.witness.clone()));
                    }
                }
            }
            Err(e) => failures.push(format!("n={n} {kind} splitting #{} params {:?} border {:?}: {e}", task.0, task.1, task.2)),
        }
    }
    if tasks.is_empty() {
        return (None, failures);
    }
    let code_length = match kind {
        CodeKind::Pure => 2 * n as usize,
        CodeKind::Bordered => 2 * n as usize + 2,
    };
    let cells = best
        .into_iter()
        .map(|(col, (distance, _, code))| (col, Cell { distance, witness: code.to_json_value() }))
        .collect();
    (Some(TableRow { n, code_length, kind, cells, codes: tasks.len() }), failures)
}

/// Runs the scan. Rows come out in ascending `(n, code length)`; results do
/// not depend on the number of workers.
pub fn scan(config: &SearchConfig) -> Result<ScanOutcome> {
    if config.base == 0 {
        return Err(Error::Domain("cyclotomic base must be positive".into()));
    }
    par::with_workers(config.workers, || {
        let mut out = ScanOutcome { q: config.field.q(), base: config.base, ..Default::default() };
        let mut ns = config.n_values.clone();
        ns.sort_unstable();
        ns.dedup();
        let mut kinds = config.kinds.clone();
        kinds.sort_unstable();
        kinds.dedup();
        for n in ns {
            if n < 3 || n.is_multiple_of(2) {
                return Err(Error::Domain(format!("n must be odd and at least 3, got {n}")));
            }
            if gcd(config.base as u64, n as u64) != 1 {
                out.skipped.push(n);
                continue;
            }
            let splittings = enumerate_coset_splittings(n, config.base)?;
            for &kind in &kinds {
                let (row, failures) = scan_row(config, n, kind, &splittings);
                out.failures.extend(failures);
                out.rows.extend(row);
            }
        }
        Ok(out)
    })
}

/// Re-derives every cell from its witness code.
pub fn verify_witnesses(field: Field, rows: &[TableRow]) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    for row in rows {
        for (col, cell) in &row.cells {
            let code = cell.witness.build()?;
            if code.field() != field {
                problems.push(format!("n={} {col}: witness over the wrong field", row.n));
                continue;
            }
            let duality = classify_generator(&code.generator, None, code.kind == CodeKind::Pure, 0)?;
            let d = distance_only(&code.generator)?;
            if !Column::classify(field, &duality).contains(col) || d != cell.distance {
                problems.push(format!(
                    "n={} cl={} {col}: witness gives d={d}, columns {:?}",
                    row.n,
                    row.code_length,
                    Column::classify(field, &duality)
                ));
            }
        }
    }
    Ok(problems)
}

/// CSV with columns `n,cl,<duality columns of the field>`; absent cells are blank.
pub fn to_csv(field: Field, rows: &[TableRow]) -> String {
    let cols = Column::for_field(field);
    let mut out = String::from("n,cl");
    for c in cols {
        out.push(',');
        out.push_str(c.header());
    }
    out.push('\n');
    for row in rows {
        out.push_str(&format!("{},{}", row.n, row.code_length));
        for &c in cols {
            out.push(',');
            if let Some(v) = row.value(c) {
                out.push_str(&v.to_string());
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_grid_sizes() {
        assert_eq!(parameter_tuples(2, false).len(), 8);
        assert_eq!(parameter_tuples(2, true).len(), 6);
        assert_eq!(parameter_tuples(3, true).len(), 18);
        assert_eq!(border_tuples(5).len(), 125);
    }

    #[test]
    fn small_binary_rows() {
        let cfg = SearchConfig::new(Field::GF2, 4, [3, 5]);
        let out = scan(&cfg).unwrap();
        assert!(out.failures.is_empty());
        let key: Vec<(u32, usize)> = out.rows.iter().map(|r| (r.n, r.code_length)).collect();
        assert_eq!(key, vec![(3, 6), (3, 8), (5, 10), (5, 12)]);
        assert!(verify_witnesses(Field::GF2, &out.rows).unwrap().is_empty());
        let csv = to_csv(Field::GF2, &out.rows);
        assert!(csv.starts_with("n,cl,SD(I),SD(II),NSD\n"));
    }

    type Bests = Vec<(u32, usize, Vec<(Column, u32)>)>;

    fn distances(out: &ScanOutcome) -> Bests {
        out.rows
            .iter()
            .map(|r| (r.n, r.code_length, r.cells.iter().map(|(c, v)| (*c, v.distance)).collect()))
            .collect()
    }

    #[test]
    fn dedup_keeps_every_best() {
        for (field, max_n) in [(Field::GF2, 11), (Field::GF3, 7), (Field::GF4, 5)] {
            let mut cfg = SearchConfig::new(field, 4, SearchConfig::odd_range(3, max_n));
            let with = scan(&cfg).unwrap();
            cfg.dedup = false;
            let without = scan(&cfg).unwrap();
            assert_eq!(distances(&with), distances(&without), "{field}");
        }
    }

    #[test]
    fn worker_count_does_not_change_rows() {
        let mut cfg = SearchConfig::new(Field::GF3, 4, SearchConfig::odd_range(3, 7));
        cfg.workers = Some(1);
        let one = scan(&cfg).unwrap();
        cfg.workers = Some(3);
        assert_eq!(scan(&cfg).unwrap(), one);
    }

    #[test]
    fn skipped_moduli() {
        let cfg = SearchConfig::new(Field::GF3, 9, [3, 5]);
        let out = scan(&cfg).unwrap();
        assert_eq!(out.skipped, vec![3]);
        assert!(out.rows.iter().all(|r| r.n == 5));
        assert!(scan(&SearchConfig::new(Field::GF3, 4, [4])).is_err());
    }
}
