//! Dense matrices and vectors over a [`Field`].
//!
//! Entries are stored as field codes (`u8`) in row-major order; every entry of
//! a matrix belongs to the matrix's field.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    entries: Vec<u8>,
}

impl Vector {
    pub fn new(field: Field, entries: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&v| v >= field.q()) {
            return Err(Error::Domain(format!("{bad} is not an element code of {field}")));
        }
        Ok(Vector { field, entries })
    }

    pub fn zeros(field: Field, len: usize) -> Self {
        Vector { field, entries: vec![0; len] }
    }

    pub fn from_elements(elements: &[FieldElement]) -> Result<Self> {
        let Some(first) = elements.first() else {
            return Err(Error::Usage("cannot infer the field of an empty vector".into()));
        };
        let field = first.field();
        let mut entries = Vec::with_capacity(elements.len());
        for e in elements {
            if e.field() != field {
                return Err(Error::FieldMismatch { left: field.q(), right: e.field().q() });
            }
            entries.push(e.value());
        }
        Ok(Vector { field, entries })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> FieldElement {
        self.field.element(self.entries[i]).expect("entry codes are valid")
    }

    pub fn codes(&self) -> &[u8] {
        &self.entries
    }

    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&v| v != 0).count()
    }
}

/// `sum u_i * v_i`, or `sum u_i * conj(v_i)` when `hermitian` (GF(4) only).
pub fn inner_product(u: &Vector, v: &Vector, hermitian: bool) -> Result<FieldElement> {
    if u.field != v.field {
        return Err(Error::FieldMismatch { left: u.field.q(), right: v.field.q() });
    }
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch(format!(
            "vectors of length {} and {}",
            u.len(),
            v.len()
        )));
    }
    if hermitian && u.field.q() != 4 {
        return Err(Error::Usage(format!(
            "the Hermitian inner product is only defined over GF(4), not {}",
            u.field
        )));
    }
    let value = dot_codes(u.field, &u.entries, &v.entries, hermitian);
    Ok(u.field.element(value).expect("valid code"))
}

#[inline]
pub(crate) fn dot_codes(field: Field, u: &[u8], v: &[u8], hermitian: bool) -> u8 {
    u.iter().zip(v).fold(0, |acc, (&a, &b)| {
        let b = if hermitian { field.conj_raw(b) } else { b };
        field.add_raw(acc, field.mul_raw(a, b))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&v| v >= field.q()) {
            return Err(Error::Domain(format!("{bad} is not an element code of {field}")));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(field, rows.len(), cols, rows.concat())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn code(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.field.element(self.code(r, c)).expect("entry codes are valid")
    }

    pub(crate) fn set_code(&mut self, r: usize, c: usize, v: u8) {
        debug_assert!(v < self.field.q());
        self.data[r * self.cols + c] = v;
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) -> Result<()> {
        if v.field() != self.field {
            return Err(Error::FieldMismatch { left: self.field.q(), right: v.field().q() });
        }
        self.set_code(r, c, v.value());
        Ok(())
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> Vector {
        Vector { field: self.field, entries: self.row(r).to_vec() }
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u8]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.code(r, c);
            }
        }
        t
    }

    /// Entrywise Frobenius image; identity except over GF(4).
    pub fn conjugate(&self) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| f.conj_raw(v)).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.q(), right: other.field.q() });
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.code(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add_raw(out.data[idx], f.mul_raw(a, other.code(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.q(), right: other.field.q() });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack with different column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// The first `k` rows.
    pub fn select_rows(&self, k: usize) -> Matrix {
        let k = k.min(self.rows);
        Matrix {
            field: self.field,
            rows: k,
            cols: self.cols,
            data: self.data[..k * self.cols].to_vec(),
        }
    }

    /// Matrix formed by the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.code(r, c);
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column of each
    /// nonzero row. Pivots are taken as the first nonzero entry scanning
    /// columns left to right and rows top to bottom.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| m.code(r, c) != 0) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = f.inv_raw(m.code(lead, c));
            m.scale_row(lead, inv);
            for r in 0..m.rows {
                if r != lead {
                    let factor = m.code(r, c);
                    if factor != 0 {
                        m.axpy_row(r, lead, f.neg_raw(factor));
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// A basis of the Euclidean dual of the row space. Requires full row rank.
    ///
    /// For a generator `(I_k | A)` the result is `(-A^T | I_{n-k})`.
    pub fn dual_basis(&self) -> Result<Matrix> {
        let (r, pivots) = self.rref_with_pivots();
        if pivots.len() != self.rows {
            return Err(Error::RankDeficient { rank: pivots.len(), rows: self.rows });
        }
        let f = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set_code(i, fc, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                out.set_code(i, pc, f.neg_raw(r.code(pr, fc)));
            }
        }
        Ok(out)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: u8) {
        let f = self.field;
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *v = f.mul_raw(*v, s);
        }
    }

    /// row[dst] += s * row[src]
    pub(crate) fn axpy_row(&mut self, dst: usize, src: usize, s: u8) {
        let f = self.field;
        for c in 0..self.cols {
            let v = f.mul_raw(self.code(src, c), s);
            let idx = dst * self.cols + c;
            self.data[idx] = f.add_raw(self.data[idx], v);
        }
    }

    /// Matrix text format: a header `q=<q> rows=<r> cols=<c>` followed by one
    /// line per row of space-separated field symbols.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse_text(text: &str) -> Result<Matrix> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let (mut q, mut rows, mut cols) = (None, None, None);
        for tok in header.split_whitespace() {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header token '{tok}'")))?;
            let val: usize =
                val.parse().map_err(|_| Error::Parse(format!("bad header value '{tok}'")))?;
            match key {
                "q" => q = Some(val),
                "rows" => rows = Some(val),
                "cols" => cols = Some(val),
                _ => return Err(Error::Parse(format!("unknown header key '{key}'"))),
            }
        }
        let (Some(q), Some(rows), Some(cols)) = (q, rows, cols) else {
            return Err(Error::Parse("header must define q, rows and cols".into()));
        };
        let field = Field::new(u8::try_from(q).map_err(|_| Error::UnsupportedField(q as u64))?)?;
        let mut data = Vec::with_capacity(rows * cols);
        let mut seen = 0;
        for line in lines {
            let before = data.len();
            for sym in line.split(' ') {
                data.push(field.parse_symbol(sym)?);
            }
            if data.len() - before != cols {
                return Err(Error::Parse(format!(
                    "row {seen} has {} entries, expected {cols}",
                    data.len() - before
                )));
            }
            seen += 1;
        }
        if seen != rows {
            return Err(Error::Parse(format!("found {seen} rows, expected {rows}")));
        }
        Matrix::new(field, rows, cols, data)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q={} rows={} cols={}", self.field.q(), self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<&str> = self.row(r).iter().map(|&v| self.field.symbol(v)).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(field: Field, rows: &[&[u8]]) -> Matrix {
        Matrix::from_rows(field, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(Field::GF3, 3).rank(), 3);
        assert_eq!(Matrix::zeros(Field::GF2, 2, 5).rank(), 0);
        // (I | D) with D the circulant of (0,0,1)
        let g = m(
            Field::GF2,
            &[&[1, 0, 0, 0, 0, 1], &[0, 1, 0, 1, 0, 0], &[0, 0, 1, 0, 1, 0]],
        );
        assert_eq!(g.rank(), 3);
    }

    #[test]
    fn rref_examples() {
        let i = Matrix::identity(Field::GF5, 4);
        assert_eq!(i.rref(), i);
        let std = m(Field::GF3, &[&[1, 0, 2, 1], &[0, 1, 1, 1]]);
        assert_eq!(std.rref(), std);
        let ones = m(Field::GF2, &[&[1, 1], &[1, 1]]);
        assert_eq!(ones.rref(), m(Field::GF2, &[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn inner_product_examples() {
        let v = |f: Field, e: &[u8]| Vector::new(f, e.to_vec()).unwrap();
        let ip = inner_product(&v(Field::GF2, &[1, 1]), &v(Field::GF2, &[1, 1]), false).unwrap();
        assert!(ip.is_zero());
        let u = v(Field::GF4, &[2, 1]);
        assert!(inner_product(&u, &u, true).unwrap().is_zero());
        // Euclidean: w*w + 1 = w^2 + 1 = w
        assert_eq!(inner_product(&u, &u, false).unwrap().value(), 2);
        let ip = inner_product(&v(Field::GF3, &[1, 2]), &v(Field::GF3, &[2, 2]), false).unwrap();
        assert!(ip.is_zero());
    }

    #[test]
    fn inner_product_errors() {
        let a = Vector::new(Field::GF3, vec![1, 2]).unwrap();
        let b = Vector::new(Field::GF3, vec![1]).unwrap();
        let c = Vector::new(Field::GF5, vec![1, 2]).unwrap();
        assert!(matches!(inner_product(&a, &b, false), Err(Error::DimensionMismatch(_))));
        assert!(matches!(inner_product(&a, &c, false), Err(Error::FieldMismatch { .. })));
        assert!(matches!(inner_product(&a, &a, true), Err(Error::Usage(_))));
    }

    #[test]
    fn dual_basis_examples() {
        // (I | A) -> (-A^T | I)
        let g = m(Field::GF3, &[&[1, 0, 2, 1, 0], &[0, 1, 1, 2, 1]]);
        let h = g.dual_basis().unwrap();
        let expected = m(Field::GF3, &[&[1, 2, 1, 0, 0], &[2, 1, 0, 1, 0], &[0, 2, 0, 0, 1]]);
        assert_eq!(h, expected);
        let rep = m(Field::GF2, &[&[1, 1, 1]]);
        let h = rep.dual_basis().unwrap();
        assert_eq!(h.rows(), 2);
        for row in h.row_iter() {
            assert_eq!(row.iter().filter(|&&v| v == 1).count() % 2, 0);
        }
        assert_eq!(h.rank(), 2);
        let bad = m(Field::GF2, &[&[1, 1], &[1, 1]]);
        assert!(matches!(bad.dual_basis(), Err(Error::RankDeficient { rank: 1, rows: 2 })));
    }

    #[test]
    fn text_format() {
        let g = m(Field::GF4, &[&[1, 0, 2, 3], &[0, 1, 3, 1]]);
        let text = g.to_text();
        assert_eq!(text, "q=4 rows=2 cols=4\n1 0 w w2\n0 1 w2 1\n");
        assert_eq!(Matrix::parse_text(&text).unwrap(), g);
        assert!(Matrix::parse_text("q=2 rows=1 cols=2\n1 0 1\n").is_err());
        assert!(Matrix::parse_text("q=2 rows=2 cols=2\n1 0\n").is_err());
        assert!(Matrix::parse_text("q=6 rows=1 cols=1\n1\n").is_err());
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (prop::sample::select(crate::gf::SUPPORTED_ORDERS.to_vec()), 1usize..6, 1usize..9)
            .prop_flat_map(|(q, r, c)| {
                prop::collection::vec(0..q, r * c).prop_map(move |data| {
                    Matrix::new(Field::new(q).unwrap(), r, c, data).unwrap()
                })
            })
    }

    proptest! {
        #[test]
        fn rref_invariants(mat in arb_matrix()) {
            let r = mat.rref();
            prop_assert_eq!(r.rank(), mat.rank());
            prop_assert_eq!(r.rref(), r.clone());
            // row space preserved: stacking does not increase rank
            prop_assert_eq!(mat.vstack(&r).unwrap().rank(), mat.rank());
        }

        #[test]
        fn dual_basis_invariants(mat in arb_matrix()) {
            let (r, piv) = mat.rref_with_pivots();
            let basis = r.select_rows(piv.len());
            if basis.rows() == 0 { return Ok(()); }
            let h = basis.dual_basis().unwrap();
            prop_assert_eq!(basis.rank() + h.rank(), mat.cols());
            prop_assert!(basis.mul(&h.transpose()).unwrap().is_zero());
        }
    }
}
