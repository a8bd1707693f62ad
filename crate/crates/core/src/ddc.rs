//! Pure and bordered duadic double circulant generator matrices.
//!
//! The circulant `D` has first row `(a_0, .., a_{n-1})` with `a_0 = r`,
//! `a_i = s` for `i` in `S1` and `a_i = t` for `i` in `S2`; row `i` is the
//! first row cyclically shifted right by `i`.
//!
//! Pure codes are generated by `(I | D)`. Bordered codes by
//!
//! ```text
//! 1 | 0 .. 0 | alpha | beta .. beta
//! 0 |        | gamma |
//! : |   I    |   :   |      D
//! 0 |        | gamma |
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::linalg::{Matrix, Vector};
use crate::splitting::{splitting_from_s1, Splitting};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Pure,
    Bordered,
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeKind::Pure => "pure",
            CodeKind::Bordered => "bordered",
        })
    }
}

impl FromStr for CodeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pure" => Ok(CodeKind::Pure),
            "bordered" => Ok(CodeKind::Bordered),
            other => Err(Error::Parse(format!("unknown code kind '{other}'"))),
        }
    }
}

/// Data determining the first row of the circulant block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    pub field: Field,
    pub splitting: Splitting,
    pub r: FieldElement,
    pub s: FieldElement,
    pub t: FieldElement,
}

impl CirculantSpec {
    pub fn new(field: Field, splitting: Splitting, r: u8, s: u8, t: u8) -> Result<Self> {
        if splitting.n < 3 || splitting.n.is_multiple_of(2) {
            return Err(Error::Domain(format!("splitting modulus {} must be odd", splitting.n)));
        }
        Ok(CirculantSpec {
            field,
            splitting,
            r: field.element(r)?,
            s: field.element(s)?,
            t: field.element(t)?,
        })
    }

    pub fn n(&self) -> usize {
        self.splitting.n as usize
    }

    fn check(&self) -> Result<()> {
        for e in [self.r, self.s, self.t] {
            if e.field() != self.field {
                return Err(Error::FieldMismatch { left: self.field.q(), right: e.field().q() });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BorderSpec {
    pub alpha: FieldElement,
    pub beta: FieldElement,
    pub gamma: FieldElement,
}

impl BorderSpec {
    pub fn new(field: Field, alpha: u8, beta: u8, gamma: u8) -> Result<Self> {
        Ok(BorderSpec {
            alpha: field.element(alpha)?,
            beta: field.element(beta)?,
            gamma: field.element(gamma)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DdcCode {
    pub kind: CodeKind,
    pub circulant: CirculantSpec,
    pub border: Option<BorderSpec>,
    pub generator: Matrix,
}

impl DdcCode {
    pub fn field(&self) -> Field {
        self.circulant.field
    }

    pub fn n(&self) -> usize {
        self.circulant.n()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// Parameter codes `(r, s, t, alpha, beta, gamma)`, border entries `None` for pure codes.
    pub fn parameter_codes(&self) -> [Option<u8>; 6] {
        let c = &self.circulant;
        let b = self.border;
        [
            Some(c.r.value()),
            Some(c.s.value()),
            Some(c.t.value()),
            b.map(|b| b.alpha.value()),
            b.map(|b| b.beta.value()),
            b.map(|b| b.gamma.value()),
        ]
    }

    /// Short human-readable name such as `B_15(0,1,0,0,0,1)` over GF(2).
    pub fn label(&self) -> String {
        let f = self.field();
        let sym = |e: FieldElement| f.symbol(e.value()).to_string();
        let c = &self.circulant;
        let mut params = Vec::new();
        if let Some(b) = self.border {
            params.extend([sym(b.alpha), sym(b.beta), sym(b.gamma)]);
        }
        params.extend([sym(c.r), sym(c.s), sym(c.t)]);
        let letter = match self.kind {
            CodeKind::Pure => 'P',
            CodeKind::Bordered => 'B',
        };
        format!("{letter}_{}({}) over {f}", self.n(), params.join(","))
    }

    pub fn to_json_value(&self) -> DdcCodeJson {
        let f = self.field();
        let sym = |e: FieldElement| f.symbol(e.value()).to_string();
        let c = &self.circulant;
        DdcCodeJson {
            kind: self.kind,
            q: f.q(),
            n: c.splitting.n,
            r: sym(c.r),
            s: sym(c.s),
            t: sym(c.t),
            alpha: self.border.map(|b| sym(b.alpha)),
            beta: self.border.map(|b| sym(b.beta)),
            gamma: self.border.map(|b| sym(b.gamma)),
            s1: c.splitting.s1.clone(),
            generator: Some(self.generator.to_text()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("code serializes")
    }

    pub fn from_json(text: &str) -> Result<DdcCode> {
        let raw: DdcCodeJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("code json: {e}")))?;
        raw.build()
    }
}

/// Wire form of a [`DdcCode`]. Field entries are textual symbols; `s2` is the
/// complement of `s1`; `generator` is matrix text and optional on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DdcCodeJson {
    pub kind: CodeKind,
    pub q: u8,
    pub n: u32,
    pub r: String,
    pub s: String,
    pub t: String,
    pub alpha: Option<String>,
    pub beta: Option<String>,
    pub gamma: Option<String>,
    pub s1: Vec<u32>,
    #[serde(default)]
    pub generator: Option<String>,
}

impl DdcCodeJson {
    /// Rebuilds the code and checks it against the embedded generator, if any.
    pub fn build(&self) -> Result<DdcCode> {
        let field = Field::new(self.q)?;
        let splitting = splitting_from_s1(self.n, &self.s1)?;
        let p = |s: &str| field.parse_symbol(s);
        let circ = CirculantSpec::new(field, splitting, p(&self.r)?, p(&self.s)?, p(&self.t)?)?;
        let code = match self.kind {
            CodeKind::Pure => build_pure(&circ),
            CodeKind::Bordered => {
                let need = |v: &Option<String>, name: &str| {
                    v.as_deref()
                        .ok_or_else(|| Error::Parse(format!("bordered code needs '{name}'")))
                        .and_then(p)
                };
                let border = BorderSpec::new(
                    field,
                    need(&self.alpha, "alpha")?,
                    need(&self.beta, "beta")?,
                    need(&self.gamma, "gamma")?,
                )?;
                build_bordered(&circ, &border)?
            }
        };
        if let Some(text) = &self.generator {
            let given = Matrix::parse_text(text)?;
            if given != code.generator {
                return Err(Error::Parse(
                    "embedded generator does not match the construction parameters".into(),
                ));
            }
        }
        Ok(code)
    }
}

pub fn circulant_row(c: &CirculantSpec) -> Vector {
    let n = c.n();
    let mut row = vec![0u8; n];
    row[0] = c.r.value();
    for &i in &c.splitting.s1 {
        row[i as usize] = c.s.value();
    }
    for &i in &c.splitting.s2 {
        row[i as usize] = c.t.value();
    }
    Vector::new(c.field, row).expect("codes from field elements")
}

/// Row `i` holds the first row shifted right by `i`: entry `(i, j)` is `row[(j - i) mod n]`.
pub fn circulant_matrix(row: &Vector) -> Matrix {
    let n = row.len();
    let codes = row.codes();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            data.push(codes[(j + n - i) % n]);
        }
    }
    Matrix::new(row.field(), n, n, data).expect("square circulant")
}

pub fn build_pure(c: &CirculantSpec) -> DdcCode {
    let n = c.n();
    let d = circulant_matrix(&circulant_row(c));
    let mut g = Matrix::zeros(c.field, n, 2 * n);
    for i in 0..n {
        g.set_code(i, i, 1);
        for j in 0..n {
            g.set_code(i, n + j, d.code(i, j));
        }
    }
    DdcCode { kind: CodeKind::Pure, circulant: c.clone(), border: None, generator: g }
}

pub fn build_bordered(c: &CirculantSpec, b: &BorderSpec) -> Result<DdcCode> {
    c.check()?;
    for e in [b.alpha, b.beta, b.gamma] {
        if e.field() != c.field {
            return Err(Error::FieldMismatch { left: c.field.q(), right: e.field().q() });
        }
    }
    let n = c.n();
    let d = circulant_matrix(&circulant_row(c));
    let mut g = Matrix::zeros(c.field, n + 1, 2 * n + 2);
    g.set_code(0, 0, 1);
    g.set_code(0, n + 1, b.alpha.value());
    for j in 0..n {
        g.set_code(0, n + 2 + j, b.beta.value());
    }
    for i in 0..n {
        g.set_code(i + 1, i + 1, 1);
        g.set_code(i + 1, n + 1, b.gamma.value());
        for j in 0..n {
            g.set_code(i + 1, n + 2 + j, d.code(i, j));
        }
    }
    Ok(DdcCode { kind: CodeKind::Bordered, circulant: c.clone(), border: Some(*b), generator: g })
}

/// Builds a pure or bordered code from raw parameter codes.
pub fn build(
    kind: CodeKind,
    field: Field,
    splitting: &Splitting,
    rst: [u8; 3],
    border: Option<[u8; 3]>,
) -> Result<DdcCode> {
    let circ = CirculantSpec::new(field, splitting.clone(), rst[0], rst[1], rst[2])?;
    match kind {
        CodeKind::Pure => Ok(build_pure(&circ)),
        CodeKind::Bordered => {
            let [a, b, g] = border
                .ok_or_else(|| Error::Usage("a bordered code needs alpha, beta, gamma".into()))?;
            build_bordered(&circ, &BorderSpec::new(field, a, b, g)?)
        }
    }
}
