//! Arithmetic in GF(2), GF(3), GF(4), GF(5) and GF(7).
//!
//! Elements are stored as small integer codes `0..q`. For the prime fields the
//! code is the residue. GF(4) is GF(2)[x]/(x^2 + x + 1) and the code is the bit
//! vector of the element in the basis (1, w): `0, 1, w, w^2 = w + 1` map to
//! `0, 1, 2, 3`, so addition is XOR of codes.
//!
//! All operations go through precomputed `q x q` tables.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_Q: usize = 7;

/// The orders this crate can work over.
pub const SUPPORTED_ORDERS: [u8; 5] = [2, 3, 4, 5, 7];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Prime,
    Gf4,
}

struct Tables {
    add: [[u8; MAX_Q]; MAX_Q],
    mul: [[u8; MAX_Q]; MAX_Q],
    neg: [u8; MAX_Q],
    inv: [u8; MAX_Q],
}

const fn prime_tables(p: u8) -> Tables {
    let mut t = Tables {
        add: [[0; MAX_Q]; MAX_Q],
        mul: [[0; MAX_Q]; MAX_Q],
        neg: [0; MAX_Q],
        inv: [0; MAX_Q],
    };
    let mut a = 0;
    while a < p {
        let mut b = 0;
        while b < p {
            t.add[a as usize][b as usize] = (a + b) % p;
            t.mul[a as usize][b as usize] = (a * b) % p;
            if (a * b) % p == 1 {
                t.inv[a as usize] = b;
            }
            b += 1;
        }
        t.neg[a as usize] = (p - a) % p;
        a += 1;
    }
    t
}

const fn gf4_tables() -> Tables {
    // discrete log base w of the nonzero codes 1, 2, 3
    const LOG: [u8; 4] = [0, 0, 1, 2];
    const EXP: [u8; 3] = [1, 2, 3];
    let mut t = Tables {
        add: [[0; MAX_Q]; MAX_Q],
        mul: [[0; MAX_Q]; MAX_Q],
        neg: [0; MAX_Q],
        inv: [0; MAX_Q],
    };
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            t.add[a][b] = (a ^ b) as u8;
            t.mul[a][b] = if a == 0 || b == 0 {
                0
            } else {
                EXP[(LOG[a] + LOG[b]) as usize % 3]
            };
            b += 1;
        }
        t.neg[a] = a as u8;
        t.inv[a] = if a == 0 { 0 } else { EXP[(3 - LOG[a] as usize) % 3] };
        a += 1;
    }
    t
}

static GF2: Tables = prime_tables(2);
static GF3: Tables = prime_tables(3);
static GF4: Tables = gf4_tables();
static GF5: Tables = prime_tables(5);
static GF7: Tables = prime_tables(7);

/// One of the five supported finite fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    q: u8,
}

impl Field {
    pub const GF2: Field = Field { q: 2 };
    pub const GF3: Field = Field { q: 3 };
    pub const GF4: Field = Field { q: 4 };
    pub const GF5: Field = Field { q: 5 };
    pub const GF7: Field = Field { q: 7 };

    pub fn new(q: u8) -> Result<Self> {
        if SUPPORTED_ORDERS.contains(&q) {
            Ok(Field { q })
        } else {
            Err(Error::UnsupportedField(q as u64))
        }
    }

    #[inline]
    pub fn q(self) -> u8 {
        self.q
    }

    #[inline]
    pub fn order(self) -> usize {
        self.q as usize
    }

    pub fn characteristic(self) -> u8 {
        if self.q == 4 {
            2
        } else {
            self.q
        }
    }

    pub fn kind(self) -> FieldKind {
        if self.q == 4 {
            FieldKind::Gf4
        } else {
            FieldKind::Prime
        }
    }

    #[inline]
    fn tables(self) -> &'static Tables {
        match self.q {
            2 => &GF2,
            3 => &GF3,
            4 => &GF4,
            5 => &GF5,
            _ => &GF7,
        }
    }

    // Raw code arithmetic. Callers guarantee codes are < q.

    #[inline]
    pub fn add_raw(self, a: u8, b: u8) -> u8 {
        self.tables().add[a as usize][b as usize]
    }

    #[inline]
    pub fn sub_raw(self, a: u8, b: u8) -> u8 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub fn mul_raw(self, a: u8, b: u8) -> u8 {
        self.tables().mul[a as usize][b as usize]
    }

    #[inline]
    pub fn neg_raw(self, a: u8) -> u8 {
        self.tables().neg[a as usize]
    }

    /// Inverse of a nonzero code; returns 0 for 0.
    #[inline]
    pub fn inv_raw(self, a: u8) -> u8 {
        self.tables().inv[a as usize]
    }

    /// Frobenius `a -> a^2` on GF(4); identity on the prime fields.
    #[inline]
    pub fn conj_raw(self, a: u8) -> u8 {
        if self.q == 4 {
            self.mul_raw(a, a)
        } else {
            a
        }
    }

    pub fn zero(self) -> FieldElement {
        FieldElement { field: self, value: 0 }
    }

    pub fn one(self) -> FieldElement {
        FieldElement { field: self, value: 1 }
    }

    pub fn element(self, value: u8) -> Result<FieldElement> {
        if value < self.q {
            Ok(FieldElement { field: self, value })
        } else {
            Err(Error::Domain(format!("{value} is not an element code of GF({})", self.q)))
        }
    }

    /// All elements in code order.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(move |value| FieldElement { field: self, value })
    }

    /// Textual symbol of a code: decimal for prime fields, `0 1 w w2` for GF(4).
    pub fn symbol(self, code: u8) -> &'static str {
        const DIGITS: [&str; 7] = ["0", "1", "2", "3", "4", "5", "6"];
        const GF4_SYMBOLS: [&str; 4] = ["0", "1", "w", "w2"];
        if self.q == 4 {
            GF4_SYMBOLS[code as usize]
        } else {
            DIGITS[code as usize]
        }
    }

    pub fn parse_symbol(self, s: &str) -> Result<u8> {
        let s = s.trim();
        let code = if self.q == 4 {
            match s {
                "0" => Some(0),
                "1" => Some(1),
                "w" => Some(2),
                "w2" => Some(3),
                _ => None,
            }
        } else {
            s.parse::<u8>().ok().filter(|&v| v < self.q)
        };
        code.ok_or_else(|| Error::Parse(format!("'{s}' is not a symbol of GF({})", self.q)))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// An element of one of the supported fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    value: u8,
}

// checked arithmetic returning Result, so not the std::ops traits
#[allow(clippy::should_implement_trait)]
impl FieldElement {
    #[inline]
    pub fn field(self) -> Field {
        self.field
    }

    #[inline]
    pub fn value(self) -> u8 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: FieldElement) -> Result<Field> {
        if self.field == other.field {
            Ok(self.field)
        } else {
            Err(Error::FieldMismatch {
                left: self.field.q,
                right: other.field.q,
            })
        }
    }

    pub fn add(self, other: FieldElement) -> Result<FieldElement> {
        let f = self.same_field(other)?;
        Ok(FieldElement { field: f, value: f.add_raw(self.value, other.value) })
    }

    pub fn sub(self, other: FieldElement) -> Result<FieldElement> {
        let f = self.same_field(other)?;
        Ok(FieldElement { field: f, value: f.sub_raw(self.value, other.value) })
    }

    pub fn mul(self, other: FieldElement) -> Result<FieldElement> {
        let f = self.same_field(other)?;
        Ok(FieldElement { field: f, value: f.mul_raw(self.value, other.value) })
    }

    pub fn neg(self) -> FieldElement {
        FieldElement { field: self.field, value: self.field.neg_raw(self.value) }
    }

    pub fn inv(self) -> Result<FieldElement> {
        if self.value == 0 {
            return Err(Error::Domain("zero has no multiplicative inverse".into()));
        }
        Ok(FieldElement { field: self.field, value: self.field.inv_raw(self.value) })
    }

    /// Frobenius conjugate `a^2`; only defined over GF(4).
    pub fn conjugate(self) -> Result<FieldElement> {
        if self.field.q != 4 {
            return Err(Error::Usage(format!(
                "conjugation is only defined over GF(4), not {}",
                self.field
            )));
        }
        Ok(FieldElement { field: self.field, value: self.field.conj_raw(self.value) })
    }

    pub fn symbol(self) -> &'static str {
        self.field.symbol(self.value)
    }

    pub fn parse(field: Field, s: &str) -> Result<FieldElement> {
        Ok(FieldElement { field, value: field.parse_symbol(s)? })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let q: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("'{s}' is not a field order")))?;
        if q > u8::MAX as u64 {
            return Err(Error::UnsupportedField(q));
        }
        Field::new(q as u8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(f: Field, v: u8) -> FieldElement {
        f.element(v).unwrap()
    }

    const W: u8 = 2;
    const W2: u8 = 3;

    #[test]
    fn examples() {
        let (f3, f4, f5, f7, f2) = (Field::GF3, Field::GF4, Field::GF5, Field::GF7, Field::GF2);
        assert_eq!(el(f3, 2).add(el(f3, 2)).unwrap(), el(f3, 1));
        assert_eq!(el(f4, W).add(el(f4, 1)).unwrap(), el(f4, W2));
        assert_eq!(el(f7, 0).add(el(f7, 5)).unwrap(), el(f7, 5));
        assert_eq!(el(f4, W).mul(el(f4, W)).unwrap(), el(f4, W2));
        assert_eq!(el(f5, 3).mul(el(f5, 4)).unwrap(), el(f5, 2));
        assert_eq!(el(f7, 3).inv().unwrap(), el(f7, 5));
        assert_eq!(el(f4, W).inv().unwrap(), el(f4, W2));
        assert_eq!(el(f2, 1).inv().unwrap(), el(f2, 1));
        assert_eq!(el(f4, W).conjugate().unwrap(), el(f4, W2));
        assert_eq!(el(f4, W2).conjugate().unwrap(), el(f4, W));
        assert_eq!(el(f4, 1).conjugate().unwrap(), el(f4, 1));
    }

    #[test]
    fn identity_laws() {
        for q in SUPPORTED_ORDERS {
            let f = Field::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.one().mul(a).unwrap(), a);
                assert_eq!(f.zero().add(a).unwrap(), a);
            }
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(Field::new(6), Err(Error::UnsupportedField(6))));
        assert!(matches!(Field::new(8), Err(Error::UnsupportedField(8))));
        let a = el(Field::GF3, 1);
        let b = el(Field::GF5, 1);
        assert!(matches!(a.add(b), Err(Error::FieldMismatch { .. })));
        assert!(matches!(a.mul(b), Err(Error::FieldMismatch { .. })));
        assert!(matches!(Field::GF7.zero().inv(), Err(Error::Domain(_))));
        assert!(matches!(el(Field::GF5, 2).conjugate(), Err(Error::Usage(_))));
        assert!(Field::GF3.element(3).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in SUPPORTED_ORDERS {
            let f = Field::new(q).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(a.add(a.neg()).unwrap(), f.zero());
                if !a.is_zero() {
                    assert_eq!(a.mul(a.inv().unwrap()).unwrap(), f.one());
                }
                for &b in &els {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for &c in &els {
                        let l = a.add(b).unwrap().add(c).unwrap();
                        let r = a.add(b.add(c).unwrap()).unwrap();
                        assert_eq!(l, r);
                        let l = a.mul(b).unwrap().mul(c).unwrap();
                        let r = a.mul(b.mul(c).unwrap()).unwrap();
                        assert_eq!(l, r);
                        let l = a.mul(b.add(c).unwrap()).unwrap();
                        let r = a.mul(b).unwrap().add(a.mul(c).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn characteristic_and_conjugation() {
        for q in SUPPORTED_ORDERS {
            let f = Field::new(q).unwrap();
            for a in f.elements() {
                let mut s = f.zero();
                for _ in 0..f.characteristic() {
                    s = s.add(a).unwrap();
                }
                assert!(s.is_zero());
            }
        }
        for a in Field::GF4.elements() {
            assert_eq!(a.conjugate().unwrap().conjugate().unwrap(), a);
        }
    }

    #[test]
    fn symbols_round_trip() {
        for q in SUPPORTED_ORDERS {
            let f = Field::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(FieldElement::parse(f, a.symbol()).unwrap(), a);
            }
        }
        assert_eq!(Field::GF4.symbol(3), "w2");
        assert!(Field::GF4.parse_symbol("2").is_err());
        assert!(Field::GF5.parse_symbol("w").is_err());
    }
}
