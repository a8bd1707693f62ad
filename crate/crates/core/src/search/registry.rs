use serde::Serialize;

use crate::codeprops::{analyze, AnalysisOptions, CodeReport};
use crate::ddc::{build, CodeKind, DdcCode};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::splitting::splitting_from_s1;

/// A named code with a fixed splitting and parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleSpec {
    pub id: &'static str,
    pub q: u8,
    pub base: u32,
    pub n: u32,
    pub s1: &'static [u32],
    pub kind: CodeKind,
    /// `(r, s, t)` as field value codes.
    pub rst: [u8; 3],
    /// `(alpha, beta, gamma)` for bordered codes.
    pub border: Option<[u8; 3]>,
    /// Distance computation beyond desk scale.
    pub deep: bool,
}

const S15: &[u32] = &[1, 4, 3, 12, 7, 13, 5];
const S17: &[u32] = &[1, 4, 16, 13, 3, 12, 14, 5];
const S33: &[u32] = &[1, 4, 16, 31, 25, 3, 12, 15, 27, 9, 7, 28, 13, 19, 10, 11];
const S41: &[u32] = &[1, 4, 16, 23, 10, 40, 37, 25, 18, 31, 3, 12, 7, 28, 30, 38, 29, 34, 13, 11];
const S43: &[u32] = &[1, 4, 16, 21, 41, 35, 11, 3, 12, 5, 20, 37, 19, 33, 7, 28, 26, 18, 29, 30, 34];
const S37: &[u32] = &[1, 9, 7, 26, 12, 34, 10, 16, 33, 2, 18, 14, 15, 24, 31, 20, 32, 29];

const fn pure(id: &'static str, n: u32, s1: &'static [u32], rst: [u8; 3], deep: bool) -> ExampleSpec {
    ExampleSpec { id, q: 2, base: 4, n, s1, kind: CodeKind::Pure, rst, border: None, deep }
}

const fn bordered(id: &'static str, n: u32, s1: &'static [u32], abg: [u8; 3], rst: [u8; 3], deep: bool) -> ExampleSpec {
    ExampleSpec { id, q: 2, base: 4, n, s1, kind: CodeKind::Bordered, rst, border: Some(abg), deep }
}

static REGISTRY: [ExampleSpec; 11] = [
    pure("ex4.1i-pure", 15, S15, [0, 0, 1], false),
    bordered("ex4.1i-bordered", 15, S15, [0, 1, 0], [0, 0, 1], false),
    pure("ex4.1ii-pure", 17, S17, [1, 0, 1], false),
    bordered("ex4.1ii-bordered", 17, S17, [0, 1, 0], [1, 0, 1], false),
    pure("ex4.1iii-pure", 33, S33, [1, 0, 1], true),
    bordered("ex4.1iii-bordered", 33, S33, [0, 1, 1], [0, 0, 1], true),
    pure("ex4.1iii-pure-001", 33, S33, [0, 0, 1], true),
    pure("ex4.1iv-pure", 41, S41, [1, 0, 1], true),
    pure("ex4.2-pure", 43, S43, [0, 1, 0], true),
    bordered("ex4.2-bordered", 43, S43, [0, 1, 1], [1, 1, 0], true),
    ExampleSpec {
        id: "ex4.3",
        q: 3,
        base: 9,
        n: 37,
        s1: S37,
        kind: CodeKind::Bordered,
        rst: [2, 0, 2],
        border: Some([1, 1, 1]),
        deep: true,
    },
];

pub fn registry() -> &'static [ExampleSpec] {
    &REGISTRY
}

pub fn example_ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|e| e.id)
}

pub fn lookup_example(id: &str) -> Result<&'static ExampleSpec> {
    REGISTRY.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownExample(id.to_string()))
}

impl ExampleSpec {
    pub fn field(&self) -> Field {
        Field::new(self.q).expect("registry fields are supported")
    }

    pub fn build(&self) -> Result<DdcCode> {
        let sp = splitting_from_s1(self.n, self.s1)?.with_base(Some(self.base));
        build(self.kind, self.field(), &sp, self.rst, self.border)
    }
}

/// Builds the named example and analyzes it.
pub fn reproduce_example(id: &str, opts: &AnalysisOptions) -> Result<CodeReport> {
    analyze(&lookup_example(id)?.build()?, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_example_builds_on_a_coset_splitting() {
        for e in registry() {
            let code = e.build().unwrap();
            assert_eq!(code.n(), e.n as usize, "{}", e.id);
            let part = crate::splitting::cyclotomic_cosets(e.n, e.base).unwrap();
            assert!(part.is_union_of_cosets(e.s1), "{}", e.id);
        }
    }

    #[test]
    fn unknown_ids() {
        assert!(matches!(lookup_example("ex9"), Err(Error::UnknownExample(_))));
        assert_eq!(example_ids().count(), 11);
    }

    #[test]
    fn desk_examples() {
        let r = reproduce_example("ex4.1i-pure", &AnalysisOptions::default()).unwrap();
        assert_eq!(r.parameters(), [30, 15, 8]);
        let r = reproduce_example("ex4.1ii-bordered", &AnalysisOptions::default()).unwrap();
        assert_eq!(r.parameters(), [36, 18, 8]);
    }
}
