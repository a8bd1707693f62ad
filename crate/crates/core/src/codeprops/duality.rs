use serde::{Deserialize, Serialize};

use super::weights::{macwilliams, WeightDistribution};
use super::{exhaustive, weight_distribution_of};
use crate::ddc::{CodeKind, DdcCode};
use crate::error::Result;
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BinaryType {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "II")]
    II,
}

/// How formal self-duality was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormalSelfDuality {
    /// `W_C` equals its MacWilliams transform.
    ByWeightEnumerator,
    /// The code is Euclidean self-dual.
    BySelfDuality,
    /// An explicit weight-preserving monomial map carries `C^perp` onto `C`.
    ByIsoduality,
    /// `W_C` differs from its MacWilliams transform.
    No,
    /// Enumeration exceeds the budget and no certificate applies.
    Unknown { budget: u128 },
}

impl FormalSelfDuality {
    pub fn holds(self) -> Option<bool> {
        match self {
            FormalSelfDuality::ByWeightEnumerator
            | FormalSelfDuality::BySelfDuality
            | FormalSelfDuality::ByIsoduality => Some(true),
            FormalSelfDuality::No => Some(false),
            FormalSelfDuality::Unknown { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DualityClass {
    pub self_dual_euclidean: bool,
    /// `None` outside GF(4).
    pub self_dual_hermitian: Option<bool>,
    /// Type I / II for binary self-dual codes.
    pub binary_type: Option<BinaryType>,
    pub formally_self_dual: FormalSelfDuality,
}

fn gram_is_zero(g: &Matrix, hermitian: bool) -> bool {
    let other = if hermitian { g.conjugate() } else { g.clone() };
    g.mul(&other.transpose()).expect("same field and shape").is_zero()
}

/// Self-duality checks from the generator alone.
fn self_duality(g: &Matrix) -> (bool, Option<bool>, Option<BinaryType>) {
    let half = 2 * g.rows() == g.cols();
    let euclidean = half && gram_is_zero(g, false);
    let hermitian = (g.field().q() == 4).then(|| half && gram_is_zero(g, true));
    let binary_type = (euclidean && g.field().q() == 2).then(|| {
        let doubly_even = g.row_iter().all(|r| r.iter().filter(|&&v| v != 0).count() % 4 == 0);
        if doubly_even {
            BinaryType::II
        } else {
            BinaryType::I
        }
    });
    (euclidean, hermitian, binary_type)
}

/// Classifies an arbitrary full-rank generator. `wd` is used when given; the
/// isoduality certificate applies only to pure double circulant layouts.
pub fn classify_generator(
    g: &Matrix,
    wd: Option<&WeightDistribution>,
    pure_double_circulant: bool,
    wd_budget: u128,
) -> Result<DualityClass> {
    let (euclidean, hermitian, binary_type) = self_duality(g);
    let computed;
    let wd = match wd {
        Some(wd) => Some(wd),
        None if exhaustive::check_budget(g.field().q(), g.rows(), wd_budget).is_ok() => {
            computed = weight_distribution_of(g, wd_budget)?;
            Some(&computed)
        }
        None => None,
    };
    let formally_self_dual = if let Some(wd) = wd {
        if macwilliams(wd, g.rows())? == *wd {
            FormalSelfDuality::ByWeightEnumerator
        } else {
            FormalSelfDuality::No
        }
    } else if euclidean {
        FormalSelfDuality::BySelfDuality
    } else if pure_double_circulant && isodual_pure(g)? {
        FormalSelfDuality::ByIsoduality
    } else {
        FormalSelfDuality::Unknown { budget: wd_budget }
    };
    Ok(DualityClass { self_dual_euclidean: euclidean, self_dual_hermitian: hermitian, binary_type, formally_self_dual })
}

pub fn classify(code: &DdcCode, wd_budget: u128) -> Result<DualityClass> {
    classify_generator(&code.generator, None, code.kind == CodeKind::Pure, wd_budget)
}

/// For a pure double circulant code `{(m, mD)}` checks that
/// `(x, y) -> (rev(y), -rev(x))`, with `rev(z)_i = z_{-i mod n}`, maps the
/// dual code onto the code itself. The map permutes and scales coordinates,
/// so it preserves Hamming weights and certifies formal self-duality.
pub fn isodual_certificate(code: &DdcCode) -> Result<bool> {
    if code.kind != CodeKind::Pure {
        return Ok(false);
    }
    isodual_pure(&code.generator)
}

fn isodual_pure(g: &Matrix) -> Result<bool> {
    let n = g.rows();
    if g.cols() != 2 * n {
        return Ok(false);
    }
    let f = g.field();
    let h = g.dual_basis()?;
    let mut image = Matrix::zeros(f, h.rows(), 2 * n);
    for r in 0..h.rows() {
        for i in 0..n {
            let src = (n - i) % n;
            image.set_code(r, i, h.code(r, n + src));
            image.set_code(r, n + i, f.neg_raw(h.code(r, src)));
        }
    }
    Ok(image.rank() == n && g.vstack(&image)?.rank() == n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ddc::build;
    use crate::gf::Field;
    use crate::splitting::{qr_splitting, splitting_from_s1};

    #[test]
    fn hermitian_and_euclidean() {
        // hexacode-like check: (I | I) over GF(4) is Euclidean self-dual only in char 2
        let sp = qr_splitting(3).unwrap();
        let c = build(CodeKind::Pure, Field::GF4, &sp, [1, 0, 0], None).unwrap();
        let d = classify(&c, 1 << 20).unwrap();
        assert!(d.self_dual_euclidean);
        assert_eq!(d.self_dual_hermitian, Some(true));
        assert_eq!(d.binary_type, None);

        let c = build(CodeKind::Pure, Field::GF3, &sp, [1, 0, 0], None).unwrap();
        let d = classify(&c, 1 << 20).unwrap();
        assert!(!d.self_dual_euclidean);
        assert_eq!(d.self_dual_hermitian, None);
    }

    #[test]
    fn binary_types() {
        let sp = qr_splitting(7).unwrap();
        // (I | I): rows of weight 2, self-dual Type I
        let c = build(CodeKind::Pure, Field::GF2, &sp, [1, 0, 0], None).unwrap();
        let d = classify(&c, 1 << 20).unwrap();
        assert_eq!(d.binary_type, Some(BinaryType::I));
        // extended Hamming [8,4,4] from B_3 over QR(3)
        let sp3 = qr_splitting(3).unwrap();
        let found = (0..64u8).any(|m| {
            let c = build(
                CodeKind::Bordered,
                Field::GF2,
                &sp3,
                [m & 1, (m >> 1) & 1, (m >> 2) & 1],
                Some([(m >> 3) & 1, (m >> 4) & 1, (m >> 5) & 1]),
            )
            .unwrap();
            classify(&c, 1 << 20).unwrap().binary_type == Some(BinaryType::II)
        });
        assert!(found);
    }

    #[test]
    fn formal_self_duality_routes() {
        let sp = splitting_from_s1(15, &[1, 4, 3, 12, 7, 13, 5]).unwrap();
        let p = build(CodeKind::Pure, Field::GF2, &sp, [0, 0, 1], None).unwrap();
        assert_eq!(classify(&p, 1 << 22).unwrap().formally_self_dual, FormalSelfDuality::ByWeightEnumerator);
        assert_eq!(classify(&p, 1).unwrap().formally_self_dual, FormalSelfDuality::ByIsoduality);
        assert!(isodual_certificate(&p).unwrap());
        let b = build(CodeKind::Bordered, Field::GF2, &sp, [0, 0, 1], Some([0, 1, 0])).unwrap();
        assert_eq!(classify(&b, 1 << 22).unwrap().formally_self_dual, FormalSelfDuality::No);
        assert_eq!(classify(&b, 1).unwrap().formally_self_dual, FormalSelfDuality::Unknown { budget: 1 });
        assert!(!isodual_certificate(&b).unwrap());
    }

    #[test]
    fn isoduality_holds_for_pure_codes_over_every_field() {
        for q in [2u8, 3, 4, 5, 7] {
            let f = Field::new(q).unwrap();
            let sp = qr_splitting(11).unwrap();
            for rst in [[0, 1, 0], [1, 0, q - 1], [q - 1, 1, 1], [0, 0, 0]] {
                let c = build(CodeKind::Pure, f, &sp, rst, None).unwrap();
                assert!(isodual_certificate(&c).unwrap(), "q={q} {rst:?}");
            }
        }
    }
}
