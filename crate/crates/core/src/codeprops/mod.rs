//! Minimum distance, weight distributions and duality classification.
//!
//! Two independent distance engines are provided: full enumeration of the
//! message space ([`min_distance_exhaustive`]) and information-set search
//! ([`min_distance_accelerated`]). Both accept any full-rank generator via the
//! `*_of` variants; the DDC-specific wrappers just pass `code.generator`.

mod accelerated;
mod duality;
mod exhaustive;
mod report;
mod weights;
pub(crate) mod words;

use serde::{Deserialize, Serialize};

pub use duality::{classify, classify_generator, isodual_certificate, BinaryType, DualityClass, FormalSelfDuality};
pub use report::{analyze, AnalysisOptions, CodeReport, DistanceChoice};
pub use weights::{macwilliams, WeightDistribution};

use crate::ddc::DdcCode;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use words::{ByteWord, Gf2Word, Gf3Word, Gf4Word};

/// Default cap on enumerated codewords for the exhaustive engine.
pub const DEFAULT_EXHAUSTIVE_BUDGET: u128 = 1 << 22;

/// Runs `$body` with `$W` bound to the packed word type for field order `$q`
/// and word length `$len`.
macro_rules! with_word {
    ($q:expr, $len:expr, $W:ident => $body:expr) => {{
        let (q, len): (u8, usize) = ($q, $len);
        match q {
            2 if len <= 128 => {
                type $W = Gf2Word;
                $body
            }
            3 if len <= 128 => {
                type $W = Gf3Word;
                $body
            }
            4 if len <= 128 => {
                type $W = Gf4Word;
                $body
            }
            5 | 7 if len <= 96 => match (q, len.div_ceil(8)) {
                (5, 0..=2) => {
                    type $W = ByteWord<5, 2>;
                    $body
                }
                (5, 3..=4) => {
                    type $W = ByteWord<5, 4>;
                    $body
                }
                (5, 5..=8) => {
                    type $W = ByteWord<5, 8>;
                    $body
                }
                (5, _) => {
                    type $W = ByteWord<5, 12>;
                    $body
                }
                (_, 0..=2) => {
                    type $W = ByteWord<7, 2>;
                    $body
                }
                (_, 3..=4) => {
                    type $W = ByteWord<7, 4>;
                    $body
                }
                (_, 5..=8) => {
                    type $W = ByteWord<7, 8>;
                    $body
                }
                (_, _) => {
                    type $W = ByteWord<7, 12>;
                    $body
                }
            },
            _ => Err(Error::Domain(format!("words of length {len} over GF({q}) are not supported"))),
        }
    }};
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMethod {
    Exhaustive,
    Accelerated,
}

impl std::fmt::Display for DistanceMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DistanceMethod::Exhaustive => "exhaustive",
            DistanceMethod::Accelerated => "accelerated",
        })
    }
}

/// Result of the accelerated engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AcceleratedDistance {
    pub distance: u32,
    /// Exact count of minimum-weight codewords; `None` in distance-only mode
    /// or when stopped early.
    pub a_d: Option<u128>,
    /// False when the search stopped at the requested cap before settling the distance.
    pub exact: bool,
    /// Every codeword not enumerated weighs at least this much.
    pub lower_bound: u32,
}

fn full_rank(g: &Matrix) -> Result<()> {
    let rank = g.rank();
    if rank != g.rows() {
        return Err(Error::RankDeficient { rank, rows: g.rows() });
    }
    Ok(())
}

pub fn weight_distribution_of(g: &Matrix, budget: u128) -> Result<WeightDistribution> {
    full_rank(g)?;
    let counts = with_word!(g.field().q(), g.cols(), W => exhaustive::weight_histogram::<W>(g, budget))?;
    WeightDistribution::new(g.field().q(), counts)
}

/// Full weight distribution by enumerating all `q^k` codewords; refuses when
/// `q^k` exceeds `budget`.
pub fn weight_distribution(code: &DdcCode, budget: u128) -> Result<WeightDistribution> {
    weight_distribution_of(&code.generator, budget)
}

/// `(d, A_d)` by enumerating every codeword.
pub fn min_distance_exhaustive_of(g: &Matrix, budget: u128) -> Result<(u32, u128)> {
    let wd = weight_distribution_of(g, budget)?;
    wd.minimum().ok_or_else(|| Error::Domain("code has no nonzero codewords".into()))
}

pub fn min_distance_exhaustive(code: &DdcCode, budget: u128) -> Result<(u32, u128)> {
    min_distance_exhaustive_of(&code.generator, budget)
}

/// Information-set search. With `count`, the number of minimum-weight words is
/// exact; `stop_at` ends the search once every unseen word is known to weigh
/// at least that much.
pub fn min_distance_accelerated_with(
    g: &Matrix,
    count: bool,
    stop_at: Option<u32>,
) -> Result<AcceleratedDistance> {
    full_rank(g)?;
    let opts = accelerated::AcceleratedOptions { count, stop_at };
    let out = with_word!(g.field().q(), g.cols(), W => accelerated::min_distance::<W>(g, opts))?;
    Ok(AcceleratedDistance {
        distance: out.distance,
        a_d: out.a_d,
        exact: out.exact,
        lower_bound: out.lower_bound,
    })
}

/// Exact distance and `A_d` by information-set search; `target_cap` allows an
/// early stop once the distance is known to be at least the cap.
pub fn min_distance_accelerated(code: &DdcCode, target_cap: Option<u32>) -> Result<AcceleratedDistance> {
    min_distance_accelerated_with(&code.generator, true, target_cap)
}

/// Distance only, no minimum-word count; the fastest mode for table scans.
pub fn distance_only(g: &Matrix) -> Result<u32> {
    Ok(min_distance_accelerated_with(g, false, None)?.distance)
}
