//! Minimum distance by information-set enumeration (Brouwer-Zimmermann).
//!
//! Information sets are chosen greedily: each round row-reduces the generator
//! preferring columns not covered by earlier rounds, giving a systematic
//! matrix `G_j` whose pivot set contributes `r_j` new columns. Level `w` of
//! `G_j` enumerates every codeword whose restriction to the pivot set of `G_j`
//! has weight `w`. A codeword missed by all levels `<= w` has weight at least
//! `w + 1 - (k - r_j)` on the new columns of each `G_j`, which gives the
//! running lower bound.
//!
//! Messages are enumerated up to scalars (first nonzero coefficient 1). When
//! counting minimum-weight words, each projective codeword is counted only at
//! the first `(level, matrix)` pair that can reach it, so the count is exact
//! without storing codewords.

use super::words::Word;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::par;

#[derive(Clone, Debug)]
pub(crate) struct InfoSet {
    /// Systematic generator on `pivots`.
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    /// Pivots not used by earlier information sets.
    pub new_columns: usize,
}

/// Greedy family of information sets. `g` must have full row rank.
pub(crate) fn information_sets(g: &Matrix) -> Result<Vec<InfoSet>> {
    let (k, n) = (g.rows(), g.cols());
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    loop {
        let order: Vec<usize> =
            (0..n).filter(|&c| !used[c]).chain((0..n).filter(|&c| used[c])).collect();
        let (reduced, piv) = g.select_columns(&order).rref_with_pivots();
        if piv.len() != k {
            return Err(Error::RankDeficient { rank: piv.len(), rows: k });
        }
        let pivots: Vec<usize> = piv.iter().map(|&p| order[p]).collect();
        let new_columns = pivots.iter().filter(|&&c| !used[c]).count();
        if new_columns == 0 {
            break;
        }
        // undo the column permutation
        let mut matrix = Matrix::zeros(g.field(), k, n);
        for r in 0..k {
            for (j, &c) in order.iter().enumerate() {
                matrix.set_code(r, c, reduced.code(r, j));
            }
        }
        for &c in &pivots {
            used[c] = true;
        }
        sets.push(InfoSet { matrix, pivots, new_columns });
    }
    Ok(sets)
}

/// Running minimum: smallest weight seen and how many first-encounter
/// projective codewords have that weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct MinCount {
    weight: u32,
    count: u128,
}

impl MinCount {
    const EMPTY: MinCount = MinCount { weight: u32::MAX, count: 0 };

    #[inline]
    fn observe(&mut self, weight: u32, first: bool) {
        if weight < self.weight {
            self.weight = weight;
            self.count = first as u128;
        } else if weight == self.weight && first {
            self.count += 1;
        }
    }

    fn merge(self, other: MinCount) -> MinCount {
        match self.weight.cmp(&other.weight) {
            std::cmp::Ordering::Less => self,
            std::cmp::Ordering::Greater => other,
            std::cmp::Ordering::Equal => MinCount { weight: self.weight, count: self.count + other.count },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct AcceleratedOutcome {
    pub distance: u32,
    /// Number of minimum-weight codewords (all scalar multiples), when counted.
    pub a_d: Option<u128>,
    /// False only when stopped early by `stop_at`.
    pub exact: bool,
    /// Lower bound on the weight of every codeword not enumerated.
    pub lower_bound: u32,
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct AcceleratedOptions {
    pub count: bool,
    /// Stop once every unseen codeword is known to weigh at least this much.
    pub stop_at: Option<u32>,
}

struct Prepared<W> {
    /// `multiples[i * (q-1) + c - 1] = c * row_i`.
    multiples: Vec<W>,
    pivot_mask: u128,
}

pub(crate) fn min_distance<W: Word>(g: &Matrix, opts: AcceleratedOptions) -> Result<AcceleratedOutcome> {
    let (k, len) = (g.rows(), g.cols());
    if len > W::MAX_LEN {
        return Err(Error::Domain(format!("length {len} exceeds the packed word size")));
    }
    if len > 128 {
        return Err(Error::Domain("support masks hold at most 128 coordinates".into()));
    }
    let q = g.field().q();
    let sets = information_sets(g)?;
    let prepared: Vec<Prepared<W>> = sets
        .iter()
        .map(|s| {
            let mut multiples = Vec::with_capacity(k * (q as usize - 1));
            for row in s.matrix.row_iter() {
                let w = W::from_codes(row);
                for c in 1..q {
                    multiples.push(w.scale(c, len));
                }
            }
            let pivot_mask = s.pivots.iter().fold(0u128, |m, &c| m | (1 << c));
            Prepared { multiples, pivot_mask }
        })
        .collect();
    let masks: Vec<u128> = prepared.iter().map(|p| p.pivot_mask).collect();
    let deficits: Vec<u32> = sets.iter().map(|s| (k - s.new_columns) as u32).collect();

    let lower_bound = |level: u32, done_through: usize| -> u32 {
        deficits
            .iter()
            .enumerate()
            .map(|(j, &def)| {
                let reached = if j <= done_through { level + 1 } else { level };
                reached.saturating_sub(def)
            })
            .sum()
    };

    let mut best = MinCount::EMPTY;
    let mut bound = 0u32;
    for level in 1..=k as u32 {
        for (j, prep) in prepared.iter().enumerate() {
            let found = enumerate_level(prep, &masks, j, k, q, level, best.weight, opts.count);
            best = best.merge(found);
            bound = lower_bound(level, j);
            if level as usize == k && j == 0 {
                // the first set is a full information set: every codeword has been seen
                bound = u32::MAX;
            }
            let settled = if opts.count { bound > best.weight } else { bound >= best.weight };
            if settled {
                return Ok(finish(best, opts, q, bound, true));
            }
            if let Some(cap) = opts.stop_at {
                if bound >= cap {
                    return Ok(finish(best, opts, q, bound, false));
                }
            }
        }
    }
    // unreachable for full-rank input: level k on the first set sees every codeword
    Ok(finish(best, opts, q, bound, true))
}

fn finish(best: MinCount, opts: AcceleratedOptions, q: u8, bound: u32, exact: bool) -> AcceleratedOutcome {
    AcceleratedOutcome {
        distance: best.weight,
        a_d: (opts.count && exact).then(|| best.count * (q as u128 - 1)),
        exact,
        lower_bound: bound,
    }
}

/// All projective messages of weight `level` for information set `j`.
#[allow(clippy::too_many_arguments)]
fn enumerate_level<W: Word>(
    prep: &Prepared<W>,
    masks: &[u128],
    j: usize,
    k: usize,
    q: u8,
    level: u32,
    threshold: u32,
    count: bool,
) -> MinCount {
    let level = level as usize;
    let mult = q as usize - 1;
    let first_encounter = |word: W| -> bool {
        let support = word.support();
        masks.iter().enumerate().all(|(i, &m)| {
            let w = (support & m).count_ones() as usize;
            w > level || (w == level && i >= j)
        })
    };
    par::map_reduce(
        0..(k - level + 1),
        MinCount::EMPTY,
        |first| {
            let mut local = MinCount::EMPTY;
            let mut visit = |word: W| {
                let w = word.weight();
                if w <= threshold.min(local.weight) {
                    let is_first = count && first_encounter(word);
                    local.observe(w, is_first);
                }
            };
            // leading coefficient is fixed to 1
            let start = prep.multiples[first * mult];
            descend(&prep.multiples, mult, k, first + 1, level - 1, start, &mut visit);
            local
        },
        MinCount::merge,
    )
}

fn descend<W: Word>(
    multiples: &[W],
    mult: usize,
    k: usize,
    from: usize,
    remaining: usize,
    acc: W,
    visit: &mut impl FnMut(W),
) {
    if remaining == 0 {
        visit(acc);
        return;
    }
    if remaining == 1 {
        for m in &multiples[from * mult..k * mult] {
            visit(acc.add(*m));
        }
        return;
    }
    for i in from..=(k - remaining) {
        for m in &multiples[i * mult..(i + 1) * mult] {
            descend(multiples, mult, k, i + 1, remaining - 1, acc.add(*m), visit);
        }
    }
}
