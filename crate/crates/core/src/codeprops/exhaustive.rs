//! Full codeword enumeration.
//!
//! The message space is walked as an additive group: over a prime field the
//! generators are the `k` generator rows (radix `p`); over GF(4) they are the
//! `2k` vectors `row_i` and `w * row_i` (radix 2). A modular Gray code changes
//! exactly one generator coefficient by `+1` per step, so each codeword costs
//! one word addition. The walk is cut into chunks of `p^L` consecutive Gray
//! indices whose start words are computed directly, so chunks are independent.

use super::words::Word;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::par;

/// Words per chunk is at most `p^L <= CHUNK_WORDS`.
const CHUNK_WORDS: u128 = 1 << 14;

pub(crate) fn message_space_size(q: u8, k: usize) -> Option<u128> {
    (q as u128).checked_pow(k as u32)
}

pub(crate) fn check_budget(q: u8, k: usize, budget: u128) -> Result<u128> {
    match message_space_size(q, k) {
        Some(total) if total <= budget => Ok(total),
        Some(total) => Err(Error::BudgetExceeded { required: total, budget }),
        None => Err(Error::BudgetExceeded { required: u128::MAX, budget }),
    }
}

/// Additive generators of the code and their radix.
pub(crate) fn additive_generators<W: Word>(g: &Matrix) -> (Vec<W>, u32) {
    let f = g.field();
    let len = g.cols();
    let mut gens = Vec::new();
    for row in g.row_iter() {
        let w = W::from_codes(row);
        gens.push(w);
        if f.q() == 4 {
            gens.push(w.scale(2, len));
        }
    }
    (gens, f.characteristic() as u32)
}

/// Number of codewords of each weight `0..=len`.
pub(crate) fn weight_histogram<W: Word>(g: &Matrix, budget: u128) -> Result<Vec<u128>> {
    let len = g.cols();
    if len > W::MAX_LEN {
        return Err(Error::Domain(format!("length {len} exceeds the packed word size")));
    }
    check_budget(g.field().q(), g.rows(), budget)?;
    let (gens, p) = additive_generators::<W>(g);
    let depth = gens.len();
    let mut low = 0usize;
    while low < depth && (p as u128).pow(low as u32 + 1) <= CHUNK_WORDS {
        low += 1;
    }
    let chunk_len = (p as u64).pow(low as u32);
    let chunks = (p as u128).pow((depth - low) as u32);
    let chunks = usize::try_from(chunks)
        .map_err(|_| Error::Domain("message space too large to partition".into()))?;

    let hist = par::map_reduce(
        0..chunks,
        vec![0u128; len + 1],
        |chunk| {
            let mut local = vec![0u64; len + 1];
            let mut word = chunk_start::<W>(&gens, p, low, chunk as u128);
            local[word.weight() as usize] += 1;
            let mut counter = vec![0u32; low];
            for _ in 1..chunk_len {
                let mut t = 0;
                loop {
                    counter[t] += 1;
                    if counter[t] < p {
                        break;
                    }
                    counter[t] = 0;
                    t += 1;
                }
                word = word.add(gens[t]);
                local[word.weight() as usize] += 1;
            }
            local.into_iter().map(u128::from).collect()
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    Ok(hist)
}

/// Codeword at Gray index `chunk * p^low`.
fn chunk_start<W: Word>(gens: &[W], p: u32, low: usize, chunk: u128) -> W {
    let depth = gens.len();
    let mut digits = vec![0u32; depth + 1];
    let mut rest = chunk;
    for d in digits.iter_mut().take(depth).skip(low) {
        *d = (rest % p as u128) as u32;
        rest /= p as u128;
    }
    let mut word = W::zero();
    for j in 0..depth {
        let gray = (digits[j] + p - digits[j + 1]) % p;
        for _ in 0..gray {
            word = word.add(gens[j]);
        }
    }
    word
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codeprops::words::{ByteWord, Gf2Word, Gf3Word, Gf4Word};
    use crate::gf::Field;

    /// Direct enumeration of `m * G` over all messages, as field-code vectors.
    fn naive_histogram(g: &Matrix) -> Vec<u128> {
        let f = g.field();
        let q = f.q() as usize;
        let (k, n) = (g.rows(), g.cols());
        let mut hist = vec![0u128; n + 1];
        for idx in 0..q.pow(k as u32) {
            let mut m = idx;
            let mut word = vec![0u8; n];
            for r in 0..k {
                let c = (m % q) as u8;
                m /= q;
                for (j, w) in word.iter_mut().enumerate() {
                    *w = f.add_raw(*w, f.mul_raw(c, g.code(r, j)));
                }
            }
            hist[word.iter().filter(|&&v| v != 0).count()] += 1;
        }
        hist
    }

    fn sample(q: u8, k: usize, n: usize, seed: u64) -> Matrix {
        let mut state = seed;
        let data = (0..k * n)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % q as u64) as u8
            })
            .collect();
        Matrix::new(Field::new(q).unwrap(), k, n, data).unwrap()
    }

    #[test]
    fn matches_naive_enumeration() {
        for seed in 0..4 {
            let g = sample(2, 7, 12, seed);
            assert_eq!(weight_histogram::<Gf2Word>(&g, u128::MAX).unwrap(), naive_histogram(&g));
            let g = sample(3, 6, 11, seed);
            assert_eq!(weight_histogram::<Gf3Word>(&g, u128::MAX).unwrap(), naive_histogram(&g));
            let g = sample(4, 4, 9, seed);
            assert_eq!(weight_histogram::<Gf4Word>(&g, u128::MAX).unwrap(), naive_histogram(&g));
            let g = sample(5, 4, 10, seed);
            assert_eq!(
                weight_histogram::<ByteWord<5, 2>>(&g, u128::MAX).unwrap(),
                naive_histogram(&g)
            );
            let g = sample(7, 3, 20, seed);
            assert_eq!(
                weight_histogram::<ByteWord<7, 4>>(&g, u128::MAX).unwrap(),
                naive_histogram(&g)
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = sample(3, 6, 11, 1);
        assert!(matches!(
            weight_histogram::<Gf3Word>(&g, 728),
            Err(Error::BudgetExceeded { required: 729, budget: 728 })
        ));
        assert!(weight_histogram::<Gf3Word>(&g, 729).is_ok());
    }
}
