use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weight distribution `A_0..A_len` of a linear code over GF(q).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub length: usize,
    pub q: u8,
    pub counts: Vec<u128>,
}

impl WeightDistribution {
    pub fn new(q: u8, counts: Vec<u128>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::Domain("a weight distribution needs A_0".into()));
        }
        Ok(WeightDistribution { length: counts.len() - 1, q, counts })
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    /// `k` such that the distribution sums to `q^k`, if it does.
    pub fn dimension(&self) -> Option<usize> {
        let total = self.total();
        let mut acc = 1u128;
        for k in 0..=self.length {
            if acc == total {
                return Some(k);
            }
            acc = acc.checked_mul(self.q as u128)?;
        }
        None
    }

    /// Smallest nonzero weight and its count.
    pub fn minimum(&self) -> Option<(u32, u128)> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(i, &c)| (i as u32, c))
    }

    /// Whether every nonzero weight is divisible by `m`.
    pub fn weights_divisible_by(&self, m: usize) -> bool {
        self.counts.iter().enumerate().all(|(i, &c)| c == 0 || i % m == 0)
    }

    pub fn has_odd_weight(&self) -> bool {
        !self.weights_divisible_by(2)
    }
}

fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Krawtchouk polynomial `K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i, s) C(len-i, j-s)`.
fn krawtchouk(len: usize, q: u8, j: usize, i: usize) -> BigInt {
    let qm1 = BigInt::from(q as u32 - 1);
    let mut sum = BigInt::zero();
    for s in 0..=j {
        if s > i || j - s > len - i {
            continue;
        }
        let term = num_traits::pow(qm1.clone(), j - s) * binomial(i, s) * binomial(len - i, j - s);
        if s % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// Weight distribution of the dual of a `[len, k]` code with distribution `wd`.
pub fn macwilliams(wd: &WeightDistribution, k: usize) -> Result<WeightDistribution> {
    let expected = (wd.q as u128)
        .checked_pow(k as u32)
        .ok_or_else(|| Error::Domain("code size overflows".into()))?;
    if wd.total() != expected || wd.counts[0] != 1 || k > wd.length {
        return Err(Error::Domain(format!(
            "distribution with {} words and A_0 = {} is not that of a [{}, {k}] code",
            wd.total(),
            wd.counts[0],
            wd.length
        )));
    }
    let size = BigInt::from(expected);
    let mut out = Vec::with_capacity(wd.length + 1);
    for j in 0..=wd.length {
        let mut acc = BigInt::zero();
        for (i, &a) in wd.counts.iter().enumerate() {
            if a != 0 {
                acc += BigInt::from(a) * krawtchouk(wd.length, wd.q, j, i);
            }
        }
        if !(&acc % &size).is_zero() || acc.is_negative() {
            return Err(Error::Domain(format!(
                "transform is not integral at weight {j}; input is not a linear code distribution"
            )));
        }
        let v = (acc / &size)
            .to_u128()
            .ok_or_else(|| Error::Domain("dual count overflows".into()))?;
        out.push(v);
    }
    WeightDistribution::new(wd.q, out)
}
