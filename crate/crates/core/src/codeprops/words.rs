//! Packed codeword representations used by the enumeration kernels.
//!
//! GF(2) words are single `u128` bit vectors. GF(3) uses two one-hot bit
//! planes (value 1, value 2); GF(4) uses two planes holding the coordinates in
//! the basis (1, w), so addition is XOR. GF(5) and GF(7) keep one byte per
//! coordinate in `u64` lanes with SWAR modular addition.
//!
//! Coordinate `i` always lives at bit (or byte) `i`; lengths up to 128
//! (bit-packed) or `8 * L` (byte lanes) are supported.

use crate::gf::Field;

pub(crate) trait Word: Copy + Send + Sync + PartialEq + 'static {
    const Q: u8;
    /// Longest supported word length.
    const MAX_LEN: usize;

    fn zero() -> Self;
    fn from_codes(codes: &[u8]) -> Self;
    fn add(self, other: Self) -> Self;
    fn weight(self) -> u32;
    /// Bit `i` set when coordinate `i` is nonzero.
    fn support(self) -> u128;

    fn field() -> Field {
        Field::new(Self::Q).expect("word types use supported fields")
    }

    fn to_codes(self, len: usize) -> Vec<u8>;

    /// `c * self` for a field code `c`; not on any hot path.
    fn scale(self, c: u8, len: usize) -> Self {
        let f = Self::field();
        let codes: Vec<u8> = self.to_codes(len).into_iter().map(|v| f.mul_raw(v, c)).collect();
        Self::from_codes(&codes)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Gf2Word(pub u128);

impl Word for Gf2Word {
    const Q: u8 = 2;
    const MAX_LEN: usize = 128;

    #[inline]
    fn zero() -> Self {
        Gf2Word(0)
    }

    fn from_codes(codes: &[u8]) -> Self {
        Gf2Word(codes.iter().enumerate().fold(0, |acc, (i, &v)| acc | ((v as u128 & 1) << i)))
    }

    #[inline]
    fn add(self, other: Self) -> Self {
        Gf2Word(self.0 ^ other.0)
    }

    #[inline]
    fn weight(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    fn support(self) -> u128 {
        self.0
    }

    fn to_codes(self, len: usize) -> Vec<u8> {
        (0..len).map(|i| ((self.0 >> i) & 1) as u8).collect()
    }

    fn scale(self, c: u8, _len: usize) -> Self {
        if c == 0 {
            Gf2Word(0)
        } else {
            self
        }
    }
}

/// One-hot planes: `ones` marks coordinates equal to 1, `twos` those equal to 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Gf3Word {
    ones: u128,
    twos: u128,
}

impl Word for Gf3Word {
    const Q: u8 = 3;
    const MAX_LEN: usize = 128;

    #[inline]
    fn zero() -> Self {
        Gf3Word { ones: 0, twos: 0 }
    }

    fn from_codes(codes: &[u8]) -> Self {
        let mut w = Self::zero();
        for (i, &v) in codes.iter().enumerate() {
            match v {
                1 => w.ones |= 1 << i,
                2 => w.twos |= 1 << i,
                _ => {}
            }
        }
        w
    }

    #[inline]
    fn add(self, o: Self) -> Self {
        let zero_a = !(self.ones | self.twos);
        let zero_b = !(o.ones | o.twos);
        Gf3Word {
            ones: (self.ones & zero_b) | (zero_a & o.ones) | (self.twos & o.twos),
            twos: (self.twos & zero_b) | (zero_a & o.twos) | (self.ones & o.ones),
        }
    }

    #[inline]
    fn weight(self) -> u32 {
        (self.ones | self.twos).count_ones()
    }

    #[inline]
    fn support(self) -> u128 {
        self.ones | self.twos
    }

    fn to_codes(self, len: usize) -> Vec<u8> {
        (0..len)
            .map(|i| ((self.ones >> i) & 1) as u8 + 2 * ((self.twos >> i) & 1) as u8)
            .collect()
    }

    fn scale(self, c: u8, _len: usize) -> Self {
        match c {
            0 => Self::zero(),
            1 => self,
            _ => Gf3Word { ones: self.twos, twos: self.ones },
        }
    }
}

/// Coordinates in the GF(2)-basis (1, w): bit `i` of `one` and `omega`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Gf4Word {
    one: u128,
    omega: u128,
}

impl Word for Gf4Word {
    const Q: u8 = 4;
    const MAX_LEN: usize = 128;

    #[inline]
    fn zero() -> Self {
        Gf4Word { one: 0, omega: 0 }
    }

    fn from_codes(codes: &[u8]) -> Self {
        let mut w = Self::zero();
        for (i, &v) in codes.iter().enumerate() {
            w.one |= ((v & 1) as u128) << i;
            w.omega |= (((v >> 1) & 1) as u128) << i;
        }
        w
    }

    #[inline]
    fn add(self, o: Self) -> Self {
        Gf4Word { one: self.one ^ o.one, omega: self.omega ^ o.omega }
    }

    #[inline]
    fn weight(self) -> u32 {
        (self.one | self.omega).count_ones()
    }

    #[inline]
    fn support(self) -> u128 {
        self.one | self.omega
    }

    fn to_codes(self, len: usize) -> Vec<u8> {
        (0..len)
            .map(|i| ((self.one >> i) & 1) as u8 | ((((self.omega >> i) & 1) as u8) << 1))
            .collect()
    }
}

/// One byte per coordinate, `L` lanes of eight bytes, values reduced mod `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct ByteWord<const P: u8, const L: usize> {
    lanes: [u64; L],
}

const LOW_BITS: u64 = 0x0101_0101_0101_0101;
const HIGH_BITS: u64 = 0x8080_8080_8080_8080;

impl<const P: u8, const L: usize> Word for ByteWord<P, L> {
    const Q: u8 = P;
    const MAX_LEN: usize = 8 * L;

    #[inline]
    fn zero() -> Self {
        ByteWord { lanes: [0; L] }
    }

    fn from_codes(codes: &[u8]) -> Self {
        let mut w = Self::zero();
        for (i, &v) in codes.iter().enumerate() {
            w.lanes[i / 8] |= (v as u64) << (8 * (i % 8));
        }
        w
    }

    #[inline]
    fn add(self, o: Self) -> Self {
        let mut out = [0u64; L];
        let bias = (0x80 - P as u64) * LOW_BITS;
        for (k, slot) in out.iter_mut().enumerate() {
            // bytes stay below 2P, so neither sum nor bias carries across bytes
            let s = self.lanes[k] + o.lanes[k];
            let wrap = ((s + bias) & HIGH_BITS) >> 7;
            *slot = s - wrap * P as u64;
        }
        ByteWord { lanes: out }
    }

    #[inline]
    fn weight(self) -> u32 {
        self.lanes
            .iter()
            .map(|&x| ((x + 0x7f * LOW_BITS) & HIGH_BITS).count_ones())
            .sum()
    }

    fn support(self) -> u128 {
        let mut s = 0u128;
        for (k, &x) in self.lanes.iter().enumerate() {
            let nz = (x + 0x7f * LOW_BITS) & HIGH_BITS;
            for b in 0..8 {
                if (nz >> (8 * b + 7)) & 1 == 1 {
                    s |= 1 << (8 * k + b);
                }
            }
        }
        s
    }

    fn to_codes(self, len: usize) -> Vec<u8> {
        (0..len).map(|i| ((self.lanes[i / 8] >> (8 * (i % 8))) & 0xff) as u8).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_against_tables<W: Word>(a: &[u8], b: &[u8], c: u8) {
        let f = W::field();
        let len = a.len();
        let wa = W::from_codes(a);
        let wb = W::from_codes(b);
        assert_eq!(wa.to_codes(len), a);
        let sum: Vec<u8> = a.iter().zip(b).map(|(&x, &y)| f.add_raw(x, y)).collect();
        assert_eq!(wa.add(wb).to_codes(len), sum);
        let scaled: Vec<u8> = a.iter().map(|&x| f.mul_raw(x, c)).collect();
        assert_eq!(wa.scale(c, len).to_codes(len), scaled);
        let weight = a.iter().filter(|&&x| x != 0).count() as u32;
        assert_eq!(wa.weight(), weight);
        let support: u128 =
            a.iter().enumerate().filter(|(_, &x)| x != 0).fold(0, |s, (i, _)| s | (1 << i));
        assert_eq!(wa.support(), support);
    }

    fn vectors(q: u8, max_len: usize) -> impl Strategy<Value = (Vec<u8>, Vec<u8>, u8)> {
        (1..=max_len).prop_flat_map(move |len| {
            (
                prop::collection::vec(0..q, len),
                prop::collection::vec(0..q, len),
                0..q,
            )
        })
    }

    proptest! {
        #[test]
        fn gf2_word(v in vectors(2, 128)) { check_against_tables::<Gf2Word>(&v.0, &v.1, v.2) }
        #[test]
        fn gf3_word(v in vectors(3, 128)) { check_against_tables::<Gf3Word>(&v.0, &v.1, v.2) }
        #[test]
        fn gf4_word(v in vectors(4, 128)) { check_against_tables::<Gf4Word>(&v.0, &v.1, v.2) }
        #[test]
        fn gf5_word(v in vectors(5, 96)) { check_against_tables::<ByteWord<5, 12>>(&v.0, &v.1, v.2) }
        #[test]
        fn gf7_word(v in vectors(7, 16)) { check_against_tables::<ByteWord<7, 2>>(&v.0, &v.1, v.2) }
        #[test]
        fn gf7_word_long(v in vectors(7, 96)) { check_against_tables::<ByteWord<7, 12>>(&v.0, &v.1, v.2) }
    }
}
