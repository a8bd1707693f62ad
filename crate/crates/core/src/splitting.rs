//! Duadic splittings of odd moduli.
//!
//! A splitting of odd `n > 1` is a partition `(S1, S2)` of `{1, .., n-1}` such
//! that some multiplier `x -> a*x mod n` maps `S1` onto `S2`. Since a
//! multiplier permutes `{1, .., n-1}`, it then also maps `S2` onto `S1`, so
//! only the one direction is ever checked.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Whether `b` is congruent to a square modulo `n`.
pub fn is_square_mod(b: u32, n: u32) -> bool {
    let b = b as u64 % n as u64;
    (0..n as u64).any(|x| x * x % n as u64 == b)
}

/// Multiplicative order of `a` modulo `n`, or `None` when `gcd(a, n) != 1`.
pub fn multiplicative_order(a: u32, n: u32) -> Option<u32> {
    if n < 2 || gcd(a as u64, n as u64) != 1 {
        return None;
    }
    let (a, n) = (a as u64 % n as u64, n as u64);
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = x * a % n;
        k += 1;
    }
    Some(k)
}

fn check_odd_modulus(n: u32) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Domain(format!("modulus must be odd and greater than 1, got {n}")));
    }
    Ok(())
}

/// The map `i -> a*i mod n` for `gcd(a, n) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Multiplier {
    n: u32,
    a: u32,
    order: u32,
}

impl Multiplier {
    pub fn new(n: u32, a: u32) -> Result<Self> {
        let a_red = if n == 0 { a } else { a % n };
        match multiplicative_order(a_red, n) {
            Some(order) if a_red != 0 => Ok(Multiplier { n, a: a_red, order }),
            _ => Err(Error::Domain(format!("{a} is not a unit modulo {n}"))),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    #[inline]
    pub fn apply(&self, i: u32) -> u32 {
        ((i as u64 * self.a as u64) % self.n as u64) as u32
    }

    /// Image of a set, sorted.
    pub fn image(&self, set: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = set.iter().map(|&i| self.apply(i)).collect();
        out.sort_unstable();
        out
    }

    /// All multipliers modulo `n`.
    pub fn all(n: u32) -> impl Iterator<Item = Multiplier> {
        (1..n).filter_map(move |a| Multiplier::new(n, a).ok())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Splitting {
    pub n: u32,
    pub s1: Vec<u32>,
    pub s2: Vec<u32>,
    pub witnesses: Vec<u32>,
    pub base: Option<u32>,
}

impl Splitting {
    /// The splitting with `s1` and `s2` exchanged (same witnesses).
    pub fn swapped(&self) -> Splitting {
        Splitting {
            n: self.n,
            s1: self.s2.clone(),
            s2: self.s1.clone(),
            witnesses: self.witnesses.clone(),
            base: self.base,
        }
    }

    /// Representative whose `s1` is the lexicographically smaller of the two sides.
    pub fn canonical(&self) -> Splitting {
        if self.s2 < self.s1 {
            self.swapped()
        } else {
            self.clone()
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.s1 <= self.s2
    }

    pub fn with_base(mut self, base: Option<u32>) -> Splitting {
        self.base = base;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("splitting serializes")
    }

    pub fn from_json(text: &str) -> Result<Splitting> {
        let raw: Splitting =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("splitting json: {e}")))?;
        let checked = verify_splitting(raw.n, &raw.s1, &raw.s2)?;
        Ok(checked.with_base(raw.base))
    }
}

/// Orbits of `x -> b*x mod n` on the nonzero residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetPartition {
    pub n: u32,
    pub base: u32,
    /// Each coset sorted, ordered by smallest element.
    pub cosets: Vec<Vec<u32>>,
}

impl CosetPartition {
    /// Index of the coset containing each residue; entry 0 is unused.
    pub fn coset_index(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.n as usize];
        for (k, c) in self.cosets.iter().enumerate() {
            for &x in c {
                idx[x as usize] = k;
            }
        }
        idx
    }

    /// Whether `set` is a union of cosets.
    pub fn is_union_of_cosets(&self, set: &[u32]) -> bool {
        let members: BTreeSet<u32> = set.iter().copied().collect();
        self.cosets.iter().all(|c| {
            let inside = c.iter().filter(|x| members.contains(x)).count();
            inside == 0 || inside == c.len()
        })
    }
}

pub fn cyclotomic_cosets(n: u32, base: u32) -> Result<CosetPartition> {
    check_odd_modulus(n)?;
    let mul = Multiplier::new(n, base)
        .map_err(|_| Error::Domain(format!("base {base} is not coprime to {n}")))?;
    let mut seen = vec![false; n as usize];
    let mut cosets = Vec::new();
    for start in 1..n {
        if seen[start as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            coset.push(x);
            x = mul.apply(x);
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(CosetPartition { n, base: mul.a(), cosets })
}

/// Checks both splitting conditions and collects every witness multiplier.
pub fn verify_splitting(n: u32, s1: &[u32], s2: &[u32]) -> Result<Splitting> {
    check_odd_modulus(n)?;
    let not_partition = |reason: String| Error::NotAPartition { n, reason };
    let mut mark = vec![0u8; n as usize];
    for (side, set) in [(1u8, s1), (2u8, s2)] {
        for &x in set {
            if x == 0 || x >= n {
                return Err(not_partition(format!("{x} is outside 1..{}", n - 1)));
            }
            if mark[x as usize] != 0 {
                return Err(not_partition(format!("{x} appears more than once")));
            }
            mark[x as usize] = side;
        }
    }
    if let Some(missing) = (1..n).find(|&x| mark[x as usize] == 0) {
        return Err(not_partition(format!("{missing} is in neither set")));
    }
    let mut s1: Vec<u32> = s1.to_vec();
    let mut s2: Vec<u32> = s2.to_vec();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1.len() != s2.len() {
        return Err(Error::NoWitness(n));
    }
    let witnesses: Vec<u32> = Multiplier::all(n)
        .filter(|m| s1.iter().all(|&x| mark[m.apply(x) as usize] == 2))
        .map(|m| m.a())
        .collect();
    if witnesses.is_empty() {
        return Err(Error::NoWitness(n));
    }
    Ok(Splitting { n, s1, s2, witnesses, base: None })
}

/// Splits `s1` from the complement of `s1` in `1..n`.
pub fn splitting_from_s1(n: u32, s1: &[u32]) -> Result<Splitting> {
    check_odd_modulus(n)?;
    let members: BTreeSet<u32> = s1.iter().copied().collect();
    let s2: Vec<u32> = (1..n).filter(|x| !members.contains(x)).collect();
    verify_splitting(n, s1, &s2)
}

/// `S1 = {1, .., (n-1)/2}`, swapped with its complement by `x -> -x`.
pub fn half_splitting(n: u32) -> Result<Splitting> {
    check_odd_modulus(n)?;
    let h = (n - 1) / 2;
    let s1: Vec<u32> = (1..=h).collect();
    let s2: Vec<u32> = (h + 1..n).collect();
    verify_splitting(n, &s1, &s2)
}

/// Quadratic residues against nonresidues of an odd prime.
pub fn qr_splitting(p: u32) -> Result<Splitting> {
    if p < 3 || !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not an odd prime")));
    }
    let squares: BTreeSet<u32> = (1..p).map(|x| (x as u64 * x as u64 % p as u64) as u32).collect();
    let s1: Vec<u32> = squares.iter().copied().collect();
    let s2: Vec<u32> = (1..p).filter(|x| !squares.contains(x)).collect();
    verify_splitting(p, &s1, &s2)
}

/// True when `a` has odd order modulo `n`, in which case no splitting of `n`
/// can have `a` as a witness.
pub fn reject_odd_order(n: u32, a: u32) -> Result<bool> {
    let m = Multiplier::new(n, a)?;
    Ok(m.order() % 2 == 1)
}

/// All splittings whose sides are unions of `base`-cyclotomic cosets, in
/// canonical form, sorted by `s1`.
///
/// A multiplier `a` permutes the cosets. Splittings witnessed by `a` exist
/// only when every orbit of that permutation has even length; each orbit
/// `(C0, C1, ..)` then contributes its even-indexed or its odd-indexed cosets
/// to `S1`.
pub fn enumerate_coset_splittings(n: u32, base: u32) -> Result<Vec<Splitting>> {
    let part = cyclotomic_cosets(n, base)?;
    let index = part.coset_index();
    let ncos = part.cosets.len();
    let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();

    for m in Multiplier::all(n) {
        let perm: Vec<usize> =
            part.cosets.iter().map(|c| index[m.apply(c[0]) as usize]).collect();
        let mut visited = vec![false; ncos];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut ok = true;
        for start in 0..ncos {
            if visited[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut c = start;
            while !visited[c] {
                visited[c] = true;
                orbit.push(c);
                c = perm[c];
            }
            if orbit.len() % 2 == 1 {
                ok = false;
                break;
            }
            orbits.push(orbit);
        }
        if !ok {
            continue;
        }
        if orbits.len() >= 64 {
            return Err(Error::Domain(format!(
                "{} coset orbits modulo {n} is too many to enumerate",
                orbits.len()
            )));
        }
        for choice in 0..(1u64 << orbits.len()) {
            let mut s1 = Vec::with_capacity((n as usize - 1) / 2);
            let mut s2 = Vec::with_capacity((n as usize - 1) / 2);
            for (k, orbit) in orbits.iter().enumerate() {
                let parity = ((choice >> k) & 1) as usize;
                for (pos, &c) in orbit.iter().enumerate() {
                    let side = if pos % 2 == parity { &mut s1 } else { &mut s2 };
                    side.extend_from_slice(&part.cosets[c]);
                }
            }
            s1.sort_unstable();
            s2.sort_unstable();
            found.insert(if s2 < s1 { s2 } else { s1 });
        }
    }

    found
        .into_iter()
        .map(|s1| splitting_from_s1(n, &s1).map(|sp| sp.with_base(Some(part.base))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_examples() {
        let p = cyclotomic_cosets(15, 4).unwrap();
        let expected: Vec<Vec<u32>> = vec![
            vec![1, 4],
            vec![2, 8],
            vec![3, 12],
            vec![5],
            vec![6, 9],
            vec![7, 13],
            vec![10],
            vec![11, 14],
        ];
        assert_eq!(p.cosets, expected);
        assert_eq!(cyclotomic_cosets(3, 4).unwrap().cosets, vec![vec![1], vec![2]]);
        assert_eq!(cyclotomic_cosets(7, 4).unwrap().cosets, vec![vec![1, 2, 4], vec![3, 5, 6]]);
        assert!(matches!(cyclotomic_cosets(15, 3), Err(Error::Domain(_))));
        assert!(cyclotomic_cosets(8, 3).is_err());
    }

    #[test]
    fn verify_examples() {
        let s1 = [1, 4, 3, 12, 7, 13, 5];
        let sp = splitting_from_s1(15, &s1).unwrap();
        assert!(sp.witnesses.contains(&2));
        let sp = verify_splitting(5, &[1, 2], &[3, 4]).unwrap();
        assert!(sp.witnesses.contains(&4));
        assert!(matches!(
            verify_splitting(9, &[1, 2, 3], &[4, 5, 6, 7, 8]),
            Err(Error::NotAPartition { .. }) | Err(Error::NoWitness(_))
        ));
        assert!(matches!(
            verify_splitting(7, &[1, 2], &[3, 4, 5]),
            Err(Error::NotAPartition { .. })
        ));
        assert!(matches!(
            verify_splitting(7, &[1, 2, 3, 7], &[4, 5, 6]),
            Err(Error::NotAPartition { .. })
        ));
        // a partition into equal halves that no multiplier swaps
        assert!(matches!(verify_splitting(7, &[1, 2, 4], &[3, 5, 6]).map(|s| s.n), Ok(7)));
        assert!(matches!(verify_splitting(7, &[1, 2, 5], &[3, 4, 6]), Err(Error::NoWitness(7))));
    }

    #[test]
    fn half_and_qr() {
        let h = half_splitting(7).unwrap();
        assert_eq!((h.s1.as_slice(), h.s2.as_slice()), (&[1, 2, 3][..], &[4, 5, 6][..]));
        let h = half_splitting(3).unwrap();
        assert_eq!((h.s1, h.s2), (vec![1], vec![2]));
        let h = half_splitting(41).unwrap();
        assert_eq!(h.s1, (1..=20).collect::<Vec<_>>());
        assert!(h.witnesses.contains(&40));

        let q = qr_splitting(7).unwrap();
        assert_eq!((q.s1.as_slice(), q.s2.as_slice()), (&[1, 2, 4][..], &[3, 5, 6][..]));
        assert_eq!(qr_splitting(11).unwrap().s1, vec![1, 3, 4, 5, 9]);
        let q = qr_splitting(5).unwrap();
        assert_eq!((q.s1, q.s2.clone()), (vec![1, 4], vec![2, 3]));
        assert_eq!(q.witnesses, q.s2);
        assert!(matches!(qr_splitting(15), Err(Error::Domain(_))));
    }

    #[test]
    fn odd_order_rejection() {
        assert!(reject_odd_order(7, 2).unwrap());
        assert!(!reject_odd_order(7, 3).unwrap());
        assert!(!reject_odd_order(15, 4).unwrap());
        assert!(reject_odd_order(15, 5).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let qr = qr_splitting(11).unwrap();
        let all = enumerate_coset_splittings(11, 4).unwrap();
        assert!(all.iter().any(|s| s.s1 == qr.s1));

        let mut s1 = vec![1, 4, 3, 12, 7, 13, 5];
        s1.sort_unstable();
        let all = enumerate_coset_splittings(15, 4).unwrap();
        assert!(all.iter().any(|s| s.s1 == s1 || s.s2 == s1));

        // 2 = 3^2 mod 7, so base-2 coset splittings exist (the QR one).
        let all = enumerate_coset_splittings(7, 2).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].s1, vec![1, 2, 4]);
        // 3 is not a square mod 7
        assert!(enumerate_coset_splittings(7, 3).unwrap().is_empty());
    }

    #[test]
    fn canonical_form() {
        let sp = verify_splitting(5, &[2, 3], &[1, 4]).unwrap();
        let c = sp.canonical();
        assert_eq!(c.s1, vec![1, 4]);
        assert_eq!(c.canonical(), c);
        assert_eq!(qr_splitting(7).unwrap().canonical().s1, vec![1, 2, 4]);
    }

    #[test]
    fn json_round_trip() {
        let sp = enumerate_coset_splittings(15, 4).unwrap().remove(0);
        let text = sp.to_json();
        assert!(text.contains("\"base\":4"));
        assert_eq!(Splitting::from_json(&text).unwrap(), sp);
        assert!(Splitting::from_json(r#"{"n":7,"s1":[1,2,5],"s2":[3,4,6],"witnesses":[],"base":null}"#)
            .is_err());
    }
}
