//! Exact difference sets via number-theoretic convolution.
//!
//! `set_difference(A, B)` returns {a - b} for integer sets over a shared
//! universe [0, U]. Indicator polynomials f_A = sum x^(U+a) and
//! f_B = sum x^(U-b) are multiplied with an NTT over a 64-bit prime
//! field; a product coefficient at exponent k is the number of pairs with
//! a - b = k - 2U. Coefficients are at most (U+1)^2, far below the
//! modulus, so membership is exact with no rounding tolerance anywhere.

/// 2^64 - 2^32 + 1. Its multiplicative group has 2-adicity 32, so power
/// of two transforms up to length 2^32 exist; 7 generates the group.
const P: u64 = 0xFFFF_FFFF_0000_0001;
const GEN: u64 = 7;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    acc
}

/// In-place iterative NTT of power-of-two length; `invert` gives the
/// scaled inverse transform.
fn ntt(v: &mut [u64], invert: bool) {
    let n = v.len();
    debug_assert!(n.is_power_of_two() && (n as u64) <= 1 << 32);
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            v.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let mut w_len = powmod(GEN, (P - 1) / len as u64);
        if invert {
            w_len = powmod(w_len, P - 2);
        }
        debug_assert_eq!(powmod(w_len, len as u64), 1);
        debug_assert_ne!(powmod(w_len, len as u64 / 2), 1);
        for start in (0..n).step_by(len) {
            let mut w = 1u64;
            for k in 0..len / 2 {
                let a = v[start + k];
                let b = mulmod(v[start + k + len / 2], w);
                v[start + k] = addmod(a, b);
                v[start + k + len / 2] = submod(a, b);
                w = mulmod(w, w_len);
            }
        }
        len <<= 1;
    }
    if invert {
        let inv_n = powmod(n as u64, P - 2);
        for x in v.iter_mut() {
            *x = mulmod(*x, inv_n);
        }
    }
}

fn addmod(a: u64, b: u64) -> u64 {
    let (s, over) = a.overflowing_add(b);
    if over || s >= P {
        s.wrapping_sub(P)
    } else {
        s
    }
}

fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (P - b)
    }
}

/// A set of integers in [0, universe], stored as a bitset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSet {
    universe: u32,
    bits: Vec<u64>,
}

impl IntSet {
    pub fn new(universe: u32) -> Self {
        IntSet {
            universe,
            bits: vec![0; universe as usize / 64 + 1],
        }
    }

    pub fn from_members(universe: u32, members: impl IntoIterator<Item = u32>) -> Self {
        let mut s = IntSet::new(universe);
        for m in members {
            s.insert(m);
        }
        s
    }

    pub fn universe(&self) -> u32 {
        self.universe
    }

    pub fn insert(&mut self, m: u32) {
        assert!(m <= self.universe, "member outside universe");
        self.bits[m as usize / 64] |= 1 << (m % 64);
    }

    pub fn contains(&self, m: u32) -> bool {
        m <= self.universe && self.bits[m as usize / 64] >> (m % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (0..=self.universe).filter(move |&m| self.contains(m))
    }
}

/// The exact difference set {a - b}, with differences re-based by +U so
/// they fit an `IntSet` over [0, 2U].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffSet {
    universe: u32,
    rebased: IntSet,
}

impl DiffSet {
    pub fn contains(&self, d: i64) -> bool {
        let m = d + self.universe as i64;
        (0..=2 * self.universe as i64).contains(&m) && self.rebased.contains(m as u32)
    }

    /// Differences in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        let u = self.universe as i64;
        self.rebased.iter().map(move |m| m as i64 - u)
    }

    pub fn is_empty(&self) -> bool {
        self.rebased.is_empty()
    }

    pub fn len(&self) -> usize {
        self.rebased.len()
    }
}

/// Exact {a - b : a in A, b in B} by indicator convolution, O(U log U).
/// Both sets must share a universe bound. Either side empty gives the
/// empty result.
pub fn set_difference(a: &IntSet, b: &IntSet) -> DiffSet {
    assert_eq!(a.universe, b.universe, "sets must share a universe bound");
    let u = a.universe as usize;
    let mut out = DiffSet {
        universe: a.universe,
        rebased: IntSet::new(2 * a.universe),
    };
    if a.is_empty() || b.is_empty() {
        return out;
    }
    // Exponents: U+a in [U, 2U], U-b in [0, U]; products land in [U, 3U].
    let size = (3 * u + 1).next_power_of_two();
    let mut fa = vec![0u64; size];
    let mut fb = vec![0u64; size];
    for m in a.iter() {
        fa[u + m as usize] = 1;
    }
    for m in b.iter() {
        fb[u - m as usize] = 1;
    }
    ntt(&mut fa, false);
    ntt(&mut fb, false);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x = mulmod(*x, *y);
    }
    ntt(&mut fa, true);
    // The index is the product exponent: k-2U is the difference value.
    #[allow(clippy::needless_range_loop)]
    for k in u..=3 * u {
        if fa[k] != 0 {
            // Pair count at difference k-2U; bound (U+1)^2 << P, so a
            // nonzero residue is a genuinely nonzero count.
            out.rebased.insert((k - u) as u32);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::SplitMix64;

    fn brute(a: &IntSet, b: &IntSet) -> Vec<i64> {
        let mut out: Vec<i64> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| x as i64 - y as i64))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn worked_examples() {
        let a = IntSet::from_members(5, [3, 5]);
        let b = IntSet::from_members(5, [1, 2]);
        let d = set_difference(&a, &b);
        assert_eq!(d.iter().collect::<Vec<_>>(), [1, 2, 3, 4]);
        assert!(d.contains(4) && !d.contains(0) && !d.contains(-3));

        let z = IntSet::from_members(0, [0]);
        let d = set_difference(&z, &z);
        assert_eq!(d.iter().collect::<Vec<_>>(), [0]);

        let empty = IntSet::new(7);
        let one = IntSet::from_members(7, [4]);
        assert!(set_difference(&empty, &one).is_empty());
        assert!(set_difference(&one, &empty).is_empty());
    }

    #[test]
    fn random_instances_match_brute_force() {
        let mut rng = SplitMix64::new(2024);
        for round in 0..40 {
            let u = 1 + rng.below(300) as u32;
            let fill = |rng: &mut SplitMix64| {
                let k = rng.below(u as u64 + 1);
                IntSet::from_members(u, (0..k).map(|_| rng.below(u as u64 + 1) as u32))
            };
            let a = fill(&mut rng);
            let b = fill(&mut rng);
            let d = set_difference(&a, &b);
            assert_eq!(d.iter().collect::<Vec<_>>(), brute(&a, &b), "round {round}");
            // Zero difference iff the sets intersect.
            let meets = a.iter().any(|x| b.contains(x));
            assert_eq!(d.contains(0), meets, "round {round}");
            assert!(d.len() <= a.len() * b.len());
            assert!(d.len() <= 2 * u as usize + 1);
        }
    }

    #[test]
    fn ntt_roundtrip_and_known_product() {
        // (1 + x)^2 = 1 + 2x + x^2.
        let mut fa = vec![1, 1, 0, 0];
        let mut fb = vec![1, 1, 0, 0];
        ntt(&mut fa, false);
        ntt(&mut fb, false);
        for (x, y) in fa.iter_mut().zip(&fb) {
            *x = mulmod(*x, *y);
        }
        ntt(&mut fa, true);
        assert_eq!(fa, [1, 2, 1, 0]);
    }
}
