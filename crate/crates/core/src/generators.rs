//! Deterministic input generators: labeled paths, the quadratic-size comb
//! family with cubically many palindromes, and seeded random trees.

use std::fmt;

use crate::tree::{LabeledTree, NodeId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenError {
    ZeroEdges,
    EmptyPattern,
    BadPattern,
    NotAnOddPrime { p: u32 },
    ZeroAlphabet,
    AlphabetTooLarge { sigma: u32 },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::ZeroEdges => write!(f, "need at least one edge"),
            GenError::EmptyPattern => write!(f, "label pattern must be nonempty"),
            GenError::BadPattern => write!(f, "label pattern must be printable non-space"),
            GenError::NotAnOddPrime { p } => write!(f, "{p} is not an odd prime >= 5"),
            GenError::ZeroAlphabet => write!(f, "alphabet size must be positive"),
            GenError::AlphabetTooLarge { sigma } => {
                write!(f, "alphabet size {sigma} exceeds 26 letters")
            }
        }
    }
}

impl std::error::Error for GenError {}

/// A path of `n` edges whose labels tile `pattern` from the start.
/// Nodes are numbered 0..n along the path.
pub fn gen_path(n: u32, pattern: &str) -> Result<LabeledTree, GenError> {
    if n == 0 {
        return Err(GenError::ZeroEdges);
    }
    let pat: Vec<char> = pattern.chars().collect();
    if pat.is_empty() {
        return Err(GenError::EmptyPattern);
    }
    if pat.iter().any(|c| c.is_whitespace() || c.is_control()) {
        return Err(GenError::BadPattern);
    }
    let edges: Vec<(NodeId, NodeId, char)> = (0..n)
        .map(|i| (i, i + 1, pat[i as usize % pat.len()]))
        .collect();
    Ok(LabeledTree::from_edges(n + 1, &edges).expect("path is a tree"))
}

/// The comb construction parameters for an odd prime `p`: the sequence
/// `A[k] = 2pk + (k^2 mod p)` for `k = 1..p-1` and its consecutive
/// differences `B`. The quadratic residues make `A` a Sidon-like set,
/// which is what forces many distinct palindromes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombSpec {
    pub p: u32,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl CombSpec {
    pub fn new(p: u32) -> Result<Self, GenError> {
        if p < 5 || !is_prime(p) {
            return Err(GenError::NotAnOddPrime { p });
        }
        let a: Vec<u32> = (1..p).map(|k| 2 * p * k + (k * k) % p).collect();
        let b: Vec<u32> = a.windows(2).map(|w| w[1] - w[0]).collect();
        debug_assert!(b.iter().all(|&d| d > 0), "A must be strictly increasing");
        Ok(CombSpec { p, a, b })
    }

    /// Spine length plus one tooth of length p per junction.
    pub fn edge_count(&self) -> u32 {
        (self.a[self.a.len() - 1] - self.a[0]) + (self.p - 1) * self.p
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The comb `C_p`: an a-labeled spine made of runs of lengths `B[0..]`,
/// with a b-labeled tooth of `p` edges at each of the `p - 1` junction
/// nodes between and around the runs (both spine endpoints carry one).
///
/// Spine nodes come first (0..spine_len inclusive), then each tooth's
/// nodes in junction order. Distinct palindromes grow as Θ(p^3) while
/// edges grow as Θ(p^2), which exercises the reporting pipeline's
/// worst-case output density.
pub fn gen_comb(p: u32) -> Result<LabeledTree, GenError> {
    let spec = CombSpec::new(p)?;
    let spine_len: u32 = spec.b.iter().sum();
    let mut edges: Vec<(NodeId, NodeId, char)> = Vec::with_capacity(spec.edge_count() as usize);
    for i in 0..spine_len {
        edges.push((i, i + 1, 'a'));
    }
    // Junctions sit at the run boundaries: prefix sums of B, including 0
    // and spine_len.
    let mut junctions = vec![0u32];
    let mut acc = 0;
    for &d in &spec.b {
        acc += d;
        junctions.push(acc);
    }
    debug_assert_eq!(junctions.len() as u32, p - 1);
    let mut next = spine_len + 1;
    for &j in &junctions {
        let mut prev = j;
        for _ in 0..p {
            edges.push((prev, next, 'b'));
            prev = next;
            next += 1;
        }
    }
    Ok(LabeledTree::from_edges(next, &edges).expect("comb is a tree"))
}

/// SplitMix64: a tiny fixed-output pseudo random generator so that seeded
/// inputs are identical on every platform and toolchain forever. The
/// standard constants; `below` uses plain modulo, whose bias at our bounds
/// (far below 2^64) is irrelevant for test inputs.
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }
}

/// A random attachment tree with `n` edges: node `i` picks a uniform
/// parent among `0..i`, labels drawn uniformly from the first `sigma`
/// lowercase letters. Fully determined by `seed`.
pub fn gen_random(n: u32, sigma: u32, seed: u64) -> Result<LabeledTree, GenError> {
    if n == 0 {
        return Err(GenError::ZeroEdges);
    }
    if sigma == 0 {
        return Err(GenError::ZeroAlphabet);
    }
    if sigma > 26 {
        return Err(GenError::AlphabetTooLarge { sigma });
    }
    let mut rng = SplitMix64::new(seed);
    let edges: Vec<(NodeId, NodeId, char)> = (1..=n)
        .map(|i| {
            let parent = rng.below(i as u64) as NodeId;
            let lab = (b'a' + rng.below(sigma as u64) as u8) as char;
            (i, parent, lab)
        })
        .collect();
    Ok(LabeledTree::from_edges(n + 1, &edges).expect("attachment graph is a tree"))
}
