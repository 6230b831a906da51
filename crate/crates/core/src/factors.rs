//! Word indexes over rooted deterministic trees: ancestor jumps, border
//! lengths, and power-of-two factor codes shared across structures.
//!
//! Codes make word equality a token comparison. A word of length L is
//! named by its length plus the codes of its first and last 2^k factors,
//! k = floor(log2 L); equal triples mean equal words and vice versa.
//! All sides and strings rank factors through one `CodeAssigner`, so
//! tokens compare across the whole family, in both reading directions.

use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;

use crate::dtree::RootedDet;
use crate::tree::Label;

/// Equality token for a concrete word. `len = 0` is the empty word with
/// zeroed codes. Tokens from structures sharing a `CodeAssigner` are
/// sound and complete: equal tokens iff equal words.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CodeTriple {
    pub len: u32,
    pub pre: u32,
    pub suf: u32,
}

impl CodeTriple {
    pub const EMPTY: CodeTriple = CodeTriple { len: 0, pre: 0, suf: 0 };
}

/// Dense ranks for words of length 2^k, built as pairs of level k-1
/// ranks (level 0 ranks are the labels themselves). One assigner spans
/// all trees and strings of a report so ranks stay comparable; a level
/// is locked once per batch.
pub struct CodeAssigner {
    levels: Vec<Mutex<FxHashMap<(u32, u32), u32>>>,
}

impl Default for CodeAssigner {
    fn default() -> Self {
        Self::new()
    }
}

impl CodeAssigner {
    pub fn new() -> Self {
        CodeAssigner {
            levels: (0..33).map(|_| Mutex::new(FxHashMap::default())).collect(),
        }
    }

    /// Ranks `pairs` at level `k`, appending results to `out` in order.
    fn assign_batch(&self, k: usize, pairs: &[(u32, u32)], out: &mut Vec<u32>) {
        let mut map = self.levels[k].lock().unwrap();
        for &p in pairs {
            let next = map.len() as u32;
            out.push(*map.entry(p).or_insert(next));
        }
    }
}

/// Index over one rooted deterministic side: depths come from the tree,
/// ancestor jumps from a doubling table, borders from a memoized failure
/// scan, and per-level factor codes for upward words (`code`) and their
/// reversals (`rcode`).
pub struct SideIndex {
    pub det: Arc<RootedDet>,
    levels: usize,
    up_pow: Vec<Vec<u32>>,
    tin: Vec<u32>,
    tout: Vec<u32>,
    border: Vec<u32>,
    code: Vec<Vec<u32>>,
    rcode: Vec<Vec<u32>>,
}

impl SideIndex {
    pub fn build(det: &Arc<RootedDet>, assigner: &CodeAssigner) -> SideIndex {
        let n = det.len();
        let max_depth = det.depth.iter().copied().max().unwrap_or(0);
        // Levels cover every power of two up to the deepest word.
        let levels = if max_depth == 0 {
            1
        } else {
            (32 - max_depth.leading_zeros()) as usize
        };

        let mut up_pow: Vec<Vec<u32>> = Vec::with_capacity(levels);
        up_pow.push(det.parent.clone());
        for k in 1..levels {
            let prev = &up_pow[k - 1];
            up_pow.push((0..n).map(|u| prev[prev[u] as usize]).collect());
        }

        let mut idx = SideIndex {
            det: det.clone(),
            levels,
            up_pow,
            tin: vec![0; n],
            tout: vec![0; n],
            border: vec![0; n],
            code: Vec::with_capacity(levels),
            rcode: Vec::with_capacity(levels),
        };
        idx.build_dfs();
        idx.build_codes(assigner);
        idx
    }

    /// One DFS fills Euler times and borders. The border step is KMP on
    /// the live root path; chains are memoized per (node, label) since
    /// everything below a path node is that node's own root path.
    fn build_dfs(&mut self) {
        let det = self.det.clone();
        let mut clock = 0u32;
        let mut path: Vec<u32> = Vec::new();
        let mut memo: FxHashMap<(u32, Label), u32> = FxHashMap::default();
        let mut chain: Vec<(u32, Label)> = Vec::new();
        let mut stack: Vec<(u32, usize)> = vec![(0, 0)];
        path.push(0);
        self.tin[0] = clock;
        while let Some(&(v, ci)) = stack.last() {
            if ci == 0 && v != 0 {
                path.push(v);
                clock += 1;
                self.tin[v as usize] = clock;
                let d = det.depth[v as usize];
                self.border[v as usize] = if d <= 1 {
                    0
                } else {
                    let c = det.plabel[v as usize];
                    let mut b = self.border[det.parent[v as usize] as usize];
                    chain.clear();
                    let res = loop {
                        let probe = path[b as usize + 1];
                        if let Some(&r) = memo.get(&(probe, c)) {
                            break r;
                        }
                        chain.push((probe, c));
                        if det.plabel[probe as usize] == c {
                            break b + 1;
                        }
                        if b == 0 {
                            break 0;
                        }
                        b = self.border[path[b as usize] as usize];
                    };
                    for key in chain.drain(..) {
                        memo.insert(key, res);
                    }
                    res
                };
            }
            let kids = &det.children[v as usize];
            if ci < kids.len() {
                stack.last_mut().unwrap().1 += 1;
                stack.push((kids[ci].1, 0));
            } else {
                clock += 1;
                self.tout[v as usize] = clock;
                if v != 0 {
                    path.pop();
                }
                stack.pop();
            }
        }
    }

    fn build_codes(&mut self, assigner: &CodeAssigner) {
        let det = &self.det;
        let n = det.len();
        self.code.push(det.plabel.clone());
        self.rcode.push(det.plabel.clone());
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        let mut ranks: Vec<u32> = Vec::new();
        for k in 1..self.levels {
            let full = 1u32 << k;
            let ids: Vec<u32> = (0..n as u32)
                .filter(|&u| det.depth[u as usize] >= full)
                .collect();
            pairs.clear();
            for &u in &ids {
                let mid = self.up_pow[k - 1][u as usize];
                pairs.push((self.code[k - 1][u as usize], self.code[k - 1][mid as usize]));
            }
            for &u in &ids {
                let mid = self.up_pow[k - 1][u as usize];
                pairs.push((self.rcode[k - 1][mid as usize], self.rcode[k - 1][u as usize]));
            }
            ranks.clear();
            assigner.assign_batch(k, &pairs, &mut ranks);
            let mut fwd = vec![u32::MAX; n];
            let mut rev = vec![u32::MAX; n];
            for (i, &u) in ids.iter().enumerate() {
                fwd[u as usize] = ranks[i];
                rev[u as usize] = ranks[ids.len() + i];
            }
            self.code.push(fwd);
            self.rcode.push(rev);
        }
    }

    pub fn len(&self) -> usize {
        self.det.len()
    }

    pub fn is_empty(&self) -> bool {
        self.det.is_empty()
    }

    pub fn depth(&self, u: u32) -> u32 {
        self.det.depth[u as usize]
    }

    /// Ancestor of `u` at distance `h`; `h` must not exceed the depth.
    pub fn up(&self, u: u32, h: u32) -> u32 {
        debug_assert!(h <= self.depth(u));
        let mut v = u;
        let mut h = h;
        let mut k = 0;
        while h > 0 {
            if h & 1 == 1 {
                v = self.up_pow[k][v as usize];
            }
            h >>= 1;
            k += 1;
        }
        v
    }

    pub fn is_ancestor(&self, u: u32, v: u32) -> bool {
        self.tin[u as usize] <= self.tin[v as usize]
            && self.tout[v as usize] <= self.tout[u as usize]
    }

    pub fn lca(&self, u: u32, v: u32) -> u32 {
        if self.is_ancestor(u, v) {
            return u;
        }
        if self.is_ancestor(v, u) {
            return v;
        }
        let mut u = if self.depth(u) >= self.depth(v) {
            self.up(u, self.depth(u) - self.depth(v))
        } else {
            u
        };
        let mut v = if self.depth(v) > self.depth(u) {
            self.up(v, self.depth(v) - self.depth(u))
        } else {
            v
        };
        for k in (0..self.levels).rev() {
            if self.up_pow[k][u as usize] != self.up_pow[k][v as usize] {
                u = self.up_pow[k][u as usize];
                v = self.up_pow[k][v as usize];
            }
        }
        self.up_pow[0][u as usize]
    }

    pub fn dist(&self, u: u32, v: u32) -> u32 {
        let a = self.lca(u, v);
        self.depth(u) + self.depth(v) - 2 * self.depth(a)
    }

    /// Shortest period of the root-to-node word; 0 at the root.
    pub fn per_len(&self, u: u32) -> u32 {
        self.depth(u) - self.border[u as usize]
    }

    /// Token of the upward word at `u` of length `len` (`len <= depth`).
    pub fn seg_fwd(&self, u: u32, len: u32) -> CodeTriple {
        if len == 0 {
            return CodeTriple::EMPTY;
        }
        debug_assert!(len <= self.depth(u));
        let k = (31 - len.leading_zeros()) as usize;
        let top = self.up(u, len - (1 << k));
        CodeTriple {
            len,
            pre: self.code[k][u as usize],
            suf: self.code[k][top as usize],
        }
    }

    /// Token of the reversal of that same upward word.
    pub fn seg_rev(&self, u: u32, len: u32) -> CodeTriple {
        if len == 0 {
            return CodeTriple::EMPTY;
        }
        debug_assert!(len <= self.depth(u));
        let k = (31 - len.leading_zeros()) as usize;
        let top = self.up(u, len - (1 << k));
        CodeTriple {
            len,
            pre: self.rcode[k][top as usize],
            suf: self.rcode[k][u as usize],
        }
    }

    /// Is the upward word at `u` of length `len` a palindrome?
    pub fn is_pal_anc(&self, u: u32, len: u32) -> bool {
        self.seg_fwd(u, len) == self.seg_rev(u, len)
    }
}

/// Node at distance ceil(L/2) from `x` along the cross path x -> root ->
/// y, tagged with the side it falls on.
pub enum CrossCenter {
    Left(u32),
    Right(u32),
}

pub fn center_cross(lx: &SideIndex, x: u32, rx: &SideIndex, y: u32) -> CrossCenter {
    let (a, b) = (lx.depth(x), rx.depth(y));
    let m = (a + b).div_ceil(2);
    if m <= a {
        CrossCenter::Left(lx.up(x, m))
    } else {
        CrossCenter::Right(rx.up(y, a + b - m))
    }
}

/// Is val(x -> root) . val(root -> y) a palindrome? The first ceil(L/2)
/// characters against the reversed last ceil(L/2) reduce to at most two
/// token comparisons around the center, all on the deeper side plus one
/// cross-side prefix check.
pub fn is_palindrome_cross(lx: &SideIndex, x: u32, rx: &SideIndex, y: u32) -> bool {
    let (a, b) = (lx.depth(x), rx.depth(y));
    if a < b {
        // The reversed word is the other orientation's cross word.
        return is_palindrome_cross(rx, y, lx, x);
    }
    if a == 0 {
        return true;
    }
    let m = (a + b).div_ceil(2);
    if b > 0 && lx.seg_fwd(x, b) != rx.seg_fwd(y, b) {
        return false;
    }
    let tail = m - b;
    lx.seg_fwd(lx.up(x, b), tail) == lx.seg_rev(lx.up(x, a + b - m), tail)
}

/// Word lookup table for a side used on the right of a pairing: maps the
/// token of each node's word-toward-root to the smallest such node. The
/// empty word maps to the root.
pub fn exists_dictionary(side: &SideIndex) -> FxHashMap<CodeTriple, u32> {
    let mut dict = FxHashMap::default();
    for v in 0..side.len() as u32 {
        dict.entry(side.seg_fwd(v, side.depth(v))).or_insert(v);
    }
    dict
}

/// Factor codes over a flat string of labels, ranked by the same
/// assigner as the tree sides so tokens compare across structures.
pub struct StringCodes {
    len: usize,
    code: Vec<Vec<u32>>,
}

impl StringCodes {
    pub fn build(word: &[Label], assigner: &CodeAssigner) -> StringCodes {
        let n = word.len();
        let levels = if n == 0 { 1 } else { (64 - (n as u64).leading_zeros()) as usize };
        let mut code: Vec<Vec<u32>> = Vec::with_capacity(levels);
        code.push(word.to_vec());
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        let mut ranks: Vec<u32> = Vec::new();
        for k in 1..levels {
            let half = 1usize << (k - 1);
            let full = 1usize << k;
            pairs.clear();
            for i in 0..=n - full {
                pairs.push((code[k - 1][i], code[k - 1][i + half]));
            }
            ranks.clear();
            assigner.assign_batch(k, &pairs, &mut ranks);
            code.push(ranks.clone());
        }
        StringCodes { len: n, code }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Token of the substring starting at `i` of length `len`.
    pub fn seg(&self, i: usize, len: usize) -> CodeTriple {
        if len == 0 {
            return CodeTriple::EMPTY;
        }
        debug_assert!(i + len <= self.len);
        let k = (63 - (len as u64).leading_zeros()) as usize;
        CodeTriple {
            len: len as u32,
            pre: self.code[k][i],
            suf: self.code[k][i + len - (1 << k)],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::dtree::{build_psi, decompose_family, DTree};
    use crate::generators::{self, SplitMix64};
    use crate::oracle;
    use crate::tree::LabeledTree;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn shortest_period<T: PartialEq>(w: &[T]) -> usize {
        (1..=w.len())
            .find(|&p| (0..w.len() - p).all(|i| w[i] == w[i + p]))
            .unwrap_or(0)
    }

    fn is_period(w: &[u8], p: usize) -> bool {
        (0..w.len().saturating_sub(p)).all(|i| w[i] == w[i + p])
    }

    fn root_to_node(det: &RootedDet, u: u32) -> Vec<Label> {
        let mut w = det.root_word(u);
        w.reverse();
        w
    }

    fn label_of(t: &LabeledTree, c: char) -> Label {
        (0..t.sigma()).find(|&l| t.label_char(l) == c).unwrap()
    }

    #[test]
    fn border_periods_match_naive() {
        let t = generators::gen_path(5, "aabaa").unwrap();
        let asn = CodeAssigner::new();
        let psi = build_psi(&t, 0);
        let idx = SideIndex::build(&psi.left, &asn);
        let deepest = (0..idx.len() as u32).max_by_key(|&u| idx.depth(u)).unwrap();
        assert_eq!(idx.depth(deepest), 5);
        assert_eq!(idx.per_len(deepest), 3);

        for seed in [2, 8] {
            let t = generators::gen_random(200, 2, seed).unwrap();
            let psi = build_psi(&t, 0);
            let idx = SideIndex::build(&psi.left, &asn);
            for u in 1..idx.len() as u32 {
                let w = root_to_node(&psi.left, u);
                assert_eq!(idx.per_len(u) as usize, shortest_period(&w), "node {u}");
            }
        }
    }

    #[test]
    fn ancestor_jumps_and_distances() {
        let t = generators::gen_random(300, 3, 17).unwrap();
        let asn = CodeAssigner::new();
        let psi = build_psi(&t, 0);
        let idx = SideIndex::build(&psi.left, &asn);
        let det = &psi.left;
        let brute_anc = |mut u: u32, mut h: u32| {
            while h > 0 {
                u = det.parent[u as usize];
                h -= 1;
            }
            u
        };
        let mut rng = SplitMix64::new(5);
        for _ in 0..1000 {
            let u = rng.below(idx.len() as u64) as u32;
            assert_eq!(idx.up(u, idx.depth(u)), 0);
            let h = rng.below(idx.depth(u) as u64 + 1) as u32;
            assert_eq!(idx.up(u, h), brute_anc(u, h));
            let v = rng.below(idx.len() as u64) as u32;
            assert_eq!(idx.is_ancestor(u, v), {
                let mut w = v;
                loop {
                    if w == u {
                        break true;
                    }
                    if w == 0 {
                        break false;
                    }
                    w = det.parent[w as usize];
                }
            });
            // Distance through the lowest common ancestor, by walking.
            let mut pu: Vec<u32> = std::iter::successors(Some(u), |&x| {
                (x != 0).then_some(det.parent[x as usize])
            })
            .collect();
            pu.reverse();
            let mut pv: Vec<u32> = std::iter::successors(Some(v), |&x| {
                (x != 0).then_some(det.parent[x as usize])
            })
            .collect();
            pv.reverse();
            let mut common = 0;
            while common + 1 < pu.len().min(pv.len()) && pu[common + 1] == pv[common + 1] {
                common += 1;
            }
            assert_eq!(idx.lca(u, v), pu[common]);
            assert_eq!(
                idx.dist(u, v),
                idx.depth(u) + idx.depth(v) - 2 * idx.depth(pu[common])
            );
        }
    }

    #[test]
    fn center_matches_arithmetic() {
        // Path 0-..-6 rooted at 4: left side holds 0..4, right 4..6.
        let t = generators::gen_path(6, "ab").unwrap();
        let asn = CodeAssigner::new();
        let fam_member = build_psi(&t, 4);
        let idx = SideIndex::build(&fam_member.left, &asn);
        // Node with depth 4 (source 0) against depth 2 (source 6).
        let x = (0..idx.len() as u32)
            .find(|&u| idx.depth(u) == 4 && fam_member.left.origin[u as usize] == 0)
            .unwrap();
        let y = (0..idx.len() as u32)
            .find(|&u| idx.depth(u) == 2 && fam_member.left.origin[u as usize] == 6)
            .unwrap();
        match center_cross(&idx, x, &idx, y) {
            CrossCenter::Left(c) => {
                assert_eq!(idx.depth(c), 1);
                assert_eq!(fam_member.left.origin[c as usize], 3);
            }
            CrossCenter::Right(_) => panic!("center of 4+2 lies on the left"),
        }
    }

    /// Token equality must coincide with word equality over all upward
    /// segments, in both directions, across every side of a family.
    fn check_codes_exhaustive(t: &LabeledTree) {
        let asn = CodeAssigner::new();
        let fam = decompose_family(t);
        let psi = build_psi(t, 0);
        let mut members: Vec<&DTree> = fam.members.iter().collect();
        members.push(&psi);
        let mut by_word: HashMap<Vec<Label>, CodeTriple> = HashMap::new();
        let mut by_token: HashMap<CodeTriple, Vec<Label>> = HashMap::new();
        for d in members {
            for det in [&d.left, &d.right] {
                let idx = SideIndex::build(det, &asn);
                for u in 0..idx.len() as u32 {
                    for len in 1..=idx.depth(u) {
                        let mut w = det.root_word(u);
                        w.truncate(len as usize);
                        let fwd = idx.seg_fwd(u, len);
                        let mut rw = w.clone();
                        rw.reverse();
                        let rev = idx.seg_rev(u, len);
                        for (word, token) in [(w, fwd), (rw, rev)] {
                            let prev = by_word.insert(word.clone(), token);
                            assert!(prev.is_none_or(|p| p == token), "same word, two tokens");
                            let prev = by_token.insert(token, word.clone());
                            assert!(prev.is_none_or(|p| p == word), "same token, two words");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn codes_name_words_exactly() {
        for t in corpus::enumerate_labeled_trees(5, 2) {
            check_codes_exhaustive(&t);
        }
        check_codes_exhaustive(&corpus::sample_tree());
        for seed in 0..5 {
            check_codes_exhaustive(&generators::gen_random(10, 2, seed).unwrap());
        }
    }

    #[test]
    fn cross_palindromes_on_sample_hub() {
        let t = corpus::sample_tree();
        let asn = CodeAssigner::new();
        let psi = build_psi(&t, 5);
        let idx = SideIndex::build(&psi.left, &asn);
        let det = &psi.left;
        let (a, c) = (label_of(&t, 'a'), label_of(&t, 'c'));
        // x spells "ac" upward (source node 1), y spells "acaa" upward
        // (source node 10); the cross word is acaaca.
        let x = det.child(det.child(0, c).unwrap(), a).unwrap();
        let y3 = det
            .child(det.child(det.child(0, a).unwrap(), a).unwrap(), c)
            .unwrap();
        let y = det.child(y3, a).unwrap();
        assert_eq!(t.decode(&crate::tree::PathWord { symbols: psi.cross_word(x, y) }), "acaaca");
        assert!(is_palindrome_cross(&idx, x, &idx, y));
        assert!(is_palindrome_cross(&idx, y, &idx, x));
        // Dropping the last step breaks it: "acaac" reversed is "caaca".
        assert!(!is_palindrome_cross(&idx, x, &idx, y3));

        let dict = exists_dictionary(&idx);
        assert_eq!(dict.get(&CodeTriple::EMPTY), Some(&0));
        let c_node = det.child(0, c).unwrap();
        let tok = idx.seg_fwd(c_node, 1);
        assert_eq!(dict.get(&tok), Some(&c_node));
        assert_eq!(det.origin[*dict.get(&tok).unwrap() as usize], 3);
    }

    #[test]
    fn cross_palindromes_match_naive_on_random_pairs() {
        let t = generators::gen_random(50, 2, 3).unwrap();
        let asn = CodeAssigner::new();
        let fam = decompose_family(&t);
        let indexes: Vec<(SideIndex, SideIndex)> = fam
            .members
            .iter()
            .map(|d| {
                (
                    SideIndex::build(&d.left, &asn),
                    SideIndex::build(&d.right, &asn),
                )
            })
            .collect();
        let mut rng = SplitMix64::new(21);
        let mut checked = 0;
        while checked < 10_000 {
            let mi = rng.below(fam.members.len() as u64) as usize;
            let d = &fam.members[mi];
            let (lx, rx) = &indexes[mi];
            let x = rng.below(d.left.len() as u64) as u32;
            let y = rng.below(d.right.len() as u64) as u32;
            let w = d.cross_word(x, y);
            let naive = w.iter().eq(w.iter().rev());
            assert_eq!(is_palindrome_cross(lx, x, rx, y), naive, "pair {x},{y}");
            checked += 1;
        }
    }

    #[test]
    fn string_codes_agree_with_tree_codes() {
        let t = corpus::sample_tree();
        let asn = CodeAssigner::new();
        let psi = build_psi(&t, 5);
        let idx = SideIndex::build(&psi.left, &asn);
        let det = &psi.left;
        for u in 1..idx.len() as u32 {
            let w = det.root_word(u);
            let sc = StringCodes::build(&w, &asn);
            for len in 1..=w.len() {
                assert_eq!(sc.seg(0, len), idx.seg_fwd(u, len as u32));
            }
        }
        // Substring tokens equal tokens of deeper starts.
        let long = (0..idx.len() as u32).max_by_key(|&u| idx.depth(u)).unwrap();
        let w = det.root_word(long);
        let sc = StringCodes::build(&w, &asn);
        for start in 0..w.len() {
            for len in 1..=w.len() - start {
                let anc = idx.up(long, start as u32);
                assert_eq!(sc.seg(start, len), idx.seg_fwd(anc, len as u32));
            }
        }
    }

    #[test]
    fn nested_palindromic_suffixes_share_periods() {
        let t = generators::gen_random(30, 2, 9).unwrap();
        let words: Vec<Vec<u8>> = oracle::report(&t, 2000)
            .unwrap()
            .into_iter()
            .map(|(w, _)| t.decode(&w).into_bytes())
            .collect();
        let mut pairs = 0;
        for u in &words {
            for v in &words {
                if v.len() < u.len() && u.ends_with(v) {
                    let p = u.len() - v.len();
                    assert!(is_period(u, p), "{u:?} lacks period {p}");
                    assert!(is_period(v, p), "{v:?} lacks period {p}");
                    pairs += 1;
                }
            }
        }
        assert!(pairs > 0, "corpus produced no nested pairs");
    }

    proptest! {
        #[test]
        fn gcd_of_two_periods_is_a_period(w in "[ab]{2,60}") {
            let w = w.as_bytes();
            let periods: Vec<usize> =
                (1..=w.len()).filter(|&p| is_period(w, p)).collect();
            for &p in &periods {
                for &q in &periods {
                    let g = gcd(p, q);
                    if w.len() >= p + q - g {
                        prop_assert!(is_period(w, g));
                    }
                }
            }
        }

        #[test]
        fn long_substrings_keep_the_shortest_period(
            base in "[ab]{1,6}",
            reps in 3usize..8,
            cut in 0usize..6,
        ) {
            let tiled: Vec<u8> = base
                .as_bytes()
                .iter()
                .cycle()
                .take(base.len() * reps)
                .copied()
                .collect();
            let p = shortest_period(&tiled);
            let start = cut.min(tiled.len() / 4);
            let v = &tiled[start..];
            if v.len() >= 2 * p {
                prop_assert_eq!(shortest_period(v), p);
            }
        }
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
}
