//! Brute-force reference implementations.
//!
//! Everything here is deliberately simple and cubic-ish: exhaustive path
//! enumeration, per-pair extraction, witness validation. The fast pipeline
//! is checked against these on small inputs. A hard edge-count guard keeps
//! an accidental large call from hanging a run; pass a bigger limit to
//! override it knowingly.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::tree::{Label, LabeledTree, NodeId, PalTriple, PathWord};

/// Default cap on edges for the exhaustive routines.
pub const DEFAULT_ORACLE_LIMIT: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { edges: usize, limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let OracleError::TooLarge { edges, limit } = self;
        write!(f, "tree has {edges} edges, oracle limit is {limit}")
    }
}

impl std::error::Error for OracleError {}

/// Why a reported witness failed validation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleFault {
    IdOutOfRange,
    ZeroLength,
    DistanceMismatch,
    NoCompletion,
}

impl fmt::Display for TripleFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            TripleFault::IdOutOfRange => "witness node id out of range",
            TripleFault::ZeroLength => "palindrome length must be positive",
            TripleFault::DistanceMismatch => "witness nodes are not ceil(len/2) apart",
            TripleFault::NoCompletion => "half path has no palindromic completion",
        };
        f.write_str(msg)
    }
}

impl std::error::Error for TripleFault {}

fn guard(t: &LabeledTree, limit: usize) -> Result<(), OracleError> {
    if t.edge_count() > limit {
        return Err(OracleError::TooLarge {
            edges: t.edge_count(),
            limit,
        });
    }
    Ok(())
}

/// Walks every simple path out of `start`, calling `visit` with the label
/// stack and node stack (which includes `start`) at every node reached.
fn for_each_path_from(t: &LabeledTree, start: NodeId, mut visit: impl FnMut(&[Label], &[NodeId])) {
    let n = t.node_count() as usize;
    let mut seen = vec![false; n];
    seen[start as usize] = true;
    let mut path = vec![start];
    let mut word: Vec<Label> = Vec::new();
    let mut next_child = vec![0usize];
    loop {
        let x = *path.last().unwrap();
        let i = *next_child.last().unwrap();
        let adj = t.neighbors(x);
        if i < adj.len() {
            *next_child.last_mut().unwrap() += 1;
            let (y, lab) = adj[i];
            if !seen[y as usize] {
                seen[y as usize] = true;
                path.push(y);
                word.push(lab);
                next_child.push(0);
                visit(&word, &path);
            }
        } else {
            path.pop();
            next_child.pop();
            word.pop();
            if path.is_empty() {
                return;
            }
        }
    }
}

fn is_pal(w: &[Label]) -> bool {
    (0..w.len() / 2).all(|i| w[i] == w[w.len() - 1 - i])
}

fn collect(
    t: &LabeledTree,
    limit: usize,
    mut keep: impl FnMut(&[NodeId]) -> bool,
) -> Result<Vec<(PathWord, PalTriple)>, OracleError> {
    guard(t, limit)?;
    let mut best: HashMap<Vec<Label>, PalTriple> = HashMap::new();
    for start in 0..t.node_count() {
        for_each_path_from(t, start, |word, path| {
            if !is_pal(word) || !keep(path) {
                return;
            }
            let len = word.len() as u32;
            let cand = PalTriple {
                length: len,
                u: start,
                v: path[len.div_ceil(2) as usize],
            };
            best.entry(word.to_vec())
                .and_modify(|cur| {
                    if (cand.u, cand.v) < (cur.u, cur.v) {
                        *cur = cand;
                    }
                })
                .or_insert(cand);
        });
    }
    let mut out: Vec<(PathWord, PalTriple)> = best
        .into_iter()
        .map(|(symbols, tr)| (PathWord { symbols }, tr))
        .collect();
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    Ok(out)
}

/// Every distinct palindromic substring with its minimal witness,
/// sorted by length then word.
pub fn report(t: &LabeledTree, limit: usize) -> Result<Vec<(PathWord, PalTriple)>, OracleError> {
    collect(t, limit, |_| true)
}

/// As `report`, restricted to palindromes on paths containing node `r`.
pub fn report_through(
    t: &LabeledTree,
    r: NodeId,
    limit: usize,
) -> Result<Vec<(PathWord, PalTriple)>, OracleError> {
    collect(t, limit, |path| path.contains(&r))
}

pub fn count(t: &LabeledTree, limit: usize) -> Result<usize, OracleError> {
    Ok(report(t, limit)?.len())
}

/// A witness for some palindromic substring of length exactly `k`, if any.
pub fn test(t: &LabeledTree, k: u32, limit: usize) -> Result<Option<PalTriple>, OracleError> {
    if k == 0 {
        return Ok(None);
    }
    Ok(report(t, limit)?
        .into_iter()
        .find(|(w, _)| w.len() as u32 == k)
        .map(|(_, tr)| tr))
}

/// A longest palindromic substring with its witness. Ties go to the
/// lexicographically least word. None only for the single-node tree.
pub fn longest(
    t: &LabeledTree,
    limit: usize,
) -> Result<Option<(PathWord, PalTriple)>, OracleError> {
    let rep = report(t, limit)?;
    let Some(max) = rep.iter().map(|(w, _)| w.len()).max() else {
        return Ok(None);
    };
    // Entries are sorted by (length, word); the first at max length wins.
    Ok(rep.into_iter().find(|(w, _)| w.len() == max))
}

/// Second, independently written enumeration: extract the word of every
/// unordered node pair and keep the palindromes. Returns the sorted
/// distinct words without witnesses.
pub fn distinct_words_pairwise(
    t: &LabeledTree,
    limit: usize,
) -> Result<Vec<PathWord>, OracleError> {
    guard(t, limit)?;
    let n = t.node_count();
    let mut set: HashSet<PathWord> = HashSet::new();
    for u in 0..n {
        for v in u + 1..n {
            let w = t.path_value(u, v);
            if w.is_palindrome() {
                set.insert(w);
            }
        }
    }
    let mut out: Vec<PathWord> = set.into_iter().collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out)
}

/// Extends a simple path from the last node of `blocked`-marked prefix,
/// matching `pattern` edge by edge. `head` must already be blocked. On
/// success the matched nodes stay blocked and the final node is returned;
/// on failure everything except `head` is unblocked again.
fn extend_matching(
    t: &LabeledTree,
    head: NodeId,
    blocked: &mut [bool],
    pattern: &[Label],
) -> Option<NodeId> {
    let mut frames: Vec<(NodeId, usize)> = vec![(head, 0)];
    loop {
        if frames.len() == pattern.len() + 1 {
            return Some(frames.last().unwrap().0);
        }
        let depth = frames.len() - 1;
        let (x, i) = *frames.last().unwrap();
        let adj = t.neighbors(x);
        let mut advanced = false;
        let mut j = i;
        while j < adj.len() {
            let (y, lab) = adj[j];
            j += 1;
            if lab == pattern[depth] && !blocked[y as usize] {
                frames.last_mut().unwrap().1 = j;
                blocked[y as usize] = true;
                frames.push((y, 0));
                advanced = true;
                break;
            }
        }
        if !advanced {
            let (x, _) = frames.pop().unwrap();
            if frames.is_empty() {
                return None;
            }
            blocked[x as usize] = false;
        }
    }
}

/// True when `w` reads along some simple path of `t`.
pub fn word_occurs(t: &LabeledTree, w: &PathWord) -> bool {
    if w.is_empty() {
        return true;
    }
    let n = t.node_count() as usize;
    let mut blocked = vec![false; n];
    for start in 0..t.node_count() {
        blocked.fill(false);
        blocked[start as usize] = true;
        if extend_matching(t, start, &mut blocked, &w.symbols).is_some() {
            return true;
        }
    }
    false
}

/// Checks that a witness denotes a genuine palindromic occurrence and
/// returns the palindrome it realizes.
///
/// The path from `t.u` to `t.v` spells the first `ceil(length/2)` letters;
/// the rest is their mirror image and must continue along some simple
/// extension of that path.
pub fn verify_triple(t: &LabeledTree, tr: &PalTriple) -> Result<PathWord, TripleFault> {
    let n = t.node_count();
    if tr.u >= n || tr.v >= n {
        return Err(TripleFault::IdOutOfRange);
    }
    if tr.length == 0 {
        return Err(TripleFault::ZeroLength);
    }
    let h = tr.length.div_ceil(2) as usize;
    let (nodes, prefix) = t.path_between(tr.u, tr.v);
    if prefix.len() != h {
        return Err(TripleFault::DistanceMismatch);
    }
    let len = tr.length as usize;
    let suffix: Vec<Label> = (0..len - h).map(|j| prefix.symbols[len - 1 - h - j]).collect();
    let mut blocked = vec![false; n as usize];
    for &x in &nodes {
        blocked[x as usize] = true;
    }
    if extend_matching(t, tr.v, &mut blocked, &suffix).is_none() {
        return Err(TripleFault::NoCompletion);
    }
    let mut symbols = prefix.symbols;
    symbols.extend(suffix);
    let word = PathWord { symbols };
    debug_assert!(word.is_palindrome());
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    const LIM: usize = DEFAULT_ORACLE_LIMIT;

    #[test]
    fn sample_tree_has_the_twelve() {
        let t = corpus::sample_tree();
        let rep = report(&t, LIM).unwrap();
        let mut words: Vec<String> = rep.iter().map(|(w, _)| t.decode(w)).collect();
        words.sort();
        assert_eq!(words, corpus::sample_palindromes());
        for (w, tr) in &rep {
            assert_eq!(verify_triple(&t, tr).as_ref(), Ok(w));
        }
    }

    #[test]
    fn all_words_pass_through_the_hub() {
        let t = corpus::sample_tree();
        // Same word set through the hub; witnesses may differ.
        let through: Vec<PathWord> =
            report_through(&t, 5, LIM).unwrap().into_iter().map(|(w, _)| w).collect();
        let all: Vec<PathWord> =
            report(&t, LIM).unwrap().into_iter().map(|(w, _)| w).collect();
        assert_eq!(through, all);
        let leaf: Vec<String> = report_through(&t, 0, LIM)
            .unwrap()
            .iter()
            .map(|(w, _)| t.decode(w))
            .collect();
        assert_eq!(leaf, ["c", "cbc", "cbcbc"]);
    }

    #[test]
    fn pairwise_enumeration_agrees() {
        for t in corpus::enumerate_labeled_trees(5, 2) {
            let v1: Vec<PathWord> = report(&t, LIM).unwrap().into_iter().map(|(w, _)| w).collect();
            let v2 = distinct_words_pairwise(&t, LIM).unwrap();
            assert_eq!(v1, v2, "tree {}", t.serialize());
        }
    }

    #[test]
    fn no_false_palindrome() {
        let t = corpus::false_palindrome_tree();
        let words: Vec<String> = report(&t, LIM)
            .unwrap()
            .iter()
            .map(|(w, _)| t.decode(w))
            .collect();
        assert!(!words.contains(&"baaaab".to_string()));
        assert!(!word_occurs(&t, &parse_word(&t, "baaaab")));
        assert!(word_occurs(&t, &parse_word(&t, "baaab")));
    }

    fn parse_word(t: &LabeledTree, s: &str) -> PathWord {
        let lookup = |c: char| (0..t.sigma()).find(|&l| t.label_char(l) == c).unwrap();
        PathWord {
            symbols: s.chars().map(lookup).collect(),
        }
    }

    #[test]
    fn test_and_longest_pick_minimal_witnesses() {
        let t = corpus::sample_tree();
        let got = test(&t, 4, LIM).unwrap().unwrap();
        assert_eq!(t.decode(&verify_triple(&t, &got).unwrap()), "caac");
        let five = test(&t, 5, LIM).unwrap().unwrap();
        assert_eq!(t.decode(&verify_triple(&t, &five).unwrap()), "cbcbc");
        assert_eq!(test(&t, 7, LIM).unwrap(), None);
        assert_eq!(test(&t, 0, LIM).unwrap(), None);
        let (w, tr) = longest(&t, LIM).unwrap().unwrap();
        assert_eq!(t.decode(&w), "acaaca");
        assert_eq!(verify_triple(&t, &tr).unwrap(), w);
    }

    #[test]
    fn guard_rejects_big_trees() {
        let edges: Vec<_> = (0..30).map(|i| (i, i + 1, 'a')).collect();
        let t = LabeledTree::from_edges(31, &edges).unwrap();
        assert_eq!(
            count(&t, 10).unwrap_err(),
            OracleError::TooLarge { edges: 30, limit: 10 }
        );
        assert_eq!(count(&t, 30).unwrap(), 30);
    }

    #[test]
    fn verify_triple_rejects_fabrications() {
        let t = corpus::sample_tree();
        // "cc" read from node 3 toward 7: u=3, half endpoint = 5 (1 edge).
        let ok = PalTriple { length: 2, u: 3, v: 5 };
        assert_eq!(t.decode(&verify_triple(&t, &ok).unwrap()), "cc");
        // Distance off by one.
        let bad = PalTriple { length: 2, u: 3, v: 7 };
        assert_eq!(verify_triple(&t, &bad), Err(TripleFault::DistanceMismatch));
        // Half path exists but no mirror completion: "cb" from 0 would need
        // a second b-edge at node 5, and there is none.
        let none = PalTriple { length: 4, u: 0, v: 5 };
        assert_eq!(verify_triple(&t, &none), Err(TripleFault::NoCompletion));
        // The same shape from node 4 does complete, to "bccb".
        let ok2 = PalTriple { length: 4, u: 4, v: 5 };
        assert_eq!(t.decode(&verify_triple(&t, &ok2).unwrap()), "bccb");
    }
}
