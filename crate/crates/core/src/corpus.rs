//! Small fixed trees and enumeration helpers shared across the test suite.

use crate::tree::{LabeledTree, NodeId};

/// The 13-node worked example used throughout the tests.
///
/// Four branches meet at node 5 (ids 0-based; file form is 1-based):
///
/// ```text
///   5 -b- 2 -c- 0
///   5 -c- 3 -a- 1          (3 also carries 3 -b- 4)
///   5 -a- 6 -a- 8 -c- 9 -a- 10
///   5 -c- 7 -b- 11 -c- 12
/// ```
///
/// Its distinct palindromic substrings are exactly the twelve words in
/// `sample_palindromes()`.
pub fn sample_tree() -> LabeledTree {
    let edges = [
        (0, 2, 'c'),
        (1, 3, 'a'),
        (3, 4, 'b'),
        (2, 5, 'b'),
        (3, 5, 'c'),
        (5, 6, 'a'),
        (5, 7, 'c'),
        (6, 8, 'a'),
        (8, 9, 'c'),
        (9, 10, 'a'),
        (7, 11, 'b'),
        (11, 12, 'c'),
    ];
    LabeledTree::from_edges(13, &edges).unwrap()
}

/// The distinct palindromic substrings of `sample_tree()`, sorted.
pub fn sample_palindromes() -> Vec<&'static str> {
    vec![
        "a", "aa", "aca", "acaaca", "b", "bcb", "bccb", "c", "caac", "cbc", "cbcbc", "cc",
    ]
}

/// A 7-node tree where pairing upward words through the top node without
/// merging equal-labeled branches invents the non-substring "baaaab":
/// reading "baaa" up from node 6 and "ab" down to node 4 double-counts the
/// shared first edge of the two a-branches. Every genuine path realizes
/// only words of length at most 5.
pub fn false_palindrome_tree() -> LabeledTree {
    let edges = [
        (0, 1, 'a'),
        (0, 2, 'b'),
        (1, 3, 'a'),
        (1, 4, 'b'),
        (3, 5, 'a'),
        (5, 6, 'b'),
    ];
    LabeledTree::from_edges(7, &edges).unwrap()
}

/// All labeled trees on `n` nodes over the first `sigma` lowercase letters:
/// every Pruefer sequence crossed with every edge labeling. Sizes grow as
/// n^(n-2) * sigma^(n-1); keep `n <= 6` and `sigma <= 2` in tests.
pub fn enumerate_labeled_trees(n: u32, sigma: u32) -> Vec<LabeledTree> {
    assert!(n >= 1 && sigma >= 1);
    let shapes = enumerate_shapes(n);
    let letters: Vec<char> = (0..sigma).map(|i| (b'a' + i as u8) as char).collect();
    let m = n as usize - 1;
    let mut out = Vec::new();
    for shape in &shapes {
        let mut labeling = vec![0usize; m];
        loop {
            let edges: Vec<(NodeId, NodeId, char)> = shape
                .iter()
                .zip(&labeling)
                .map(|(&(u, v), &l)| (u, v, letters[l]))
                .collect();
            out.push(LabeledTree::from_edges(n, &edges).unwrap());
            // Odometer step over labelings.
            let mut i = 0;
            loop {
                if i == m {
                    break;
                }
                labeling[i] += 1;
                if labeling[i] < sigma as usize {
                    break;
                }
                labeling[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
        }
    }
    out
}

fn enumerate_shapes(n: u32) -> Vec<Vec<(NodeId, NodeId)>> {
    if n == 1 {
        return vec![vec![]];
    }
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let len = n as usize - 2;
    let mut seq = vec![0u32; len];
    let mut shapes = Vec::new();
    loop {
        shapes.push(shape_from_pruefer(n, &seq));
        let mut i = 0;
        loop {
            if i == len {
                return shapes;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

fn shape_from_pruefer(n: u32, seq: &[u32]) -> Vec<(NodeId, NodeId)> {
    let mut degree = vec![1u32; n as usize];
    for &x in seq {
        degree[x as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n as usize - 1);
    // Take the smallest leaf each round; a heap is overkill at these sizes.
    let mut used = vec![false; n as usize];
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v as usize] == 1 && !used[v as usize]).unwrap();
        used[leaf as usize] = true;
        degree[x as usize] -= 1;
        edges.push((leaf, x));
    }
    let mut last = (0..n).filter(|&v| !used[v as usize] && degree[v as usize] == 1);
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    edges.push((a, b));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_tree_shape() {
        let t = sample_tree();
        assert_eq!(t.node_count(), 13);
        assert_eq!(t.edge_count(), 12);
        assert_eq!(t.sigma(), 3);
    }

    #[test]
    fn enumeration_counts_match_cayley() {
        // n^(n-2) shapes, times sigma^(n-1) labelings.
        assert_eq!(enumerate_labeled_trees(1, 2).len(), 1);
        assert_eq!(enumerate_labeled_trees(2, 2).len(), 2);
        assert_eq!(enumerate_labeled_trees(3, 2).len(), 3 * 4);
        assert_eq!(enumerate_labeled_trees(4, 2).len(), 16 * 8);
        assert_eq!(enumerate_labeled_trees(5, 1).len(), 125);
    }

    #[test]
    fn false_palindrome_tree_has_short_diameter() {
        let t = false_palindrome_tree();
        let mut longest = 0;
        for u in 0..7 {
            for v in 0..7 {
                longest = longest.max(t.path_value(u, v).len());
            }
        }
        assert_eq!(longest, 5);
    }
}
