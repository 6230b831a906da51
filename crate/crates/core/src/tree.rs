//! Edge-labeled tree model: parsing, serialization, path words, and the
//! even-length reduction behind the reporting pipeline.
//!
//! A tree on `n` nodes carries single-character labels on its `n - 1` edges.
//! A word is a *substring* of the tree when it reads along some simple path.
//! Node ids are 1-based in files and 0-based everywhere in this crate.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::rooted::RootedIndex;

pub type NodeId = u32;
/// Interned edge label, dense in `0..sigma`.
pub type Label = u32;

/// An undirected tree with interned single-character edge labels.
#[derive(Clone, Debug)]
pub struct LabeledTree {
    n_nodes: u32,
    edges: Vec<(NodeId, NodeId, Label)>,
    adj: Vec<Vec<(NodeId, Label)>>,
    alphabet: Vec<char>,
}

/// Structural violation found while assembling a tree from an edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    EmptyTree,
    IdOutOfRange { edge: usize },
    SelfLoop { edge: usize },
    DuplicateEdge { edge: usize },
    Cycle { edge: usize },
    BadLabel { edge: usize },
    WrongEdgeCount { expected: usize, got: usize },
    Disconnected,
}

/// Parse failure for the text format, with the 1-based offending line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    BadHeader { line: usize },
    BadEdgeLine { line: usize },
    BadLabel { line: usize },
    IdOutOfRange { line: usize },
    SelfLoop { line: usize },
    DuplicateEdge { line: usize },
    Cycle { line: usize },
    WrongEdgeCount { expected: usize, got: usize },
    Disconnected,
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::EmptyTree => write!(f, "tree must have at least one node"),
            BuildError::IdOutOfRange { edge } => write!(f, "edge {edge}: node id out of range"),
            BuildError::SelfLoop { edge } => write!(f, "edge {edge}: self-loop"),
            BuildError::DuplicateEdge { edge } => write!(f, "edge {edge}: duplicate edge"),
            BuildError::Cycle { edge } => write!(f, "edge {edge}: closes a cycle"),
            BuildError::BadLabel { edge } => write!(f, "edge {edge}: label not printable"),
            BuildError::WrongEdgeCount { expected, got } => {
                write!(f, "expected {expected} edges, got {got}")
            }
            BuildError::Disconnected => write!(f, "tree is disconnected"),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::BadHeader { line } => write!(f, "line {line}: bad node count header"),
            ParseError::BadEdgeLine { line } => {
                write!(f, "line {line}: expected \"u v c\" edge line")
            }
            ParseError::BadLabel { line } => {
                write!(f, "line {line}: label must be one printable non-space character")
            }
            ParseError::IdOutOfRange { line } => write!(f, "line {line}: node id out of range"),
            ParseError::SelfLoop { line } => write!(f, "line {line}: self-loop"),
            ParseError::DuplicateEdge { line } => write!(f, "line {line}: duplicate edge"),
            ParseError::Cycle { line } => write!(f, "line {line}: edge closes a cycle"),
            ParseError::WrongEdgeCount { expected, got } => {
                write!(f, "expected {expected} edges, got {got}")
            }
            ParseError::Disconnected => write!(f, "tree is disconnected"),
        }
    }
}

impl std::error::Error for BuildError {}
impl std::error::Error for ParseError {}

fn label_ok(c: char) -> bool {
    !c.is_whitespace() && !c.is_control()
}

struct Dsu(Vec<u32>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n as u32).collect())
    }
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.0[r as usize] != r {
            r = self.0[r as usize];
        }
        let mut c = x;
        while self.0[c as usize] != r {
            let p = self.0[c as usize];
            self.0[c as usize] = r;
            c = p;
        }
        r
    }
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra as usize] = rb;
        true
    }
}

impl LabeledTree {
    /// Builds a tree from 0-based endpoints and raw character labels.
    /// Labels are interned in first-appearance order.
    pub fn from_edges(n_nodes: u32, edges: &[(NodeId, NodeId, char)]) -> Result<Self, BuildError> {
        if n_nodes == 0 {
            return Err(BuildError::EmptyTree);
        }
        if edges.len() != n_nodes as usize - 1 {
            return Err(BuildError::WrongEdgeCount {
                expected: n_nodes as usize - 1,
                got: edges.len(),
            });
        }
        let mut dsu = Dsu::new(n_nodes as usize);
        let mut seen: HashSet<(u32, u32)> = HashSet::new();
        let mut lookup: HashMap<char, Label> = HashMap::new();
        let mut alphabet = Vec::new();
        let mut interned = Vec::with_capacity(edges.len());
        for (i, &(u, v, c)) in edges.iter().enumerate() {
            if u >= n_nodes || v >= n_nodes {
                return Err(BuildError::IdOutOfRange { edge: i });
            }
            if u == v {
                return Err(BuildError::SelfLoop { edge: i });
            }
            if !label_ok(c) {
                return Err(BuildError::BadLabel { edge: i });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(BuildError::DuplicateEdge { edge: i });
            }
            if !dsu.union(u, v) {
                return Err(BuildError::Cycle { edge: i });
            }
            let next = alphabet.len() as Label;
            let lab = *lookup.entry(c).or_insert_with(|| {
                alphabet.push(c);
                next
            });
            interned.push((u, v, lab));
        }
        let root = dsu.find(0);
        if (0..n_nodes).any(|x| dsu.find(x) != root) {
            return Err(BuildError::Disconnected);
        }
        let mut adj = vec![Vec::new(); n_nodes as usize];
        for &(u, v, lab) in &interned {
            adj[u as usize].push((v, lab));
            adj[v as usize].push((u, lab));
        }
        Ok(LabeledTree {
            n_nodes,
            edges: interned,
            adj,
            alphabet,
        })
    }

    /// Internal constructor for trees whose labels are already integers.
    /// `alphabet` may be shorter than the label range (sentinel labels).
    pub(crate) fn from_interned(
        n_nodes: u32,
        edges: Vec<(NodeId, NodeId, Label)>,
        alphabet: Vec<char>,
    ) -> Self {
        debug_assert_eq!(edges.len(), n_nodes as usize - 1);
        let mut adj = vec![Vec::new(); n_nodes as usize];
        for &(u, v, lab) in &edges {
            adj[u as usize].push((v, lab));
            adj[v as usize].push((u, lab));
        }
        LabeledTree {
            n_nodes,
            edges,
            adj,
            alphabet,
        }
    }

    /// Parses the text format: a node-count header line, then one `u v c`
    /// line per edge with 1-based ids. `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut n_nodes: Option<u32> = None;
        let mut raw_edges: Vec<(NodeId, NodeId, char)> = Vec::new();
        let mut edge_lines: Vec<usize> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some(n) = n_nodes else {
                let parsed: u32 = line.parse().map_err(|_| ParseError::BadHeader { line: lineno })?;
                if parsed == 0 {
                    return Err(ParseError::BadHeader { line: lineno });
                }
                n_nodes = Some(parsed);
                continue;
            };
            let mut it = line.split_whitespace();
            let (Some(us), Some(vs), Some(cs), None) = (it.next(), it.next(), it.next(), it.next())
            else {
                return Err(ParseError::BadEdgeLine { line: lineno });
            };
            let u: u64 = us.parse().map_err(|_| ParseError::BadEdgeLine { line: lineno })?;
            let v: u64 = vs.parse().map_err(|_| ParseError::BadEdgeLine { line: lineno })?;
            if u == 0 || v == 0 || u > n as u64 || v > n as u64 {
                return Err(ParseError::IdOutOfRange { line: lineno });
            }
            let mut chars = cs.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(ParseError::BadLabel { line: lineno });
            };
            if !label_ok(c) {
                return Err(ParseError::BadLabel { line: lineno });
            }
            raw_edges.push((u as NodeId - 1, v as NodeId - 1, c));
            edge_lines.push(lineno);
        }
        let Some(n) = n_nodes else {
            return Err(ParseError::BadHeader { line: 1 });
        };
        LabeledTree::from_edges(n, &raw_edges).map_err(|e| match e {
            BuildError::IdOutOfRange { edge } => ParseError::IdOutOfRange { line: edge_lines[edge] },
            BuildError::SelfLoop { edge } => ParseError::SelfLoop { line: edge_lines[edge] },
            BuildError::DuplicateEdge { edge } => {
                ParseError::DuplicateEdge { line: edge_lines[edge] }
            }
            BuildError::Cycle { edge } => ParseError::Cycle { line: edge_lines[edge] },
            BuildError::BadLabel { edge } => ParseError::BadLabel { line: edge_lines[edge] },
            BuildError::WrongEdgeCount { expected, got } => {
                ParseError::WrongEdgeCount { expected, got }
            }
            BuildError::Disconnected => ParseError::Disconnected,
            BuildError::EmptyTree => ParseError::BadHeader { line: 1 },
        })
    }

    /// Writes the tree back in the text format, edges in stored order.
    pub fn serialize(&self) -> String {
        let mut out = format!("{}\n", self.n_nodes);
        for &(u, v, lab) in &self.edges {
            let c = self.alphabet[lab as usize];
            out.push_str(&format!("{} {} {}\n", u + 1, v + 1, c));
        }
        out
    }

    pub fn node_count(&self) -> u32 {
        self.n_nodes
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of distinct labels actually used.
    pub fn sigma(&self) -> u32 {
        self.alphabet.len() as u32
    }

    pub fn edges(&self) -> &[(NodeId, NodeId, Label)] {
        &self.edges
    }

    pub fn neighbors(&self, u: NodeId) -> &[(NodeId, Label)] {
        &self.adj[u as usize]
    }

    pub fn label_char(&self, lab: Label) -> char {
        self.alphabet[lab as usize]
    }

    pub fn decode(&self, word: &PathWord) -> String {
        word.symbols.iter().map(|&l| self.alphabet[l as usize]).collect()
    }

    /// Label sequence along the unique simple path from `u` to `v`,
    /// read starting at `u`. Empty when `u == v`. O(n) walk.
    ///
    /// # Panics
    /// When an id is out of range.
    pub fn path_value(&self, u: NodeId, v: NodeId) -> PathWord {
        let (_, word) = self.path_between(u, v);
        word
    }

    /// The node sequence from `u` to `v` inclusive, with its label word.
    ///
    /// # Panics
    /// When an id is out of range.
    pub fn path_between(&self, u: NodeId, v: NodeId) -> (Vec<NodeId>, PathWord) {
        assert!(u < self.n_nodes && v < self.n_nodes, "node id out of range");
        if u == v {
            return (vec![u], PathWord::default());
        }
        // Iterative DFS from u recording the parent edge of each node.
        let n = self.n_nodes as usize;
        let mut parent: Vec<u32> = vec![u32::MAX; n];
        let mut plabel: Vec<Label> = vec![0; n];
        let mut stack = vec![u];
        parent[u as usize] = u;
        while let Some(x) = stack.pop() {
            if x == v {
                break;
            }
            for &(y, lab) in &self.adj[x as usize] {
                if parent[y as usize] == u32::MAX {
                    parent[y as usize] = x;
                    plabel[y as usize] = lab;
                    stack.push(y);
                }
            }
        }
        let mut symbols = Vec::new();
        let mut nodes = Vec::new();
        let mut x = v;
        while x != u {
            nodes.push(x);
            symbols.push(plabel[x as usize]);
            x = parent[x as usize];
        }
        nodes.push(u);
        nodes.reverse();
        symbols.reverse();
        (nodes, PathWord { symbols })
    }
}

/// Label sequence along a simple path.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord {
    pub symbols: Vec<Label>,
}

impl PathWord {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn reversed(&self) -> PathWord {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        PathWord { symbols }
    }

    /// True for palindromes; the empty word counts as one here, callers
    /// that report palindromes must exclude it separately.
    pub fn is_palindrome(&self) -> bool {
        let s = &self.symbols;
        (0..s.len() / 2).all(|i| s[i] == s[s.len() - 1 - i])
    }
}

/// A reported palindrome: its length and a witness for its first half.
///
/// `v` lies `ceil(length/2)` edges from `u` along some simple path whose
/// label sequence, extended symmetrically, spells the palindrome. For odd
/// lengths `v` is the far endpoint of the edge holding the center.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PalTriple {
    pub length: u32,
    pub u: NodeId,
    pub v: NodeId,
}

/// Where an expanded-tree node came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpOrigin {
    /// A node of the source tree.
    Node(NodeId),
    /// Midpoint of the 4-edge image of a source edge, with its endpoints.
    Mid(NodeId, NodeId),
    /// One of the two off-center subdivision nodes of a source edge.
    Flank,
}

/// Violation of `contract_triple` preconditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContractError {
    LengthNotMultipleOf4,
    StartNotOriginal,
    BadHalfEndpoint,
    DistanceMismatch,
}

impl fmt::Display for ContractError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            ContractError::LengthNotMultipleOf4 => "length is not a positive multiple of 4",
            ContractError::StartNotOriginal => "start node is not a source-tree node",
            ContractError::BadHalfEndpoint => "half endpoint is not a node or edge midpoint",
            ContractError::DistanceMismatch => "witness distance does not match length",
        };
        f.write_str(msg)
    }
}

impl std::error::Error for ContractError {}

/// The even-length reduction of a tree.
///
/// Every source edge labeled `c` becomes a 4-edge path labeled `$ c c $`,
/// where `$` is a fresh integer label (one past the source alphabet), so a
/// word `w` is a palindrome in the source iff its blockwise image, which has
/// length `4|w|` and starts with `$`, is a palindrome here. All palindromic
/// path values of interest in the expansion therefore have even length.
pub struct ExpandedTree {
    pub tree: LabeledTree,
    sentinel: Label,
    origin: Vec<ExpOrigin>,
    index: RootedIndex,
    source_nodes: u32,
}

/// Builds the 4-edge-per-edge expansion of `t`.
pub fn expand_even(t: &LabeledTree) -> ExpandedTree {
    let n = t.node_count();
    let m = t.edge_count() as u32;
    let sentinel = t.sigma();
    let total = n + 3 * m;
    let mut edges = Vec::with_capacity(4 * m as usize);
    let mut origin = vec![ExpOrigin::Flank; total as usize];
    for i in 0..n {
        origin[i as usize] = ExpOrigin::Node(i);
    }
    for (j, &(u, v, lab)) in t.edges().iter().enumerate() {
        let base = n + 3 * j as u32;
        origin[base as usize + 1] = ExpOrigin::Mid(u, v);
        edges.push((u, base, sentinel));
        edges.push((base, base + 1, lab));
        edges.push((base + 1, base + 2, lab));
        edges.push((base + 2, v, sentinel));
    }
    // Alphabet gains a placeholder for the sentinel; expanded trees are
    // never serialized, the placeholder only keeps decode() total.
    let mut alphabet = t.alphabet.clone();
    alphabet.push('\u{1}');
    let tree = LabeledTree::from_interned(total, edges, alphabet);
    let index = RootedIndex::new(&tree, 0);
    ExpandedTree {
        tree,
        sentinel,
        origin,
        index,
        source_nodes: n,
    }
}

impl ExpandedTree {
    pub fn sentinel(&self) -> Label {
        self.sentinel
    }

    pub fn origin(&self, x: NodeId) -> ExpOrigin {
        self.origin[x as usize]
    }

    /// Expanded id of a source node (the identity embedding).
    pub fn node_of(&self, source: NodeId) -> NodeId {
        assert!(source < self.source_nodes);
        source
    }

    pub fn dist(&self, a: NodeId, b: NodeId) -> u32 {
        self.index.dist(a, b)
    }

    /// Node `d` edges from `a` along the path to `b`.
    pub fn walk(&self, a: NodeId, b: NodeId, d: u32) -> NodeId {
        self.index.walk(a, b, d)
    }

    /// Maps a palindrome witness in the expansion back to source terms.
    ///
    /// `t.length` must be a positive multiple of 4 with `t.u` a source node
    /// (the image word then starts with the sentinel) and `t.v` the node
    /// half the expanded length away from `t.u`. The result has length
    /// `t.length / 4`; for odd results `t.v` sits on an edge midpoint and
    /// contracts to that edge's endpoint farther from `t.u`.
    pub fn contract_triple(&self, t: &PalTriple) -> Result<PalTriple, ContractError> {
        if t.length == 0 || !t.length.is_multiple_of(4) {
            return Err(ContractError::LengthNotMultipleOf4);
        }
        let ExpOrigin::Node(u0) = self.origin[t.u as usize] else {
            return Err(ContractError::StartNotOriginal);
        };
        let half = t.length / 2;
        if self.index.dist(t.u, t.v) != half {
            return Err(ContractError::DistanceMismatch);
        }
        let length = t.length / 4;
        let v0 = match self.origin[t.v as usize] {
            ExpOrigin::Node(v0) => v0,
            ExpOrigin::Mid(a, b) => {
                // The half endpoint of an odd palindrome: keep the edge
                // endpoint farther along the path.
                let ea = self.node_of(a);
                if self.index.dist(t.u, ea) > half {
                    a
                } else {
                    b
                }
            }
            ExpOrigin::Flank => return Err(ContractError::BadHalfEndpoint),
        };
        Ok(PalTriple { length, u: u0, v: v0 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn parse_and_roundtrip() {
        let text = "4\n1 2 a\n# middle comment\n2 3 b\n2 4 a\n";
        let t = LabeledTree::parse(text).unwrap();
        assert_eq!(t.node_count(), 4);
        assert_eq!(t.sigma(), 2);
        let again = LabeledTree::parse(&t.serialize()).unwrap();
        assert_eq!(again.edges(), t.edges());
        assert_eq!(again.serialize(), t.serialize());
    }

    #[test]
    fn parse_errors_carry_lines() {
        use ParseError::*;
        let cases: &[(&str, ParseError)] = &[
            ("x\n", BadHeader { line: 1 }),
            ("0\n", BadHeader { line: 1 }),
            ("", BadHeader { line: 1 }),
            ("3\n1 2\n", BadEdgeLine { line: 2 }),
            ("3\n1 2 a b\n", BadEdgeLine { line: 2 }),
            ("3\n1 2 ab\n", BadLabel { line: 2 }),
            ("2\n1 3 a\n", IdOutOfRange { line: 2 }),
            ("2\n0 1 a\n", IdOutOfRange { line: 2 }),
            ("3\n1 1 a\n1 2 b\n", SelfLoop { line: 2 }),
            ("3\n1 2 a\n1 2 b\n", DuplicateEdge { line: 3 }),
            ("4\n1 2 a\n2 3 b\n3 1 c\n", Cycle { line: 4 }),
            ("4\n1 2 a\n2 3 b\n", WrongEdgeCount { expected: 3, got: 2 }),
        ];
        for (text, want) in cases {
            assert_eq!(LabeledTree::parse(text).unwrap_err(), *want, "input {text:?}");
        }
    }

    #[test]
    fn path_values_match_sample_tree() {
        let t = corpus::sample_tree();
        // 0-based ids; the sample is documented in corpus.rs.
        let aca = t.path_value(6, 1);
        assert_eq!(t.decode(&aca), "aca");
        let cbcbc = t.path_value(0, 12);
        assert_eq!(t.decode(&cbcbc), "cbcbc");
        assert_eq!(t.decode(&t.path_value(12, 0)), "cbcbc");
        assert!(aca.is_palindrome());
        assert!(t.path_value(3, 3).is_empty());
        let acaaca = t.path_value(1, 10);
        assert_eq!(t.decode(&acaaca), "acaaca");
        assert!(acaaca.is_palindrome());
    }

    #[test]
    fn expansion_blocks_single_edge() {
        let t = LabeledTree::from_edges(2, &[(0, 1, 'a')]).unwrap();
        let ex = expand_even(&t);
        assert_eq!(ex.tree.node_count(), 5);
        assert_eq!(ex.tree.edge_count(), 4);
        let w = ex.tree.path_value(0, 1);
        let s = ex.sentinel();
        assert_eq!(w.symbols, vec![s, 0, 0, s]);
        assert!(w.is_palindrome());
    }

    #[test]
    fn expansion_preserves_palindromes_both_ways() {
        // Every source path word is a palindrome iff its image is.
        let t = corpus::sample_tree();
        let ex = expand_even(&t);
        let n = t.node_count();
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let w = t.path_value(u, v);
                let img = ex.tree.path_value(ex.node_of(u), ex.node_of(v));
                assert_eq!(img.len(), 4 * w.len());
                assert_eq!(img.symbols[0], ex.sentinel());
                assert_eq!(w.is_palindrome(), img.is_palindrome(), "pair {u} {v}");
            }
        }
    }

    #[test]
    fn contract_even_and_odd() {
        let t = corpus::sample_tree();
        let ex = expand_even(&t);
        // acaaca: 1 -> 10 (0-based), even length 6, half endpoint 3 steps in.
        let (u, far) = (ex.node_of(1), ex.node_of(10));
        let v = ex.walk(u, far, 12);
        let got = ex
            .contract_triple(&PalTriple { length: 24, u, v })
            .unwrap();
        assert_eq!(got, PalTriple { length: 6, u: 1, v: 6 });
        // aca: 6 -> 1, odd length 3, half endpoint on the middle edge.
        let (u, far) = (ex.node_of(6), ex.node_of(1));
        let v = ex.walk(u, far, 6);
        let got = ex.contract_triple(&PalTriple { length: 12, u, v }).unwrap();
        assert_eq!(got.length, 3);
        assert_eq!(got.u, 6);
        assert_eq!(t.decode(&t.path_value(got.u, got.v)), "ac");
        // Single edge: $aa$ contracts to the edge itself.
        let k2 = LabeledTree::from_edges(2, &[(0, 1, 'a')]).unwrap();
        let exk = expand_even(&k2);
        let v = exk.walk(0, 1, 2);
        let got = exk.contract_triple(&PalTriple { length: 4, u: 0, v }).unwrap();
        assert_eq!(got, PalTriple { length: 1, u: 0, v: 1 });
    }

    #[test]
    fn contract_rejects_bad_witnesses() {
        let k2 = LabeledTree::from_edges(2, &[(0, 1, 'a')]).unwrap();
        let ex = expand_even(&k2);
        let mid = ex.walk(0, 1, 2);
        let flank = ex.walk(0, 1, 1);
        assert_eq!(
            ex.contract_triple(&PalTriple { length: 6, u: 0, v: mid }),
            Err(ContractError::LengthNotMultipleOf4)
        );
        assert_eq!(
            ex.contract_triple(&PalTriple { length: 4, u: flank, v: mid }),
            Err(ContractError::StartNotOriginal)
        );
        assert_eq!(
            ex.contract_triple(&PalTriple { length: 4, u: 0, v: flank }),
            Err(ContractError::DistanceMismatch)
        );
        assert_eq!(
            ex.contract_triple(&PalTriple { length: 8, u: 0, v: ex.walk(0, 1, 4) }),
            Ok(PalTriple { length: 2, u: 0, v: 1 })
        );
    }
}
