//! Distinct palindromic substrings of edge-labeled trees.
//!
//! A word is a substring of an undirected tree with single-character edge
//! labels when it reads along some simple path. This crate reports every
//! distinct palindromic substring of such a tree in subquadratic time,
//! tests whether one of a given length exists, and finds a longest one,
//! alongside a brute-force oracle and input generators that validate the
//! fast path.

pub mod convolution;
pub mod corpus;
pub mod dtree;
pub mod factors;
pub mod generators;
pub mod oracle;
pub mod pipeline;
pub mod spine;
pub mod tree;

mod rooted;

pub use tree::{
    expand_even, BuildError, ContractError, ExpOrigin, ExpandedTree, Label, LabeledTree, NodeId,
    PalTriple, ParseError, PathWord,
};
