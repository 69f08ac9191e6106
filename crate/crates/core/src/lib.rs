#![no_std]
//! Backtrack search in finite symmetric groups, organised around stacks of
//! vertex- and arc-labelled digraphs.
//!
//! Points are `0..n` internally. Cycle notation (parsing and display) is
//! 1-based.

extern crate alloc;

pub mod canon;
pub mod digraph;
pub mod equitable;
mod error;
pub mod perm;
pub mod refiners;
pub mod search;
pub mod splitter;
pub mod stack;

pub use error::Error;
pub use perm::{Permutation, PermGroup, RightCoset, StabChain};
pub use canon::{canonise, exact_approx, exact_fixed, CanonResult};
pub use digraph::{orbital_graph, Label, LabelledDigraph};
pub use equitable::{
    equitable_labelling, strong_approx, strong_fixed, weak_approx, weak_fixed, EstimateGroup,
    IsoEstimate, VertexClassification,
};
pub use stack::DigraphStack;
pub use refiners::{GroupStrategy, Refiner, StackInfo};
pub use search::{Approximator, BsgsResult, Problem, SearchOptions, SearchStats};
pub use splitter::{split, SplitResult};
