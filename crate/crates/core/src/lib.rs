//! Verification toolkit for the rainbow forbidden-subgraph preorder on trees.
//!
//! * [`tree`]: validated free trees, named families, canonical codes.
//! * [`enumerate`]: one tree per isomorphism class, plus a Prüfer-based count.
//! * [`flip`]: edge flips and the flip-condition classification.
//! * [`coloring`] and [`rainbow`]: edge-colored complete graphs and exact
//!   rainbow subtree search.
//! * [`witness`]: the explicit colorings that refute `T1 <= T2`.
//! * [`harness`]: randomized and exhaustive property checks.

pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod flip;
pub mod harness;
pub mod par;
pub mod rainbow;
pub mod tree;
pub mod witness;

pub use error::{Error, Result};
pub use par::Execution;
