//! Exact generalized inverses of rational matrices.
//!
//! The crate computes {1}-inverses, group and Drazin inverses, Drazin indices
//! and minimal polynomials with big-rational arithmetic, and provides a
//! dedicated engine for anti-triangular block matrices `M = [[A, B], [C, 0]]`
//! with closed forms and index bounds for the structured cases, plus digraph
//! front ends that feed adjacency matrices into it.

pub mod error;
pub mod exactmat;
pub mod antitri;
pub mod cli;
pub mod digraph;
pub mod geninv;
pub mod polyring;
pub mod suites;
pub mod worked;

pub use error::{Error, Result};
pub use exactmat::{Matrix, Rational};
