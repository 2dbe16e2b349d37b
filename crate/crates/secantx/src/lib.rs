//! Exact combinatorics of higher secant complexes of simplicial complexes.
//!
//! The crate builds q-fold embedded joins of clique complexes, enumerates their
//! Stanley-Reisner generators, computes graded Betti numbers through reduced
//! simplicial homology over the rationals or a prime field, recognizes the graph
//! families that control linearity of the resolutions, and runs exhaustive
//! verification suites over all small graphs.

pub mod betti;
pub mod canon;
pub mod census;
pub mod coloring;
pub mod complex;
pub mod enumerate;
mod error;
pub mod families;
pub mod field;
pub mod graph;
pub mod graph6;
pub mod homology;
pub mod linalg;
pub mod matching;
pub mod secant;
pub mod verify;
pub mod vset;

pub use betti::BettiTable;
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use graph::Graph;
pub use vset::VertexSet;
