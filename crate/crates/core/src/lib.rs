//! Exact computation of the super domination number of small graphs.
//!
//! A set `D` of vertices is super dominating when every vertex `u` outside
//! `D` has a partner `v` inside `D` whose only neighbour outside `D` is `u`.
//! This crate computes the minimum size of such a set exactly, alongside the
//! other invariants that appear in its closed formulas (domination number,
//! independence and k-independence numbers, vertex cover number, 2-packing
//! number), builds lexicographic products and joins, recognizes the layered
//! clique/empty family of graphs whose super domination number is `n - 1`,
//! and ships an exhaustive verification harness that checks every bound and
//! formula against brute force over small-graph corpora.
//!
//! Everything is exact integer combinatorics over bitset adjacency rows;
//! graphs are capped at 64 vertices.

pub mod error;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod products;
pub mod set;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Graph, VERTEX_CAP};
pub use set::VertexSet;
