//! Enumeration kernelization for d-cuts of simple undirected graphs.
//!
//! A d-cut is an edge cut in which every vertex is incident to at most d
//! crossing edges (a matching cut when d = 1). This crate shrinks a graph
//! to a kernel whose size depends only on a structural parameter — vertex
//! cover, neighborhood diversity, or a given clique partition — and lifts
//! each kernel solution to a class of solutions of the original graph so
//! that the classes partition the original solution set, for all three
//! solution notions (all, minimal, maximal d-cuts). A brute-force oracle
//! verifies the contract on small instances.

pub mod gen;
pub mod graph;
pub mod kernel;
pub mod oracle;
pub mod params;
pub mod pipeline;
pub mod stream;

pub use graph::{load_graph, EdgeCut, Graph};
pub use pipeline::{Options, Param, PipelineError, Variant};
