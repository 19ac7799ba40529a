//! Mathematical morphology on hypergraphs.
//!
//! A [`Hypergraph`] has a vertex set and an indexed family of hyperedges.
//! Its subsets ([`VertexSet`], [`EdgeSet`]) and subhypergraphs
//! ([`SubHypergraph`]) form the lattices the operators act on:
//!
//! - [`correspondence`]: the four vertex/edge correspondences δ•, ε•, δ×, ε×.
//! - [`composed`]: dilations and erosions δ, ε, Δ, Ε and their componentwise
//!   hypergraph versions.
//! - [`filters`]: openings, closings, granulometries and alternating
//!   sequential filters.
//! - [`oracle`] and [`laws`]: naive reference constructions and exhaustive
//!   law checks on small instances.
//! - [`format`], [`pipeline`], [`grid`], [`dot`]: text formats, the operator
//!   pipeline language, grid generators and Graphviz export.

pub mod composed;
pub mod correspondence;
pub mod dot;
pub mod error;
pub mod filters;
pub mod format;
pub mod grid;
pub mod hypergraph;
pub mod instances;
pub mod laws;
pub mod oracle;
pub mod pipeline;

pub use error::{Error, Result};
pub use hypergraph::{EdgeSet, Hypergraph, SubHypergraph, VertexSet};
