//! Small named hypergraphs used throughout the tests and docs.

use crate::hypergraph::Hypergraph;

/// Vertices `0..5`; edges `e0 = {0,1}`, `e1 = {1,2,3}`, `e2 = {3,4}`.
pub fn h0() -> Hypergraph {
    Hypergraph::from_edge_lists(5, [vec![0, 1], vec![1, 2, 3], vec![3, 4]]).unwrap()
}

/// Vertices `0..3`; one edge `e0 = {0,1}`; vertex 2 is isolated.
pub fn h1() -> Hypergraph {
    Hypergraph::from_edge_lists(3, [vec![0, 1]]).unwrap()
}

/// The triangle: `e0 = {0,1}`, `e1 = {1,2}`, `e2 = {0,2}`.
pub fn h2() -> Hypergraph {
    Hypergraph::from_edge_lists(3, [vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
}

/// `[("H0", h0()), ("H1", h1()), ("H2", h2())]`.
pub fn canonical() -> Vec<(&'static str, Hypergraph)> {
    vec![("H0", h0()), ("H1", h1()), ("H2", h2())]
}
