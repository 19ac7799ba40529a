//! Dilations and erosions acting inside one lattice, built by composing the
//! correspondence operators.
//!
//! * on vertex sets: `δ = δ•∘δ×` and `ε = ε•∘ε×`;
//! * on edge sets: `Δ = δ×∘δ•` and `Ε = ε×∘ε•`;
//! * on subhypergraphs: `[δ,Δ]` and `[ε,Ε]`, applied componentwise.
//!
//! `(ε, δ)`, `(Ε, Δ)` and `([ε,Ε], [δ,Δ])` are adjunctions. The
//! componentwise operators map subhypergraphs to subhypergraphs.
//!
//! The compositions are the reference definitions. [`closed_form`] holds
//! direct set-builder versions that are checked against them.

use crate::correspondence::{
    edge_dilate_from_vertices, edge_erode_from_vertices, vertex_dilate_from_edges,
    vertex_erode_from_edges,
};
use crate::hypergraph::{EdgeSet, SubHypergraph, VertexSet};

/// δ: every vertex sharing an edge with `x`.
pub fn vertex_dilate<'h>(x: &VertexSet<'h>) -> VertexSet<'h> {
    vertex_dilate_from_edges(&edge_dilate_from_vertices(x))
}

/// ε: every vertex whose incident edges all lie inside `x`. Isolated
/// vertices qualify vacuously, whether or not they are in `x`.
pub fn vertex_erode<'h>(x: &VertexSet<'h>) -> VertexSet<'h> {
    vertex_erode_from_edges(&edge_erode_from_vertices(x))
}

/// Δ: every edge meeting some member edge.
pub fn edge_dilate<'h>(x: &EdgeSet<'h>) -> EdgeSet<'h> {
    edge_dilate_from_vertices(&vertex_dilate_from_edges(x))
}

/// Ε: the edges contained in the vertices that no non-member edge touches.
pub fn edge_erode<'h>(x: &EdgeSet<'h>) -> EdgeSet<'h> {
    edge_erode_from_vertices(&vertex_erode_from_edges(x))
}

/// `[δ,Δ](X) = (δ(X•), Δ(X×))`.
pub fn hg_dilate<'h>(x: &SubHypergraph<'h>) -> SubHypergraph<'h> {
    SubHypergraph::from_parts_unchecked(vertex_dilate(x.vertices()), edge_dilate(x.edges()))
}

/// `[ε,Ε](X) = (ε(X•), Ε(X×))`.
pub fn hg_erode<'h>(x: &SubHypergraph<'h>) -> SubHypergraph<'h> {
    SubHypergraph::from_parts_unchecked(vertex_erode(x.vertices()), edge_erode(x.edges()))
}

/// Applies `op` `times` times, stopping early once a fixed point is hit.
pub fn power<T, F>(op: F, x: &T, times: usize) -> T
where
    T: Clone + PartialEq,
    F: Fn(&T) -> T,
{
    let mut current = x.clone();
    for _ in 0..times {
        let next = op(&current);
        if next == current {
            break;
        }
        current = next;
    }
    current
}

/// The `times`-fold self-composition of `op`; `iterate(op, 0)` is the
/// identity.
pub fn iterate<T, F>(op: F, times: usize) -> impl Fn(&T) -> T
where
    T: Clone + PartialEq,
    F: Fn(&T) -> T,
{
    move |x| power(&op, x, times)
}

/// Direct characterisations of δ, ε, Δ and Ε without going through the
/// other lattice.
///
/// They agree with the compositions on every hypergraph without empty
/// edges. With empty edges, [`closed_form::edge_erode`] only ranges over
/// member edges while the composition also admits every empty edge.
pub mod closed_form {
    use crate::hypergraph::{EdgeSet, VertexSet};

    /// `{x ∈ H• | ∃ e_i : x ∈ v(e_i), v(e_i) ∩ X• ≠ ∅}`
    pub fn vertex_dilate<'h>(x: &VertexSet<'h>) -> VertexSet<'h> {
        let hg = x.hypergraph();
        hg.vertex_set((0..hg.vertex_count()).filter(|&y| {
            hg.incidence(y)
                .iter()
                .any(|&e| hg.edge_vertices(e).iter().any(|&z| x.contains(z)))
        }))
    }

    /// `{x ∈ H• | ∀ e_i : x ∈ v(e_i) ⇒ v(e_i) ⊆ X•}`
    pub fn vertex_erode<'h>(x: &VertexSet<'h>) -> VertexSet<'h> {
        let hg = x.hypergraph();
        hg.vertex_set((0..hg.vertex_count()).filter(|&y| {
            hg.incidence(y)
                .iter()
                .all(|&e| hg.edge_vertices(e).iter().all(|&z| x.contains(z)))
        }))
    }

    /// `{e_i | ∃ j ∈ J : v(e_i) ∩ v(e_j) ≠ ∅}`
    pub fn edge_dilate<'h>(x: &EdgeSet<'h>) -> EdgeSet<'h> {
        let hg = x.hypergraph();
        let meets = |a: usize, b: usize| {
            hg.edge_vertices(a)
                .iter()
                .any(|v| hg.edge_vertices(b).binary_search(v).is_ok())
        };
        hg.edge_set((0..hg.edge_count()).filter(|&i| x.iter().any(|j| meets(i, j))))
    }

    /// `{e_j, j ∈ J | v(e_j) ∩ v(e_i) = ∅ for all i ∉ J}`
    pub fn edge_erode<'h>(x: &EdgeSet<'h>) -> EdgeSet<'h> {
        let hg = x.hypergraph();
        let meets = |a: usize, b: usize| {
            hg.edge_vertices(a)
                .iter()
                .any(|v| hg.edge_vertices(b).binary_search(v).is_ok())
        };
        hg.edge_set(x.iter().filter(|&j| {
            (0..hg.edge_count())
                .filter(|&i| !x.contains(i))
                .all(|i| !meets(i, j))
        }))
    }
}
