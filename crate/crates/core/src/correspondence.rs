//! The four vertex/hyperedge correspondence operators.
//!
//! | operator | signature | result |
//! |---|---|---|
//! | [`vertex_dilate_from_edges`] (δ•) | edges -> vertices | `∪_{j∈J} v(e_j)` |
//! | [`edge_erode_from_vertices`] (ε×) | vertices -> edges | `{i : v(e_i) ⊆ X•}` |
//! | [`vertex_erode_from_edges`] (ε•) | edges -> vertices | `H• ∖ ∪_{i∉J} v(e_i)` |
//! | [`edge_dilate_from_vertices`] (δ×) | vertices -> edges | `{i : v(e_i) ∩ X• ≠ ∅}` |
//!
//! `(ε×, δ•)` and `(ε•, δ×)` are adjunctions, and each erosion is the
//! complement-dual of the dilation with the same target. Every call runs in
//! `O(|H•| + |H×| + Σ|v(e_i)|)`.

use fixedbitset::FixedBitSet;

use crate::hypergraph::{EdgeSet, IndexSet, VertexSet};

/// δ•: every vertex belonging to a member edge.
pub fn vertex_dilate_from_edges<'h>(edges: &EdgeSet<'h>) -> VertexSet<'h> {
    let hg = edges.hypergraph();
    let mut bits = FixedBitSet::with_capacity(hg.vertex_count());
    for e in edges.iter() {
        for &x in hg.edge_vertices(e) {
            bits.insert(x);
        }
    }
    IndexSet::from_bits(hg, bits)
}

/// ε×: every edge whose vertices all lie in `vertices`. Empty edges always
/// qualify.
pub fn edge_erode_from_vertices<'h>(vertices: &VertexSet<'h>) -> EdgeSet<'h> {
    let hg = vertices.hypergraph();
    let mut bits = FixedBitSet::with_capacity(hg.edge_count());
    for e in 0..hg.edge_count() {
        if hg.edge_vertices(e).iter().all(|&x| vertices.contains(x)) {
            bits.insert(e);
        }
    }
    IndexSet::from_bits(hg, bits)
}

/// ε•: every vertex that belongs to no edge outside `edges`.
pub fn vertex_erode_from_edges<'h>(edges: &EdgeSet<'h>) -> VertexSet<'h> {
    let hg = edges.hypergraph();
    let mut bits = FixedBitSet::with_capacity(hg.vertex_count());
    bits.insert_range(..);
    for e in edges.as_bits().zeroes() {
        for &x in hg.edge_vertices(e) {
            bits.set(x, false);
        }
    }
    IndexSet::from_bits(hg, bits)
}

/// δ×: every edge meeting `vertices`. Empty edges never qualify.
pub fn edge_dilate_from_vertices<'h>(vertices: &VertexSet<'h>) -> EdgeSet<'h> {
    let hg = vertices.hypergraph();
    let mut bits = FixedBitSet::with_capacity(hg.edge_count());
    for x in vertices.iter() {
        for &e in hg.incidence(x) {
            bits.insert(e);
        }
    }
    IndexSet::from_bits(hg, bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use crate::instances::{h0, h1};

    #[test]
    fn vertex_dilate_from_edges_examples() {
        let hg = h0();
        assert_eq!(
            vertex_dilate_from_edges(&hg.edge_set([1])),
            hg.vertex_set([1, 2, 3])
        );
        assert_eq!(
            vertex_dilate_from_edges(&hg.empty_edge_set()),
            hg.empty_vertex_set()
        );
        assert_eq!(
            vertex_dilate_from_edges(&hg.edge_set([0, 2])),
            hg.vertex_set([0, 1, 3, 4])
        );
    }

    #[test]
    fn edge_erode_from_vertices_examples() {
        let hg = h0();
        assert_eq!(
            edge_erode_from_vertices(&hg.vertex_set([0, 1, 2, 3])),
            hg.edge_set([0, 1])
        );
        assert_eq!(
            edge_erode_from_vertices(&hg.full_vertex_set()),
            hg.full_edge_set()
        );
        let hg = h1();
        assert_eq!(
            edge_erode_from_vertices(&hg.vertex_set([2])),
            hg.empty_edge_set()
        );
    }

    #[test]
    fn vertex_erode_from_edges_examples() {
        let hg = h0();
        assert_eq!(
            vertex_erode_from_edges(&hg.edge_set([0, 1])),
            hg.vertex_set([0, 1, 2])
        );
        assert_eq!(
            vertex_erode_from_edges(&hg.full_edge_set()),
            hg.full_vertex_set()
        );
        let hg = h1();
        assert_eq!(
            vertex_erode_from_edges(&hg.empty_edge_set()),
            hg.vertex_set([2])
        );
    }

    #[test]
    fn edge_dilate_from_vertices_examples() {
        let hg = h0();
        assert_eq!(
            edge_dilate_from_vertices(&hg.vertex_set([0])),
            hg.edge_set([0])
        );
        assert_eq!(
            edge_dilate_from_vertices(&hg.empty_vertex_set()),
            hg.empty_edge_set()
        );
        assert_eq!(
            edge_dilate_from_vertices(&hg.vertex_set([3])),
            hg.edge_set([1, 2])
        );
    }

    #[test]
    fn matches_induced_constructions() {
        let hg = h0();
        for mask in 0u32..32 {
            let x = hg.vertex_set((0..5).filter(|i| mask >> i & 1 == 1));
            assert_eq!(
                &edge_erode_from_vertices(&x),
                hg.induced_by_vertices(&x).edges()
            );
        }
        for mask in 0u32..8 {
            let j = hg.edge_set((0..3).filter(|i| mask >> i & 1 == 1));
            assert_eq!(
                &vertex_dilate_from_edges(&j),
                hg.induced_by_edges(&j).vertices()
            );
        }
    }

    #[test]
    fn empty_edges_follow_the_formulas_literally() {
        let hg = Hypergraph::from_edge_lists(2, [vec![0], vec![]]).unwrap();
        for x in [hg.empty_vertex_set(), hg.full_vertex_set()] {
            assert!(edge_erode_from_vertices(&x).contains(1));
            assert!(!edge_dilate_from_vertices(&x).contains(1));
        }
        assert_eq!(
            vertex_dilate_from_edges(&hg.edge_set([1])),
            hg.empty_vertex_set()
        );
    }
}
