//! Brute-force reference implementations and exhaustive enumeration.
//!
//! The `oracle_*` functions compute the correspondence operators straight
//! from their induced-hypergraph definitions, using ordered sets and no bit
//! tricks, so that the fast kernels in [`crate::correspondence`] can be
//! checked against something that shares none of their code.

use std::collections::BTreeSet;

use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeSet, Hypergraph, SubHypergraph, VertexSet};

/// Largest universe (on either side) that the enumerators accept.
pub const ENUMERATION_LIMIT: usize = 20;

type Naive = (BTreeSet<usize>, BTreeSet<usize>);

fn covered(hg: &Hypergraph, vertices: &BTreeSet<usize>, edge: usize) -> bool {
    hg.edge_vertices(edge).iter().all(|x| vertices.contains(x))
}

/// `H(X•) = (X•, {e_i | v(e_i) ⊆ X•})`
pub fn induced_by_vertices_naive(hg: &Hypergraph, vertices: &BTreeSet<usize>) -> Naive {
    let edges = (0..hg.edge_count())
        .filter(|&e| covered(hg, vertices, e))
        .collect();
    (vertices.clone(), edges)
}

/// `H(X×) = (∪_{j∈J} v(e_j), X×)`
pub fn induced_by_edges_naive(hg: &Hypergraph, edges: &BTreeSet<usize>) -> Naive {
    let vertices = edges
        .iter()
        .flat_map(|&e| hg.edge_vertices(e).iter().copied())
        .collect();
    (vertices, edges.clone())
}

fn to_naive<K: crate::hypergraph::Element>(
    set: &crate::hypergraph::IndexSet<'_, K>,
) -> BTreeSet<usize> {
    set.iter().collect()
}

fn complement(universe: usize, set: &BTreeSet<usize>) -> BTreeSet<usize> {
    (0..universe).filter(|i| !set.contains(i)).collect()
}

/// δ• read off `(δ•(X×), X×) = H(X×)`.
pub fn oracle_delta_v<'h>(edges: &EdgeSet<'h>) -> VertexSet<'h> {
    let hg = edges.hypergraph();
    let (vertices, _) = induced_by_edges_naive(hg, &to_naive(edges));
    hg.vertex_set(vertices)
}

/// ε× read off `(X•, ε×(X•)) = H(X•)`.
pub fn oracle_eps_e<'h>(vertices: &VertexSet<'h>) -> EdgeSet<'h> {
    let hg = vertices.hypergraph();
    let (_, edges) = induced_by_vertices_naive(hg, &to_naive(vertices));
    hg.edge_set(edges)
}

/// ε• read off `(complement of ε•(X×), complement of X×) = H(complement of X×)`.
pub fn oracle_eps_v<'h>(edges: &EdgeSet<'h>) -> VertexSet<'h> {
    let hg = edges.hypergraph();
    let outside = complement(hg.edge_count(), &to_naive(edges));
    let (vertices, _) = induced_by_edges_naive(hg, &outside);
    hg.vertex_set(complement(hg.vertex_count(), &vertices))
}

/// δ× read off `(complement of X•, complement of δ×(X•)) = H(complement of X•)`.
pub fn oracle_delta_e<'h>(vertices: &VertexSet<'h>) -> EdgeSet<'h> {
    let hg = vertices.hypergraph();
    let outside = complement(hg.vertex_count(), &to_naive(vertices));
    let (_, edges) = induced_by_vertices_naive(hg, &outside);
    hg.edge_set(complement(hg.edge_count(), &edges))
}

fn mask_to_set(mask: u32, universe: usize) -> BTreeSet<usize> {
    (0..universe).filter(|i| mask >> i & 1 == 1).collect()
}

fn check_size(hg: &Hypergraph) -> Result<()> {
    if hg.vertex_count() > ENUMERATION_LIMIT || hg.edge_count() > ENUMERATION_LIMIT {
        return Err(Error::UniverseTooLarge {
            vertices: hg.vertex_count(),
            edges: hg.edge_count(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// Searches every subhypergraph with vertex part `X•` for the largest one.
/// Returns `None` if the candidates have no maximum.
pub fn largest_with_vertices(hg: &Hypergraph, vertices: &BTreeSet<usize>) -> Result<Option<Naive>> {
    check_size(hg)?;
    let m = hg.edge_count();
    let candidates: Vec<BTreeSet<usize>> = (0..1u32 << m)
        .map(|mask| mask_to_set(mask, m))
        .filter(|edges| edges.iter().all(|&e| covered(hg, vertices, e)))
        .collect();
    let best = candidates
        .iter()
        .find(|c| candidates.iter().all(|other| other.is_subset(c)));
    Ok(best.map(|edges| (vertices.clone(), edges.clone())))
}

/// Searches every subhypergraph with edge part `X×` for the smallest one.
/// Returns `None` if the candidates have no minimum.
pub fn smallest_with_edges(hg: &Hypergraph, edges: &BTreeSet<usize>) -> Result<Option<Naive>> {
    check_size(hg)?;
    let n = hg.vertex_count();
    let candidates: Vec<BTreeSet<usize>> = (0..1u32 << n)
        .map(|mask| mask_to_set(mask, n))
        .filter(|vertices| edges.iter().all(|&e| covered(hg, vertices, e)))
        .collect();
    let best = candidates
        .iter()
        .find(|c| candidates.iter().all(|other| c.is_subset(other)));
    Ok(best.map(|vertices| (vertices.clone(), edges.clone())))
}

fn from_mask<'h, K: crate::hypergraph::Element>(
    hg: &'h Hypergraph,
    mask: u32,
) -> crate::hypergraph::IndexSet<'h, K> {
    let universe = K::universe(hg);
    crate::hypergraph::IndexSet::from_indices(hg, (0..universe).filter(move |i| mask >> i & 1 == 1))
}

/// All `2^|H•|` vertex sets, in binary counting order.
pub fn enumerate_vertex_subsets(
    hg: &Hypergraph,
) -> Result<impl Iterator<Item = VertexSet<'_>> + '_> {
    check_size(hg)?;
    Ok((0..1u32 << hg.vertex_count()).map(move |mask| from_mask(hg, mask)))
}

/// All `2^|H×|` edge sets, in binary counting order.
pub fn enumerate_edge_subsets(hg: &Hypergraph) -> Result<impl Iterator<Item = EdgeSet<'_>> + '_> {
    check_size(hg)?;
    Ok((0..1u32 << hg.edge_count()).map(move |mask| from_mask(hg, mask)))
}

/// Every pair `(X•, X×)` satisfying the cover condition: for each edge set,
/// every superset of the vertices it covers.
pub fn enumerate_subhypergraphs(
    hg: &Hypergraph,
) -> Result<impl Iterator<Item = SubHypergraph<'_>> + '_> {
    check_size(hg)?;
    let n = hg.vertex_count();
    Ok((0..1u32 << hg.edge_count()).flat_map(move |edge_mask| {
        let edges: EdgeSet<'_> = from_mask(hg, edge_mask);
        let forced = edges
            .iter()
            .flat_map(|e| hg.edge_vertices(e).iter())
            .fold(0u32, |acc, &x| acc | 1 << x);
        let free = !forced & ((1u32 << n) - 1);
        // Walk the subsets of `free` in increasing order.
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let extra = next?;
            next = if extra == free {
                None
            } else {
                Some((extra.wrapping_sub(free)) & free)
            };
            Some(SubHypergraph::from_parts_unchecked(
                from_mask(hg, forced | extra),
                edges.clone(),
            ))
        })
    }))
}

/// Draws a small hypergraph: 2 to 8 vertices, 1 to 5 edges, each edge a
/// uniformly chosen subset of 1 to 4 vertices.
pub fn random_hypergraph<R: Rng + ?Sized>(rng: &mut R) -> Hypergraph {
    let n = rng.random_range(2..=8);
    let m = rng.random_range(1..=5);
    let edges: Vec<Vec<usize>> = (0..m)
        .map(|_| {
            let size = rng.random_range(1..=n.min(4));
            index::sample(rng, n, size).into_vec()
        })
        .collect();
    Hypergraph::from_edge_lists(n, edges).expect("sampled edges are in range and distinct")
}
