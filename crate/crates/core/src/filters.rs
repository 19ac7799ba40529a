//! Openings, closings, granulometries and alternating sequential filters.
//!
//! Each lattice gets a full opening/closing (`δ∘ε`, `ε∘δ` and their edge and
//! hypergraph analogues) and a half opening/closing that makes a single round
//! trip through the other lattice:
//!
//! | lattice | half opening | half closing | opening | closing |
//! |---|---|---|---|---|
//! | vertex sets | `δ•∘ε×` | `ε•∘δ×` | `δ∘ε` | `ε∘δ` |
//! | edge sets | `δ×∘ε•` | `ε×∘δ•` | `Δ∘Ε` | `Ε∘Δ` |
//! | subhypergraphs | componentwise | componentwise | `[δ,Δ]∘[ε,Ε]` | `[ε,Ε]∘[δ,Δ]` |
//!
//! For every `X`: `open1 ⊆ open_half ⊆ X ⊆ close_half ⊆ close1`.

use std::fmt;

use crate::composed::{
    edge_dilate, edge_erode, hg_dilate, hg_erode, power, vertex_dilate, vertex_erode,
};
use crate::correspondence::{
    edge_dilate_from_vertices, edge_erode_from_vertices, vertex_dilate_from_edges,
    vertex_erode_from_edges,
};
use crate::hypergraph::{EdgeSet, SubHypergraph, VertexSet};

/// γ₁ = δ∘ε
pub fn open1_v<'h>(x: &VertexSet<'h>) -> VertexSet<'h> {
    vertex_dilate(&vertex_erode(x))
}

/// φ₁ = ε∘δ
pub fn close1_v<'h>(x: &VertexSet<'h>) -> VertexSet<'h> {
    vertex_erode(&vertex_dilate(x))
}

/// Γ₁ = Δ∘Ε
pub fn open1_e<'h>(x: &EdgeSet<'h>) -> EdgeSet<'h> {
    edge_dilate(&edge_erode(x))
}

/// Φ₁ = Ε∘Δ
pub fn close1_e<'h>(x: &EdgeSet<'h>) -> EdgeSet<'h> {
    edge_erode(&edge_dilate(x))
}

/// γ½ = δ•∘ε×: the union of the edges contained in `x`.
pub fn open_half_v<'h>(x: &VertexSet<'h>) -> VertexSet<'h> {
    vertex_dilate_from_edges(&edge_erode_from_vertices(x))
}

/// φ½ = ε•∘δ×
pub fn close_half_v<'h>(x: &VertexSet<'h>) -> VertexSet<'h> {
    vertex_erode_from_edges(&edge_dilate_from_vertices(x))
}

/// Γ½ = δ×∘ε•
pub fn open_half_e<'h>(x: &EdgeSet<'h>) -> EdgeSet<'h> {
    edge_dilate_from_vertices(&vertex_erode_from_edges(x))
}

/// Φ½ = ε×∘δ•: every edge covered by the union of the member edges.
pub fn close_half_e<'h>(x: &EdgeSet<'h>) -> EdgeSet<'h> {
    edge_erode_from_vertices(&vertex_dilate_from_edges(x))
}

/// `[γ,Γ]₁ = [δ,Δ]∘[ε,Ε]`
pub fn hg_open_1<'h>(x: &SubHypergraph<'h>) -> SubHypergraph<'h> {
    hg_dilate(&hg_erode(x))
}

/// `[φ,Φ]₁ = [ε,Ε]∘[δ,Δ]`
pub fn hg_close_1<'h>(x: &SubHypergraph<'h>) -> SubHypergraph<'h> {
    hg_erode(&hg_dilate(x))
}

/// `[γ,Γ]½(X) = (γ½(X•), Γ½(X×))`
pub fn hg_open_half<'h>(x: &SubHypergraph<'h>) -> SubHypergraph<'h> {
    SubHypergraph::from_parts_unchecked(open_half_v(x.vertices()), open_half_e(x.edges()))
}

/// `[φ,Φ]½(X) = (φ½(X•), Φ½(X×))`
pub fn hg_close_half<'h>(x: &SubHypergraph<'h>) -> SubHypergraph<'h> {
    SubHypergraph::from_parts_unchecked(close_half_v(x.vertices()), close_half_e(x.edges()))
}

/// Size parameter `λ` of a granulometry, counted in half steps.
///
/// `λ = 2i + j` with `j ∈ {0, 1}`: `i` full erosion/dilation rounds wrapped
/// around `j` half openings (or closings).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GranulometryIndex(u32);

impl GranulometryIndex {
    pub const fn new(half_steps: u32) -> Self {
        Self(half_steps)
    }

    pub const fn half_steps(self) -> u32 {
        self.0
    }

    /// `i = λ div 2`
    pub const fn full_rounds(self) -> usize {
        (self.0 / 2) as usize
    }

    /// `j = λ mod 2`
    pub const fn has_half_step(self) -> bool {
        self.0 % 2 == 1
    }
}

impl From<u32> for GranulometryIndex {
    fn from(lambda: u32) -> Self {
        Self(lambda)
    }
}

impl fmt::Display for GranulometryIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// `[γ,Γ]_{λ/2} = [δ,Δ]^i ∘ ([γ,Γ]½)^j ∘ [ε,Ε]^i`
pub fn granule_open<'h>(x: &SubHypergraph<'h>, lambda: GranulometryIndex) -> SubHypergraph<'h> {
    let i = lambda.full_rounds();
    let mut y = power(hg_erode, x, i);
    if lambda.has_half_step() {
        y = hg_open_half(&y);
    }
    power(hg_dilate, &y, i)
}

/// `[φ,Φ]_{λ/2} = [ε,Ε]^i ∘ ([φ,Φ]½)^j ∘ [δ,Δ]^i`
pub fn granule_close<'h>(x: &SubHypergraph<'h>, lambda: GranulometryIndex) -> SubHypergraph<'h> {
    let i = lambda.full_rounds();
    let mut y = power(hg_dilate, x, i);
    if lambda.has_half_step() {
        y = hg_close_half(&y);
    }
    power(hg_erode, &y, i)
}

/// Alternating sequential filter: `ASF_0 = id` and
/// `ASF_{λ/2} = [γ,Γ]_{λ/2} ∘ [φ,Φ]_{λ/2} ∘ ASF_{(λ−1)/2}`.
pub fn asf<'h>(x: &SubHypergraph<'h>, lambda: GranulometryIndex) -> SubHypergraph<'h> {
    let mut y = x.clone();
    for step in 1..=lambda.half_steps() {
        let step = GranulometryIndex::new(step);
        y = granule_open(&granule_close(&y, step), step);
    }
    y
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FilterKind {
    Opening,
    Closing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Vertex,
    Edge,
    Hypergraph,
}

/// One of the twelve openings and closings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FilterOp {
    pub side: Side,
    pub kind: FilterKind,
    /// Half opening/closing rather than the full one.
    pub half: bool,
}

impl FilterOp {
    pub fn all() -> Vec<FilterOp> {
        let mut out = Vec::new();
        for side in [Side::Vertex, Side::Edge, Side::Hypergraph] {
            for kind in [FilterKind::Opening, FilterKind::Closing] {
                for half in [false, true] {
                    out.push(FilterOp { side, kind, half });
                }
            }
        }
        out
    }

    /// Pipeline-style name, e.g. `v-open:1/2` or `hg-close:1`.
    pub fn name(&self) -> String {
        let side = match self.side {
            Side::Vertex => "v",
            Side::Edge => "e",
            Side::Hypergraph => "hg",
        };
        let kind = match self.kind {
            FilterKind::Opening => "open",
            FilterKind::Closing => "close",
        };
        let size = if self.half { "1/2" } else { "1" };
        format!("{side}-{kind}:{size}")
    }

    pub fn apply_vertices<'h>(&self, x: &VertexSet<'h>) -> VertexSet<'h> {
        match (self.kind, self.half) {
            (FilterKind::Opening, false) => open1_v(x),
            (FilterKind::Opening, true) => open_half_v(x),
            (FilterKind::Closing, false) => close1_v(x),
            (FilterKind::Closing, true) => close_half_v(x),
        }
    }

    pub fn apply_edges<'h>(&self, x: &EdgeSet<'h>) -> EdgeSet<'h> {
        match (self.kind, self.half) {
            (FilterKind::Opening, false) => open1_e(x),
            (FilterKind::Opening, true) => open_half_e(x),
            (FilterKind::Closing, false) => close1_e(x),
            (FilterKind::Closing, true) => close_half_e(x),
        }
    }

    pub fn apply_hypergraph<'h>(&self, x: &SubHypergraph<'h>) -> SubHypergraph<'h> {
        match (self.kind, self.half) {
            (FilterKind::Opening, false) => hg_open_1(x),
            (FilterKind::Opening, true) => hg_open_half(x),
            (FilterKind::Closing, false) => hg_close_1(x),
            (FilterKind::Closing, true) => hg_close_half(x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use crate::instances::{h0, h2};

    fn sub<'h>(hg: &'h Hypergraph, v: &[usize], e: &[usize]) -> SubHypergraph<'h> {
        SubHypergraph::new(
            hg.vertex_set(v.iter().copied()),
            hg.edge_set(e.iter().copied()),
        )
        .unwrap()
    }

    #[test]
    fn vertex_opening_closing_examples() {
        let hg = h0();
        assert_eq!(open1_v(&hg.vertex_set([0, 1, 4])), hg.vertex_set([0, 1]));
        assert_eq!(open1_v(&hg.empty_vertex_set()), hg.empty_vertex_set());
        assert_eq!(close1_v(&hg.full_vertex_set()), hg.full_vertex_set());
        assert_eq!(close1_v(&hg.vertex_set([3])), hg.vertex_set([2, 3, 4]));
    }

    #[test]
    fn edge_opening_closing_examples() {
        let hg = h0();
        assert_eq!(open1_e(&hg.edge_set([0, 1])), hg.edge_set([0, 1]));
        assert_eq!(open1_e(&hg.empty_edge_set()), hg.empty_edge_set());
        assert_eq!(close1_e(&hg.edge_set([1])), hg.full_edge_set());
    }

    #[test]
    fn half_vertex_examples() {
        let hg = h0();
        assert_eq!(
            open_half_v(&hg.vertex_set([0, 1, 4])),
            hg.vertex_set([0, 1])
        );
        assert_eq!(open_half_v(&hg.empty_vertex_set()), hg.empty_vertex_set());
        assert_eq!(close_half_v(&hg.vertex_set([3])), hg.vertex_set([2, 3, 4]));
    }

    #[test]
    fn half_edge_examples() {
        let hg = h2();
        assert_eq!(open_half_e(&hg.edge_set([0])), hg.empty_edge_set());
        assert_eq!(close_half_e(&hg.edge_set([0, 1])), hg.full_edge_set());
        let hg = h0();
        assert_eq!(open_half_e(&hg.edge_set([1])), hg.edge_set([1]));
    }

    #[test]
    fn hypergraph_filter_examples() {
        let hg = h0();
        let full = SubHypergraph::full(&hg);
        assert_eq!(hg_open_half(&full), full);
        let x = sub(&hg, &[0, 1, 2, 3], &[0, 1]);
        assert_eq!(hg_open_1(&x), x);
        let x = sub(&hg, &[0, 1], &[0]);
        let y = hg_close_half(&x);
        assert_eq!(y.vertices(), &close_half_v(x.vertices()));
        assert_eq!(y.edges(), &close_half_e(x.edges()));
        // φ½({0,1}) = ε•({e0,e1}) = {0,1,2}; Φ½({e0}) = ε×({0,1}) = {e0}
        assert_eq!(y, sub(&hg, &[0, 1, 2], &[0]));
    }

    #[test]
    fn granulometry_small_lambdas() {
        let hg = h0();
        let x = sub(&hg, &[0, 1, 2, 3], &[0, 1]);
        assert_eq!(granule_open(&x, 0.into()), x);
        assert_eq!(granule_open(&x, 1.into()), hg_open_half(&x));
        assert_eq!(granule_open(&x, 2.into()), hg_open_1(&x));
        assert_eq!(granule_close(&x, 0.into()), x);
        assert_eq!(granule_close(&x, 1.into()), hg_close_half(&x));
        assert_eq!(granule_close(&x, 2.into()), hg_close_1(&x));
    }

    #[test]
    fn asf_unfolds() {
        let hg = h0();
        let x = sub(&hg, &[0, 1, 4], &[0]);
        assert_eq!(asf(&x, 0.into()), x);
        assert_eq!(asf(&x, 1.into()), hg_open_half(&hg_close_half(&x)));
        assert_eq!(
            asf(&x, 2.into()),
            hg_open_1(&hg_close_1(&asf(&x, 1.into())))
        );
    }

    #[test]
    fn granulometry_index_parts() {
        let l = GranulometryIndex::new(5);
        assert_eq!(l.full_rounds(), 2);
        assert!(l.has_half_step());
        assert_eq!(l.to_string(), "5/2");
        assert_eq!(GranulometryIndex::new(4).to_string(), "2");
    }
}
