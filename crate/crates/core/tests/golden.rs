//! Golden outputs computed once by a naive pipeline built only from the
//! oracle correspondences, then frozen as literals. Both the naive pipeline
//! and the library must reproduce them.

use hgmorph::filters::{asf, granule_open, GranulometryIndex};
use hgmorph::format::serialize_subset;
use hgmorph::grid::{gen_grid, grid_index, EdgeModel};
use hgmorph::instances::h0;
use hgmorph::oracle::{oracle_delta_e, oracle_delta_v, oracle_eps_e, oracle_eps_v};
use hgmorph::pipeline::Value;
use hgmorph::{Hypergraph, SubHypergraph};

mod naive {
    use super::*;

    fn pair<'h>(x: &SubHypergraph<'h>) -> (hgmorph::VertexSet<'h>, hgmorph::EdgeSet<'h>) {
        (x.vertices().clone(), x.edges().clone())
    }

    fn make<'h>(v: hgmorph::VertexSet<'h>, e: hgmorph::EdgeSet<'h>) -> SubHypergraph<'h> {
        SubHypergraph::new(v, e).expect("oracle result is a subhypergraph")
    }

    pub fn dilate<'h>(x: &SubHypergraph<'h>) -> SubHypergraph<'h> {
        let (v, e) = pair(x);
        make(
            oracle_delta_v(&oracle_delta_e(&v)),
            oracle_delta_e(&oracle_delta_v(&e)),
        )
    }

    pub fn erode<'h>(x: &SubHypergraph<'h>) -> SubHypergraph<'h> {
        let (v, e) = pair(x);
        make(
            oracle_eps_v(&oracle_eps_e(&v)),
            oracle_eps_e(&oracle_eps_v(&e)),
        )
    }

    /// `(δ•∘ε×, δ×∘ε•)`
    pub fn open_half<'h>(x: &SubHypergraph<'h>) -> SubHypergraph<'h> {
        let (v, e) = pair(x);
        make(
            oracle_delta_v(&oracle_eps_e(&v)),
            oracle_delta_e(&oracle_eps_v(&e)),
        )
    }

    /// `(ε•∘δ×, ε×∘δ•)`
    pub fn close_half<'h>(x: &SubHypergraph<'h>) -> SubHypergraph<'h> {
        let (v, e) = pair(x);
        make(
            oracle_eps_v(&oracle_delta_e(&v)),
            oracle_eps_e(&oracle_delta_v(&e)),
        )
    }

    fn repeat<'h>(
        f: fn(&SubHypergraph<'h>) -> SubHypergraph<'h>,
        x: &SubHypergraph<'h>,
        n: u32,
    ) -> SubHypergraph<'h> {
        let mut y = x.clone();
        for _ in 0..n {
            y = f(&y);
        }
        y
    }

    pub fn granule_open<'h>(x: &SubHypergraph<'h>, lambda: u32) -> SubHypergraph<'h> {
        let y = repeat(erode, x, lambda / 2);
        let y = if lambda % 2 == 1 { open_half(&y) } else { y };
        repeat(dilate, &y, lambda / 2)
    }

    pub fn granule_close<'h>(x: &SubHypergraph<'h>, lambda: u32) -> SubHypergraph<'h> {
        let y = repeat(dilate, x, lambda / 2);
        let y = if lambda % 2 == 1 { close_half(&y) } else { y };
        repeat(erode, &y, lambda / 2)
    }

    pub fn asf<'h>(x: &SubHypergraph<'h>, lambda: u32) -> SubHypergraph<'h> {
        (1..=lambda).fold(x.clone(), |y, k| granule_open(&granule_close(&y, k), k))
    }
}

fn text(x: &SubHypergraph<'_>) -> String {
    serialize_subset(&Value::Hypergraph(x.clone()))
}

#[test]
fn granule_open_three_halves_on_full_h0() {
    let hg = h0();
    let full = SubHypergraph::full(&hg);
    let expected = GRANULE_OPEN_H0;
    assert_eq!(text(&naive::granule_open(&full, 3)), expected);
    assert_eq!(
        text(&granule_open(&full, GranulometryIndex::new(3))),
        expected
    );
}

#[test]
fn granules_on_partial_h0() {
    let hg = h0();
    let x = SubHypergraph::new(hg.vertex_set([0, 1, 2, 3]), hg.edge_set([0, 1])).unwrap();
    for (lambda, expected) in GRANULES_PARTIAL_H0.iter().enumerate() {
        let lambda = lambda as u32;
        assert_eq!(
            text(&naive::granule_open(&x, lambda)),
            *expected,
            "naive λ={lambda}"
        );
        assert_eq!(
            text(&granule_open(&x, GranulometryIndex::new(lambda))),
            *expected,
            "λ={lambda}"
        );
    }
}

/// Left half of a 6x6 cross4 grid with vertices 14, 21 and 33 flipped, as
/// the largest subhypergraph on that vertex set.
fn noisy_half_grid(hg: &Hypergraph) -> SubHypergraph<'_> {
    let mut v = hg.vertex_set((0..6).flat_map(|r| (0..3).map(move |c| grid_index(6, r, c))));
    for flip in [14, 21, 33] {
        if v.contains(flip) {
            v.remove(flip);
        } else {
            v.insert(flip);
        }
    }
    hg.induced_by_vertices(&v)
}

#[test]
fn asf_on_noisy_grid() {
    let hg = gen_grid(6, 6, EdgeModel::Cross4).unwrap();
    let x = noisy_half_grid(&hg);
    assert_eq!(text(&x), NOISY_INPUT);
    assert_eq!(text(&naive::asf(&x, 2)), ASF_GRID);
    assert_eq!(text(&asf(&x, GranulometryIndex::new(2))), ASF_GRID);
}

const GRANULE_OPEN_H0: &str = "vset 0 1 2 3 4\neset e0 e1 e2\n";
const NOISY_INPUT: &str =
    "vset 0 1 2 6 7 8 12 13 18 19 20 21 24 25 26 30 31 32 33\neset e0 e8 e12\n";
const ASF_GRID: &str = "vset 1 6 7 8 12 13 14 18 19 20 21 24 25 26 28 31 33\neset\n";
const GRANULES_PARTIAL_H0: [&str; 5] = [
    "vset 0 1 2 3\neset e0 e1\n",
    "vset 0 1 2 3\neset e0 e1\n",
    "vset 0 1 2 3\neset e0 e1\n",
    "vset 0 1 2 3\neset e0 e1\n",
    "vset 0 1 2 3\neset\n",
];
