use hgmorph::composed::{
    edge_dilate, edge_erode, hg_dilate, hg_erode, vertex_dilate, vertex_erode,
};
use hgmorph::correspondence::{
    edge_dilate_from_vertices, edge_erode_from_vertices, vertex_dilate_from_edges,
    vertex_erode_from_edges,
};
use hgmorph::filters::{asf, granule_close, granule_open, FilterOp, GranulometryIndex};
use hgmorph::format::{parse_hypergraph, serialize_hypergraph};
use hgmorph::oracle::{oracle_delta_e, oracle_delta_v, oracle_eps_e, oracle_eps_v};
use hgmorph::{EdgeSet, Hypergraph, SubHypergraph, VertexSet};
use proptest::prelude::*;

const MAX_VERTICES: usize = 10;

/// Hypergraph given as vertex count plus one bitmask per edge. Empty edges
/// are allowed.
fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1..=MAX_VERTICES).prop_flat_map(|n| {
        prop::collection::vec(0u32..(1 << n), 0..=6).prop_map(move |masks| {
            let rows = masks
                .iter()
                .map(|&m| (0..n).filter(move |&v| m >> v & 1 == 1));
            Hypergraph::from_edge_lists(n, rows).unwrap()
        })
    })
}

fn vset(hg: &Hypergraph, mask: u32) -> VertexSet<'_> {
    hg.vertex_set((0..hg.vertex_count()).filter(|&v| mask >> v & 1 == 1))
}

fn eset(hg: &Hypergraph, mask: u32) -> EdgeSet<'_> {
    hg.edge_set((0..hg.edge_count()).filter(|&e| mask >> e & 1 == 1))
}

/// The largest subhypergraph inside `(vset(a), eset(b))`.
fn sub(hg: &Hypergraph, a: u32, b: u32) -> SubHypergraph<'_> {
    let v = vset(hg, a);
    let e = eset(hg, b).intersection(&edge_erode_from_vertices(&v));
    SubHypergraph::new(v, e).unwrap()
}

fn sub_union<'h>(x: &SubHypergraph<'h>, y: &SubHypergraph<'h>) -> SubHypergraph<'h> {
    SubHypergraph::new(x.vertices().union(y.vertices()), x.edges().union(y.edges())).unwrap()
}

fn sub_meet<'h>(x: &SubHypergraph<'h>, y: &SubHypergraph<'h>) -> SubHypergraph<'h> {
    SubHypergraph::new(
        x.vertices().intersection(y.vertices()),
        x.edges().intersection(y.edges()),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn adjunctions(hg in hypergraph(), a: u32, b: u32, c: u32, d: u32) {
        let (x, j) = (vset(&hg, a), eset(&hg, b));
        prop_assert_eq!(vertex_dilate_from_edges(&j).is_subset(&x), j.is_subset(&edge_erode_from_vertices(&x)));
        prop_assert_eq!(edge_dilate_from_vertices(&x).is_subset(&j), x.is_subset(&vertex_erode_from_edges(&j)));
        let y = vset(&hg, c);
        prop_assert_eq!(vertex_dilate(&x).is_subset(&y), x.is_subset(&vertex_erode(&y)));
        let k = eset(&hg, d);
        prop_assert_eq!(edge_dilate(&j).is_subset(&k), j.is_subset(&edge_erode(&k)));
        let (s, t) = (sub(&hg, a, b), sub(&hg, c, d));
        prop_assert_eq!(hg_dilate(&s).is_subset(&t), s.is_subset(&hg_erode(&t)));
    }

    #[test]
    fn duality(hg in hypergraph(), a: u32, b: u32) {
        let (x, j) = (vset(&hg, a), eset(&hg, b));
        prop_assert_eq!(edge_erode_from_vertices(&x), edge_dilate_from_vertices(&x.complement()).complement());
        prop_assert_eq!(vertex_erode_from_edges(&j), vertex_dilate_from_edges(&j.complement()).complement());
        prop_assert_eq!(vertex_erode(&x), vertex_dilate(&x.complement()).complement());
        prop_assert_eq!(edge_erode(&j), edge_dilate(&j.complement()).complement());
    }

    #[test]
    fn dilations_distribute_over_unions(hg in hypergraph(), a: u32, b: u32, c: u32, d: u32) {
        let (x, y) = (vset(&hg, a), vset(&hg, c));
        let (j, k) = (eset(&hg, b), eset(&hg, d));
        prop_assert_eq!(vertex_dilate_from_edges(&j.union(&k)), vertex_dilate_from_edges(&j).union(&vertex_dilate_from_edges(&k)));
        prop_assert_eq!(edge_dilate_from_vertices(&x.union(&y)), edge_dilate_from_vertices(&x).union(&edge_dilate_from_vertices(&y)));
        prop_assert_eq!(vertex_dilate(&x.union(&y)), vertex_dilate(&x).union(&vertex_dilate(&y)));
        prop_assert_eq!(edge_dilate(&j.union(&k)), edge_dilate(&j).union(&edge_dilate(&k)));
        let (s, t) = (sub(&hg, a, b), sub(&hg, c, d));
        prop_assert_eq!(hg_dilate(&sub_union(&s, &t)), sub_union(&hg_dilate(&s), &hg_dilate(&t)));
    }

    #[test]
    fn erosions_distribute_over_intersections(hg in hypergraph(), a: u32, b: u32, c: u32, d: u32) {
        let (x, y) = (vset(&hg, a), vset(&hg, c));
        let (j, k) = (eset(&hg, b), eset(&hg, d));
        prop_assert_eq!(edge_erode_from_vertices(&x.intersection(&y)), edge_erode_from_vertices(&x).intersection(&edge_erode_from_vertices(&y)));
        prop_assert_eq!(vertex_erode_from_edges(&j.intersection(&k)), vertex_erode_from_edges(&j).intersection(&vertex_erode_from_edges(&k)));
        prop_assert_eq!(vertex_erode(&x.intersection(&y)), vertex_erode(&x).intersection(&vertex_erode(&y)));
        prop_assert_eq!(edge_erode(&j.intersection(&k)), edge_erode(&j).intersection(&edge_erode(&k)));
        let (s, t) = (sub(&hg, a, b), sub(&hg, c, d));
        prop_assert_eq!(hg_erode(&sub_meet(&s, &t)), sub_meet(&hg_erode(&s), &hg_erode(&t)));
    }

    #[test]
    fn correspondences_match_oracles(hg in hypergraph(), a: u32, b: u32) {
        let (x, j) = (vset(&hg, a), eset(&hg, b));
        prop_assert_eq!(vertex_dilate_from_edges(&j), oracle_delta_v(&j));
        prop_assert_eq!(vertex_erode_from_edges(&j), oracle_eps_v(&j));
        prop_assert_eq!(edge_erode_from_vertices(&x), oracle_eps_e(&x));
        prop_assert_eq!(edge_dilate_from_vertices(&x), oracle_delta_e(&x));
    }

    #[test]
    fn filters_are_idempotent_and_ordered(hg in hypergraph(), a: u32, b: u32) {
        let (x, j, s) = (vset(&hg, a), eset(&hg, b), sub(&hg, a, b));
        for f in FilterOp::all() {
            let opening = f.kind == hgmorph::filters::FilterKind::Opening;
            let fx = f.apply_vertices(&x);
            prop_assert_eq!(f.apply_vertices(&fx), fx.clone(), "{}", f.name());
            prop_assert_eq!(if opening { fx.is_subset(&x) } else { x.is_subset(&fx) }, true);
            let fj = f.apply_edges(&j);
            prop_assert_eq!(f.apply_edges(&fj), fj.clone(), "{}", f.name());
            prop_assert_eq!(if opening { fj.is_subset(&j) } else { j.is_subset(&fj) }, true);
            let fs = f.apply_hypergraph(&s);
            prop_assert!(fs.satisfies_cover());
            prop_assert_eq!(f.apply_hypergraph(&fs), fs.clone(), "{}", f.name());
            prop_assert_eq!(if opening { fs.is_subset(&s) } else { s.is_subset(&fs) }, true);
        }
    }

    #[test]
    fn granulometry_and_asf(hg in hypergraph(), a: u32, b: u32, lambda in 0u32..5) {
        let s = sub(&hg, a, b);
        let l = GranulometryIndex::new(lambda);
        let next = GranulometryIndex::new(lambda + 1);
        prop_assert!(granule_open(&s, next).is_subset(&granule_open(&s, l)));
        prop_assert!(granule_close(&s, l).is_subset(&granule_close(&s, next)));
        let y = asf(&s, l);
        prop_assert!(y.satisfies_cover());
        prop_assert_eq!(asf(&y, l), y);
    }

    #[test]
    fn format_round_trip(
        labels in prop::collection::btree_set("[a-z][a-z0-9_]{0,4}", 0..8),
        ids in prop::collection::btree_set("[A-Z][a-z0-9]{0,3}", 0..5),
        masks in prop::collection::vec(any::<u8>(), 5),
    ) {
        let labels: Vec<String> = labels.into_iter().collect();
        let edges: Vec<(String, Vec<String>)> = ids
            .into_iter()
            .zip(masks)
            .map(|(id, m)| {
                let members = labels.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, l)| l.clone()).collect();
                (id, members)
            })
            .collect();
        let hg = Hypergraph::build_with_ids(labels.iter().cloned(), edges.iter().map(|(id, m)| (id.clone(), m.iter()))).unwrap();
        let text = serialize_hypergraph(&hg);
        let back = parse_hypergraph(&text).unwrap();
        prop_assert_eq!(&back, &hg);
        prop_assert_eq!(serialize_hypergraph(&back), text);
    }
}
