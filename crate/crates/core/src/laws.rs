//! Exhaustive checking of the algebraic laws the operators must satisfy.
//!
//! A law is checked over the whole enumerated space of a small hypergraph
//! (every vertex set, edge set or subhypergraph, or every pair of them).
//! Work is split across threads; results are merged in enumeration order so
//! reports are deterministic. Counterexamples are shrunk greedily, one
//! element at a time, before they are reported.
//!
//! Reports print as `LAW <name> INSTANCE <id> PASS <n>` when the law holds
//! and as one `LAW <name> COUNTEREXAMPLE <inputs>` line per reported
//! counterexample otherwise.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::composed::{
    closed_form, edge_dilate, edge_erode, hg_dilate, hg_erode, vertex_dilate, vertex_erode,
};
use crate::correspondence::{
    edge_dilate_from_vertices, edge_erode_from_vertices, vertex_dilate_from_edges,
    vertex_erode_from_edges,
};
use crate::error::{Error, Result};
use crate::filters::{
    asf, close1_e, close1_v, close_half_e, close_half_v, granule_close, granule_open, hg_close_1,
    hg_close_half, hg_open_1, hg_open_half, open1_e, open1_v, open_half_e, open_half_v, FilterKind,
    FilterOp, GranulometryIndex, Side,
};
use crate::hypergraph::{EdgeSet, Element, Hypergraph, IndexSet, SubHypergraph, VertexSet};
use crate::oracle::{
    enumerate_edge_subsets, enumerate_subhypergraphs, enumerate_vertex_subsets, oracle_delta_e,
    oracle_delta_v, oracle_eps_e, oracle_eps_v,
};

/// Largest `λ` covered by the granulometry laws.
pub const MAX_GRANULOMETRY_LAMBDA: u32 = 6;
/// Largest `λ` covered by the alternating sequential filter laws.
pub const MAX_ASF_LAMBDA: u32 = 4;
/// Counterexamples kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 5;

/// An element of one of the three lattices.
pub trait LatticeElement: Clone + PartialEq + Send + Sync {
    fn leq(&self, other: &Self) -> bool;

    /// Single-line rendering used in counterexamples.
    fn describe(&self) -> String;

    /// Elements one step below `self`, used to shrink counterexamples.
    fn shrink(&self) -> Vec<Self>;
}

/// A lattice element with a complement (vertex and edge sets only; the
/// complement of a subhypergraph need not be one).
pub trait Complemented: LatticeElement {
    fn complement(&self) -> Self;
}

impl<K: Element> LatticeElement for IndexSet<'_, K> {
    fn leq(&self, other: &Self) -> bool {
        self.is_subset(other)
    }

    fn describe(&self) -> String {
        self.to_string()
    }

    fn shrink(&self) -> Vec<Self> {
        self.iter()
            .map(|i| {
                let mut smaller = self.clone();
                smaller.remove(i);
                smaller
            })
            .collect()
    }
}

impl<K: Element> Complemented for IndexSet<'_, K> {
    fn complement(&self) -> Self {
        IndexSet::complement(self)
    }
}

impl LatticeElement for SubHypergraph<'_> {
    fn leq(&self, other: &Self) -> bool {
        self.is_subset(other)
    }

    fn describe(&self) -> String {
        format!("{}; {}", self.vertices(), self.edges())
    }

    fn shrink(&self) -> Vec<Self> {
        let hg = self.hypergraph();
        let mut out = Vec::new();
        for e in self.edges().iter() {
            let mut edges = self.edges().clone();
            edges.remove(e);
            out.push(SubHypergraph::from_parts_unchecked(
                self.vertices().clone(),
                edges,
            ));
        }
        for x in self.vertices().iter() {
            if hg.incidence(x).iter().any(|&e| self.edges().contains(e)) {
                continue;
            }
            let mut vertices = self.vertices().clone();
            vertices.remove(x);
            out.push(SubHypergraph::from_parts_unchecked(
                vertices,
                self.edges().clone(),
            ));
        }
        out
    }
}

/// Result of running one law over one enumerated space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawOutcome {
    /// Number of inputs (or input pairs) examined.
    pub space: usize,
    pub violations: usize,
    pub counterexamples: Vec<String>,
}

impl LawOutcome {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }

    fn merge(mut self, other: LawOutcome) -> LawOutcome {
        self.space += other.space;
        self.violations += other.violations;
        for c in other.counterexamples {
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES
                && !self.counterexamples.contains(&c)
            {
                self.counterexamples.push(c);
            }
        }
        self
    }

    fn empty() -> Self {
        Self {
            space: 0,
            violations: 0,
            counterexamples: Vec::new(),
        }
    }
}

fn shrink_one<A: LatticeElement>(mut x: A, fails: impl Fn(&A) -> bool) -> A {
    while let Some(smaller) = x.shrink().into_iter().find(|c| fails(c)) {
        x = smaller;
    }
    x
}

fn shrink_two<A: LatticeElement, B: LatticeElement>(
    mut x: A,
    mut y: B,
    fails: impl Fn(&A, &B) -> bool,
) -> (A, B) {
    loop {
        if let Some(smaller) = x.shrink().into_iter().find(|c| fails(c, &y)) {
            x = smaller;
        } else if let Some(smaller) = y.shrink().into_iter().find(|c| fails(&x, c)) {
            y = smaller;
        } else {
            return (x, y);
        }
    }
}

/// Checks `holds(x)` for every `x` in `xs`.
pub fn check_each<A, F>(xs: &[A], holds: F) -> LawOutcome
where
    A: LatticeElement,
    F: Fn(&A) -> bool + Sync,
{
    let failing: Vec<usize> = xs
        .par_iter()
        .enumerate()
        .filter(|(_, x)| !holds(x))
        .map(|(i, _)| i)
        .collect();
    let mut counterexamples = Vec::new();
    for &i in failing.iter().take(MAX_COUNTEREXAMPLES) {
        let x = shrink_one(xs[i].clone(), |c| !holds(c));
        let line = format!("X={{{}}}", x.describe());
        if !counterexamples.contains(&line) {
            counterexamples.push(line);
        }
    }
    LawOutcome {
        space: xs.len(),
        violations: failing.len(),
        counterexamples,
    }
}

/// Checks `holds(x, pre_x(x), y, pre_y(y))` for every pair in `xs × ys`.
/// The per-element precomputations keep pair checks cheap.
pub fn check_pairs<A, B, PA, PB, FA, FB, H>(
    xs: &[A],
    ys: &[B],
    pre_x: FA,
    pre_y: FB,
    holds: H,
) -> LawOutcome
where
    A: LatticeElement,
    B: LatticeElement,
    PA: Send + Sync,
    PB: Send + Sync,
    FA: Fn(&A) -> PA + Sync,
    FB: Fn(&B) -> PB + Sync,
    H: Fn(&A, &PA, &B, &PB) -> bool + Sync,
{
    let px: Vec<PA> = xs.par_iter().map(&pre_x).collect();
    let py: Vec<PB> = ys.par_iter().map(&pre_y).collect();
    let failing: Vec<(usize, usize)> = (0..xs.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let (px, py, holds) = (&px, &py, &holds);
            (0..ys.len())
                .filter(move |&j| !holds(&xs[i], &px[i], &ys[j], &py[j]))
                .map(move |j| (i, j))
        })
        .collect();
    let fails = |x: &A, y: &B| !holds(x, &pre_x(x), y, &pre_y(y));
    let mut counterexamples = Vec::new();
    for &(i, j) in failing.iter().take(MAX_COUNTEREXAMPLES) {
        let (x, y) = shrink_two(xs[i].clone(), ys[j].clone(), fails);
        let line = format!("X={{{}}} Y={{{}}}", x.describe(), y.describe());
        if !counterexamples.contains(&line) {
            counterexamples.push(line);
        }
    }
    LawOutcome {
        space: xs.len() * ys.len(),
        violations: failing.len(),
        counterexamples,
    }
}

/// `dilate(x) ≤ y ⇔ x ≤ erode(y)` for all `x ∈ xs`, `y ∈ ys`.
pub fn check_adjunction<A, B, D, E>(xs: &[A], ys: &[B], dilate: D, erode: E) -> LawOutcome
where
    A: LatticeElement,
    B: LatticeElement,
    D: Fn(&A) -> B + Sync,
    E: Fn(&B) -> A + Sync,
{
    check_pairs(xs, ys, dilate, erode, |x, dx, y, ey| dx.leq(y) == x.leq(ey))
}

/// `erode(x) = complement(dilate(complement(x)))` for all `x`.
pub fn check_duality<A, B, E, D>(xs: &[A], erode: E, dilate: D) -> LawOutcome
where
    A: Complemented,
    B: Complemented,
    E: Fn(&A) -> B + Sync,
    D: Fn(&A) -> B + Sync,
{
    check_each(xs, |x| erode(x) == dilate(&x.complement()).complement())
}

/// `f(x) = g(x)` for all `x`.
pub fn check_agreement<A, B, F, G>(xs: &[A], f: F, g: G) -> LawOutcome
where
    A: LatticeElement,
    B: PartialEq,
    F: Fn(&A) -> B + Sync,
    G: Fn(&A) -> B + Sync,
{
    check_each(xs, |x| f(x) == g(x))
}

/// Increasing, idempotent, and anti-extensive (openings) or extensive
/// (closings), checked over every pair of `xs`.
pub fn check_filter<A, F>(xs: &[A], f: F, kind: FilterKind) -> LawOutcome
where
    A: LatticeElement,
    F: Fn(&A) -> A + Sync,
{
    let pre = |x: &A| {
        let fx = f(x);
        let ffx = f(&fx);
        (fx, ffx)
    };
    check_pairs(xs, xs, pre, pre, move |x, (fx, ffx), y, (fy, _)| {
        let directed = match kind {
            FilterKind::Opening => fx.leq(x),
            FilterKind::Closing => x.leq(fx),
        };
        directed && ffx == fx && (!x.leq(y) || fx.leq(fy))
    })
}

/// The vertex/edge pair an adjunction or duality law relates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorPair {
    /// (ε×, δ•)
    EdgeErodeVertexDilate,
    /// (ε•, δ×)
    VertexErodeEdgeDilate,
    /// (ε, δ)
    Vertex,
    /// (Ε, Δ)
    Edge,
    /// ([ε,Ε], [δ,Δ])
    Hypergraph,
}

/// One of the four correspondence operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Correspondence {
    VertexDilate,
    EdgeErode,
    VertexErode,
    EdgeDilate,
}

/// One of δ, ε, Δ, Ε.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Composed {
    VertexDilate,
    VertexErode,
    EdgeDilate,
    EdgeErode,
}

/// A named law that [`check_law`] can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Adjunction(OperatorPair),
    /// Complement duality; the hypergraph pair has no complement and is
    /// rejected.
    Duality(OperatorPair),
    /// Fast correspondence operator against its induced-hypergraph oracle.
    Oracle(Correspondence),
    /// Set-builder characterisation against the composition.
    ClosedForm(Composed),
    /// `γ½(X•) = {x ∈ X• | ∃ e_i : x ∈ v(e_i), v(e_i) ⊆ X•}`
    HalfOpeningFormula,
    Filter(FilterOp),
    /// `open1 ⊆ open_half ⊆ X ⊆ close_half ⊆ close1` on one lattice.
    Chain(Side),
    /// Every operator on subhypergraphs yields a subhypergraph.
    Closedness,
    /// Granule openings shrink and granule closings grow with `λ`.
    GranulometryNesting,
    /// Each granule opening is an opening, each granule closing a closing.
    GranulometryMembers,
    /// `ASF_0 = id`; each `ASF_{λ/2}` is increasing and idempotent.
    AsfFilter,
    /// `ASF_{λ/2} ∘ ASF_{μ/2} = ASF_{λ/2}` for `μ ≤ λ`. Not implied by the
    /// other laws and not part of the default set.
    AsfAbsorption,
}

impl Law {
    /// Every law that is expected to hold on every hypergraph without empty
    /// edges.
    pub fn all() -> Vec<Law> {
        use OperatorPair::*;
        let mut laws = vec![
            Law::Adjunction(EdgeErodeVertexDilate),
            Law::Adjunction(VertexErodeEdgeDilate),
            Law::Adjunction(Vertex),
            Law::Adjunction(Edge),
            Law::Adjunction(Hypergraph),
            Law::Duality(EdgeErodeVertexDilate),
            Law::Duality(VertexErodeEdgeDilate),
            Law::Duality(Vertex),
            Law::Duality(Edge),
        ];
        laws.extend(
            [
                Correspondence::VertexDilate,
                Correspondence::EdgeErode,
                Correspondence::VertexErode,
                Correspondence::EdgeDilate,
            ]
            .map(Law::Oracle),
        );
        laws.extend(
            [
                Composed::VertexDilate,
                Composed::VertexErode,
                Composed::EdgeDilate,
                Composed::EdgeErode,
            ]
            .map(Law::ClosedForm),
        );
        laws.push(Law::HalfOpeningFormula);
        laws.extend(FilterOp::all().into_iter().map(Law::Filter));
        laws.extend([Side::Vertex, Side::Edge, Side::Hypergraph].map(Law::Chain));
        laws.extend([
            Law::Closedness,
            Law::GranulometryNesting,
            Law::GranulometryMembers,
            Law::AsfFilter,
        ]);
        laws
    }

    pub fn name(&self) -> String {
        fn pair(p: OperatorPair) -> &'static str {
            match p {
                OperatorPair::EdgeErodeVertexDilate => "ex-dv",
                OperatorPair::VertexErodeEdgeDilate => "ev-dx",
                OperatorPair::Vertex => "vertex",
                OperatorPair::Edge => "edge",
                OperatorPair::Hypergraph => "hg",
            }
        }
        fn side(s: Side) -> &'static str {
            match s {
                Side::Vertex => "vertex",
                Side::Edge => "edge",
                Side::Hypergraph => "hg",
            }
        }
        match self {
            Law::Adjunction(p) => format!("adjunction-{}", pair(*p)),
            Law::Duality(p) => format!("duality-{}", pair(*p)),
            Law::Oracle(c) => match c {
                Correspondence::VertexDilate => "oracle-dv".into(),
                Correspondence::EdgeErode => "oracle-ex".into(),
                Correspondence::VertexErode => "oracle-ev".into(),
                Correspondence::EdgeDilate => "oracle-dx".into(),
            },
            Law::ClosedForm(c) => match c {
                Composed::VertexDilate => "closed-form-vertex-dilate".into(),
                Composed::VertexErode => "closed-form-vertex-erode".into(),
                Composed::EdgeDilate => "closed-form-edge-dilate".into(),
                Composed::EdgeErode => "closed-form-edge-erode".into(),
            },
            Law::HalfOpeningFormula => "formula-half-opening".into(),
            Law::Filter(f) => format!("filter-{}", f.name()),
            Law::Chain(s) => format!("chain-{}", side(*s)),
            Law::Closedness => "closedness".into(),
            Law::GranulometryNesting => "granulometry-nesting".into(),
            Law::GranulometryMembers => "granulometry-members".into(),
            Law::AsfFilter => "asf-filter".into(),
            Law::AsfAbsorption => "asf-absorption".into(),
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Law::all()
            .into_iter()
            .chain([Law::AsfAbsorption])
            .find(|law| law.name() == s)
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

/// Outcome of one law on one hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub instance: String,
    pub space: usize,
    pub violations: usize,
    pub counterexamples: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn pass_count(&self) -> usize {
        self.space - self.violations
    }

    pub fn with_instance(mut self, instance: impl Into<String>) -> Self {
        self.instance = instance.into();
        self
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(
                f,
                "LAW {} INSTANCE {} PASS {}",
                self.law,
                self.instance,
                self.pass_count()
            );
        }
        for (k, c) in self.counterexamples.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "LAW {} COUNTEREXAMPLE {}", self.law, c)?;
        }
        Ok(())
    }
}

struct Spaces<'h> {
    vertices: Vec<VertexSet<'h>>,
    edges: Vec<EdgeSet<'h>>,
    subs: Vec<SubHypergraph<'h>>,
}

impl<'h> Spaces<'h> {
    fn new(hg: &'h Hypergraph, law: Law) -> Result<Self> {
        let need_subs = matches!(
            law,
            Law::Adjunction(OperatorPair::Hypergraph)
                | Law::Chain(Side::Hypergraph)
                | Law::Closedness
                | Law::GranulometryNesting
                | Law::GranulometryMembers
                | Law::AsfFilter
                | Law::AsfAbsorption
        ) || matches!(
            law,
            Law::Filter(FilterOp {
                side: Side::Hypergraph,
                ..
            })
        );
        Ok(Self {
            vertices: enumerate_vertex_subsets(hg)?.collect(),
            edges: enumerate_edge_subsets(hg)?.collect(),
            subs: if need_subs {
                enumerate_subhypergraphs(hg)?.collect()
            } else {
                Vec::new()
            },
        })
    }
}

fn lambdas(max: u32) -> impl Iterator<Item = GranulometryIndex> {
    (0..=max).map(GranulometryIndex::new)
}

fn half_opening_formula<'h>(x: &VertexSet<'h>) -> VertexSet<'h> {
    let hg = x.hypergraph();
    hg.vertex_set(x.iter().filter(|&y| {
        hg.incidence(y)
            .iter()
            .any(|&e| hg.edge_vertices(e).iter().all(|&z| x.contains(z)))
    }))
}

fn run<'h>(law: Law, s: &Spaces<'h>) -> Result<LawOutcome> {
    use OperatorPair::*;
    let (vs, es, hs) = (&s.vertices[..], &s.edges[..], &s.subs[..]);
    let outcome = match law {
        Law::Adjunction(EdgeErodeVertexDilate) => {
            check_adjunction(es, vs, vertex_dilate_from_edges, edge_erode_from_vertices)
        }
        Law::Adjunction(VertexErodeEdgeDilate) => {
            check_adjunction(vs, es, edge_dilate_from_vertices, vertex_erode_from_edges)
        }
        Law::Adjunction(Vertex) => check_adjunction(vs, vs, vertex_dilate, vertex_erode),
        Law::Adjunction(Edge) => check_adjunction(es, es, edge_dilate, edge_erode),
        Law::Adjunction(Hypergraph) => check_adjunction(hs, hs, hg_dilate, hg_erode),
        Law::Duality(EdgeErodeVertexDilate) => {
            check_duality(vs, edge_erode_from_vertices, edge_dilate_from_vertices)
        }
        Law::Duality(VertexErodeEdgeDilate) => {
            check_duality(es, vertex_erode_from_edges, vertex_dilate_from_edges)
        }
        Law::Duality(Vertex) => check_duality(vs, vertex_erode, vertex_dilate),
        Law::Duality(Edge) => check_duality(es, edge_erode, edge_dilate),
        Law::Duality(Hypergraph) => return Err(Error::UnknownLaw(law.name())),
        Law::Oracle(Correspondence::VertexDilate) => {
            check_agreement(es, vertex_dilate_from_edges, oracle_delta_v)
        }
        Law::Oracle(Correspondence::EdgeErode) => {
            check_agreement(vs, edge_erode_from_vertices, oracle_eps_e)
        }
        Law::Oracle(Correspondence::VertexErode) => {
            check_agreement(es, vertex_erode_from_edges, oracle_eps_v)
        }
        Law::Oracle(Correspondence::EdgeDilate) => {
            check_agreement(vs, edge_dilate_from_vertices, oracle_delta_e)
        }
        Law::ClosedForm(Composed::VertexDilate) => {
            check_agreement(vs, vertex_dilate, closed_form::vertex_dilate)
        }
        Law::ClosedForm(Composed::VertexErode) => {
            check_agreement(vs, vertex_erode, closed_form::vertex_erode)
        }
        Law::ClosedForm(Composed::EdgeDilate) => {
            check_agreement(es, edge_dilate, closed_form::edge_dilate)
        }
        Law::ClosedForm(Composed::EdgeErode) => {
            check_agreement(es, edge_erode, closed_form::edge_erode)
        }
        Law::HalfOpeningFormula => check_agreement(vs, open_half_v, half_opening_formula),
        Law::Filter(f) => match f.side {
            Side::Vertex => check_filter(vs, |x| f.apply_vertices(x), f.kind),
            Side::Edge => check_filter(es, |x| f.apply_edges(x), f.kind),
            Side::Hypergraph => check_filter(hs, |x| f.apply_hypergraph(x), f.kind),
        },
        Law::Chain(Side::Vertex) => check_each(vs, |x| {
            let chain = [
                open1_v(x),
                open_half_v(x),
                x.clone(),
                close_half_v(x),
                close1_v(x),
            ];
            chain.windows(2).all(|w| w[0].leq(&w[1]))
        }),
        Law::Chain(Side::Edge) => check_each(es, |x| {
            let chain = [
                open1_e(x),
                open_half_e(x),
                x.clone(),
                close_half_e(x),
                close1_e(x),
            ];
            chain.windows(2).all(|w| w[0].leq(&w[1]))
        }),
        Law::Chain(Side::Hypergraph) => check_each(hs, |x| {
            let chain = [
                hg_open_1(x),
                hg_open_half(x),
                x.clone(),
                hg_close_half(x),
                hg_close_1(x),
            ];
            chain.windows(2).all(|w| w[0].leq(&w[1]))
        }),
        Law::Closedness => check_each(hs, |x| {
            let fixed = [
                hg_dilate(x),
                hg_erode(x),
                hg_open_1(x),
                hg_close_1(x),
                hg_open_half(x),
                hg_close_half(x),
            ];
            fixed.iter().all(SubHypergraph::satisfies_cover)
                && lambdas(MAX_GRANULOMETRY_LAMBDA).all(|l| {
                    granule_open(x, l).satisfies_cover() && granule_close(x, l).satisfies_cover()
                })
                && lambdas(MAX_ASF_LAMBDA).all(|l| asf(x, l).satisfies_cover())
        }),
        Law::GranulometryNesting => check_each(hs, |x| {
            let opened: Vec<_> = lambdas(MAX_GRANULOMETRY_LAMBDA)
                .map(|l| granule_open(x, l))
                .collect();
            let closed: Vec<_> = lambdas(MAX_GRANULOMETRY_LAMBDA)
                .map(|l| granule_close(x, l))
                .collect();
            opened.windows(2).all(|w| w[1].leq(&w[0])) && closed.windows(2).all(|w| w[0].leq(&w[1]))
        }),
        Law::GranulometryMembers => lambdas(MAX_GRANULOMETRY_LAMBDA)
            .flat_map(|l| {
                [
                    check_filter(hs, move |x| granule_open(x, l), FilterKind::Opening),
                    check_filter(hs, move |x| granule_close(x, l), FilterKind::Closing),
                ]
            })
            .fold(LawOutcome::empty(), LawOutcome::merge),
        Law::AsfFilter => {
            let base = check_each(hs, |x| &asf(x, GranulometryIndex::new(0)) == x);
            lambdas(MAX_ASF_LAMBDA)
                .map(|l| {
                    let pre = move |x: &SubHypergraph<'h>| {
                        let fx = asf(x, l);
                        let ffx = asf(&fx, l);
                        (fx, ffx)
                    };
                    check_pairs(hs, hs, pre, pre, |x, (fx, ffx), y, (fy, _)| {
                        fx.satisfies_cover() && ffx == fx && (!x.leq(y) || fx.leq(fy))
                    })
                })
                .fold(base, LawOutcome::merge)
        }
        Law::AsfAbsorption => check_each(hs, |x| {
            lambdas(MAX_ASF_LAMBDA).all(|l| {
                let outer = asf(x, l);
                (0..=l.half_steps()).all(|m| asf(&asf(x, GranulometryIndex::new(m)), l) == outer)
            })
        }),
    };
    Ok(outcome)
}

/// Runs `law` over the full enumerated space of `hg`.
pub fn check_law(law: Law, hg: &Hypergraph) -> Result<LawReport> {
    let spaces = Spaces::new(hg, law)?;
    let outcome = run(law, &spaces)?;
    Ok(LawReport {
        law: law.name(),
        instance: String::from("H"),
        space: outcome.space,
        violations: outcome.violations,
        counterexamples: outcome.counterexamples,
    })
}
