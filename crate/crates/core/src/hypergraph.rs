//! Immutable hypergraphs and the subsets that live on them.
//!
//! A [`Hypergraph`] is a vertex universe `0..n` together with an indexed
//! family of hyperedges `0..m`. Edges are identified by index, so two edges
//! may carry the same vertex set. Membership is stored in compressed rows
//! in both directions (edge -> vertices and vertex -> edges), which keeps
//! every operator of this crate linear in the incidence size.
//!
//! Subsets are bit masks bound to the hypergraph they were created from:
//! [`VertexSet`] and [`EdgeSet`] are the two Boolean lattices, and
//! [`SubHypergraph`] is a pair of them satisfying the cover condition
//! (every member edge has all of its vertices in the vertex part).

use std::borrow::Cow;
use std::collections::HashMap;
use std::fmt;
use std::marker::PhantomData;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
struct LabelTable {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl LabelTable {
    fn new(labels: Vec<String>, duplicate: fn(String) -> Error) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if !is_valid_label(label) {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(duplicate(label.clone()));
            }
        }
        Ok(Self { labels, index })
    }
}

pub(crate) fn is_valid_label(label: &str) -> bool {
    !label.is_empty() && !label.starts_with('#') && !label.chars().any(char::is_whitespace)
}

/// Rows of a sparse 0/1 matrix stored back to back.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Rows {
    offsets: Vec<usize>,
    items: Vec<usize>,
}

impl Rows {
    fn row(&self, i: usize) -> &[usize] {
        &self.items[self.offsets[i]..self.offsets[i + 1]]
    }

    fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    fn transpose(&self, columns: usize) -> Rows {
        let mut counts = vec![0usize; columns + 1];
        for &c in &self.items {
            counts[c + 1] += 1;
        }
        for k in 1..counts.len() {
            counts[k] += counts[k - 1];
        }
        let offsets = counts.clone();
        let mut fill = counts;
        let mut items = vec![0usize; self.items.len()];
        // Rows are visited in order, so every transposed row comes out sorted.
        for r in 0..self.len() {
            for &c in self.row(r) {
                items[fill[c]] = r;
                fill[c] += 1;
            }
        }
        Rows { offsets, items }
    }
}

/// A finite hypergraph `H = (H•, H×)` with dense vertex and edge indices.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    vertex_count: usize,
    vertex_labels: Option<LabelTable>,
    edge_ids: Option<LabelTable>,
    edges: Rows,
    incidence: Rows,
}

impl Hypergraph {
    /// Builds a hypergraph whose vertices are `0..vertex_count`, labelled by
    /// their decimal index. Edges get the default ids `e0`, `e1`, ...
    pub fn from_edge_lists<E, I>(vertex_count: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let members = edges
            .into_iter()
            .enumerate()
            .map(|(i, edge)| {
                let mut row: Vec<usize> = edge.into_iter().collect();
                if let Some(&bad) = row.iter().find(|&&v| v >= vertex_count) {
                    return Err(Error::UnknownVertex {
                        edge: default_edge_id(i),
                        vertex: bad.to_string(),
                    });
                }
                row.sort_unstable();
                if let Some(w) = row.windows(2).find(|w| w[0] == w[1]) {
                    return Err(Error::RepeatedMember {
                        edge: default_edge_id(i),
                        vertex: w[0].to_string(),
                    });
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_rows(vertex_count, None, None, members))
    }

    /// Builds a hypergraph from vertex labels and, per edge, the labels of
    /// its vertices. Edge `i` gets id `e{i}`.
    pub fn build<V, S, E, I, T>(vertex_labels: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(i, members)| (default_edge_id(i), members));
        Self::build_with_ids(vertex_labels, edges)
    }

    /// Like [`Hypergraph::build`] with explicit edge ids.
    pub fn build_with_ids<V, S, E, Id, I, T>(vertex_labels: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (Id, I)>,
        Id: Into<String>,
        I: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let vertices = LabelTable::new(
            vertex_labels.into_iter().map(Into::into).collect(),
            Error::DuplicateVertex,
        )?;
        let mut ids = Vec::new();
        let mut members = Vec::new();
        for (id, edge) in edges {
            let id: String = id.into();
            let mut row = Vec::new();
            for label in edge {
                let label = label.as_ref();
                let v = *vertices
                    .index
                    .get(label)
                    .ok_or_else(|| Error::UnknownVertex {
                        edge: id.clone(),
                        vertex: label.to_string(),
                    })?;
                row.push(v);
            }
            row.sort_unstable();
            if let Some(w) = row.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedMember {
                    edge: id,
                    vertex: vertices.labels[w[0]].clone(),
                });
            }
            ids.push(id);
            members.push(row);
        }
        let ids = LabelTable::new(ids, Error::DuplicateEdge)?;
        let n = vertices.labels.len();
        Ok(Self::from_rows(n, Some(vertices), Some(ids), members))
    }

    fn from_rows(
        vertex_count: usize,
        vertex_labels: Option<LabelTable>,
        edge_ids: Option<LabelTable>,
        members: Vec<Vec<usize>>,
    ) -> Self {
        let mut offsets = Vec::with_capacity(members.len() + 1);
        offsets.push(0);
        let mut items = Vec::with_capacity(members.iter().map(Vec::len).sum());
        for row in members {
            items.extend(row);
            offsets.push(items.len());
        }
        let edges = Rows { offsets, items };
        let incidence = edges.transpose(vertex_count);
        Self {
            vertex_count,
            vertex_labels,
            edge_ids,
            edges,
            incidence,
        }
    }

    /// The empty hypergraph: no vertices, no edges.
    pub fn empty() -> Self {
        Self::from_rows(0, None, None, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `Σ |v(e_i)|`, the number of vertex/edge incidences.
    pub fn incidence_size(&self) -> usize {
        self.edges.items.len()
    }

    /// The vertices of edge `i`, ascending.
    pub fn edge_vertices(&self, edge: usize) -> &[usize] {
        self.edges.row(edge)
    }

    /// The edges containing vertex `x`, ascending.
    pub fn incidence(&self, vertex: usize) -> &[usize] {
        self.incidence.row(vertex)
    }

    pub fn vertex_label(&self, vertex: usize) -> Cow<'_, str> {
        assert!(vertex < self.vertex_count, "vertex {vertex} out of range");
        match &self.vertex_labels {
            Some(t) => Cow::Borrowed(&t.labels[vertex]),
            None => Cow::Owned(vertex.to_string()),
        }
    }

    pub fn edge_id(&self, edge: usize) -> Cow<'_, str> {
        assert!(edge < self.edge_count(), "edge {edge} out of range");
        match &self.edge_ids {
            Some(t) => Cow::Borrowed(&t.labels[edge]),
            None => Cow::Owned(default_edge_id(edge)),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        match &self.vertex_labels {
            Some(t) => t.index.get(label).copied(),
            None => parse_dense(label).filter(|&v| v < self.vertex_count),
        }
    }

    pub fn edge_by_id(&self, id: &str) -> Option<usize> {
        match &self.edge_ids {
            Some(t) => t.index.get(id).copied(),
            None => id
                .strip_prefix('e')
                .and_then(parse_dense)
                .filter(|&e| e < self.edge_count()),
        }
    }

    /// Vertices that belong to no hyperedge.
    pub fn isolated_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count).filter(|&x| self.incidence(x).is_empty())
    }

    /// Edges with `v(e) = ∅`. They are legal but unusual: every erosion
    /// keeps them and no dilation reaches them.
    pub fn empty_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edge_count()).filter(|&e| self.edge_vertices(e).is_empty())
    }

    pub fn has_empty_edges(&self) -> bool {
        self.empty_edges().next().is_some()
    }

    pub fn empty_vertex_set(&self) -> VertexSet<'_> {
        IndexSet::empty(self)
    }

    pub fn full_vertex_set(&self) -> VertexSet<'_> {
        IndexSet::full(self)
    }

    pub fn empty_edge_set(&self) -> EdgeSet<'_> {
        IndexSet::empty(self)
    }

    pub fn full_edge_set(&self) -> EdgeSet<'_> {
        IndexSet::full(self)
    }

    /// Panics if an index is out of range.
    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vertices: I) -> VertexSet<'_> {
        IndexSet::from_indices(self, vertices)
    }

    /// Panics if an index is out of range.
    pub fn edge_set<I: IntoIterator<Item = usize>>(&self, edges: I) -> EdgeSet<'_> {
        IndexSet::from_indices(self, edges)
    }

    pub fn vertex_set_by_labels<I, S>(&self, labels: I) -> Result<VertexSet<'_>>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = self.empty_vertex_set();
        for label in labels {
            let label = label.as_ref();
            let v = self
                .vertex_by_label(label)
                .ok_or_else(|| Error::UnknownVertex {
                    edge: String::from("<set>"),
                    vertex: label.to_string(),
                })?;
            set.insert(v);
        }
        Ok(set)
    }

    pub fn edge_set_by_ids<I, S>(&self, ids: I) -> Result<EdgeSet<'_>>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = self.empty_edge_set();
        for id in ids {
            let id = id.as_ref();
            let e = self
                .edge_by_id(id)
                .ok_or_else(|| Error::UnknownEdge(id.to_string()))?;
            set.insert(e);
        }
        Ok(set)
    }

    /// `H(X•)`: the largest subhypergraph with vertex part `X•`, i.e.
    /// `X•` together with every edge contained in it.
    pub fn induced_by_vertices<'h>(&'h self, vertices: &VertexSet<'h>) -> SubHypergraph<'h> {
        assert!(
            vertices.is_bound_to(self),
            "vertex set bound to another hypergraph"
        );
        let edges = self.edge_set(
            (0..self.edge_count())
                .filter(|&e| self.edge_vertices(e).iter().all(|&x| vertices.contains(x))),
        );
        SubHypergraph::from_parts_unchecked(vertices.clone(), edges)
    }

    /// `H(X×)`: the smallest subhypergraph with edge part `X×`, i.e. `X×`
    /// together with the union of its edges' vertices.
    pub fn induced_by_edges<'h>(&'h self, edges: &EdgeSet<'h>) -> SubHypergraph<'h> {
        assert!(
            edges.is_bound_to(self),
            "edge set bound to another hypergraph"
        );
        let vertices = self.vertex_set(
            edges
                .iter()
                .flat_map(|e| self.edge_vertices(e).iter().copied()),
        );
        SubHypergraph::from_parts_unchecked(vertices, edges.clone())
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.edges == other.edges
            && (0..self.vertex_count).all(|v| self.vertex_label(v) == other.vertex_label(v))
            && (0..self.edge_count()).all(|e| self.edge_id(e) == other.edge_id(e))
    }
}

impl Eq for Hypergraph {}

fn default_edge_id(i: usize) -> String {
    format!("e{i}")
}

fn parse_dense(s: &str) -> Option<usize> {
    // Reject forms like "+1" or "01" that would alias a canonical label.
    if s.is_empty() || (s.len() > 1 && s.starts_with('0')) || !s.bytes().all(|b| b.is_ascii_digit())
    {
        return None;
    }
    s.parse().ok()
}

/// Which side of the hypergraph an [`IndexSet`] ranges over.
pub trait Element: Copy + fmt::Debug + 'static {
    /// Leading keyword of the single-line subset document.
    const KEYWORD: &'static str;

    fn universe(hg: &Hypergraph) -> usize;

    fn label(hg: &Hypergraph, index: usize) -> Cow<'_, str>;
}

#[derive(Debug, Clone, Copy)]
pub enum Vertex {}

#[derive(Debug, Clone, Copy)]
pub enum Edge {}

impl Element for Vertex {
    const KEYWORD: &'static str = "vset";

    fn universe(hg: &Hypergraph) -> usize {
        hg.vertex_count()
    }

    fn label(hg: &Hypergraph, index: usize) -> Cow<'_, str> {
        hg.vertex_label(index)
    }
}

impl Element for Edge {
    const KEYWORD: &'static str = "eset";

    fn universe(hg: &Hypergraph) -> usize {
        hg.edge_count()
    }

    fn label(hg: &Hypergraph, index: usize) -> Cow<'_, str> {
        hg.edge_id(index)
    }
}

/// A subset of the vertices or of the edge indices of one hypergraph.
///
/// Complements are taken relative to that hypergraph's universe. Binary
/// operations between sets of different hypergraphs panic.
pub struct IndexSet<'h, K: Element> {
    hg: &'h Hypergraph,
    bits: FixedBitSet,
    kind: PhantomData<fn() -> K>,
}

/// `X• ⊆ H•`.
pub type VertexSet<'h> = IndexSet<'h, Vertex>;
/// `X× ⊆ H×`, stored as the index set `J ⊆ I`.
pub type EdgeSet<'h> = IndexSet<'h, Edge>;

impl<'h, K: Element> IndexSet<'h, K> {
    pub fn empty(hg: &'h Hypergraph) -> Self {
        Self::from_bits(hg, FixedBitSet::with_capacity(K::universe(hg)))
    }

    pub fn full(hg: &'h Hypergraph) -> Self {
        let mut bits = FixedBitSet::with_capacity(K::universe(hg));
        bits.insert_range(..);
        Self::from_bits(hg, bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(hg: &'h Hypergraph, indices: I) -> Self {
        let mut set = Self::empty(hg);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub(crate) fn from_bits(hg: &'h Hypergraph, bits: FixedBitSet) -> Self {
        debug_assert_eq!(bits.len(), K::universe(hg));
        Self {
            hg,
            bits,
            kind: PhantomData,
        }
    }

    pub fn hypergraph(&self) -> &'h Hypergraph {
        self.hg
    }

    pub fn is_bound_to(&self, hg: &Hypergraph) -> bool {
        std::ptr::eq(self.hg, hg)
    }

    pub fn same_hypergraph<L: Element>(&self, other: &IndexSet<'_, L>) -> bool {
        std::ptr::eq(self.hg, other.hg)
    }

    pub fn universe_len(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    /// Panics if `i` is outside the universe.
    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.bits.len(),
            "index {i} outside universe of {}",
            self.bits.len()
        );
        self.bits.insert(i);
    }

    pub fn remove(&mut self, i: usize) {
        self.bits.set(i, false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn labels(&self) -> impl Iterator<Item = Cow<'h, str>> + '_ {
        let hg = self.hg;
        self.bits.ones().map(move |i| K::label(hg, i))
    }

    pub fn as_bits(&self) -> &FixedBitSet {
        &self.bits
    }

    fn check_same(&self, other: &Self) {
        assert!(
            std::ptr::eq(self.hg, other.hg),
            "set operation between sets of different hypergraphs"
        );
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Self::from_bits(self.hg, bits)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Self::from_bits(self.hg, bits)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Self::from_bits(self.hg, bits)
    }

    /// Complement relative to the bound hypergraph's universe.
    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Self::from_bits(self.hg, bits)
    }
}

impl<K: Element> Clone for IndexSet<'_, K> {
    fn clone(&self) -> Self {
        Self {
            hg: self.hg,
            bits: self.bits.clone(),
            kind: PhantomData,
        }
    }
}

impl<K: Element> PartialEq for IndexSet<'_, K> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.hg, other.hg) && self.bits == other.bits
    }
}

impl<K: Element> Eq for IndexSet<'_, K> {}

impl<K: Element> fmt::Debug for IndexSet<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", K::KEYWORD)?;
        f.debug_set().entries(self.labels()).finish()
    }
}

/// Renders the single-line subset document, e.g. `vset 0 1` or `eset e2`.
impl<K: Element> fmt::Display for IndexSet<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(K::KEYWORD)?;
        for label in self.labels() {
            write!(f, " {label}")?;
        }
        Ok(())
    }
}

/// Checks the cover condition `v(e_i) ⊆ X•` for every `i ∈ X×`.
pub fn is_subhypergraph(vertices: &VertexSet<'_>, edges: &EdgeSet<'_>) -> Result<bool> {
    if !vertices.same_hypergraph(edges) {
        return Err(Error::HypergraphMismatch);
    }
    Ok(first_uncovered(vertices, edges).is_none())
}

fn first_uncovered(vertices: &VertexSet<'_>, edges: &EdgeSet<'_>) -> Option<usize> {
    let hg = vertices.hypergraph();
    edges
        .iter()
        .find(|&e| !hg.edge_vertices(e).iter().all(|&x| vertices.contains(x)))
}

/// A subhypergraph `X = (X•, X×)` of a bound hypergraph.
#[derive(Clone, PartialEq, Eq)]
pub struct SubHypergraph<'h> {
    vertices: VertexSet<'h>,
    edges: EdgeSet<'h>,
}

impl<'h> SubHypergraph<'h> {
    pub fn new(vertices: VertexSet<'h>, edges: EdgeSet<'h>) -> Result<Self> {
        if !vertices.same_hypergraph(&edges) {
            return Err(Error::HypergraphMismatch);
        }
        if let Some(e) = first_uncovered(&vertices, &edges) {
            return Err(Error::CoverViolation(
                vertices.hypergraph().edge_id(e).into_owned(),
            ));
        }
        Ok(Self { vertices, edges })
    }

    pub(crate) fn from_parts_unchecked(vertices: VertexSet<'h>, edges: EdgeSet<'h>) -> Self {
        let sub = Self { vertices, edges };
        debug_assert!(sub.satisfies_cover(), "cover condition violated: {sub:?}");
        sub
    }

    pub fn empty(hg: &'h Hypergraph) -> Self {
        Self {
            vertices: hg.empty_vertex_set(),
            edges: hg.empty_edge_set(),
        }
    }

    /// `H` itself, the greatest element of the lattice.
    pub fn full(hg: &'h Hypergraph) -> Self {
        Self {
            vertices: hg.full_vertex_set(),
            edges: hg.full_edge_set(),
        }
    }

    pub fn hypergraph(&self) -> &'h Hypergraph {
        self.vertices.hypergraph()
    }

    pub fn vertices(&self) -> &VertexSet<'h> {
        &self.vertices
    }

    pub fn edges(&self) -> &EdgeSet<'h> {
        &self.edges
    }

    pub fn into_parts(self) -> (VertexSet<'h>, EdgeSet<'h>) {
        (self.vertices, self.edges)
    }

    pub fn satisfies_cover(&self) -> bool {
        first_uncovered(&self.vertices, &self.edges).is_none()
    }

    /// Componentwise inclusion, the order of the lattice of subhypergraphs.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }
}

impl fmt::Debug for SubHypergraph<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.vertices, self.edges)
    }
}

/// Two lines: the vertex part then the edge part.
impl fmt::Display for SubHypergraph<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n{}", self.vertices, self.edges)
    }
}
