//! Graphviz export.
//!
//! Renders the bipartite incidence graph: one ellipse per vertex, one box per
//! hyperedge and an undirected arc for every incidence. Node and arc order
//! follow vertex and edge indices.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, SubHypergraph};

const HIGHLIGHT: &str = "style=filled, fillcolor=\"#f4a261\"";

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

pub fn export_dot(hg: &Hypergraph, highlight: Option<&SubHypergraph<'_>>) -> Result<String> {
    if let Some(x) = highlight {
        if !std::ptr::eq(x.hypergraph(), hg) {
            return Err(Error::HypergraphMismatch);
        }
    }
    let mut out = String::from("graph hypergraph {\n");
    let w = &mut out;
    let fill = |lit: bool| {
        if lit {
            format!(", {HIGHLIGHT}")
        } else {
            String::new()
        }
    };
    for v in 0..hg.vertex_count() {
        let lit = highlight.is_some_and(|x| x.vertices().contains(v));
        let label = hg.vertex_label(v);
        writeln!(
            w,
            "  v{v} [label={}, shape=ellipse{}];",
            quote(&label),
            fill(lit)
        )
        .unwrap();
    }
    for e in 0..hg.edge_count() {
        let lit = highlight.is_some_and(|x| x.edges().contains(e));
        let label = hg.edge_id(e);
        writeln!(
            w,
            "  e{e} [label={}, shape=box{}];",
            quote(&label),
            fill(lit)
        )
        .unwrap();
    }
    for e in 0..hg.edge_count() {
        for &v in hg.edge_vertices(e) {
            writeln!(w, "  e{e} -- v{v};").unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}
