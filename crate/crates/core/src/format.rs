//! Line-oriented text formats.
//!
//! Hypergraph documents:
//!
//! ```text
//! # comments and blank lines are ignored
//! hg v1
//! vertex a
//! vertex b
//! vertex c
//! edge e0 a b
//! edge e1 b c
//! ```
//!
//! All `vertex` lines come before the first `edge` line. Vertex indices
//! follow file order, as do edge indices.
//!
//! Subset documents are a single `vset <label>...` or `eset <id>...` line.
//! A subhypergraph is written as a `vset` line followed by an `eset` line.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::hypergraph::{is_valid_label, Hypergraph, SubHypergraph};
use crate::pipeline::Value;

const HEADER: &str = "hg v1";

/// The parsed, not yet resolved, form of a hypergraph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphDocument {
    pub version: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRecord {
    pub id: String,
    pub vertices: Vec<String>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Splits a content line into its keyword and remaining tokens.
fn split_keyword((n, line): (usize, &str)) -> (usize, &str, std::str::SplitWhitespace<'_>) {
    let mut tokens = line.split_whitespace();
    let keyword = tokens.next().unwrap_or_default();
    (n, keyword, tokens)
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

impl HypergraphDocument {
    /// Parses and validates a document: labels and ids must be unique and
    /// every edge member must name a declared vertex.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        match lines.next() {
            Some((_, line)) if line.split_whitespace().eq(HEADER.split_whitespace()) => {}
            Some((n, line)) => {
                return Err(parse_error(
                    n,
                    format!("expected `{HEADER}` header, found `{line}`"),
                ))
            }
            None => return Err(parse_error(1, format!("missing `{HEADER}` header"))),
        }
        let mut doc = Self {
            version: 1,
            vertices: Vec::new(),
            edges: Vec::new(),
        };
        let mut seen_vertices = HashSet::new();
        let mut seen_edges = HashSet::new();
        for (n, line) in lines {
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                Some("vertex") => {
                    if !doc.edges.is_empty() {
                        return Err(parse_error(n, "vertex declared after the first edge"));
                    }
                    let label = match (tokens.next(), tokens.next()) {
                        (Some(label), None) => label,
                        _ => return Err(parse_error(n, "expected `vertex <label>`")),
                    };
                    if !is_valid_label(label) {
                        return Err(parse_error(n, format!("invalid vertex label `{label}`")));
                    }
                    if !seen_vertices.insert(label) {
                        return Err(parse_error(n, format!("duplicate vertex label `{label}`")));
                    }
                    doc.vertices.push(label.to_string());
                }
                Some("edge") => {
                    let id = tokens
                        .next()
                        .ok_or_else(|| parse_error(n, "expected `edge <id> <label>...`"))?;
                    if !is_valid_label(id) {
                        return Err(parse_error(n, format!("invalid edge id `{id}`")));
                    }
                    if !seen_edges.insert(id) {
                        return Err(parse_error(n, format!("duplicate edge id `{id}`")));
                    }
                    let mut members = Vec::new();
                    let mut seen_members = HashSet::new();
                    for label in tokens {
                        if !seen_vertices.contains(label) {
                            return Err(parse_error(
                                n,
                                format!("edge `{id}` references unknown vertex `{label}`"),
                            ));
                        }
                        if !seen_members.insert(label) {
                            return Err(parse_error(
                                n,
                                format!("edge `{id}` lists vertex `{label}` more than once"),
                            ));
                        }
                        members.push(label.to_string());
                    }
                    doc.edges.push(EdgeRecord {
                        id: id.to_string(),
                        vertices: members,
                    });
                }
                Some(other) => {
                    return Err(parse_error(n, format!("unknown directive `{other}`")));
                }
                None => unreachable!("content lines are non-empty"),
            }
        }
        Ok(doc)
    }

    pub fn from_hypergraph(hg: &Hypergraph) -> Self {
        Self {
            version: 1,
            vertices: (0..hg.vertex_count())
                .map(|v| hg.vertex_label(v).into_owned())
                .collect(),
            edges: (0..hg.edge_count())
                .map(|e| EdgeRecord {
                    id: hg.edge_id(e).into_owned(),
                    vertices: hg
                        .edge_vertices(e)
                        .iter()
                        .map(|&v| hg.vertex_label(v).into_owned())
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::build_with_ids(
            self.vertices.iter().cloned(),
            self.edges.iter().map(|e| (e.id.clone(), e.vertices.iter())),
        )
    }
}

impl fmt::Display for HypergraphDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "hg v{}", self.version)?;
        for v in &self.vertices {
            writeln!(f, "vertex {v}")?;
        }
        for e in &self.edges {
            write!(f, "edge {}", e.id)?;
            for v in &e.vertices {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    HypergraphDocument::parse(text)?.to_hypergraph()
}

/// Canonical text of `hg`; edge members are listed in vertex order.
pub fn serialize_hypergraph(hg: &Hypergraph) -> String {
    HypergraphDocument::from_hypergraph(hg).to_string()
}

/// Reads a subset document: a `vset` line, an `eset` line, or a `vset`
/// line followed by an `eset` line (a subhypergraph).
pub fn parse_subset<'h>(hg: &'h Hypergraph, text: &str) -> Result<Value<'h>> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let relabel = |n: usize| move |e: Error| parse_error(n, e.to_string());
    match lines.as_slice() {
        [] => Err(parse_error(1, "empty subset document")),
        [single] => {
            let (n, keyword, tokens) = split_keyword(*single);
            match keyword {
                "vset" => Ok(Value::Vertices(
                    hg.vertex_set_by_labels(tokens).map_err(relabel(n))?,
                )),
                "eset" => Ok(Value::Edges(
                    hg.edge_set_by_ids(tokens).map_err(relabel(n))?,
                )),
                other => Err(parse_error(
                    n,
                    format!("expected `vset` or `eset`, found `{other}`"),
                )),
            }
        }
        [first, second] => {
            let (n1, k1, t1) = split_keyword(*first);
            let (n2, k2, t2) = split_keyword(*second);
            if k1 != "vset" {
                return Err(parse_error(n1, format!("expected `vset`, found `{k1}`")));
            }
            if k2 != "eset" {
                return Err(parse_error(n2, format!("expected `eset`, found `{k2}`")));
            }
            let vertices = hg.vertex_set_by_labels(t1).map_err(relabel(n1))?;
            let edges = hg.edge_set_by_ids(t2).map_err(relabel(n2))?;
            Ok(Value::Hypergraph(
                SubHypergraph::new(vertices, edges).map_err(relabel(n2))?,
            ))
        }
        [_, _, extra, ..] => Err(parse_error(
            extra.0,
            "subset documents have at most two lines",
        )),
    }
}

/// Newline-terminated subset document for `value`.
pub fn serialize_subset(value: &Value<'_>) -> String {
    let mut out = String::new();
    match value {
        Value::Vertices(v) => writeln!(out, "{v}"),
        Value::Edges(e) => writeln!(out, "{e}"),
        Value::Hypergraph(x) => writeln!(out, "{x}"),
    }
    .expect("writing to a String cannot fail");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{canonical, h0};

    const H0_TEXT: &str = "hg v1\nvertex 0\nvertex 1\nvertex 2\nvertex 3\nvertex 4\nedge e0 0 1\nedge e1 1 2 3\nedge e2 3 4\n";

    #[test]
    fn parse_h0() {
        let hg = parse_hypergraph(H0_TEXT).unwrap();
        assert_eq!(hg.vertex_count(), 5);
        assert_eq!(hg.edge_count(), 3);
        assert_eq!(hg, h0());
        assert_eq!(serialize_hypergraph(&h0()), H0_TEXT);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text =
            "# H1\n\nhg v1\nvertex a\n  # inline comment line\nvertex b\nvertex c\nedge x a b\n";
        let hg = parse_hypergraph(text).unwrap();
        assert_eq!(hg.vertex_count(), 3);
        assert_eq!(hg.edge_id(0), "x");
        assert_eq!(hg.incidence(2), &[] as &[usize]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_hypergraph("hg v1\nvertex a\nedge e0 a q\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "edge `e0` references unknown vertex `q`".into()
            }
        );
        assert!(err.to_string().contains("`q`"));
        assert!(matches!(
            parse_hypergraph("hg v1\nvertex a\nvertex a\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_hypergraph("hg v1\nvertex a\nedge e a\nedge e a\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_hypergraph("hg v2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_hypergraph(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_hypergraph("hg v1\nvertex a\nedge e a\nvertex b\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_hypergraph("hg v1\nnode a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn empty_document() {
        let hg = parse_hypergraph("hg v1\n").unwrap();
        assert_eq!(hg, Hypergraph::empty());
        assert_eq!(serialize_hypergraph(&hg), "hg v1\n");
    }

    #[test]
    fn canonical_round_trip_is_byte_identical() {
        for (_, hg) in canonical() {
            let text = serialize_hypergraph(&hg);
            let back = parse_hypergraph(&text).unwrap();
            assert_eq!(back, hg);
            assert_eq!(serialize_hypergraph(&back), text);
        }
    }

    #[test]
    fn subset_documents() {
        let hg = h0();
        let v = parse_subset(&hg, "vset 3 1\n").unwrap();
        assert_eq!(v, Value::Vertices(hg.vertex_set([1, 3])));
        assert_eq!(serialize_subset(&v), "vset 1 3\n");
        let e = parse_subset(&hg, "eset e2").unwrap();
        assert_eq!(e, Value::Edges(hg.edge_set([2])));
        let x = parse_subset(&hg, "vset 0 1\neset e0\n").unwrap();
        assert_eq!(serialize_subset(&x), "vset 0 1\neset e0\n");
        assert!(matches!(
            parse_subset(&hg, "vset 0\neset e0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_subset(&hg, "vset 9\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_subset(&hg, "\n").is_err());
        assert!(parse_subset(&hg, "eset e0\nvset 0 1\n").is_err());
    }
}
