//! A small language for chaining operators.
//!
//! ```text
//! pipeline := step (';' step)*
//! step     := name [':' argument]
//! ```
//!
//! Every operator consumes and produces one of three domains (vertex sets,
//! edge sets, subhypergraphs). [`parse_pipeline`] rejects any chain whose
//! adjacent steps disagree, so a parsed [`Pipeline`] can only fail at run
//! time if the input value has the wrong domain.
//!
//! | name | domain |
//! |---|---|
//! | `vdelta`, `veps` | edge set -> vertex set |
//! | `edelta`, `eeps` | vertex set -> edge set |
//! | `vertex-dilate`, `vertex-erode`, `v-open:1`, `v-open:1/2`, `v-close:…` | vertex set |
//! | `edge-dilate`, `edge-erode`, `e-open:…`, `e-close:…` | edge set |
//! | `hg-dilate`, `hg-erode`, `hg-open:…`, `hg-close:…` | subhypergraph |
//! | `hg-granule-open:λ`, `hg-granule-close:λ`, `hg-asf:λ` | subhypergraph |

use std::fmt;

use crate::composed::{edge_dilate, edge_erode, hg_dilate, hg_erode, vertex_dilate, vertex_erode};
use crate::correspondence::{
    edge_dilate_from_vertices, edge_erode_from_vertices, vertex_dilate_from_edges,
    vertex_erode_from_edges,
};
use crate::error::{Error, Result};
use crate::filters::{
    asf, granule_close, granule_open, FilterKind, FilterOp, GranulometryIndex, Side,
};
use crate::hypergraph::{EdgeSet, SubHypergraph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    VertexSet,
    EdgeSet,
    SubHypergraph,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::VertexSet => "vertex-set",
            Domain::EdgeSet => "edge-set",
            Domain::SubHypergraph => "subhypergraph",
        })
    }
}

/// A value flowing through a pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value<'h> {
    Vertices(VertexSet<'h>),
    Edges(EdgeSet<'h>),
    Hypergraph(SubHypergraph<'h>),
}

impl Value<'_> {
    pub fn domain(&self) -> Domain {
        match self {
            Value::Vertices(_) => Domain::VertexSet,
            Value::Edges(_) => Domain::EdgeSet,
            Value::Hypergraph(_) => Domain::SubHypergraph,
        }
    }

    fn counts(&self) -> (Option<usize>, Option<usize>) {
        match self {
            Value::Vertices(v) => (Some(v.len()), None),
            Value::Edges(e) => (None, Some(e.len())),
            Value::Hypergraph(x) => (Some(x.vertices().len()), Some(x.edges().len())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operator {
    /// δ•
    VDelta,
    /// ε•
    VEps,
    /// δ×
    EDelta,
    /// ε×
    EEps,
    VertexDilate,
    VertexErode,
    EdgeDilate,
    EdgeErode,
    HgDilate,
    HgErode,
    Filter(FilterOp),
    GranuleOpen(GranulometryIndex),
    GranuleClose(GranulometryIndex),
    Asf(GranulometryIndex),
}

impl Operator {
    pub fn input(&self) -> Domain {
        use Operator::*;
        match self {
            VDelta | VEps | EdgeDilate | EdgeErode => Domain::EdgeSet,
            EDelta | EEps | VertexDilate | VertexErode => Domain::VertexSet,
            HgDilate | HgErode | GranuleOpen(_) | GranuleClose(_) | Asf(_) => Domain::SubHypergraph,
            Filter(f) => side_domain(f.side),
        }
    }

    pub fn output(&self) -> Domain {
        use Operator::*;
        match self {
            VDelta | VEps | VertexDilate | VertexErode => Domain::VertexSet,
            EDelta | EEps | EdgeDilate | EdgeErode => Domain::EdgeSet,
            HgDilate | HgErode | GranuleOpen(_) | GranuleClose(_) | Asf(_) => Domain::SubHypergraph,
            Filter(f) => side_domain(f.side),
        }
    }

    /// `λ` for the granulometry and ASF steps.
    pub fn lambda(&self) -> Option<GranulometryIndex> {
        match self {
            Operator::GranuleOpen(l) | Operator::GranuleClose(l) | Operator::Asf(l) => Some(*l),
            _ => None,
        }
    }

    fn apply<'h>(&self, value: Value<'h>) -> Value<'h> {
        use Operator::*;
        match (self, value) {
            (VDelta, Value::Edges(e)) => Value::Vertices(vertex_dilate_from_edges(&e)),
            (VEps, Value::Edges(e)) => Value::Vertices(vertex_erode_from_edges(&e)),
            (EDelta, Value::Vertices(v)) => Value::Edges(edge_dilate_from_vertices(&v)),
            (EEps, Value::Vertices(v)) => Value::Edges(edge_erode_from_vertices(&v)),
            (VertexDilate, Value::Vertices(v)) => Value::Vertices(vertex_dilate(&v)),
            (VertexErode, Value::Vertices(v)) => Value::Vertices(vertex_erode(&v)),
            (EdgeDilate, Value::Edges(e)) => Value::Edges(edge_dilate(&e)),
            (EdgeErode, Value::Edges(e)) => Value::Edges(edge_erode(&e)),
            (HgDilate, Value::Hypergraph(x)) => Value::Hypergraph(hg_dilate(&x)),
            (HgErode, Value::Hypergraph(x)) => Value::Hypergraph(hg_erode(&x)),
            (Filter(f), Value::Vertices(v)) => Value::Vertices(f.apply_vertices(&v)),
            (Filter(f), Value::Edges(e)) => Value::Edges(f.apply_edges(&e)),
            (Filter(f), Value::Hypergraph(x)) => Value::Hypergraph(f.apply_hypergraph(&x)),
            (GranuleOpen(l), Value::Hypergraph(x)) => Value::Hypergraph(granule_open(&x, *l)),
            (GranuleClose(l), Value::Hypergraph(x)) => Value::Hypergraph(granule_close(&x, *l)),
            (Asf(l), Value::Hypergraph(x)) => Value::Hypergraph(asf(&x, *l)),
            (op, value) => unreachable!("{op:?} applied to {}", value.domain()),
        }
    }
}

fn side_domain(side: Side) -> Domain {
    match side {
        Side::Vertex => Domain::VertexSet,
        Side::Edge => Domain::EdgeSet,
        Side::Hypergraph => Domain::SubHypergraph,
    }
}

/// One domain-checked step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineStep {
    /// The step as written, whitespace trimmed.
    pub text: String,
    pub op: Operator,
}

impl PipelineStep {
    pub fn name(&self) -> &str {
        self.text.split(':').next().unwrap_or_default()
    }

    pub fn lambda(&self) -> Option<GranulometryIndex> {
        self.op.lambda()
    }

    pub fn input(&self) -> Domain {
        self.op.input()
    }

    pub fn output(&self) -> Domain {
        self.op.output()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pipeline {
    steps: Vec<PipelineStep>,
}

impl Pipeline {
    pub fn steps(&self) -> &[PipelineStep] {
        &self.steps
    }

    pub fn input(&self) -> Domain {
        self.steps[0].input()
    }

    pub fn output(&self) -> Domain {
        self.steps[self.steps.len() - 1].output()
    }
}

fn parse_step(position: usize, text: &str) -> Result<Operator> {
    let (name, argument) = match text.split_once(':') {
        Some((name, arg)) => (name.trim(), Some(arg.trim())),
        None => (text, None),
    };
    let malformed = |argument: &str| Error::MalformedArgument {
        position,
        name: name.to_string(),
        argument: argument.to_string(),
    };
    let plain = match name {
        "vdelta" => Some(Operator::VDelta),
        "veps" => Some(Operator::VEps),
        "edelta" => Some(Operator::EDelta),
        "eeps" => Some(Operator::EEps),
        "vertex-dilate" => Some(Operator::VertexDilate),
        "vertex-erode" => Some(Operator::VertexErode),
        "edge-dilate" => Some(Operator::EdgeDilate),
        "edge-erode" => Some(Operator::EdgeErode),
        "hg-dilate" => Some(Operator::HgDilate),
        "hg-erode" => Some(Operator::HgErode),
        _ => None,
    };
    if let Some(op) = plain {
        return match argument {
            None => Ok(op),
            Some(arg) => Err(malformed(arg)),
        };
    }
    let granule: Option<fn(GranulometryIndex) -> Operator> = match name {
        "hg-granule-open" => Some(Operator::GranuleOpen),
        "hg-granule-close" => Some(Operator::GranuleClose),
        "hg-asf" => Some(Operator::Asf),
        _ => None,
    };
    if let Some(make) = granule {
        let arg = argument.unwrap_or_default();
        let lambda: u32 = if !arg.is_empty() && arg.bytes().all(|b| b.is_ascii_digit()) {
            arg.parse().map_err(|_| malformed(arg))?
        } else {
            return Err(malformed(arg));
        };
        return Ok(make(GranulometryIndex::new(lambda)));
    }
    let filter = name.split_once('-').and_then(|(side, kind)| {
        let side = match side {
            "v" => Side::Vertex,
            "e" => Side::Edge,
            "hg" => Side::Hypergraph,
            _ => return None,
        };
        let kind = match kind {
            "open" => FilterKind::Opening,
            "close" => FilterKind::Closing,
            _ => return None,
        };
        Some((side, kind))
    });
    if let Some((side, kind)) = filter {
        let half = match argument {
            Some("1") => false,
            Some("1/2") => true,
            other => return Err(malformed(other.unwrap_or_default())),
        };
        return Ok(Operator::Filter(FilterOp { side, kind, half }));
    }
    Err(Error::UnknownOperator {
        position,
        name: name.to_string(),
    })
}

/// Parses and domain-checks a pipeline. Positions in errors are 1-based
/// step numbers.
pub fn parse_pipeline(text: &str) -> Result<Pipeline> {
    if text.trim().is_empty() {
        return Err(Error::EmptyPipeline);
    }
    let mut steps: Vec<PipelineStep> = Vec::new();
    for (i, raw) in text.split(';').enumerate() {
        let position = i + 1;
        let raw = raw.trim();
        if raw.is_empty() {
            return Err(Error::UnknownOperator {
                position,
                name: String::new(),
            });
        }
        let op = parse_step(position, raw)?;
        if let Some(prev) = steps.last() {
            if prev.output() != op.input() {
                return Err(Error::DomainMismatch {
                    position,
                    step: raw.to_string(),
                    expected: op.input(),
                    found: prev.output(),
                });
            }
        }
        steps.push(PipelineStep {
            text: raw.to_string(),
            op,
        });
    }
    Ok(Pipeline { steps })
}

/// Cardinalities after one step. Position 0 is the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub position: usize,
    pub step: String,
    pub domain: Domain,
    pub vertices: Option<usize>,
    pub edges: Option<usize>,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} -> {}", self.position, self.step, self.domain)?;
        if let Some(v) = self.vertices {
            write!(f, " vertices={v}")?;
        }
        if let Some(e) = self.edges {
            write!(f, " edges={e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Trace {
    pub entries: Vec<TraceEntry>,
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            writeln!(f, "{entry}")?;
        }
        Ok(())
    }
}

fn entry(position: usize, step: &str, value: &Value<'_>) -> TraceEntry {
    let (vertices, edges) = value.counts();
    TraceEntry {
        position,
        step: step.to_string(),
        domain: value.domain(),
        vertices,
        edges,
    }
}

/// Runs `pipeline` on `input`, recording the size of every intermediate.
pub fn run_pipeline<'h>(input: Value<'h>, pipeline: &Pipeline) -> Result<(Value<'h>, Trace)> {
    if input.domain() != pipeline.input() {
        return Err(Error::DomainMismatch {
            position: 1,
            step: pipeline.steps[0].text.clone(),
            expected: pipeline.input(),
            found: input.domain(),
        });
    }
    let mut trace = Trace {
        entries: vec![entry(0, "input", &input)],
    };
    let mut value = input;
    for (i, step) in pipeline.steps.iter().enumerate() {
        value = step.op.apply(value);
        trace.entries.push(entry(i + 1, &step.text, &value));
    }
    Ok((value, trace))
}
