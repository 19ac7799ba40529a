use thiserror::Error;

use crate::pipeline::Domain;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),

    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),

    #[error("edge `{edge}` references unknown vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },

    #[error("edge `{edge}` lists vertex `{vertex}` more than once")]
    RepeatedMember { edge: String, vertex: String },

    #[error("invalid label `{0}`: labels must be non-empty, contain no whitespace and not start with `#`")]
    InvalidLabel(String),

    #[error("unknown edge id `{0}`")]
    UnknownEdge(String),

    #[error("sets are bound to different hypergraphs")]
    HypergraphMismatch,

    #[error("edge `{0}` is not covered by the vertex part")]
    CoverViolation(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("universe too large for exhaustive enumeration: {vertices} vertices, {edges} edges (limit {limit})")]
    UniverseTooLarge {
        vertices: usize,
        edges: usize,
        limit: usize,
    },

    #[error("unknown law `{0}`")]
    UnknownLaw(String),

    #[error("unknown operator `{name}` at step {position}")]
    UnknownOperator { position: usize, name: String },

    #[error("step {position} (`{step}`) expects {expected} but receives {found}")]
    DomainMismatch {
        position: usize,
        step: String,
        expected: Domain,
        found: Domain,
    },

    #[error("step {position}: malformed argument `{argument}` for `{name}`")]
    MalformedArgument {
        position: usize,
        name: String,
        argument: String,
    },

    #[error("empty pipeline")]
    EmptyPipeline,

    #[error("unsupported edge model `{0}`")]
    UnsupportedEdgeModel(String),

    #[error("grid dimensions must be at least 1x1, got {width}x{height}")]
    InvalidGrid { width: usize, height: usize },
}
