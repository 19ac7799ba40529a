//! Grid hypergraphs.
//!
//! `cross4` puts one hyperedge on every interior cell of a `width` x
//! `height` grid. The hyperedge holds the cell's four axis neighbours (not
//! the cell itself), so each hyperedge is incident with exactly four
//! vertices. Vertices are numbered row-major and labelled by index; edges
//! are numbered row-major by their centre cell.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum EdgeModel {
    #[default]
    Cross4,
}

impl FromStr for EdgeModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cross4" => Ok(EdgeModel::Cross4),
            other => Err(Error::UnsupportedEdgeModel(other.to_string())),
        }
    }
}

impl fmt::Display for EdgeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeModel::Cross4 => f.write_str("cross4"),
        }
    }
}

/// Row-major index of cell `(row, col)`.
pub fn grid_index(width: usize, row: usize, col: usize) -> usize {
    row * width + col
}

pub fn gen_grid(width: usize, height: usize, model: EdgeModel) -> Result<Hypergraph> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidGrid { width, height });
    }
    let interior = |n: usize| 1..n.saturating_sub(1);
    let edges = match model {
        EdgeModel::Cross4 => interior(height).flat_map(move |r| {
            interior(width).map(move |c| {
                [
                    grid_index(width, r - 1, c),
                    grid_index(width, r, c - 1),
                    grid_index(width, r, c + 1),
                    grid_index(width, r + 1, c),
                ]
            })
        }),
    };
    Hypergraph::from_edge_lists(width * height, edges)
}
