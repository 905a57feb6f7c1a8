//! Ponzano–Regge state sums over triangulated regions with boundary.
//!
//! A triangulation assigns spins to its boundary edges; the sum runs over
//! spins `x_i ≤ λ` on the internal edges with weight
//! `(-1)^φ Π (2x_i+1) Π_tet {6j}`. The sign exponent `φ` is a pluggable
//! [`PhaseConvention`].

mod coloring;
mod pachner;
mod phase;
mod sum;
mod triangulation;

use thiserror::Error;

use crate::arith::Spin;

pub use coloring::{enumerate_colorings, Coloring, ColoringIter, CutoffPolicy};
pub use pachner::{pachner_23_check, PachnerBoundary, PachnerReport, PACHNER_EDGES};
pub use phase::{BoundaryNormalized, NoPhase, Phase, PhaseConvention, PonzanoRegge};
pub use sum::{amplitude, cutoff_sweep, evaluate_sum, StateSum};
pub use triangulation::{
    load_triangulation, Edge, EdgeRecord, Face, TetRecord, Tetrahedron, Triangulation, TriangulationDoc,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{at}: edge id '{id}' already used at {first}")]
    DuplicateEdge { at: String, id: String, first: String },
    #[error("{at}: boundary edge '{id}' has no spin_twice")]
    MissingSpin { at: String, id: String },
    #[error("{at}: internal edge '{id}' must not carry spin_twice")]
    InternalSpin { at: String, id: String },
    #[error("{at}: tetrahedron id '{id}' already used at {first}")]
    DuplicateTetrahedron { at: String, id: String, first: String },
    #[error("{at}: tetrahedron '{id}' lists {count} edges, expected 6")]
    SlotCount { at: String, id: String, count: usize },
    #[error("{at}: unknown edge id '{id}'")]
    UnknownEdge { at: String, id: String },
    #[error("{at}: edge '{id}' appears twice in one tetrahedron")]
    RepeatedEdge { at: String, id: String },
    #[error("{at}: edge '{id}' belongs to no tetrahedron")]
    UnusedEdge { at: String, id: String },
    #[error("face {edges:?} is shared by {} tetrahedra {tetrahedra:?}", tetrahedra.len())]
    OvershareFace { edges: [String; 3], tetrahedra: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StateSumError {
    #[error("phase convention '{convention}' gives a half-integer exponent for coloring {coloring}")]
    NonIntegerPhase { convention: &'static str, coloring: String },
    #[error("boundary triangle {face:?} with spins {spins:?} is not a triad")]
    InadmissibleBoundary { face: [String; 3], spins: [Spin; 3] },
}
