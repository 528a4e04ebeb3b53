//! Connected dominating sets of n×m grid graphs.
//!
//! A set `S` of grid cells is a connected dominating set (CDS) when the
//! subgraph induced by `S` is connected and every cell of the grid is in
//! `S` or adjacent to a cell of `S`. The smallest such set has size
//! `gamma_c`, the connected domination number.
//!
//! The crate provides
//!
//! * the grid model with its boundary/corner structure and the padded
//!   embedding used for loss accounting ([`grid`]),
//! * candidate-set verification, the loss/excess functions and the
//!   segment/join/bend decomposition of induced subgraphs ([`analysis`]),
//! * two reference CDS constructions, `d1` and `d2` ([`constructions`]),
//! * closed-form lower bounds, the construction upper bound and the
//!   gap analysis between them ([`bounds`]),
//! * exact solvers: a brute-force oracle for tiny grids and a frontier
//!   dynamic program with connectivity classes for medium grids
//!   ([`solver`]),
//! * an empirical audit of the lemma-level inequalities relating loss,
//!   excess, leaves, joins and bends ([`audit`]),
//! * ASCII/JSON/SVG renderings of cell sets ([`render`]).

pub mod analysis;
pub mod audit;
pub mod bounds;
pub mod constructions;
pub mod grid;
pub mod render;
pub mod set;
pub mod solver;

pub use analysis::StructureStats;
pub use audit::{AuditReport, CheckStatus};
pub use bounds::BoundsReport;
pub use grid::{GridDims, Vertex};
pub use set::VertexSet;
pub use solver::{Engine, SolveResult};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("grid dimensions must be at least 1x1 (got {n}x{m})")]
    EmptyDims { n: usize, m: usize },
    #[error("vertex ({i},{j}) lies outside the {n}x{m} grid")]
    VertexOutOfGrid { i: usize, j: usize, n: usize, m: usize },
    #[error("vertex ({i},{j}) lies outside the padded frame of the {n}x{m} grid")]
    VertexOutOfFrame { i: usize, j: usize, n: usize, m: usize },
    #[error("operation requires n,m >= 4 (got {n}x{m})")]
    BelowFormulaRegime { n: usize, m: usize },
    #[error("vertex ({i},{j}) is not dominated by the set")]
    NotDominated { i: usize, j: usize },
    #[error("set does not dominate the grid")]
    NotDominating,
    #[error("set does not induce a connected subgraph")]
    NotConnected,
    #[error("set contains the corner ({i},{j})")]
    ContainsCorner { i: usize, j: usize },
    #[error("no corner-free set of equal size exists for this input")]
    CornerFreeImpossible,
    #[error("grid {n}x{m} has {cells} cells, above the brute-force limit of {limit}")]
    BruteForceLimit { n: usize, m: usize, cells: usize, limit: usize },
    #[error("frontier width {width} exceeds the frontier limit of {limit}")]
    FrontierLimit { width: usize, limit: usize },
    #[error("solver timed out after {elapsed_ms} ms (budget {budget_ms} ms)")]
    Timeout { elapsed_ms: u64, budget_ms: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
