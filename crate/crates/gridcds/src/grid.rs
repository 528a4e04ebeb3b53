//! The n×m grid graph, its boundary/corner structure, and the padded
//! embedding with one extra row and column on every side.
//!
//! Cells are 1-indexed: rows run 1..=n top to bottom, columns 1..=m left
//! to right. The padded frame additionally admits row indices 0 and n+1
//! and column indices 0 and m+1; frame cells exist only for neighborhood
//! accounting and can never be members of a cell set.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Dimensions of a grid: `n` rows by `m` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridDims {
    pub n: usize,
    pub m: usize,
}

impl GridDims {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::EmptyDims { n, m });
        }
        Ok(GridDims { n, m })
    }

    pub fn area(&self) -> usize {
        self.n * self.m
    }

    pub fn min_side(&self) -> usize {
        self.n.min(self.m)
    }

    pub fn transposed(&self) -> GridDims {
        GridDims { n: self.m, m: self.n }
    }

    /// True when the cell lies in the grid proper.
    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.n).contains(&v.i) && (1..=self.m).contains(&v.j)
    }

    /// True when the cell lies in the padded frame (grid plus one ring).
    pub fn contains_extended(&self, v: Vertex) -> bool {
        v.i <= self.n + 1 && v.j <= self.m + 1
    }

    /// Guard for the closed-form bound operations, which are only stated
    /// for grids with at least four rows and four columns.
    pub fn require_formula_regime(&self) -> Result<()> {
        if self.n < 4 || self.m < 4 {
            return Err(Error::BelowFormulaRegime { n: self.n, m: self.m });
        }
        Ok(())
    }

    /// Cells of the grid in row-major order.
    pub fn cells(self) -> impl Iterator<Item = Vertex> {
        let m = self.m;
        (1..=self.n).flat_map(move |i| (1..=m).map(move |j| Vertex { i, j }))
    }
}

impl std::fmt::Display for GridDims {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}", self.n, self.m)
    }
}

/// A grid cell. Row `i`, column `j`, both 1-indexed; 0 and n+1/m+1 occur
/// only for cells of the padded frame.
///
/// The derived ordering is row-major, which is the canonical iteration
/// and tie-breaking order throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub i: usize,
    pub j: usize,
}

impl Vertex {
    pub fn new(i: usize, j: usize) -> Self {
        Vertex { i, j }
    }
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// The grid neighbors of `v`: all cells at Manhattan distance exactly 1.
/// Between 2 (corner) and 4 (interior) cells, in up/left/right/down order.
pub fn neighbors(v: Vertex, dims: GridDims) -> Result<Vec<Vertex>> {
    if !dims.contains(v) {
        return Err(Error::VertexOutOfGrid { i: v.i, j: v.j, n: dims.n, m: dims.m });
    }
    let mut out = Vec::with_capacity(4);
    if v.i > 1 {
        out.push(Vertex::new(v.i - 1, v.j));
    }
    if v.j > 1 {
        out.push(Vertex::new(v.i, v.j - 1));
    }
    if v.j < dims.m {
        out.push(Vertex::new(v.i, v.j + 1));
    }
    if v.i < dims.n {
        out.push(Vertex::new(v.i + 1, v.j));
    }
    Ok(out)
}

/// The closed neighborhood of `v` in the padded grid: `v` plus its
/// neighbors clamped to the frame. For any `v` in the grid proper this
/// has exactly 5 elements.
pub fn closed_neighbors_extended(v: Vertex, dims: GridDims) -> Result<Vec<Vertex>> {
    if !dims.contains_extended(v) {
        return Err(Error::VertexOutOfFrame { i: v.i, j: v.j, n: dims.n, m: dims.m });
    }
    let mut out = Vec::with_capacity(5);
    out.push(v);
    if v.i > 0 {
        out.push(Vertex::new(v.i - 1, v.j));
    }
    if v.j > 0 {
        out.push(Vertex::new(v.i, v.j - 1));
    }
    if v.j < dims.m + 1 {
        out.push(Vertex::new(v.i, v.j + 1));
    }
    if v.i < dims.n + 1 {
        out.push(Vertex::new(v.i + 1, v.j));
    }
    Ok(out)
}

/// True iff `v` lies on the border of the grid (first/last row or column),
/// i.e. has three or fewer grid neighbors.
pub fn is_boundary(v: Vertex, dims: GridDims) -> Result<bool> {
    if !dims.contains(v) {
        return Err(Error::VertexOutOfGrid { i: v.i, j: v.j, n: dims.n, m: dims.m });
    }
    Ok(v.i == 1 || v.i == dims.n || v.j == 1 || v.j == dims.m)
}

/// True iff `v` is one of the four corner cells.
pub fn is_corner(v: Vertex, dims: GridDims) -> bool {
    (v.i == 1 || v.i == dims.n) && (v.j == 1 || v.j == dims.m)
}
