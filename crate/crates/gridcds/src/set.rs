//! Candidate cell sets over a grid, with the two interchange formats.
//!
//! Text format: first line `n m`, then `n` lines of `m` characters,
//! `#` for a member and `.` for a non-member, each line newline
//! terminated. The parser also accepts a bare grid body (no header);
//! the dimensions are then inferred from the line count and width.
//!
//! JSON format: `{"n": .., "m": .., "cells": [[i,j], ..]}` with cells
//! 1-indexed and sorted row-major.

use crate::grid::{GridDims, Vertex};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A subset of the cells of an n×m grid. Value-semantic: clones are
/// independent. Iteration is always row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    dims: GridDims,
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new(dims: GridDims) -> Self {
        let words = vec![0u64; dims.area().div_ceil(64)];
        VertexSet { dims, words, len: 0 }
    }

    pub fn from_cells<I>(dims: GridDims, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut set = VertexSet::new(dims);
        for v in cells {
            set.insert(v)?;
        }
        Ok(set)
    }

    pub fn dims(&self) -> GridDims {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn index(&self, v: Vertex) -> usize {
        (v.i - 1) * self.dims.m + (v.j - 1)
    }

    /// Membership query. Cells outside the grid proper (including frame
    /// cells of the padded embedding) are never members.
    pub fn contains(&self, v: Vertex) -> bool {
        if !self.dims.contains(v) {
            return false;
        }
        let idx = self.index(v);
        self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    /// Inserts a cell; errors if it lies outside the grid. Returns true
    /// when the cell was not already present.
    pub fn insert(&mut self, v: Vertex) -> Result<bool> {
        if !self.dims.contains(v) {
            return Err(Error::VertexOutOfGrid { i: v.i, j: v.j, n: self.dims.n, m: self.dims.m });
        }
        let idx = self.index(v);
        let mask = 1u64 << (idx % 64);
        let fresh = self.words[idx / 64] & mask == 0;
        if fresh {
            self.words[idx / 64] |= mask;
            self.len += 1;
        }
        Ok(fresh)
    }

    /// Removes a cell if present; returns whether it was a member.
    pub fn remove(&mut self, v: Vertex) -> bool {
        if !self.contains(v) {
            return false;
        }
        let idx = self.index(v);
        self.words[idx / 64] &= !(1u64 << (idx % 64));
        self.len -= 1;
        true
    }

    /// Members in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.dims.cells().filter(move |&v| self.contains(v))
    }

    /// Members in row-major order, collected.
    pub fn cells(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// The set over the transposed grid, with every cell mirrored.
    pub fn transposed(&self) -> VertexSet {
        let mut out = VertexSet::new(self.dims.transposed());
        for v in self.iter() {
            out.insert(Vertex::new(v.j, v.i)).expect("mirrored cell stays in grid");
        }
        out
    }

    /// Canonical text rendering: `n m` header plus the `#`/`.` body.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(8 + (self.dims.m + 1) * self.dims.n);
        out.push_str(&format!("{} {}\n", self.dims.n, self.dims.m));
        out.push_str(&self.to_ascii_body());
        out
    }

    /// The `#`/`.` grid body alone, newline terminated.
    pub fn to_ascii_body(&self) -> String {
        let mut out = String::with_capacity((self.dims.m + 1) * self.dims.n);
        for i in 1..=self.dims.n {
            for j in 1..=self.dims.m {
                out.push(if self.contains(Vertex::new(i, j)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(input: &str) -> Result<Self> {
        let mut lines = input.lines().peekable();
        let first = *lines.peek().ok_or_else(|| Error::Parse("empty input".into()))?;
        let (dims, explicit_header) = if first.contains(|c: char| c.is_ascii_digit()) {
            let mut parts = first.split_whitespace();
            let n = parts
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("bad header line {first:?}")))?;
            let m = parts
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("bad header line {first:?}")))?;
            if parts.next().is_some() {
                return Err(Error::Parse(format!("bad header line {first:?}")));
            }
            (GridDims::new(n, m)?, true)
        } else {
            let body: Vec<&str> = input.lines().collect();
            let n = body.len();
            let m = body[0].chars().count();
            (GridDims::new(n, m)?, false)
        };
        if explicit_header {
            lines.next();
        }
        let mut set = VertexSet::new(dims);
        for i in 1..=dims.n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {} grid rows, found {}", dims.n, i - 1)))?;
            let mut width = 0usize;
            for (k, c) in line.chars().enumerate() {
                width += 1;
                match c {
                    '#' => {
                        set.insert(Vertex::new(i, k + 1))?;
                    }
                    '.' => {}
                    other => {
                        return Err(Error::Parse(format!("unexpected character {other:?} in row {i}")))
                    }
                }
            }
            if width != dims.m {
                return Err(Error::Parse(format!(
                    "row {i} has {width} characters, expected {}",
                    dims.m
                )));
            }
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing content after grid body".into()));
        }
        Ok(set)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&VertexSetRepr::from(self)).expect("serializable")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&VertexSetRepr::from(self)).expect("serializable")
    }

    pub fn from_json(input: &str) -> Result<Self> {
        let repr: VertexSetRepr =
            serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
        let dims = GridDims::new(repr.n, repr.m)?;
        let mut set = VertexSet::new(dims);
        for [i, j] in repr.cells {
            set.insert(Vertex::new(i, j))?;
        }
        Ok(set)
    }

    /// Parses either interchange format, sniffing JSON by the leading `{`.
    pub fn from_str_any(input: &str) -> Result<Self> {
        if input.trim_start().starts_with('{') {
            Self::from_json(input)
        } else {
            Self::from_text(input)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VertexSetRepr {
    n: usize,
    m: usize,
    cells: Vec<[usize; 2]>,
}

impl From<&VertexSet> for VertexSetRepr {
    fn from(set: &VertexSet) -> Self {
        VertexSetRepr {
            n: set.dims.n,
            m: set.dims.m,
            cells: set.iter().map(|v| [v.i, v.j]).collect(),
        }
    }
}

/// Convenience constructor used throughout the tests.
pub fn set_of(dims: GridDims, cells: &[(usize, usize)]) -> VertexSet {
    VertexSet::from_cells(dims, cells.iter().map(|&(i, j)| Vertex::new(i, j)))
        .expect("cells inside grid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, m: usize) -> GridDims {
        GridDims::new(n, m).unwrap()
    }

    #[test]
    fn membership_and_len() {
        let mut s = VertexSet::new(d(3, 3));
        assert!(s.insert(Vertex::new(2, 2)).unwrap());
        assert!(!s.insert(Vertex::new(2, 2)).unwrap());
        assert_eq!(s.len(), 1);
        assert!(s.contains(Vertex::new(2, 2)));
        assert!(!s.contains(Vertex::new(0, 2)));
        assert!(!s.contains(Vertex::new(4, 2)));
        assert!(s.remove(Vertex::new(2, 2)));
        assert!(s.is_empty());
        assert!(s.insert(Vertex::new(4, 1)).is_err());
    }

    #[test]
    fn value_semantics() {
        let mut a = set_of(d(2, 2), &[(1, 1)]);
        let b = a.clone();
        a.insert(Vertex::new(2, 2)).unwrap();
        assert_eq!(b.len(), 1);
        assert!(!b.contains(Vertex::new(2, 2)));
    }

    #[test]
    fn text_format_exact_bytes() {
        let s = set_of(d(3, 4), &[(1, 2), (2, 1), (3, 4)]);
        assert_eq!(s.to_text(), "3 4\n.#..\n#...\n...#\n");
        let back = VertexSet::from_text(&s.to_text()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn text_format_headerless_body() {
        let s = VertexSet::from_text(".#.\n###\n").unwrap();
        assert_eq!(s.dims(), d(2, 3));
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn text_format_rejects_garbage() {
        assert!(VertexSet::from_text("").is_err());
        assert!(VertexSet::from_text("2 2\n#.\n#").is_err());
        assert!(VertexSet::from_text("2 2\n#x\n..\n").is_err());
        assert!(VertexSet::from_text("2 2\n#.\n..\n#.\n").is_err());
        assert!(VertexSet::from_text("2\n#.\n..\n").is_err());
    }

    #[test]
    fn json_round_trip_and_cell_order() {
        let s = set_of(d(2, 3), &[(2, 1), (1, 3), (1, 1)]);
        let json = s.to_json();
        assert_eq!(json, r#"{"n":2,"m":3,"cells":[[1,1],[1,3],[2,1]]}"#);
        assert_eq!(VertexSet::from_json(&json).unwrap(), s);
        assert_eq!(VertexSet::from_str_any(&json).unwrap(), s);
        assert_eq!(VertexSet::from_str_any(&s.to_text()).unwrap(), s);
    }

    #[test]
    fn json_rejects_out_of_range_cells() {
        assert!(VertexSet::from_json(r#"{"n":2,"m":2,"cells":[[3,1]]}"#).is_err());
        assert!(VertexSet::from_json(r#"{"n":0,"m":2,"cells":[]}"#).is_err());
    }

    #[test]
    fn transpose_mirrors_cells() {
        let s = set_of(d(2, 3), &[(1, 2), (2, 3)]);
        let t = s.transposed();
        assert_eq!(t.dims(), d(3, 2));
        assert_eq!(t.cells(), vec![Vertex::new(2, 1), Vertex::new(3, 2)]);
        assert_eq!(t.transposed(), s);
    }
}
