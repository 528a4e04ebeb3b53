//! Exhaustive ground-truth search for tiny grids.
//!
//! Subsets are enumerated by increasing size and, within a size, in
//! lexicographic order over row-major cell indices, so the first hit is
//! the lexicographically least optimum. Kept deliberately simple: this
//! is the oracle the frontier DP is validated against.

use super::{Engine, SolveResult, SolveStats};
use crate::grid::{GridDims, Vertex};
use crate::set::VertexSet;
use crate::{Error, Result};
use std::time::{Duration, Instant};

/// Default cell-count ceiling for the exhaustive search.
pub const BRUTE_FORCE_CELL_LIMIT: usize = 20;

struct BitGrid {
    dims: GridDims,
    /// closed neighborhood of each cell, as a bitmask over row-major indices
    closed: Vec<u32>,
    /// open neighborhood of each cell
    adj: Vec<u32>,
    full: u32,
}

impl BitGrid {
    fn new(dims: GridDims) -> Self {
        let cells = dims.area();
        let mut closed = vec![0u32; cells];
        let mut adj = vec![0u32; cells];
        for (idx, v) in dims.cells().enumerate() {
            let mut a = 0u32;
            for u in crate::grid::neighbors(v, dims).expect("grid cell") {
                a |= 1 << ((u.i - 1) * dims.m + (u.j - 1));
            }
            adj[idx] = a;
            closed[idx] = a | (1 << idx);
        }
        let full = if cells == 32 { u32::MAX } else { (1u32 << cells) - 1 };
        BitGrid { dims, closed, adj, full }
    }

    fn is_cds(&self, members: &[usize]) -> bool {
        let mut mask = 0u32;
        let mut dominated = 0u32;
        for &idx in members {
            mask |= 1 << idx;
            dominated |= self.closed[idx];
        }
        if dominated != self.full {
            return false;
        }
        // flood fill from the first member
        let mut reached = 1u32 << members[0];
        loop {
            let mut grown = reached;
            let mut rest = reached;
            while rest != 0 {
                let idx = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grown |= self.adj[idx] & mask;
            }
            if grown == reached {
                break;
            }
            reached = grown;
        }
        reached == mask
    }

    fn to_set(&self, members: &[usize]) -> VertexSet {
        VertexSet::from_cells(
            self.dims,
            members.iter().map(|&idx| Vertex::new(idx / self.dims.m + 1, idx % self.dims.m + 1)),
        )
        .expect("indices in grid")
    }
}

/// Calls `visit` for every k-combination of `0..cells` in lexicographic
/// order until it returns true; reports whether a visit succeeded.
fn for_each_combination(
    cells: usize,
    k: usize,
    budget: &mut Budget,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Result<bool> {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        budget.tick()?;
        if visit(&idx) {
            return Ok(true);
        }
        // advance to the next combination
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(false);
            }
            pos -= 1;
            if idx[pos] != cells - k + pos {
                break;
            }
        }
        idx[pos] += 1;
        for p in pos + 1..k {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

struct Budget {
    start: Instant,
    deadline: Option<Duration>,
    nodes: u64,
}

impl Budget {
    fn new(timeout: Option<Duration>) -> Self {
        Budget { start: Instant::now(), deadline: timeout, nodes: 0 }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(budget) = self.deadline {
            if self.nodes.is_multiple_of(4096) && self.start.elapsed() > budget {
                return Err(Error::Timeout {
                    elapsed_ms: self.start.elapsed().as_millis() as u64,
                    budget_ms: budget.as_millis() as u64,
                });
            }
        }
        Ok(())
    }
}

fn check_limit(dims: GridDims, cell_limit: usize) -> Result<()> {
    let limit = cell_limit.min(32);
    if dims.area() > limit {
        return Err(Error::BruteForceLimit {
            n: dims.n,
            m: dims.m,
            cells: dims.area(),
            limit,
        });
    }
    Ok(())
}

pub fn solve_bruteforce(dims: GridDims) -> Result<SolveResult> {
    solve_bruteforce_with(dims, BRUTE_FORCE_CELL_LIMIT, None)
}

/// Exhaustive search in increasing subset size; the witness is the
/// lexicographically least minimum CDS in row-major order.
pub fn solve_bruteforce_with(
    dims: GridDims,
    cell_limit: usize,
    timeout: Option<Duration>,
) -> Result<SolveResult> {
    check_limit(dims, cell_limit)?;
    let grid = BitGrid::new(dims);
    let cells = dims.area();
    let mut budget = Budget::new(timeout);
    for k in 1..=cells {
        let mut witness: Option<VertexSet> = None;
        for_each_combination(cells, k, &mut budget, |members| {
            if grid.is_cds(members) {
                witness = Some(grid.to_set(members));
                true
            } else {
                false
            }
        })?;
        if let Some(witness) = witness {
            return Ok(SolveResult {
                dims,
                gamma_c: k,
                engine: Engine::BruteForce,
                stats: SolveStats { states_or_nodes: budget.nodes, elapsed: budget.start.elapsed() },
                witness,
            });
        }
    }
    unreachable!("the full cell set is always a CDS");
}

/// Up to `limit` distinct minimum CDSs in lexicographic order.
pub fn enumerate_min_cds(dims: GridDims, limit: usize) -> Result<Vec<VertexSet>> {
    let gamma = solve_bruteforce(dims)?.gamma_c;
    let grid = BitGrid::new(dims);
    let mut out = Vec::new();
    let mut budget = Budget::new(None);
    for_each_combination(dims.area(), gamma, &mut budget, |members| {
        if grid.is_cds(members) {
            out.push(grid.to_set(members));
        }
        out.len() >= limit
    })?;
    Ok(out)
}
