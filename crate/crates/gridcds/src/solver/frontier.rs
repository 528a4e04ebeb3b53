//! Frontier dynamic program for the exact connected domination number.
//!
//! The grid is swept cell by cell in row-major order after transposing,
//! if needed, so that the row width equals the smaller dimension. A state
//! records one status nibble per frontier column — the cell already
//! decided in the current row, or the cell of the previous row above the
//! sweep point — plus one flag:
//!
//! * `OUT_DOM`: not in the set, already dominated by a decided neighbor;
//! * `OUT_NEED`: not in the set and not yet dominated, so some future
//!   neighbor (right or below) must be selected;
//! * `IN(c)`: in the set, belonging to connectivity class `c`. Classes
//!   form a non-crossing partition of the in-set frontier cells and are
//!   renumbered in first-occurrence order before deduplication.
//! * a flag recording that one connected component has already left the
//!   frontier; this is legal at most once and no cell may be selected
//!   afterwards, since a second component could never reconnect.
//!
//! A cell leaving the frontier while `OUT_NEED` kills the state, as does
//! closing a component while other in-set cells or pending cells remain.
//! Accepted terminal states are fully dominated with exactly one
//! component overall. Costs are recovered by a backward cost-to-go pass
//! over the stored layers; the witness is the greedy walk that prefers
//! selecting cells as early as possible in sweep order, which yields the
//! lexicographically least optimum of the solved orientation.

use super::{Engine, SolveOptions, SolveResult, SolveStats};
use crate::grid::{GridDims, Vertex};
use crate::set::VertexSet;
use crate::{Error, Result};
use rayon::prelude::*;
use std::collections::HashSet;
use std::time::Instant;

/// Default ceiling on the frontier width (the grid's smaller side).
pub const DEFAULT_FRONTIER_LIMIT: usize = 10;
/// Hard encoding limit: one status nibble per frontier column.
pub const MAX_FRONTIER_WIDTH: usize = 16;

const OUT_DOM: u8 = 0;
const OUT_NEED: u8 = 1;
/// Temporary label for a freshly opened class, renumbered immediately.
const FRESH_CLASS: u8 = 13;

#[inline]
fn status(cells: u64, pos: usize) -> u8 {
    (cells >> (4 * pos) & 0xF) as u8
}

#[inline]
fn with_status(cells: u64, pos: usize, s: u8) -> u64 {
    cells & !(0xFu64 << (4 * pos)) | (u64::from(s) << (4 * pos))
}

#[inline]
fn in_class(s: u8) -> Option<u8> {
    (s >= 2).then(|| s - 2)
}

#[inline]
fn key_of(cells: u64, closed: bool) -> u128 {
    u128::from(cells) | (u128::from(closed) << 64)
}

fn canonicalize(cells: u64, width: usize) -> u64 {
    let mut map = [u8::MAX; 16];
    let mut next = 0u8;
    let mut out = cells;
    for pos in 0..width {
        if let Some(cls) = in_class(status(cells, pos)) {
            if map[cls as usize] == u8::MAX {
                map[cls as usize] = next;
                next += 1;
            }
            out = with_status(out, pos, 2 + map[cls as usize]);
        }
    }
    out
}

#[cfg(debug_assertions)]
fn assert_non_crossing(cells: u64, width: usize) {
    let mut first = [usize::MAX; 16];
    let mut last = [usize::MAX; 16];
    for pos in 0..width {
        if let Some(cls) = in_class(status(cells, pos)) {
            let cls = cls as usize;
            if first[cls] == usize::MAX {
                first[cls] = pos;
            }
            last[cls] = pos;
        }
    }
    for a in 0..16 {
        for b in 0..16 {
            if a != b && first[a] != usize::MAX && first[b] != usize::MAX {
                assert!(
                    !(first[a] < first[b] && first[b] < last[a] && last[a] < last[b]),
                    "crossing classes in frontier state {cells:#x}"
                );
            }
        }
    }
}

/// Applies one cell decision. Returns the successor key and the cost
/// delta (1 when the cell is selected), or None for a dead state.
fn transition(
    key: u128,
    width: usize,
    rows: usize,
    r: usize,
    c: usize,
    put_in: bool,
) -> Option<(u128, u32)> {
    let mut cells = key as u64;
    let mut closed = key >> 64 & 1 == 1;
    let up = status(cells, c);
    let left = (c > 0).then(|| status(cells, c - 1));

    if put_in {
        if closed {
            return None;
        }
        if left == Some(OUT_NEED) {
            cells = with_status(cells, c - 1, OUT_DOM);
        }
        let merged = match (in_class(up), left.and_then(in_class)) {
            (Some(a), Some(b)) if a != b => {
                for pos in 0..width {
                    if status(cells, pos) == 2 + b {
                        cells = with_status(cells, pos, 2 + a);
                    }
                }
                a
            }
            (Some(a), _) => a,
            (None, Some(b)) => b,
            (None, None) => FRESH_CLASS,
        };
        cells = with_status(cells, c, 2 + merged);
        cells = canonicalize(cells, width);
        #[cfg(debug_assertions)]
        assert_non_crossing(cells, width);
        Some((key_of(cells, closed), 1))
    } else {
        // the cell above leaves the frontier now
        if up == OUT_NEED {
            return None;
        }
        if let Some(a) = in_class(up) {
            let survives = (0..width).any(|pos| pos != c && status(cells, pos) == 2 + a);
            if !survives {
                if closed {
                    return None;
                }
                // any other selected cell would become a second component
                // and any pending cell could only be saved by one
                let others_pending =
                    (0..width).any(|pos| pos != c && status(cells, pos) != OUT_DOM);
                if others_pending {
                    return None;
                }
                closed = true;
            }
        }
        let dominated = in_class(up).is_some() || left.is_some_and(|s| s >= 2);
        let st = if dominated { OUT_DOM } else { OUT_NEED };
        if st == OUT_NEED && closed {
            return None;
        }
        // in the last row the left cell has no undecided neighbor left
        if r + 1 == rows && left == Some(OUT_NEED) {
            return None;
        }
        cells = with_status(cells, c, st);
        cells = canonicalize(cells, width);
        Some((key_of(cells, closed), 0))
    }
}

/// All cells dominated and exactly one component in total.
fn accepting(key: u128, width: usize) -> bool {
    let cells = key as u64;
    let closed = key >> 64 & 1 == 1;
    let mut classes = 0u16;
    for pos in 0..width {
        let s = status(cells, pos);
        if s == OUT_NEED {
            return false;
        }
        if let Some(cls) = in_class(s) {
            classes |= 1 << cls;
        }
    }
    if closed {
        classes == 0
    } else {
        classes.count_ones() == 1
    }
}

struct Layer {
    keys: Vec<u128>,
}

impl Layer {
    fn from_set(set: HashSet<u128>) -> Self {
        let mut keys: Vec<u128> = set.into_iter().collect();
        keys.sort_unstable();
        Layer { keys }
    }

    fn index_of(&self, key: u128) -> usize {
        self.keys.binary_search(&key).expect("successor state was stored")
    }
}

pub fn solve_dp(dims: GridDims) -> Result<SolveResult> {
    solve_dp_with(dims, &SolveOptions::default())
}

pub fn solve_dp_with(dims: GridDims, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let limit = opts.frontier_limit.min(MAX_FRONTIER_WIDTH);
    let width = dims.min_side();
    if width > limit {
        return Err(Error::FrontierLimit { width, limit });
    }
    // orient the sweep so the frontier is the smaller side
    let transposed = dims.m > dims.n;
    let solved = if transposed { dims.transposed() } else { dims };
    let (rows, cols) = (solved.n, solved.m);
    debug_assert_eq!(cols, width);
    let total = rows * cols;

    // forward pass: reachable states per layer
    let mut layers: Vec<Layer> = Vec::with_capacity(total + 1);
    let mut current: HashSet<u128> = HashSet::from([0u128]);
    let mut states_total = 0u64;
    for t in 0..total {
        if let Some(budget) = opts.timeout {
            if start.elapsed() > budget {
                return Err(Error::Timeout {
                    elapsed_ms: start.elapsed().as_millis() as u64,
                    budget_ms: budget.as_millis() as u64,
                });
            }
        }
        let (r, c) = (t / cols, t % cols);
        let layer = Layer::from_set(current);
        states_total += layer.keys.len() as u64;
        let next = layer
            .keys
            .par_iter()
            .fold(HashSet::default, |mut acc: HashSet<u128>, &key| {
                for put_in in [false, true] {
                    if let Some((nk, _)) = transition(key, width, rows, r, c, put_in) {
                        acc.insert(nk);
                    }
                }
                acc
            })
            .reduce(HashSet::default, |a, b| {
                if a.len() < b.len() {
                    return reduce_into(b, a);
                }
                reduce_into(a, b)
            });
        layers.push(layer);
        current = next;
    }
    let terminal = Layer::from_set(current);
    states_total += terminal.keys.len() as u64;
    layers.push(terminal);

    // backward pass: optimal completion cost per state
    let mut cost_to_go: Vec<Vec<u32>> = vec![Vec::new(); total + 1];
    cost_to_go[total] = layers[total]
        .keys
        .iter()
        .map(|&k| if accepting(k, width) { 0 } else { u32::MAX })
        .collect();
    for t in (0..total).rev() {
        let (r, c) = (t / cols, t % cols);
        let next_layer = &layers[t + 1];
        let next_cost = &cost_to_go[t + 1];
        cost_to_go[t] = layers[t]
            .keys
            .par_iter()
            .map(|&key| {
                let mut best = u32::MAX;
                for put_in in [false, true] {
                    if let Some((nk, dc)) = transition(key, width, rows, r, c, put_in) {
                        let g = next_cost[next_layer.index_of(nk)];
                        if g != u32::MAX {
                            best = best.min(g + dc);
                        }
                    }
                }
                best
            })
            .collect();
    }
    if cost_to_go[0][0] == u32::MAX {
        return Err(Error::Internal("no accepting state; every grid has a CDS".into()));
    }
    let gamma = cost_to_go[0][0] as usize;
    debug_assert!(gamma >= 1 && gamma <= total);

    // greedy walk preferring selection: lexicographically least optimum
    // in the sweep order of the solved orientation
    let mut key = 0u128;
    let mut spent = 0u32;
    let mut witness = VertexSet::new(dims);
    for t in 0..total {
        let (r, c) = (t / cols, t % cols);
        let mut advanced = false;
        for put_in in [true, false] {
            if let Some((nk, dc)) = transition(key, width, rows, r, c, put_in) {
                let g = cost_to_go[t + 1][layers[t + 1].index_of(nk)];
                if g != u32::MAX && spent + dc + g == gamma as u32 {
                    if put_in {
                        let v = if transposed {
                            Vertex::new(c + 1, r + 1)
                        } else {
                            Vertex::new(r + 1, c + 1)
                        };
                        witness.insert(v)?;
                    }
                    key = nk;
                    spent += dc;
                    advanced = true;
                    break;
                }
            }
        }
        if !advanced {
            return Err(Error::Internal("optimal path not traceable".into()));
        }
    }
    debug_assert_eq!(witness.len(), gamma);

    Ok(SolveResult {
        dims,
        gamma_c: gamma,
        engine: Engine::FrontierDp,
        stats: SolveStats { states_or_nodes: states_total, elapsed: start.elapsed() },
        witness,
    })
}

fn reduce_into(mut big: HashSet<u128>, small: HashSet<u128>) -> HashSet<u128> {
    big.extend(small);
    big
}
