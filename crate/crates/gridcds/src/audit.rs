//! Empirical audit of the inequality chain relating the loss, excess,
//! leaf, join and bend counts of a connected dominating set.
//!
//! Every check is evaluated numerically from the structure statistics;
//! a violated inequality is a recorded finding, never a panic. Some of
//! the inequalities are only sound for the shapes their derivations
//! draw — thin trees without fully selected 2×2 blocks on grids with
//! n,m >= 4 — so the report carries the shape flags callers need to
//! decide which checks they may assert. A ladder-shaped CDS (columns
//! 2 and 3 of a 4×4 grid) genuinely violates the loss lower bound, for
//! example, and the audit reports exactly that.

use crate::analysis::{self, StructureStats};
use crate::constructions;
use crate::grid::GridDims;
use crate::set::VertexSet;
use crate::solver;
use crate::Result;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Holds,
    Violated,
    Skipped,
}

/// One evaluated inequality. For `>=`-checks `slack = lhs - rhs` and the
/// check holds iff the slack is nonnegative; the identity check holds
/// iff the slack is exactly zero.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub lhs: i64,
    pub rhs: i64,
    pub slack: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    fn at_least(name: &'static str, lhs: i64, rhs: i64) -> Self {
        let slack = lhs - rhs;
        CheckResult {
            name,
            status: if slack >= 0 { CheckStatus::Holds } else { CheckStatus::Violated },
            lhs,
            rhs,
            slack,
            note: None,
        }
    }

    fn exactly(name: &'static str, lhs: i64, rhs: i64) -> Self {
        let slack = lhs - rhs;
        CheckResult {
            name,
            status: if slack == 0 { CheckStatus::Holds } else { CheckStatus::Violated },
            lhs,
            rhs,
            slack,
            note: None,
        }
    }

    fn skipped(name: &'static str, reason: &str) -> Self {
        CheckResult {
            name,
            status: CheckStatus::Skipped,
            lhs: 0,
            rhs: 0,
            slack: 0,
            note: Some(format!("skipped: {reason}")),
        }
    }

    pub fn holds(&self) -> bool {
        self.status == CheckStatus::Holds
    }
}

pub const CHECK_NAMES: [&str; 10] = [
    "handshake",
    "excess_ge_4",
    "loss_lower",
    "param_bound1",
    "param_bound2",
    "param_bound3",
    "joins_count",
    "bends_count",
    "identity",
    "segment_span",
];

/// Full audit of one CDS.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub n: usize,
    pub m: usize,
    pub checks: Vec<CheckResult>,
    pub stats: StructureStats,
    /// The induced subgraph is a tree.
    pub is_tree: bool,
    /// Some 2×2 cell block lies wholly in the set.
    pub has_2x2_block: bool,
}

impl AuditReport {
    pub fn check(&self, name: &str) -> &CheckResult {
        self.checks.iter().find(|c| c.name == name).expect("known check name")
    }

    /// The checks that hold for every CDS of a grid with n,m >= 4,
    /// regardless of shape.
    pub fn unconditional_ok(&self) -> bool {
        let excess_ok = self.n < 4 || self.m < 4 || self.check("excess_ge_4").holds();
        self.check("handshake").holds()
            && excess_ok
            && self.check("segment_span").status != CheckStatus::Violated
    }

    /// True when this instance has the thin-tree shape under which the
    /// loss lower bound and the parametrized bounds are asserted.
    pub fn is_thin_tree(&self) -> bool {
        self.is_tree && !self.has_2x2_block
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Evaluates every check on a CDS. Violations are data; only a non-CDS
/// input is an error. The identity check is skipped (not failed) when
/// the set contains a corner, and the segment-span check is skipped for
/// singleton sets, which have no segments.
pub fn audit(set: &VertexSet) -> Result<AuditReport> {
    analysis::require_cds(set)?;
    let dims = set.dims();
    let st = analysis::structure_stats(set);
    let min_third = dims.min_side().div_ceil(3) as i64;
    let (size, leaves) = (st.size as i64, st.leaves as i64);
    let (d2, d3, d4) = (st.bends as i64, st.deg3 as i64, st.deg4 as i64);
    let (loss, excess) = (st.loss as i64, st.excess as i64);

    let mut checks = Vec::with_capacity(10);
    checks.push(CheckResult::at_least("handshake", d3 + 2 * d4, leaves - 2));
    checks.push(CheckResult::at_least("excess_ge_4", excess, 4));
    checks.push(CheckResult::at_least(
        "loss_lower",
        loss,
        2 * size - leaves + d2 + 3 * d3 + 6 * d4,
    ));
    checks.push(CheckResult::at_least("param_bound1", loss + excess, 2 * size + 2 * leaves - 2));
    checks.push(CheckResult::at_least(
        "param_bound2",
        loss + excess,
        2 * size + min_third + leaves,
    ));
    checks.push(CheckResult::at_least(
        "param_bound3",
        loss + excess,
        2 * size + 2 * min_third + 2 - leaves,
    ));
    checks.push(CheckResult::at_least("joins_count", d2 + d3 + d4, min_third));
    checks.push(CheckResult::at_least("bends_count", d2, 2 * (min_third - leaves + 1)));
    checks.push(if st.corner_free {
        CheckResult::exactly("identity", 5 * size - loss - excess, dims.area() as i64)
    } else {
        CheckResult::skipped("identity", "precondition: set contains a corner")
    });
    checks.push(segment_span_check(&st, dims));

    Ok(AuditReport {
        n: dims.n,
        m: dims.m,
        checks,
        stats: st,
        is_tree: st.connected && st.edges + 1 == st.size,
        has_2x2_block: analysis::has_2x2_block(set),
    })
}

/// The horizontal segments span every row or the vertical segments span
/// every column, and the spanning direction has at least ⌈n/3⌉ (resp.
/// ⌈m/3⌉) segments. Recorded with the satisfied side, or the better
/// failing side when violated.
fn segment_span_check(st: &StructureStats, dims: GridDims) -> CheckResult {
    if st.size == 1 {
        return CheckResult::skipped("segment_span", "singleton set has no segments");
    }
    let h = (st.h_segments as i64, dims.n.div_ceil(3) as i64);
    let v = (st.v_segments as i64, dims.m.div_ceil(3) as i64);
    let candidates: Vec<(i64, i64)> = [(st.h_spans_height, h), (st.v_spans_width, v)]
        .into_iter()
        .filter(|(spans, _)| *spans)
        .map(|(_, c)| c)
        .collect();
    match candidates.iter().max_by_key(|(lhs, rhs)| lhs - rhs) {
        Some(&(lhs, rhs)) => CheckResult::at_least("segment_span", lhs, rhs),
        None => {
            let mut res = CheckResult::at_least("segment_span", 0, h.1.min(v.1));
            res.note = Some("no spanning direction".into());
            res
        }
    }
}

/// Which instance families a sweep draws from.
#[derive(Debug, Clone, Copy)]
pub struct SweepSources {
    /// Audit the two reference constructions where the grid admits them.
    pub constructions: bool,
    /// Random CDSs per grid, normalized corner-free; 0 disables.
    pub random_per_dims: usize,
    /// Enumerated minimum CDSs per grid (solver-feasible grids only);
    /// 0 disables.
    pub optimal_limit: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRecord {
    pub source: &'static str,
    pub instance: usize,
    #[serde(flatten)]
    pub report: AuditReport,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SweepCounts {
    pub holds: usize,
    pub violated: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    /// (check name, source) -> counts, in fixed check order.
    pub rows: Vec<(String, String, SweepCounts)>,
}

impl SweepSummary {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,source,holds,violated,skipped\n");
        for (check, source, counts) in &self.rows {
            out.push_str(&format!(
                "{check},{source},{},{},{}\n",
                counts.holds, counts.violated, counts.skipped
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    pub records: Vec<SweepRecord>,
    pub summary: SweepSummary,
    /// Grids skipped per source because an engine or precondition did
    /// not apply.
    pub notices: Vec<String>,
}

/// Audits instance families over a list of grids; deterministic in the
/// seed. Infeasible sources are skipped with a notice.
pub fn audit_sweep(dims_list: &[GridDims], sources: SweepSources, seed: u64) -> SweepResult {
    let mut records = Vec::new();
    let mut notices = Vec::new();
    for (dim_index, &dims) in dims_list.iter().enumerate() {
        if sources.constructions {
            if dims.require_formula_regime().is_ok() {
                let built = [
                    constructions::build_d1(dims).expect("regime checked"),
                    constructions::build_d2(dims).expect("regime checked"),
                ];
                for (k, set) in built.iter().enumerate() {
                    let report = audit(set).expect("constructions are CDSs");
                    records.push(SweepRecord { source: "constructions", instance: k, report });
                }
            } else {
                notices.push(format!("constructions skipped for {dims}: requires n,m >= 4"));
            }
        }
        for k in 0..sources.random_per_dims {
            let instance_seed = seed
                .wrapping_mul(0x9e37_79b9_7f4a_7c15)
                .wrapping_add((dim_index as u64) << 20 | k as u64);
            let raw = analysis::random_cds(dims, instance_seed);
            let set = if dims.require_formula_regime().is_ok() {
                match analysis::normalize_corner_free(&raw) {
                    Ok(norm) => norm,
                    Err(e) => {
                        notices.push(format!("normalization failed for {dims} seed {instance_seed}: {e}"));
                        raw
                    }
                }
            } else {
                raw
            };
            let report = audit(&set).expect("random CDS");
            records.push(SweepRecord { source: "random", instance: k, report });
        }
        if sources.optimal_limit > 0 {
            match solver::enumerate_min_cds(dims, sources.optimal_limit) {
                Ok(sets) => {
                    for (k, set) in sets.iter().enumerate() {
                        let report = audit(set).expect("minimum CDS");
                        records.push(SweepRecord { source: "optimal", instance: k, report });
                    }
                }
                Err(e) => notices.push(format!("optimal skipped for {dims}: {e}")),
            }
        }
    }

    let mut rows = Vec::new();
    for check in CHECK_NAMES {
        for source in ["constructions", "random", "optimal"] {
            let mut counts = SweepCounts::default();
            for rec in records.iter().filter(|r| r.source == source) {
                match rec.report.check(check).status {
                    CheckStatus::Holds => counts.holds += 1,
                    CheckStatus::Violated => counts.violated += 1,
                    CheckStatus::Skipped => counts.skipped += 1,
                }
            }
            if counts.holds + counts.violated + counts.skipped > 0 {
                rows.push((check.to_string(), source.to_string(), counts));
            }
        }
    }

    SweepResult { records, summary: SweepSummary { rows }, notices }
}
