//! Closed-form lower and upper bounds on the connected domination number
//! of an n×m grid, and the gap analysis between them.
//!
//! All operations require n,m >= 4, the regime in which the bounds are
//! valid, and refuse smaller grids rather than extrapolate.

use crate::grid::GridDims;
use crate::Result;
use serde::{Deserialize, Serialize};

/// All bound values for one grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub bound1: usize,
    pub bound2: usize,
    pub main_bound: usize,
    pub upper_d1: usize,
    pub upper_d2: usize,
    pub upper: usize,
    /// upper - main_bound
    pub gap: usize,
}

/// Sizes of the two reference constructions and their minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBounds {
    pub d1: usize,
    pub d2: usize,
    pub min: usize,
}

/// Exact integer gaps between each construction and the lower bounds,
/// with dimensions canonicalized so that m <= n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub n: usize,
    pub m: usize,
    pub d1_gap_vs_trivial: i64,
    pub d1_gap_vs_main: i64,
    pub d2_gap_vs_trivial: i64,
    pub d2_gap_vs_main: i64,
}

fn ceil_min_third(dims: GridDims) -> usize {
    dims.min_side().div_ceil(3)
}

/// The counting lower bound `⌈nm/3⌉`.
pub fn lower_bound1(dims: GridDims) -> Result<usize> {
    dims.require_formula_regime()?;
    Ok(dims.area().div_ceil(3))
}

/// The refined lower bound `⌈(nm + ⌈(3/2)·⌈min(n,m)/3⌉⌉ + 1)/3⌉`.
pub fn lower_bound2(dims: GridDims) -> Result<usize> {
    dims.require_formula_regime()?;
    let c = ceil_min_third(dims);
    Ok((dims.area() + (3 * c).div_ceil(2) + 1).div_ceil(3))
}

/// The strongest lower bound `⌈(nm + 2·⌈min(n,m)/3⌉)/3⌉`.
pub fn lower_main(dims: GridDims) -> Result<usize> {
    dims.require_formula_regime()?;
    Ok((dims.area() + 2 * ceil_min_third(dims)).div_ceil(3))
}

/// Closed-form sizes of the two constructions; these match
/// [`crate::constructions::build_d1`]/[`build_d2`](crate::constructions::build_d2)
/// cell for cell.
pub fn upper_bound_sizes(dims: GridDims) -> Result<UpperBounds> {
    dims.require_formula_regime()?;
    let GridDims { n, m } = dims;
    let d1 = 2 * n + (m - 4) + (m - 4) / 3 * (n - 2);
    let d2 = 2 * m + (n - 4) + (n - 4) / 3 * (m - 2);
    Ok(UpperBounds { d1, d2, min: d1.min(d2) })
}

/// Evaluates every bound for one grid.
pub fn bounds_report(dims: GridDims) -> Result<BoundsReport> {
    let bound1 = lower_bound1(dims)?;
    let bound2 = lower_bound2(dims)?;
    let main_bound = lower_main(dims)?;
    let upper = upper_bound_sizes(dims)?;
    Ok(BoundsReport {
        n: dims.n,
        m: dims.m,
        bound1,
        bound2,
        main_bound,
        upper_d1: upper.d1,
        upper_d2: upper.d2,
        upper: upper.min,
        gap: upper.min - main_bound,
    })
}

/// Gap analysis for one grid; swaps the dimensions first so that the
/// smaller one plays the role of the column count.
pub fn gap_report(dims: GridDims) -> Result<GapReport> {
    dims.require_formula_regime()?;
    let canon = if dims.m <= dims.n { dims } else { dims.transposed() };
    let trivial = lower_bound1(canon)? as i64;
    let main = lower_main(canon)? as i64;
    let upper = upper_bound_sizes(canon)?;
    Ok(GapReport {
        n: canon.n,
        m: canon.m,
        d1_gap_vs_trivial: upper.d1 as i64 - trivial,
        d1_gap_vs_main: upper.d1 as i64 - main,
        d2_gap_vs_trivial: upper.d2 as i64 - trivial,
        d2_gap_vs_main: upper.d2 as i64 - main,
    })
}

pub const BOUNDS_CSV_HEADER: &str = "n,m,bound1,bound2,main,upper_d1,upper_d2,upper,gap";

impl BoundsReport {
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.bound1,
            self.bound2,
            self.main_bound,
            self.upper_d1,
            self.upper_d2,
            self.upper,
            self.gap
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, m: usize) -> GridDims {
        GridDims::new(n, m).unwrap()
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound1(d(7, 11)).unwrap(), 26);
        assert_eq!(lower_bound1(d(4, 4)).unwrap(), 6);
        assert_eq!(lower_bound1(d(6, 6)).unwrap(), 12);

        assert_eq!(lower_bound2(d(7, 11)).unwrap(), 28);
        assert_eq!(lower_bound2(d(4, 4)).unwrap(), 7);
        assert_eq!(lower_bound2(d(15, 15)).unwrap(), 78);

        assert_eq!(lower_main(d(7, 11)).unwrap(), 28);
        assert_eq!(lower_main(d(15, 15)).unwrap(), 79);
        assert_eq!(lower_main(d(4, 4)).unwrap(), 7);
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(
            upper_bound_sizes(d(7, 11)).unwrap(),
            UpperBounds { d1: 31, d2: 34, min: 31 }
        );
        assert_eq!(upper_bound_sizes(d(4, 4)).unwrap(), UpperBounds { d1: 8, d2: 8, min: 8 });
        assert_eq!(upper_bound_sizes(d(9, 9)).unwrap(), UpperBounds { d1: 30, d2: 30, min: 30 });
    }

    #[test]
    fn small_grids_are_refused() {
        for f in [lower_bound1, lower_bound2, lower_main] {
            assert!(f(d(3, 5)).is_err());
            assert!(f(d(5, 3)).is_err());
        }
        assert!(upper_bound_sizes(d(3, 3)).is_err());
        assert!(gap_report(d(2, 9)).is_err());
    }

    #[test]
    fn bound_chain_is_monotone() {
        for n in 4..=120 {
            for m in 4..=120 {
                let r = bounds_report(d(n, m)).unwrap();
                assert!(r.bound1 <= r.bound2, "{n}x{m}");
                assert!(r.bound2 <= r.main_bound, "{n}x{m}");
                assert!(r.main_bound <= r.upper, "{n}x{m}");
            }
        }
    }

    #[test]
    fn gap_examples() {
        assert_eq!(gap_report(d(9, 9)).unwrap().d1_gap_vs_main, 1);
        assert_eq!(gap_report(d(18, 18)).unwrap().d1_gap_vs_main, 2);
        assert_eq!(gap_report(d(4, 4)).unwrap().d1_gap_vs_main, 1);
    }

    #[test]
    fn gap_report_canonicalizes_orientation() {
        let a = gap_report(d(9, 21)).unwrap();
        let b = gap_report(d(21, 9)).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.n, a.m), (21, 9));
    }

    #[test]
    fn csv_row_shape() {
        let r = bounds_report(d(7, 11)).unwrap();
        assert_eq!(r.to_csv_row(), "7,11,26,28,28,31,34,31,3");
    }
}
