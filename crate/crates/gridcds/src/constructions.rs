//! Reference connected dominating sets for grids with n,m >= 4.
//!
//! `d1` fills columns 2 and m-1, bridges them along row 2 and drops a
//! vertical rib from the bridge every third column. `d2` is the same
//! pattern with rows and columns exchanged. Their sizes realize the
//! closed-form upper bound evaluated in [`crate::bounds`].

use crate::grid::{GridDims, Vertex};
use crate::set::VertexSet;
use crate::Result;

/// The column-ladder construction:
/// `{(i,2)} ∪ {(i,m-1)} ∪ {(2,j): 3<=j<=m-2} ∪ {(i,3k+2): 3<=i<=n, 1<=k<=⌊(m-4)/3⌋}`.
///
/// Size `2n + (m-4) + ⌊(m-4)/3⌋·(n-2)`; always a corner-free CDS.
pub fn build_d1(dims: GridDims) -> Result<VertexSet> {
    dims.require_formula_regime()?;
    let GridDims { n, m } = dims;
    let mut set = VertexSet::new(dims);
    for i in 1..=n {
        set.insert(Vertex::new(i, 2))?;
        set.insert(Vertex::new(i, m - 1))?;
    }
    for j in 3..=m.saturating_sub(2) {
        set.insert(Vertex::new(2, j))?;
    }
    for k in 1..=(m - 4) / 3 {
        for i in 3..=n {
            set.insert(Vertex::new(i, 3 * k + 2))?;
        }
    }
    Ok(set)
}

/// The row-ladder construction:
/// `{(2,j)} ∪ {(n-1,j)} ∪ {(i,2): 3<=i<=n-2} ∪ {(3k+2,j): 1<=k<=⌊(n-4)/3⌋, 3<=j<=m}`.
///
/// Size `2m + (n-4) + ⌊(n-4)/3⌋·(m-2)`; always a CDS.
pub fn build_d2(dims: GridDims) -> Result<VertexSet> {
    dims.require_formula_regime()?;
    let GridDims { n, m } = dims;
    let mut set = VertexSet::new(dims);
    for j in 1..=m {
        set.insert(Vertex::new(2, j))?;
        set.insert(Vertex::new(n - 1, j))?;
    }
    for i in 3..=n.saturating_sub(2) {
        set.insert(Vertex::new(i, 2))?;
    }
    for k in 1..=(n - 4) / 3 {
        for j in 3..=m {
            set.insert(Vertex::new(3 * k + 2, j))?;
        }
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{is_connected, is_dominating, structure_stats};
    use crate::bounds;
    use crate::set::set_of;

    fn d(n: usize, m: usize) -> GridDims {
        GridDims::new(n, m).unwrap()
    }

    /// Hand-listed 7x11 instance: full columns 2 and 10, row-2 bridge,
    /// vertical ribs in columns 5 and 8.
    fn d1_7x11_expected() -> VertexSet {
        let mut cells: Vec<(usize, usize)> = Vec::new();
        cells.extend((1..=7).map(|i| (i, 2)));
        cells.extend((1..=7).map(|i| (i, 10)));
        cells.extend((3..=9).map(|j| (2, j)));
        cells.extend((3..=7).flat_map(|i| [(i, 5), (i, 8)]));
        set_of(d(7, 11), &cells)
    }

    fn d2_7x11_expected() -> VertexSet {
        let mut cells: Vec<(usize, usize)> = Vec::new();
        cells.extend((1..=11).map(|j| (2, j)));
        cells.extend((1..=11).map(|j| (6, j)));
        cells.extend((3..=5).map(|i| (i, 2)));
        cells.extend((3..=11).map(|j| (5, j)));
        set_of(d(7, 11), &cells)
    }

    #[test]
    fn d1_7x11_matches_hand_listing() {
        let built = build_d1(d(7, 11)).unwrap();
        assert_eq!(built, d1_7x11_expected());
        assert_eq!(built.len(), 31);
    }

    #[test]
    fn d2_7x11_matches_hand_listing() {
        let built = build_d2(d(7, 11)).unwrap();
        assert_eq!(built, d2_7x11_expected());
        assert_eq!(built.len(), 34);
    }

    #[test]
    fn smallest_instances_are_double_lines() {
        let d1 = build_d1(d(4, 4)).unwrap();
        assert_eq!(d1.to_ascii_body(), ".##.\n.##.\n.##.\n.##.\n");
        assert_eq!(d1.len(), 8);
        let d2 = build_d2(d(4, 4)).unwrap();
        assert_eq!(d2.to_ascii_body(), "....\n####\n####\n....\n");
        assert_eq!(d2.len(), 8);
    }

    #[test]
    fn rejects_small_grids() {
        assert!(build_d1(d(3, 7)).is_err());
        assert!(build_d2(d(7, 3)).is_err());
    }

    #[test]
    fn all_instances_are_cds_with_closed_form_sizes() {
        for n in 4..=20 {
            for m in 4..=20 {
                let dims = d(n, m);
                let upper = bounds::upper_bound_sizes(dims).unwrap();
                let d1 = build_d1(dims).unwrap();
                let d2 = build_d2(dims).unwrap();
                assert_eq!(d1.len(), upper.d1, "d1 size at {dims}");
                assert_eq!(d2.len(), upper.d2, "d2 size at {dims}");
                for (name, s) in [("d1", &d1), ("d2", &d2)] {
                    assert!(is_dominating(s), "{name} dominates {dims}");
                    assert!(is_connected(s), "{name} connected {dims}");
                }
                assert!(structure_stats(&d1).corner_free, "d1 corner-free {dims}");
            }
        }
    }

    #[test]
    fn d1_transposes_to_d2_in_size() {
        for n in 4..=16 {
            for m in 4..=16 {
                let d1 = build_d1(d(n, m)).unwrap();
                let d2 = build_d2(d(m, n)).unwrap();
                assert_eq!(d1.len(), d2.len(), "sizes at {n}x{m}");
            }
        }
    }

    #[test]
    fn d1_has_no_bends_or_degree_four_joins() {
        // widths with m % 3 == 1 are excluded: there the last rib column
        // is m-2, touching the full column m-1 (see the test below)
        for (n, m) in [(7, 11), (4, 8), (9, 9), (12, 20), (5, 15), (6, 6)] {
            let st = structure_stats(&build_d1(d(n, m)).unwrap());
            assert_eq!(st.bends, 0, "{n}x{m}");
            assert_eq!(st.deg4, 0, "{n}x{m}");
            assert_eq!(st.deg3, (m - 4) / 3 + 2, "{n}x{m}");
        }
    }

    #[test]
    fn d1_rib_touches_right_column_when_width_is_1_mod_3() {
        // the listed vertex set is still a CDS of the right size, but the
        // thin-tree shape is lost for these widths (and for m == 4)
        for (n, m) in [(4, 7), (5, 10), (6, 13), (4, 4)] {
            let set = build_d1(d(n, m)).unwrap();
            let st = structure_stats(&set);
            assert!(st.bends > 0, "{n}x{m}");
            assert!(crate::analysis::has_2x2_block(&set), "{n}x{m}");
            assert!(st.edges + 1 > st.size, "{n}x{m} not a tree");
        }
    }

    #[test]
    fn d1_7x11_structure() {
        let set = build_d1(d(7, 11)).unwrap();
        let st = structure_stats(&set);
        assert_eq!(st.size, 31);
        assert_eq!(st.leaves, 6);
        assert_eq!((st.bends, st.deg3, st.deg4), (0, 4, 0));
        assert_eq!(st.excess, 6);
        assert_eq!(st.loss, 72);
        assert_eq!(st.edges, 30);

        let dims = d(7, 11);
        let boundary_members: Vec<_> = set
            .iter()
            .filter(|&v| crate::grid::is_boundary(v, dims).unwrap())
            .map(|v| (v.i, v.j))
            .collect();
        assert_eq!(boundary_members, vec![(1, 2), (1, 10), (7, 2), (7, 5), (7, 8), (7, 10)]);
    }
}
