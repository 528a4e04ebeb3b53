//! Cross-module invariants, mostly property-based.

use gridcds::analysis::{
    self, excess, is_connected, is_dominating, loss_set, loss_vertex, normalize_corner_free,
    random_cds, structure_stats, verify_identity,
};
use gridcds::audit::{audit, CheckStatus};
use gridcds::bounds;
use gridcds::grid::{GridDims, Vertex};
use gridcds::set::VertexSet;
use proptest::prelude::*;

fn dims(n: usize, m: usize) -> GridDims {
    GridDims::new(n, m).unwrap()
}

/// Test-local oracle for the extended closed neighborhood: counts cells
/// of the padded grid that are members or touch one, with its own
/// neighbor arithmetic.
fn dominated_extended_cells(set: &VertexSet) -> usize {
    let d = set.dims();
    let mut count = 0;
    for i in 0..=d.n + 1 {
        for j in 0..=d.m + 1 {
            let mut hit = set.contains(Vertex::new(i, j));
            if i > 0 {
                hit |= set.contains(Vertex::new(i - 1, j));
            }
            if j > 0 {
                hit |= set.contains(Vertex::new(i, j - 1));
            }
            hit |= set.contains(Vertex::new(i + 1, j));
            hit |= set.contains(Vertex::new(i, j + 1));
            if hit {
                count += 1;
            }
        }
    }
    count
}

fn arb_set() -> impl Strategy<Value = VertexSet> {
    (1..=7usize, 1..=7usize, any::<u64>()).prop_map(|(n, m, mask)| {
        let d = dims(n, m);
        VertexSet::from_cells(
            d,
            d.cells().enumerate().filter(|(k, _)| mask >> (k % 64) & 1 == 1).map(|(_, v)| v),
        )
        .unwrap()
    })
}

fn arb_cds() -> impl Strategy<Value = VertexSet> {
    (2..=9usize, 2..=9usize, any::<u64>()).prop_map(|(n, m, seed)| random_cds(dims(n, m), seed))
}

proptest! {
    /// Summing per-cell losses over the dominated padded cells equals
    /// 5|S| minus the dominated-cell count.
    #[test]
    fn loss_double_counting(set in arb_set()) {
        let direct: usize = {
            let d = set.dims();
            let mut total = 0;
            for i in 0..=d.n + 1 {
                for j in 0..=d.m + 1 {
                    if let Ok(l) = loss_vertex(&set, Vertex::new(i, j)) {
                        total += l;
                    }
                }
            }
            total
        };
        prop_assert_eq!(loss_set(&set), direct);
        prop_assert_eq!(direct, 5 * set.len() - dominated_extended_cells(&set));
    }

    #[test]
    fn text_and_json_round_trip(set in arb_set()) {
        prop_assert_eq!(VertexSet::from_text(&set.to_text()).unwrap(), set.clone());
        prop_assert_eq!(VertexSet::from_json(&set.to_json()).unwrap(), set.clone());
        // the ascii body alone reconstructs the same set
        if set.dims().m >= 1 {
            prop_assert_eq!(VertexSet::from_text(&set.to_ascii_body()).unwrap(), set);
        }
    }

    #[test]
    fn random_cds_is_always_a_cds(n in 2..=10usize, m in 2..=10usize, seed in any::<u64>()) {
        let set = random_cds(dims(n, m), seed);
        prop_assert!(is_dominating(&set));
        prop_assert!(is_connected(&set));
        prop_assert_eq!(&random_cds(dims(n, m), seed), &set);
    }

    /// Leaves never exceed d3 + 2*d4 + 2 on any CDS.
    #[test]
    fn handshake_on_random_cds(set in arb_cds()) {
        let st = structure_stats(&set);
        prop_assert!(st.deg3 + 2 * st.deg4 + 2 >= st.leaves);
    }

    /// Degree classes partition the members; bends are a subset of the
    /// degree-2 cells.
    #[test]
    fn degree_classes_partition_members(set in arb_cds()) {
        let st = structure_stats(&set);
        if st.size >= 2 {
            let deg2 = st.size - st.leaves - st.deg3 - st.deg4;
            prop_assert!(st.bends <= deg2);
        }
    }

    /// Some segment direction spans the grid with enough segments.
    #[test]
    fn segment_span_on_random_cds(set in arb_cds()) {
        let report = audit(&set).unwrap();
        prop_assert!(report.check("segment_span").status != CheckStatus::Violated);
    }

    #[test]
    fn normalization_preserves_everything(n in 4..=10usize, m in 4..=10usize, seed in any::<u64>()) {
        let set = random_cds(dims(n, m), seed);
        let norm = normalize_corner_free(&set).unwrap();
        prop_assert_eq!(norm.len(), set.len());
        prop_assert!(is_dominating(&norm));
        prop_assert!(is_connected(&norm));
        prop_assert!(analysis::first_corner_member(&norm).is_none());
        prop_assert_eq!(verify_identity(&norm).unwrap(), true);
    }

    /// Members on the border each dominate exactly one padded-frame cell
    /// once no corner is selected.
    #[test]
    fn excess_counts_frame_coverage(n in 4..=10usize, m in 4..=10usize, seed in any::<u64>()) {
        let set = normalize_corner_free(&random_cds(dims(n, m), seed)).unwrap();
        let outside = dominated_extended_cells(&set) - set.dims().area();
        prop_assert_eq!(excess(&set), outside);
    }
}

#[test]
fn excess_at_least_four_on_cds_in_regime() {
    for n in 4..=9 {
        for m in 4..=9 {
            for seed in 0..4 {
                let set = random_cds(dims(n, m), seed);
                assert!(excess(&set) >= 4, "{n}x{m} seed {seed}");
            }
        }
    }
}

#[test]
fn bound_chain_over_full_range() {
    for n in 4..=500 {
        for m in 4..=500 {
            let d = dims(n, m);
            let b1 = bounds::lower_bound1(d).unwrap();
            let b2 = bounds::lower_bound2(d).unwrap();
            let main = bounds::lower_main(d).unwrap();
            let upper = bounds::upper_bound_sizes(d).unwrap();
            assert!(b1 <= b2 && b2 <= main && main <= upper.min, "{n}x{m}");
        }
    }
}
