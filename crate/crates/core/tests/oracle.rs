mod common;

use minps_core::search::{exact_e, exact_ec, min_percolating};
use minps_core::verify::Corners;
use minps_core::{is_minps, GridDims, SearchBudget};

use common::{brute_force_e, from_mask, sweep_closure, to_flags};

fn serial() -> SearchBudget {
    SearchBudget::unlimited().with_workers(1)
}

fn small_grids(max_cells: u32) -> Vec<(u32, u32)> {
    (1..=max_cells).flat_map(|m| (1..=max_cells / m).map(move |n| (m, n))).collect()
}

#[test]
fn pruned_search_matches_plain_enumeration() {
    for (m, n) in small_grids(16) {
        let d = GridDims::new(m, n).unwrap();
        let r = exact_e(d, serial()).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.value, brute_force_e(m, n), "E({m},{n})");
        assert!(is_minps(d, &r.witness).holds);
    }
}

/// All minimal percolating masks, smallest first in lexicographic point order.
fn minps_masks(m: u32, n: u32) -> Vec<u64> {
    let d = GridDims::new(m, n).unwrap();
    let cells = d.cells();
    let full = vec![true; cells];
    let perc = |mask: u64| sweep_closure(m, n, &to_flags(&from_mask(d, mask))) == full;
    (0u64..1 << cells)
        .filter(|&mask| perc(mask) && (0..cells).filter(|i| mask >> i & 1 == 1).all(|i| !perc(mask & !(1 << i))))
        .collect()
}

fn lex_key(mask: u64) -> Vec<u32> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

#[test]
fn witness_is_lexicographically_smallest_maximiser() {
    for (m, n) in [(3, 3), (4, 2), (2, 5), (4, 3), (3, 4), (7, 2)] {
        let d = GridDims::new(m, n).unwrap();
        let masks = minps_masks(m, n);
        let best = masks.iter().map(|m| m.count_ones()).max().unwrap();
        let want = masks.iter().filter(|m| m.count_ones() == best).min_by_key(|&&m| lex_key(m)).copied().unwrap();
        let r = exact_e(d, serial()).unwrap();
        assert_eq!(r.witness, from_mask(d, want), "{m}x{n}");
    }
}

#[test]
fn corner_avoiding_search_matches_plain_enumeration() {
    for (m, n) in [(2, 2), (3, 2), (3, 3), (4, 3), (4, 4), (5, 3), (6, 2)] {
        let d = GridDims::new(m, n).unwrap();
        let corners = to_flags(&Corners::of(d).unwrap().to_set(d));
        let avoiding = |mask: u64| {
            (0..d.cells()).filter(|i| mask >> i & 1 == 1).all(|i| {
                let c = sweep_closure(m, n, &to_flags(&from_mask(d, mask & !(1 << i))));
                !c.iter().zip(&corners).any(|(a, b)| *a && *b)
            })
        };
        let want = minps_masks(m, n).into_iter().filter(|&k| avoiding(k)).map(|k| k.count_ones() as usize).max();
        let r = exact_ec(d, serial()).unwrap();
        assert_eq!(r.value, want.unwrap_or(0), "Ec({m},{n})");
    }
}

#[test]
fn min_percolating_matches_plain_enumeration() {
    for (m, n) in small_grids(12) {
        let d = GridDims::new(m, n).unwrap();
        let full = vec![true; d.cells()];
        let want = (0u64..1 << d.cells())
            .filter(|&k| sweep_closure(m, n, &to_flags(&from_mask(d, k))) == full)
            .map(|k| k.count_ones() as usize)
            .min()
            .unwrap();
        assert_eq!(min_percolating(d, serial()).unwrap().value, want, "{m}x{n}");
    }
}

#[test]
fn results_do_not_depend_on_workers() {
    for (m, n) in [(5, 5), (6, 4), (7, 3)] {
        let d = GridDims::new(m, n).unwrap();
        let base = exact_e(d, serial()).unwrap();
        let base_c = exact_ec(d, serial()).unwrap();
        for w in [2, 3, 8] {
            let b = SearchBudget::unlimited().with_workers(w);
            let r = exact_e(d, b).unwrap();
            assert_eq!((r.value, &r.witness), (base.value, &base.witness), "{m}x{n} with {w} workers");
            let c = exact_ec(d, b).unwrap();
            assert_eq!((c.value, &c.witness), (base_c.value, &base_c.witness), "{m}x{n} with {w} workers");
        }
    }
}
