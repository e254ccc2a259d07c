use minps_core::constructions::{bounds, cavreg_embed, lower_bound_set, simple_minps, small_corner_avoiding};
use minps_core::search::exact_e;
use minps_core::{is_corner_avoiding_minps, is_minps, GridDims, SearchBudget};
use num_rational::Ratio;

#[test]
fn lower_bound_sets_are_minimal_across_a_sweep() {
    for m in (2..=40).step_by(3) {
        for n in (2..=40).step_by(4) {
            let s = lower_bound_set(m, n).unwrap();
            assert_eq!(s.dims(), GridDims::new(m, n).unwrap());
            assert!(is_minps(s.dims(), &s.set).holds, "{m}x{n}");
            assert!(s.len() >= s.bound.max(simple_minps(m, n).unwrap().len()), "{m}x{n}");
        }
    }
}

#[test]
fn larger_spot_checks() {
    for (m, n) in [(85, 11), (60, 90), (100, 40)] {
        let s = lower_bound_set(m, n).unwrap();
        assert!(is_minps(s.dims(), &s.set).holds, "{m}x{n}");
    }
}

#[test]
fn cavreg_on_assorted_inputs() {
    for (m, n) in [(2, 4), (3, 7), (8, 5), (9, 9), (12, 6)] {
        let a = lower_bound_set(m, n).unwrap();
        let c = cavreg_embed(&a).unwrap();
        assert!(is_corner_avoiding_minps(c.dims(), &c.set).unwrap().holds, "{m}x{n}");
    }
    let g = small_corner_avoiding(3).unwrap();
    assert!(cavreg_embed(&g).unwrap().check().holds);
}

#[test]
fn bounds_bracket_exact_values() {
    for m in 2..=6 {
        for n in 2..=m {
            let b = bounds(m, n).unwrap();
            let e = exact_e(GridDims::new(m, n).unwrap(), SearchBudget::default()).unwrap();
            assert!(e.exhaustive);
            assert!(b.lower <= e.value, "{m}x{n}: lower {} > E {}", b.lower, e.value);
            assert!(Ratio::from_integer(e.value as u64) <= b.upper, "{m}x{n}");
        }
    }
    for (m, n) in [(20, 20), (40, 13), (66, 66)] {
        let b = bounds(m, n).unwrap();
        assert!(Ratio::from_integer(b.lower as u64) <= b.upper);
        assert!(b.certified);
    }
}
