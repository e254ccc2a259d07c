use minps_core::constructions::small_corner_avoiding;
use minps_core::ddim::ddim_lower;
use minps_core::io::{append_result, load_any, load_pts, read_results, save_lpts, save_pts, AnySet, ResultRow};
use minps_core::lattice::DEFAULT_CELL_CAP;

#[test]
fn save_and_load_files() {
    let dir = tempfile::tempdir().unwrap();
    let s = small_corner_avoiding(2).unwrap().set;
    let p = dir.path().join("a.pts");
    save_pts(&p, &s).unwrap();
    assert_eq!(load_pts(&p).unwrap(), s);

    let c = ddim_lower(5, 3).unwrap();
    let q = dir.path().join("c.pts");
    save_lpts(&q, &c.set).unwrap();
    assert_eq!(load_any(&q, DEFAULT_CELL_CAP).unwrap(), AnySet::Lattice(c.set));
}

#[test]
fn results_cache_appends() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("results.tsv");
    let a = ResultRow { target: "E".into(), m: 3, n: 3, value: 4, exhaustive: true, witness_file: None };
    let b = ResultRow { target: "Ec".into(), m: 8, n: 5, value: 8, exhaustive: false, witness_file: Some("w.pts".into()) };
    append_result(&p, &a).unwrap();
    append_result(&p, &b).unwrap();
    let text = std::fs::read_to_string(&p).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert_eq!(read_results(&p).unwrap(), vec![a, b]);
}
