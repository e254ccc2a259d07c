use std::path::Path;

use minps_cli::run_with;
use minps_core::io;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("minps").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

#[test]
fn search_three_by_three() {
    let (code, out, _) = run(&["search", "--target", "E", "--dims", "3", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("4"));
    let (code, out, _) = run(&["search", "--target", "Ec", "--dims", "4", "4", "--workers", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("4"));
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "lower.pts");
    let (code, out, _) = run(&["construct", "--family", "lower", "--params", "m=30,n=17", "-o", &f]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("lower: "));
    let set = io::load_pts(Path::new(&f)).unwrap();
    assert!(minps_core::is_minps(set.dims(), &set).holds);
    let (code, out, _) = run(&["verify", "--property", "minps", &f]);
    assert_eq!((code, out.lines().last()), (0, Some("ok: a minimal percolating set")));
    let (code, _, _) = run(&["verify", "--property", "percolating", &f]);
    assert_eq!(code, 0);
}

#[test]
fn every_family_builds() {
    let dir = tempfile::tempdir().unwrap();
    let gadget = path(dir.path(), "g.pts");
    assert_eq!(run(&["construct", "--family", "small", "--params", "k=2", "-o", &gadget]).0, 0);
    let input = format!("input={gadget}");
    let left = format!("left={gadget}");
    for (family, params, property) in [
        ("simple", "m=7,n=4", "minps"),
        ("small", "k=1", "corner-avoiding"),
        ("glue", left.as_str(), "corner-avoiding"),
        ("chain", "k=1 copies=3", "corner-avoiding"),
        ("chain", &format!("{input},copies=2"), "corner-avoiding"),
        ("double", "k=1,t=2", "corner-avoiding"),
        ("justup", "M=1,N=2", "corner-avoiding"),
        ("lower", "m=12,n=12", "minps"),
        ("cavreg", "m=20,n=14", "corner-avoiding"),
        ("ddim", "n=4,d=3", "minps"),
    ] {
        let params = if family == "glue" { format!("{params},k2=3") } else { params.to_string() };
        let f = path(dir.path(), "out.pts");
        let (code, out, err) = run(&["construct", "--family", family, "--params", &params, "-o", &f]);
        assert_eq!(code, 0, "{family} {params}: {out}{err}");
        let (code, out, err) = run(&["verify", "--property", property, &f]);
        assert_eq!(code, 0, "{family} {params}: {out}{err}");
    }
}

#[test]
fn verify_reports_failures() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "bad.pts");
    std::fs::write(&f, "dims 3 3\n1 1\n2 2\n3 3\n1 3\n").unwrap();
    let (code, _, err) = run(&["verify", "--property", "minps", &f]);
    assert_eq!(code, 1);
    assert!(err.contains("redundant-point at (1,3)"), "{err}");
    std::fs::write(&f, "dims 3 3\n1 1\n").unwrap();
    let (code, _, err) = run(&["verify", "--property", "percolating", &f]);
    assert_eq!(code, 1);
    assert!(err.contains("not percolating"), "{err}");
    std::fs::write(&f, "dims 3 3\n1 4\n").unwrap();
    let (code, _, err) = run(&["verify", "--property", "minps", &f]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["search", "--target", "X", "--dims", "3", "3"],
        &["search", "--target", "E"],
        &["search", "--target", "E", "--dims", "3", "3", "--workers", "0"],
        &["construct", "--family", "chain", "--params", "k=1,copies=2,extra=1"],
        &["construct", "--family", "simple", "--params", "m=3"],
        &["verify", "--property", "minps", "/nonexistent/file.pts"],
        &["render", "--on", ".", "/nonexistent/file.pts"],
    ] {
        assert_eq!(run(args).0, 2, "{args:?}");
    }
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("search"));
}

#[test]
fn results_and_witness_files() {
    let dir = tempfile::tempdir().unwrap();
    let results = path(dir.path(), "results.tsv");
    let witness = path(dir.path(), "w.pts");
    for dims in [["3", "3"], ["4", "3"]] {
        let args = ["search", "--target", "E", "--dims", dims[0], dims[1], "--results", &results, "--witness", &witness];
        assert_eq!(run(&args).0, 0);
    }
    let rows = io::read_results(Path::new(&results)).unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!((rows[1].m, rows[1].n, rows[1].value, rows[1].exhaustive), (4, 3, 4, true));
    assert_eq!(rows[1].witness_file.as_deref(), Some(witness.as_str()));
    let w = io::load_pts(Path::new(&witness)).unwrap();
    assert_eq!(w.len(), 4);
    assert!(minps_core::is_minps(w.dims(), &w).holds);
}

#[test]
fn lattice_search_and_budget() {
    let (code, out, _) = run(&["search", "--target", "minperc", "--d-lattice", "3", "3"]);
    assert_eq!((code, out.lines().next()), (0, Some("4")));
    let (code, out, _) = run(&["search", "--target", "E", "--dims", "6", "6", "--max-nodes", "50"]);
    assert_eq!(code, 0);
    assert!(out.contains("budget exhausted"), "{out}");
    assert_eq!(run(&["search", "--target", "E", "--d-lattice", "3", "3"]).0, 2);
}

#[test]
fn render_and_table_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "a.pts");
    std::fs::write(&f, "dims 2 2\n1 1\n2 2\n").unwrap();
    let (code, out, _) = run(&["render", "--closure", &f]);
    assert_eq!((code, out.as_str()), (0, "+#\n#+\n"));
    let (code, out, _) = run(&["render", "--on", "X", "--off", "o", &f]);
    assert_eq!((code, out.as_str()), (0, "oX\nXo\n"));

    let (code, out, _) = run(&["table", "--max", "3", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("3\t2\t3\t4"));
    let (code, out2, _) = run(&["search", "--target", "E", "--dims", "3", "3", "--table"]);
    assert_eq!((code, &out2), (0, &out));

    let (code, out, _) = run(&["bounds", "--dims", "66", "66"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("lower 492 "), "{out}");
    assert!(lines[1].starts_with("upper 2312/3 "), "{out}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_minps");
    let ok = std::process::Command::new(bin).args(["search", "--target", "E", "--dims", "3", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).lines().next(), Some("4"));
    let bad = std::process::Command::new(bin).args(["search", "--dims", "3"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn cell_cap_from_environment() {
    let bin = env!("CARGO_BIN_EXE_minps");
    let capped = std::process::Command::new(bin)
        .env("MINPS_CELL_CAP", "100")
        .args(["construct", "--family", "ddim", "--params", "n=5,d=3"])
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    let fine = std::process::Command::new(bin)
        .env("MINPS_CELL_CAP", "125")
        .args(["construct", "--family", "ddim", "--params", "n=5,d=3"])
        .output()
        .unwrap();
    assert_eq!(fine.status.code(), Some(0));
}
