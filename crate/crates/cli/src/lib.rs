//! `minps` command-line driver.
//!
//! Exit codes: 0 on success, 1 when a checked property fails, 2 on usage or
//! input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minps_core::constructions::{
    self, cavreg_embed, chain, double_t, glue, justup, lower_bound_set, simple_minps, small_corner_avoiding,
};
use minps_core::ddim::ddim_lower_with_cap;
use minps_core::io::{self, AnySet, ResultRow};
use minps_core::lattice::DEFAULT_CELL_CAP;
use minps_core::search::{self, SearchResult};
use minps_core::{
    is_corner_avoiding_minps, is_minps, is_minps_d, is_percolating, percolates_d, CertifiedSet, Claim, GridDims,
    LatticeDims, RenderOptions, SearchBudget, Verdict,
};

pub const CELL_CAP_ENV: &str = "MINPS_CELL_CAP";

#[derive(Parser, Debug)]
#[command(name = "minps", version, about = "Minimal percolating sets in two-neighbour bootstrap percolation")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a set from one of the construction families.
    Construct(ConstructArgs),
    /// Check a property of a set read from a .pts file.
    Verify(VerifyArgs),
    /// Exact search for E, Ec or the minimum percolating size.
    Search(SearchArgs),
    /// Draw a set as text, top row first.
    Render(RenderArgs),
    /// Table of E(m, n) with monotonicity and upper-bound checks.
    Table(TableArgs),
    /// Lower and upper bounds on E(m, n).
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Simple,
    Small,
    Glue,
    Chain,
    Double,
    Justup,
    Lower,
    Cavreg,
    Ddim,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// `key=value` pairs, comma separated or repeated.
    #[arg(long = "params", value_delimiter = ',')]
    params: Vec<String>,
    /// Output file; the set is printed when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Property {
    Percolating,
    Minps,
    CornerAvoiding,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    property: Property,
    file: PathBuf,
    /// Threshold for d-dimensional sets.
    #[arg(long, default_value_t = 2)]
    r: u32,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SearchTarget {
    #[value(name = "E")]
    E,
    #[value(name = "Ec")]
    Ec,
    #[value(name = "minperc")]
    MinPerc,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Seconds.
    #[arg(long)]
    max_time: Option<f64>,
    #[arg(long)]
    workers: Option<usize>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget, Failure> {
        let mut b = SearchBudget::default();
        if let Some(n) = self.max_nodes {
            b = b.with_max_nodes(n);
        }
        if let Some(t) = self.max_time {
            let t = Duration::try_from_secs_f64(t).map_err(|e| usage(format!("--max-time: {e}")))?;
            b = b.with_max_time(t);
        }
        if let Some(w) = self.workers {
            b = b.with_workers(w);
        }
        Ok(b)
    }
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, value_enum)]
    target: SearchTarget,
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    dims: Option<Vec<u32>>,
    /// Search the lattice `[n]^d` instead of a grid (minperc only).
    #[arg(long = "d-lattice", num_args = 2, value_names = ["N", "D"])]
    d_lattice: Option<Vec<u32>>,
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Print the E table for all grids up to `--dims` instead.
    #[arg(long)]
    table: bool,
    /// Append the result to this results cache.
    #[arg(long)]
    results: Option<PathBuf>,
    /// Write the witness to this file.
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    file: PathBuf,
    /// Mark cells of the closure.
    #[arg(long)]
    closure: bool,
    /// List the maximal rectangles of the closure.
    #[arg(long)]
    rects: bool,
    #[arg(long, default_value_t = '#')]
    on: char,
    #[arg(long, default_value_t = '.')]
    off: char,
    #[arg(long, default_value_t = '+')]
    closure_glyph: char,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    max: Vec<u32>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    dims: Vec<u32>,
}

enum Failure {
    Property(String),
    Usage(String),
}

impl From<minps_core::Error> for Failure {
    fn from(e: minps_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Cell cap for d-dimensional lattices, from the environment when set.
fn cell_cap() -> Result<u64, Failure> {
    match std::env::var(CELL_CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("{CELL_CAP_ENV}: `{v}` is not a cell count"))),
        Err(_) => Ok(DEFAULT_CELL_CAP),
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match cli.cmd {
        Command::Construct(a) => construct(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Search(a) => search_cmd(a, out),
        Command::Render(a) => render_cmd(a, out),
        Command::Table(a) => table_cmd(&a.max, &a.budget, out),
        Command::Bounds(a) => bounds_cmd(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Property(msg)) => {
            let _ = writeln!(err, "{msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn io_err(e: std::io::Error) -> Failure {
    usage(e.to_string())
}

struct Params(BTreeMap<String, String>);

impl Params {
    fn parse(raw: &[String]) -> Result<Self, Failure> {
        let mut map = BTreeMap::new();
        for item in raw.iter().flat_map(|s| s.split_whitespace()) {
            let (k, v) = item.split_once('=').ok_or_else(|| usage(format!("parameter `{item}` is not key=value")))?;
            if map.insert(k.to_string(), v.to_string()).is_some() {
                return Err(usage(format!("parameter `{k}` given twice")));
            }
        }
        Ok(Params(map))
    }

    fn num(&mut self, key: &str) -> Result<u32, Failure> {
        let v = self.0.remove(key).ok_or_else(|| usage(format!("missing parameter `{key}`")))?;
        v.parse().map_err(|_| usage(format!("parameter `{key}`: `{v}` is not a non-negative integer")))
    }

    fn opt_num(&mut self, key: &str) -> Result<Option<u32>, Failure> {
        if self.0.contains_key(key) {
            self.num(key).map(Some)
        } else {
            Ok(None)
        }
    }

    fn file(&mut self, key: &str) -> Option<PathBuf> {
        self.0.remove(key).map(PathBuf::from)
    }

    fn finish(self) -> Outcome {
        match self.0.keys().next() {
            Some(k) => Err(usage(format!("unknown parameter `{k}`"))),
            None => Ok(()),
        }
    }
}

/// Reads a set and certifies the claim it is about to be used under.
fn load_certified(path: &Path, claim: Claim) -> Result<CertifiedSet, Failure> {
    let set = io::load_pts(path)?;
    let v = match claim {
        Claim::CornerAvoidingMinps => is_corner_avoiding_minps(set.dims(), &set)?,
        _ => is_minps(set.dims(), &set),
    };
    if !v.holds {
        return Err(usage(format!("{}: not a {claim} ({})", path.display(), v.detail)));
    }
    let len = set.len();
    Ok(CertifiedSet { set, claim, size_formula: len, bound: len })
}

/// A corner-avoiding input: `input=<file>` or the gadget `k=<k>`.
fn gadget_or_file(p: &mut Params) -> Result<CertifiedSet, Failure> {
    match p.file("input") {
        Some(f) => load_certified(&f, Claim::CornerAvoidingMinps),
        None => Ok(small_corner_avoiding(p.num("k")?)?),
    }
}

fn construct(a: ConstructArgs, out: &mut dyn Write) -> Outcome {
    let mut p = Params::parse(&a.params)?;
    let built: Result<CertifiedSet, Failure> = match a.family {
        Family::Simple => {
            let (m, n) = (p.num("m")?, p.num("n")?);
            Ok(simple_minps(m, n)?)
        }
        Family::Small => Ok(small_corner_avoiding(p.num("k")?)?),
        Family::Glue => {
            let left = match p.file("left") {
                Some(f) => load_certified(&f, Claim::CornerAvoidingMinps)?,
                None => small_corner_avoiding(p.num("k1")?)?,
            };
            let right = match p.file("right") {
                Some(f) => load_certified(&f, Claim::CornerAvoidingMinps)?,
                None => small_corner_avoiding(p.num("k2")?)?,
            };
            Ok(glue(&left, &right)?)
        }
        Family::Chain => {
            let x = gadget_or_file(&mut p)?;
            Ok(chain(&x, p.num("copies")?)?)
        }
        Family::Double => {
            let x = gadget_or_file(&mut p)?;
            Ok(double_t(&x, p.num("t")?)?)
        }
        Family::Justup => {
            let (m, n) = (p.num("M")?, p.num("N")?);
            Ok(justup(m, n)?)
        }
        Family::Lower => {
            let (m, n) = (p.num("m")?, p.num("n")?);
            Ok(lower_bound_set(m, n)?)
        }
        Family::Cavreg => {
            let inner = match p.file("input") {
                Some(f) => load_certified(&f, Claim::Minps)?,
                None => {
                    let (m, n) = (p.num("m")?, p.num("n")?);
                    lower_bound_set(m, n)?
                }
            };
            Ok(cavreg_embed(&inner)?)
        }
        Family::Ddim => {
            let (n, d) = (p.num("n")?, p.opt_num("d")?.unwrap_or(3));
            p.finish()?;
            let c = ddim_lower_with_cap(n, d as usize, cell_cap()?)?;
            let text = io::format_lpts(&c.set)?;
            writeln!(out, "ddim: {} points on [{n}]^{d}, density {:.6}, {:?}", c.size, c.density(), c.family)
                .map_err(io_err)?;
            return emit(a.output.as_deref(), &text, out);
        }
    };
    let c = built?;
    p.finish()?;
    let text = io::format_pts(&c.set);
    if a.output.is_some() {
        let name = a.family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        writeln!(out, "{name}: {} points on {}, {} (bound {})", c.len(), c.dims(), c.claim, c.bound)
            .map_err(io_err)?;
    }
    emit(a.output.as_deref(), &text, out)
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Outcome {
    match path {
        Some(p) => std::fs::write(p, text).map_err(io_err),
        None => out.write_all(text.as_bytes()).map_err(io_err),
    }
}

fn report<W>(v: &Verdict<W>, show: impl Fn(&W) -> String, what: &str, out: &mut dyn Write) -> Outcome {
    if v.holds {
        writeln!(out, "ok: {what}").map_err(io_err)
    } else {
        let witness = v.witness.as_ref().map(|w| format!(" at {}", show(w))).unwrap_or_default();
        Err(Failure::Property(format!("fail: not {what}: {}{witness}", v.detail)))
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Outcome {
    match io::load_any(&a.file, cell_cap()?)? {
        AnySet::Grid(s) => {
            let d = s.dims();
            let (v, what) = match a.property {
                Property::Percolating => (is_percolating(d, &s), "percolating"),
                Property::Minps => (is_minps(d, &s), "a minimal percolating set"),
                Property::CornerAvoiding => (is_corner_avoiding_minps(d, &s)?, "a corner-avoiding minimal percolating set"),
            };
            writeln!(out, "{} points on {d}", s.len()).map_err(io_err)?;
            report(&v, |p| p.to_string(), what, out)
        }
        AnySet::Lattice(s) => {
            let d = s.dims().clone();
            writeln!(out, "{} points on {d}, r = {}", s.len(), a.r).map_err(io_err)?;
            match a.property {
                Property::Percolating => {
                    if percolates_d(&d, a.r, &s)? {
                        writeln!(out, "ok: percolating").map_err(io_err)
                    } else {
                        Err(Failure::Property("fail: not percolating".into()))
                    }
                }
                Property::Minps => report(&is_minps_d(&d, a.r, &s)?, |p| format!("{p:?}"), "a minimal percolating set", out),
                Property::CornerAvoiding => Err(usage("corner avoidance is defined on planar grids only")),
            }
        }
    }
}

fn two(v: &[u32], flag: &str) -> Result<(u32, u32), Failure> {
    match v {
        [a, b] => Ok((*a, *b)),
        _ => Err(usage(format!("{flag} takes two values"))),
    }
}

fn summary<S>(r: &SearchResult<S>, out: &mut dyn Write) -> Outcome {
    writeln!(out, "{}", r.value).map_err(io_err)?;
    writeln!(
        out,
        "{} {}, {} nodes, {:.3}s",
        r.target,
        if r.exhaustive { "exact" } else { "lower bound (budget exhausted)" },
        r.nodes,
        r.elapsed.as_secs_f64()
    )
    .map_err(io_err)
}

fn search_cmd(a: SearchArgs, out: &mut dyn Write) -> Outcome {
    let budget = a.budget.budget()?;
    if a.table {
        let dims = a.dims.as_deref().ok_or_else(|| usage("--table needs --dims"))?;
        return table_cmd(dims, &a.budget, out);
    }
    let (m, n, exhaustive, value, witness_text) = if let Some(l) = &a.d_lattice {
        let (side, d) = two(l, "--d-lattice")?;
        if !matches!(a.target, SearchTarget::MinPerc) {
            return Err(usage("--d-lattice is only supported with --target minperc"));
        }
        let dims = LatticeDims::cube_with_cap(side, d as usize, cell_cap()?)?;
        let r = search::min_percolating_d(&dims, a.r, budget)?;
        summary(&r, out)?;
        (side, side, r.exhaustive, r.value, io::format_lpts(&r.witness)?)
    } else {
        let (m, n) = two(a.dims.as_deref().ok_or_else(|| usage("--dims or --d-lattice is required"))?, "--dims")?;
        let dims = GridDims::new(m, n)?;
        let r = match a.target {
            SearchTarget::E => search::exact_e(dims, budget)?,
            SearchTarget::Ec => search::exact_ec(dims, budget)?,
            SearchTarget::MinPerc => search::min_percolating(dims, budget)?,
        };
        summary(&r, out)?;
        (m, n, r.exhaustive, r.value, io::format_pts(&r.witness))
    };
    if let Some(w) = &a.witness {
        std::fs::write(w, &witness_text).map_err(io_err)?;
    }
    if let Some(path) = &a.results {
        let target = match (&a.target, &a.d_lattice) {
            (SearchTarget::MinPerc, Some(l)) => format!("minperc[d={},r={}]", l[1], a.r),
            (SearchTarget::E, _) => "E".into(),
            (SearchTarget::Ec, _) => "Ec".into(),
            (SearchTarget::MinPerc, None) => "minperc".into(),
        };
        let row = ResultRow {
            target,
            m,
            n,
            value,
            exhaustive,
            witness_file: a.witness.as_ref().map(|p| p.display().to_string()),
        };
        io::append_result(path, &row)?;
    }
    Ok(())
}

fn render_cmd(a: RenderArgs, out: &mut dyn Write) -> Outcome {
    let set = io::load_pts(&a.file)?;
    let opts = RenderOptions {
        glyph_on: a.on,
        glyph_off: a.off,
        glyph_closure: a.closure_glyph,
        show_closure: a.closure,
        show_rects: a.rects,
    };
    let text = minps_core::render(&set, &opts)?;
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn table_cmd(max: &[u32], budget: &BudgetArgs, out: &mut dyn Write) -> Outcome {
    let (mm, nn) = two(max, "--max")?;
    let t = search::monotonicity_table(mm, nn, budget.budget()?)?;
    let mut header = String::from("m\\n");
    for n in 1..=nn {
        header.push_str(&format!("\t{n}"));
    }
    writeln!(out, "{header}").map_err(io_err)?;
    for m in 1..=mm {
        let mut line = m.to_string();
        for n in 1..=nn {
            let e = t.get(m, n).expect("entry inside the table");
            line.push_str(&format!("\t{}{}", e.value, if e.exhaustive { "" } else { "+" }));
        }
        writeln!(out, "{line}").map_err(io_err)?;
    }
    let bad = t.violations();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Property(bad.join("\n")))
    }
}

fn bounds_cmd(a: BoundsArgs, out: &mut dyn Write) -> Outcome {
    let (m, n) = two(&a.dims, "--dims")?;
    let b = constructions::bounds(m, n)?;
    let upper = *b.upper.numer() as f64 / *b.upper.denom() as f64;
    writeln!(out, "lower {} ({}{})", b.lower, b.lower_family, if b.certified { ", certified" } else { "" })
        .map_err(io_err)?;
    writeln!(out, "upper {} = {upper:.3}", b.upper).map_err(io_err)
}
