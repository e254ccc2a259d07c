//! Plain-text persistence: `.pts` point sets and the `results.tsv` cache.
//!
//! A `.pts` file starts with `dims <m> <n>` followed by one `<x> <y>` per
//! line, or with `ldims <n> <d>` followed by `d` coordinates per line. `#`
//! starts a comment and blank lines are ignored. Duplicates are rejected.

use std::fmt::Write as _;
use std::fs::{self, OpenOptions};
use std::io::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::grid::{GridDims, Point, PointSet};
use crate::lattice::{LatticeDims, LatticeSet, DEFAULT_CELL_CAP};

/// Either kind of point set a `.pts` file can hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnySet {
    Grid(PointSet),
    Lattice(LatticeSet),
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn numbers(line: usize, s: &str) -> Result<Vec<u32>> {
    s.split_whitespace()
        .map(|t| t.parse::<u32>().map_err(|_| parse_err(line, format!("`{t}` is not a non-negative integer"))))
        .collect()
}

pub fn parse_pts(text: &str) -> Result<PointSet> {
    match parse_any(text, DEFAULT_CELL_CAP)? {
        AnySet::Grid(s) => Ok(s),
        AnySet::Lattice(_) => Err(parse_err(1, "expected a `dims` header, found `ldims`")),
    }
}

pub fn parse_lpts(text: &str, cap: u64) -> Result<LatticeSet> {
    match parse_any(text, cap)? {
        AnySet::Lattice(s) => Ok(s),
        AnySet::Grid(_) => Err(parse_err(1, "expected an `ldims` header, found `dims`")),
    }
}

/// Parses either header kind; `cap` bounds the cells of a lattice.
pub fn parse_any(text: &str, cap: u64) -> Result<AnySet> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `dims` header"))?;
    let (kind, rest) = header.split_once(char::is_whitespace).unwrap_or((header, ""));
    let args = numbers(hl, rest)?;
    match kind {
        "dims" => {
            let [m, n] = args[..] else { return Err(parse_err(hl, "expected `dims <m> <n>`")) };
            let dims = GridDims::new(m, n).map_err(|e| parse_err(hl, e.to_string()))?;
            let mut set = PointSet::new(dims);
            for (ln, l) in lines {
                let [x, y] = numbers(ln, l)?[..] else { return Err(parse_err(ln, "expected `<x> <y>`")) };
                let p = Point::new(x, y);
                if !set.insert(p).map_err(|e| parse_err(ln, e.to_string()))? {
                    return Err(parse_err(ln, format!("duplicate point {p}")));
                }
            }
            Ok(AnySet::Grid(set))
        }
        "ldims" => {
            let [n, d] = args[..] else { return Err(parse_err(hl, "expected `ldims <n> <d>`")) };
            let dims = LatticeDims::cube_with_cap(n, d as usize, cap).map_err(|e| parse_err(hl, e.to_string()))?;
            let mut set = LatticeSet::new(dims);
            for (ln, l) in lines {
                let p = numbers(ln, l)?;
                if p.len() != d as usize {
                    return Err(parse_err(ln, format!("expected {d} coordinates, got {}", p.len())));
                }
                if !set.insert(&p).map_err(|e| parse_err(ln, e.to_string()))? {
                    return Err(parse_err(ln, format!("duplicate point {p:?}")));
                }
            }
            Ok(AnySet::Lattice(set))
        }
        other => Err(parse_err(hl, format!("unknown header `{other}`"))),
    }
}

pub fn format_pts(set: &PointSet) -> String {
    let d = set.dims();
    let mut out = format!("dims {} {}\n", d.m(), d.n());
    for p in set.iter() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

/// Only cubes `[n]^d` have a header; other boxes are rejected.
pub fn format_lpts(set: &LatticeSet) -> Result<String> {
    let d = set.dims();
    let side = d
        .cube_side()
        .ok_or_else(|| Error::Domain(format!("only cubes can be written, got {d}")))?;
    let mut out = format!("ldims {side} {}\n", d.dim());
    for p in set.iter() {
        let parts: Vec<String> = p.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", parts.join(" "));
    }
    Ok(out)
}

pub fn load_pts(path: &Path) -> Result<PointSet> {
    parse_pts(&fs::read_to_string(path)?)
}

pub fn load_any(path: &Path, cap: u64) -> Result<AnySet> {
    parse_any(&fs::read_to_string(path)?, cap)
}

pub fn save_pts(path: &Path, set: &PointSet) -> Result<()> {
    Ok(fs::write(path, format_pts(set))?)
}

pub fn save_lpts(path: &Path, set: &LatticeSet) -> Result<()> {
    Ok(fs::write(path, format_lpts(set)?)?)
}

/// One line of `results.tsv`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultRow {
    pub target: String,
    pub m: u32,
    pub n: u32,
    pub value: usize,
    pub exhaustive: bool,
    pub witness_file: Option<String>,
}

pub const RESULTS_HEADER: &str = "target\tm\tn\tvalue\texhaustive\twitness-file";

impl ResultRow {
    pub fn to_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.target,
            self.m,
            self.n,
            self.value,
            self.exhaustive,
            self.witness_file.as_deref().unwrap_or("-")
        )
    }

    pub fn parse(line_no: usize, line: &str) -> Result<Self> {
        let f: Vec<&str> = line.split('\t').collect();
        let [target, m, n, value, exhaustive, witness] = f[..] else {
            return Err(parse_err(line_no, format!("expected 6 tab-separated fields, got {}", f.len())));
        };
        let num = |s: &str| s.parse::<u32>().map_err(|_| parse_err(line_no, format!("bad number `{s}`")));
        Ok(ResultRow {
            target: target.to_string(),
            m: num(m)?,
            n: num(n)?,
            value: num(value)? as usize,
            exhaustive: exhaustive.parse().map_err(|_| parse_err(line_no, format!("bad flag `{exhaustive}`")))?,
            witness_file: (witness != "-").then(|| witness.to_string()),
        })
    }
}

/// Appends a row, writing the header first when the file is new or empty.
pub fn append_result(path: &Path, row: &ResultRow) -> Result<()> {
    let fresh = fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    if fresh {
        writeln!(f, "{RESULTS_HEADER}")?;
    }
    writeln!(f, "{}", row.to_line())?;
    Ok(())
}

pub fn read_results(path: &Path) -> Result<Vec<ResultRow>> {
    let text = fs::read_to_string(path)?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && *l != RESULTS_HEADER && !l.starts_with('#'))
        .map(|(i, l)| ResultRow::parse(i + 1, l))
        .collect()
}
