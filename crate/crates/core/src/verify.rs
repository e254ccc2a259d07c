//! Certificates for percolating, minimal percolating and corner-avoiding sets.
//!
//! Minimality is checked one deletion at a time: every proper subset of `A`
//! sits inside some `A ∖ {v}`, and closure is monotone. Deletions are checked
//! in parallel; the reported witness is always the lexicographically first
//! failing point, so the verdict does not depend on scheduling.

use std::fmt;

use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::grid::{GridDims, Point, PointSet, Rect};
use crate::lattice::{closure_d, Coords, LatticeDims, LatticeSet};
use crate::percolation::{closure, percolates};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Reason {
    Ok,
    NotPercolating,
    RedundantPoint,
    CornerReached,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::Ok => "ok",
            Reason::NotPercolating => "not-percolating",
            Reason::RedundantPoint => "redundant-point",
            Reason::CornerReached => "corner-reached",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict<W = Point> {
    pub holds: bool,
    pub witness: Option<W>,
    pub detail: Reason,
}

impl<W> Verdict<W> {
    fn ok() -> Self {
        Verdict { holds: true, witness: None, detail: Reason::Ok }
    }

    fn fail(detail: Reason, witness: Option<W>) -> Self {
        Verdict { holds: false, witness, detail }
    }
}

/// `J_L = [(1,n−1),(2,n)]` and `J_R = [(m−1,1),(m,2)]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Corners {
    pub jl: Rect,
    pub jr: Rect,
}

impl Corners {
    pub fn of(dims: GridDims) -> Result<Self> {
        let (m, n) = (dims.m(), dims.n());
        if m < 2 || n < 2 {
            return Err(domain(format!("corners need a grid of at least 2x2, got {dims}")));
        }
        Ok(Corners {
            jl: Rect { lo: Point::new(1, n - 1), hi: Point::new(2, n) },
            jr: Rect { lo: Point::new(m - 1, 1), hi: Point::new(m, 2) },
        })
    }

    pub fn to_set(&self, dims: GridDims) -> PointSet {
        let mut s = PointSet::new(dims);
        for p in self.jl.points().chain(self.jr.points()) {
            s.insert(p).expect("corners lie inside the grid");
        }
        s
    }
}

pub fn is_percolating(dims: GridDims, a: &PointSet) -> Verdict {
    if percolates(dims, a) {
        Verdict::ok()
    } else {
        Verdict::fail(Reason::NotPercolating, None)
    }
}

pub fn is_minps(dims: GridDims, a: &PointSet) -> Verdict {
    if !percolates(dims, a) {
        return Verdict::fail(Reason::NotPercolating, None);
    }
    let pts = a.to_vec();
    match pts.par_iter().find_first(|&&v| percolates(dims, &a.without(v))) {
        Some(&v) => Verdict::fail(Reason::RedundantPoint, Some(v)),
        None => Verdict::ok(),
    }
}

pub fn is_corner_avoiding_minps(dims: GridDims, a: &PointSet) -> Result<Verdict> {
    let corners = Corners::of(dims)?.to_set(dims);
    let minps = is_minps(dims, a);
    if !minps.holds {
        return Ok(minps);
    }
    let pts = a.to_vec();
    let hit = pts
        .par_iter()
        .find_first(|&&v| closure(dims, &a.without(v)).infected.intersects(&corners));
    Ok(match hit {
        Some(&v) => Verdict::fail(Reason::CornerReached, Some(v)),
        None => Verdict::ok(),
    })
}

/// Minimality check on a d-dimensional lattice with threshold `r`.
pub fn is_minps_d(dims: &LatticeDims, r: u32, a: &LatticeSet) -> Result<Verdict<Coords>> {
    if !closure_d(dims, r, a)?.infected.is_full() {
        return Ok(Verdict::fail(Reason::NotPercolating, None));
    }
    let pts: Vec<Coords> = a.iter().collect();
    let redundant = pts.par_iter().find_first(|v| {
        closure_d(dims, r, &a.without(v)).map(|c| c.infected.is_full()).unwrap_or(false)
    });
    Ok(match redundant {
        Some(v) => Verdict::fail(Reason::RedundantPoint, Some(v.clone())),
        None => Verdict::ok(),
    })
}

/// Union over `v ∈ A` of `⟨A ∖ {v}⟩`: every cell that some single deletion
/// still infects.
pub fn deletion_shadow(dims: GridDims, a: &PointSet) -> PointSet {
    let pts = a.to_vec();
    pts.par_iter()
        .map(|&v| closure(dims, &a.without(v)).infected)
        .reduce(|| PointSet::new(dims), |x, y| x.union(&y).expect("same grid"))
}
