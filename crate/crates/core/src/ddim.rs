//! Minimal percolating sets on `[n]^d` for `d ∈ {2, 3}` with `r = 2`.
//!
//! Two three-dimensional families are tried, largest first, and the first one
//! that passes the single-deletion check wins:
//!
//! * **sheet chain**: a block `[8] × [Y+2] × [Z+2]` made of two copies of a
//!   planar corner-avoiding set `T` on `[Y] × [Z]` (one the point reflection of
//!   the other) joined by connector points, `k` blocks glued along the first
//!   axis and then grown to the cube one face at a time;
//! * **stacked**: a planar minimal set in the first slice followed by single
//!   seeds, one per used slice, with gaps 1 or 2 and never two 1-gaps in a row.

use crate::constructions::{justup, lower_bound_set, CertifiedSet};
use crate::error::{domain, Error, Result};
use crate::grid::{GridDims, Point, PointSet};
use crate::lattice::{percolates_d, Coords, LatticeDims, LatticeSet, DEFAULT_CELL_CAP};
use crate::verify::{deletion_shadow, is_minps_d};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LatticeFamily {
    Planar,
    SheetChain { blocks: u32, sheet: (u32, u32) },
    Stacked { seeds: usize },
}

/// A set on `[n]^d` verified to be a minimal percolating set for `r = 2`.
#[derive(Clone, Debug)]
pub struct CertifiedLattice {
    pub set: LatticeSet,
    pub family: LatticeFamily,
    pub size: usize,
}

impl CertifiedLattice {
    pub fn density(&self) -> f64 {
        self.size as f64 / self.set.dims().cells() as f64
    }
}

pub fn ddim_lower(n: u32, d: usize) -> Result<CertifiedLattice> {
    ddim_lower_with_cap(n, d, DEFAULT_CELL_CAP)
}

pub fn ddim_lower_with_cap(n: u32, d: usize, cap: u64) -> Result<CertifiedLattice> {
    if n < 2 {
        return Err(domain(format!("side must be at least 2, got {n}")));
    }
    let dims = LatticeDims::cube_with_cap(n, d, cap)?;
    match d {
        2 => {
            let s = lower_bound_set(n, n)?;
            let set = LatticeSet::from_points(dims, s.set.iter().map(|p| [p.x, p.y]))?;
            Ok(CertifiedLattice { size: set.len(), set, family: LatticeFamily::Planar })
        }
        3 => cube3(n, &dims),
        _ => Err(domain(format!("dimension {d} is not supported; use 2 or 3"))),
    }
}

type Candidate = (usize, LatticeFamily, Box<dyn FnOnce() -> Result<LatticeSet>>);

fn cube3(n: u32, dims: &LatticeDims) -> Result<CertifiedLattice> {
    let mut cands: Vec<Candidate> = Vec::new();
    let mut k = 1;
    while 11 * k - 3 <= n && n >= 2 * k + 3 {
        if let Some((t, sheet)) = best_sheet(n - 2 * k, n - 2 * k)? {
            let predicted = k as usize * (2 * t.len() + 4) + 2 * (k as usize - 1);
            let family = LatticeFamily::SheetChain { blocks: k, sheet };
            cands.push((predicted, family, Box::new(move || sheet_chain(&t, k, n))));
        }
        k += 1;
    }
    if let Some(plan) = stacked_plan(n)? {
        let family = LatticeFamily::Stacked { seeds: plan.seeds.len() };
        let predicted = plan.base.len() + plan.seeds.len();
        let dims = dims.clone();
        cands.push((predicted, family, Box::new(move || plan.build(&dims))));
    }
    cands.sort_by(|a, b| b.0.cmp(&a.0));
    for (predicted, family, build) in cands {
        let set = build()?;
        debug_assert!(set.len() >= predicted);
        if is_minps_d(dims, 2, &set)?.holds {
            return Ok(CertifiedLattice { size: set.len(), set, family });
        }
    }
    Err(Error::Internal(format!("no candidate certified on [{n}]^3")))
}

/// Largest planar corner-avoiding gadget fitting in `[ymax] × [zmax]`.
fn best_sheet(ymax: u32, zmax: u32) -> Result<Option<(CertifiedSet, (u32, u32))>> {
    let mut best: Option<(u32, u32, bool, usize)> = None;
    let mut big_m = 1;
    while 11 * big_m - 3 <= ymax.max(zmax) {
        let mut big_n = 1;
        while 3 * big_n + 2 * big_m <= ymax.max(zmax) {
            let (w, h) = (11 * big_m - 3, 3 * big_n + 2 * big_m);
            let size = 4 * big_m as usize * (big_n as usize + 1) + 2 * (big_m as usize - 1);
            for flip in [false, true] {
                let (y, z) = if flip { (h, w) } else { (w, h) };
                if y <= ymax && z <= zmax && best.is_none_or(|b| size > b.3) {
                    best = Some((big_m, big_n, flip, size));
                }
            }
            big_n += 1;
        }
        big_m += 1;
    }
    let Some((big_m, big_n, flip, _)) = best else { return Ok(None) };
    let mut t = justup(big_m, big_n)?;
    if flip {
        t = t.transposed();
    }
    let sheet = (t.dims().m(), t.dims().n());
    Ok(Some((t, sheet)))
}

fn boxed(sides: [u32; 3]) -> Result<LatticeDims> {
    LatticeDims::boxed(sides.to_vec())
}

/// Two mirrored copies of `T` and their connectors on `[8] × [Y+2] × [Z+2]`.
fn sheet_block(t: &PointSet) -> Result<LatticeSet> {
    let (y, z) = (t.dims().m(), t.dims().n());
    let dims = boxed([8, y + 2, z + 2])?;
    let mut half: Vec<[u32; 3]> = t.iter().map(|p| [1, p.x, p.y]).collect();
    half.push([2, 1, z]);
    half.push([4, y, 1]);
    let mirrored: Vec<[u32; 3]> = half.iter().map(|&[a, b, c]| [9 - a, y + 3 - b, z + 3 - c]).collect();
    LatticeSet::from_points(dims, half.into_iter().chain(mirrored))
}

fn translated(a: &LatticeSet, offset: [u32; 3], dims: &LatticeDims) -> Result<Vec<Coords>> {
    let pts: Vec<Coords> = a.iter().map(|p| p.iter().zip(offset).map(|(c, o)| c + o).collect()).collect();
    if let Some(p) = pts.iter().find(|p| !dims.contains(p)) {
        return Err(Error::OutOfBounds { point: format!("{p:?}"), dims: dims.to_string() });
    }
    Ok(pts)
}

/// `B ∪ {(m+1,1,1), (m+3,a'+2,b'+2)} ∪ (C + (m+3,2,2))`.
fn glue3(b: &LatticeSet, c: &LatticeSet) -> Result<LatticeSet> {
    let (bs, cs) = (b.dims().sides(), c.dims().sides());
    if cs[1] < bs[1] || cs[2] < bs[2] {
        return Err(domain("glue3: right block must be at least as large in both cross directions"));
    }
    let m = bs[0];
    let dims = boxed([m + cs[0] + 3, cs[1] + 2, cs[2] + 2])?;
    let mut out = LatticeSet::from_points(dims.clone(), b.iter())?;
    out.insert(&[m + 1, 1, 1])?;
    out.insert(&[m + 3, cs[1] + 2, cs[2] + 2])?;
    for p in translated(c, [m + 3, 2, 2], &dims)? {
        out.insert(&p)?;
    }
    Ok(out)
}

/// One more layer along `axis`, moving the last point of the top layer out
/// if the set still percolates, else adding a copy of it.
fn extend3(a: &LatticeSet, axis: usize) -> Result<LatticeSet> {
    let sides = a.dims().sides().to_vec();
    let top = sides[axis];
    let p = a
        .iter()
        .filter(|p| p[axis] == top)
        .last()
        .ok_or_else(|| domain("extend3: no point on the top layer"))?;
    let mut grown = sides;
    grown[axis] += 1;
    let dims = LatticeDims::boxed(grown)?;
    let mut b = LatticeSet::from_points(dims.clone(), a.iter())?;
    let mut q = p.clone();
    q[axis] += 1;
    b.insert(&q)?;
    let c = b.without(&p);
    Ok(if percolates_d(&dims, 2, &c)? { c } else { b })
}

fn sheet_chain(t: &CertifiedSet, k: u32, n: u32) -> Result<LatticeSet> {
    let block = sheet_block(&t.set)?;
    let mut acc = block.clone();
    for _ in 1..k {
        acc = glue3(&block, &acc)?;
    }
    for axis in 0..3 {
        while acc.dims().sides()[axis] < n {
            acc = extend3(&acc, axis)?;
        }
    }
    Ok(acc)
}

struct StackedPlan {
    base: PointSet,
    seeds: Vec<(u32, (u32, u32))>,
}

impl StackedPlan {
    fn build(&self, dims: &LatticeDims) -> Result<LatticeSet> {
        let pts = self
            .base
            .iter()
            .map(|p| [p.x, p.y, 1])
            .chain(self.seeds.iter().map(|&(z, (x, y))| [x, y, z]));
        LatticeSet::from_points(dims.clone(), pts)
    }
}

/// Gaps in `{1, 2}` summing to `total`, first gap 2 when possible, no two
/// consecutive 1-gaps, with as many gaps as possible.
fn seed_gaps(total: u32) -> Vec<u32> {
    if total <= 2 {
        return vec![total];
    }
    // best[s][last] = most gaps covering s with the previous gap `last`.
    let t = total as usize;
    let mut best = vec![[None::<usize>; 3]; t + 1];
    best[t] = [Some(0); 3];
    for s in (0..t).rev() {
        for last in 1..=2 {
            let mut opt = None;
            for g in [1usize, 2] {
                if s + g > t || (g == 1 && last == 1) {
                    continue;
                }
                if let Some(v) = best[s + g][g] {
                    opt = opt.max(Some(v + 1));
                }
            }
            best[s][last] = opt;
        }
    }
    let mut out = vec![2];
    let (mut s, mut last) = (2, 2);
    while s < t {
        let g = [1, 2]
            .into_iter()
            .filter(|&g| s + g <= t && !(g == 1 && last == 1))
            .max_by_key(|&g| best[s + g][g].map(|v| (v, g == 1)))
            .expect("a completion exists");
        out.push(g as u32);
        s += g;
        last = g;
    }
    out
}

fn stacked_plan(n: u32) -> Result<Option<StackedPlan>> {
    let grid = GridDims::new(n, n)?;
    let base = lower_bound_set(n, n)?.set;
    let shadow = deletion_shadow(grid, &base);
    let whole = grid.rect();
    let Some(c) = whole.points().find(|&p| !shadow.contains(p)) else { return Ok(None) };
    let far = whole
        .points().max_by_key(|&q| (q.l1(c), std::cmp::Reverse(q))).expect("grid is non-empty");
    let mut seeds = Vec::new();
    let mut z = 1;
    for (i, g) in seed_gaps(n - 1).into_iter().enumerate() {
        z += g;
        let p: Point = if i % 2 == 0 { c } else { far };
        seeds.push((z, (p.x, p.y)));
    }
    Ok(Some(StackedPlan { base, seeds }))
}

/// The slice pattern read literally: corner-avoiding layers in slices
/// `≡ 0 (mod 4)` and one seed in slices `≡ 1, 3 (mod 4)`, alternating corners.
#[cfg(test)]
fn hyperplane_pattern(n: u32, layer: &PointSet) -> Result<LatticeSet> {
    let dims = LatticeDims::cube(n, 3)?;
    let mut out = LatticeSet::new(dims);
    for z in 1..=n {
        match z % 4 {
            0 => {
                for p in layer.iter() {
                    out.insert(&[p.x, p.y, z])?;
                }
            }
            1 | 3 => {
                let p = if (z / 2) % 2 == 0 { [1, n, z] } else { [n, 1, z] };
                out.insert(&p)?;
            }
            _ => {}
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::small_corner_avoiding;
    use crate::verify::Reason;

    #[test]
    fn gaps() {
        assert_eq!(seed_gaps(1), vec![1]);
        assert_eq!(seed_gaps(2), vec![2]);
        assert_eq!(seed_gaps(3), vec![2, 1]);
        assert_eq!(seed_gaps(7), vec![2, 1, 2, 2]);
        for t in 3..40 {
            let g = seed_gaps(t);
            assert_eq!(g.iter().sum::<u32>(), t);
            assert_eq!(g[0], 2);
            assert!(g.windows(2).all(|w| w[0] + w[1] >= 3), "{g:?}");
        }
    }

    #[test]
    fn planar_delegates() {
        let c = ddim_lower(8, 2).unwrap();
        assert_eq!(c.family, LatticeFamily::Planar);
        assert_eq!(c.size, lower_bound_set(8, 8).unwrap().len());
    }

    #[test]
    fn cube_of_side_eight() {
        let c = ddim_lower(8, 3).unwrap();
        assert!(is_minps_d(c.set.dims(), 2, &c.set).unwrap().holds);
        assert!(c.density() > 0.0);
        assert_eq!(c.size, c.set.len());
    }

    #[test]
    fn small_cubes_certify() {
        for n in 2..=7 {
            let c = ddim_lower(n, 3).unwrap();
            assert!(is_minps_d(c.set.dims(), 2, &c.set).unwrap().holds, "n={n}");
        }
    }

    #[test]
    fn sheet_block_is_minimal() {
        let t = small_corner_avoiding(1).unwrap();
        let b = sheet_block(&t.set).unwrap();
        assert_eq!(b.dims().sides(), &[8, 10, 7]);
        assert_eq!(b.len(), 20);
        assert!(is_minps_d(b.dims(), 2, &b).unwrap().holds);
    }

    #[test]
    fn unsupported_dimensions() {
        assert!(ddim_lower(4, 4).is_err());
        assert!(ddim_lower(4, 1).is_err());
        assert!(matches!(ddim_lower_with_cap(50, 3, 1000), Err(Error::CellCap { .. })));
    }

    #[test]
    fn literal_slice_pattern_is_not_minimal() {
        let layer = small_corner_avoiding(2).unwrap().set;
        let a = hyperplane_pattern(8, &layer).unwrap();
        let v = is_minps_d(a.dims(), 2, &a).unwrap();
        assert!(!v.holds);
        assert_eq!(v.detail, Reason::RedundantPoint);
    }
}
