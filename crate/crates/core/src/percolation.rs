//! Two-neighbour bootstrap dynamics on `G(m, n)`.

use crate::bits::Bits;
use crate::error::{domain, Error, Result};
use crate::grid::{GridDims, Point, PointSet, Rect};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub dims: GridDims,
    pub infected: PointSet,
    /// Rounds of the synchronous process until the fixpoint.
    pub generations: u32,
}

/// The closure split into its maximal rectangles, sorted by lower corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectDecomposition {
    pub rects: Vec<Rect>,
}

/// `⟨A⟩` by counting infected neighbours; each cell is queued once.
pub fn closure(dims: GridDims, a: &PointSet) -> Closure {
    assert_eq!(a.dims(), dims, "seed set lives on a different grid");
    let (m, n) = (dims.m() as usize, dims.n() as usize);
    let mut infected: Bits = a.bits.clone();
    let mut count = vec![0u8; dims.cells()];
    let mut frontier: Vec<usize> = a.bits.ones().collect();
    let mut next = Vec::new();
    let mut generations = 0;
    while !frontier.is_empty() {
        for &v in &frontier {
            let (x, y) = (v / n, v % n);
            let mut touch = |u: usize| {
                if !infected.get(u) {
                    count[u] += 1;
                    if count[u] >= 2 {
                        infected.set(u);
                        next.push(u);
                    }
                }
            };
            if x > 0 {
                touch(v - n);
            }
            if x + 1 < m {
                touch(v + n);
            }
            if y > 0 {
                touch(v - 1);
            }
            if y + 1 < n {
                touch(v + 1);
            }
        }
        if next.is_empty() {
            break;
        }
        generations += 1;
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
    }
    Closure { dims, infected: PointSet::from_bits(dims, infected), generations }
}

pub fn percolates(dims: GridDims, a: &PointSet) -> bool {
    closure(dims, a).infected.is_full()
}

/// `Y ⊆ ⟨X⟩`.
pub fn spans(dims: GridDims, x: &PointSet, y: &PointSet) -> bool {
    y.is_subset(&closure(dims, x).infected)
}

/// `R ⊆ ⟨X ∩ R⟩`.
pub fn internally_spans(dims: GridDims, x: &PointSet, r: &Rect) -> Result<bool> {
    let rs = r.to_set(dims)?;
    let inside = x.intersection(&rs)?;
    Ok(rs.is_subset(&closure(dims, &inside).infected))
}

/// Maximal rectangles of `⟨A⟩`.
///
/// Infected cells are grouped into components under l1 distance ≤ 2 and each
/// component's bounding box is checked to be fully infected and at distance
/// at least 3 from every other box.
pub fn closure_rects(dims: GridDims, a: &PointSet) -> Result<RectDecomposition> {
    let c = closure(dims, a);
    rects_of_closed(&c.infected)
}

pub(crate) fn rects_of_closed(closed: &PointSet) -> Result<RectDecomposition> {
    let dims = closed.dims();
    let mut seen = PointSet::new(dims);
    let mut rects = Vec::new();
    let mut stack = Vec::new();
    for start in closed.iter() {
        if seen.contains(start) {
            continue;
        }
        seen.insert(start)?;
        stack.push(start);
        let (mut lo, mut hi) = (start, start);
        while let Some(p) = stack.pop() {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
            for q in within_two(dims, p) {
                if closed.contains(q) && !seen.contains(q) {
                    seen.insert(q)?;
                    stack.push(q);
                }
            }
        }
        let r = Rect::new(lo, hi)?;
        if r.points().any(|p| !closed.contains(p)) {
            return Err(Error::Internal(format!("component box {r} is not fully infected")));
        }
        rects.push(r);
    }
    for (i, r) in rects.iter().enumerate() {
        for s in &rects[i + 1..] {
            if r.distance(s) < 3 {
                return Err(Error::Internal(format!("rectangles {r} and {s} interact")));
            }
        }
    }
    rects.sort();
    Ok(RectDecomposition { rects })
}

fn within_two(dims: GridDims, p: Point) -> impl Iterator<Item = Point> {
    const OFFSETS: [(i64, i64); 12] = [
        (-2, 0),
        (-1, -1),
        (-1, 0),
        (-1, 1),
        (0, -2),
        (0, -1),
        (0, 1),
        (0, 2),
        (1, -1),
        (1, 0),
        (1, 1),
        (2, 0),
    ];
    OFFSETS
        .iter()
        .filter_map(move |&(dx, dy)| p.offset(dx, dy))
        .filter(move |&q| dims.contains(q))
}

/// Closure restricted to a sub-rectangle, treating `r` as its own grid.
pub fn closure_within(dims: GridDims, a: &PointSet, r: &Rect) -> Result<PointSet> {
    if !dims.contains(r.hi) {
        return Err(domain(format!("rectangle {r} leaves {dims}")));
    }
    let inside = a.intersection(&r.to_set(dims)?)?;
    Ok(closure(dims, &inside).infected)
}
