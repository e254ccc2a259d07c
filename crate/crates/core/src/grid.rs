//! Lattice geometry on the `m × n` grid: points, rectangles and point sets.
//!
//! Coordinates are 1-based with `(1, 1)` at the bottom-left. Cells are stored
//! column-major, so iterating a [`PointSet`] yields points in lexicographic
//! `(x, y)` order.

use std::fmt;

use crate::bits::Bits;
use crate::error::{domain, Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GridDims {
    m: u32,
    n: u32,
}

impl GridDims {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(domain(format!("grid dimensions must be positive, got {m}x{n}")));
        }
        Ok(GridDims { m, n })
    }

    /// Columns.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Rows.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn cells(&self) -> usize {
        self.m as usize * self.n as usize
    }

    pub fn transposed(&self) -> GridDims {
        GridDims { m: self.n, n: self.m }
    }

    pub fn contains(&self, p: Point) -> bool {
        (1..=self.m).contains(&p.x) && (1..=self.n).contains(&p.y)
    }

    #[inline]
    pub(crate) fn index(&self, p: Point) -> usize {
        (p.x as usize - 1) * self.n as usize + (p.y as usize - 1)
    }

    #[inline]
    pub(crate) fn point(&self, i: usize) -> Point {
        let n = self.n as usize;
        Point { x: (i / n) as u32 + 1, y: (i % n) as u32 + 1 }
    }

    pub(crate) fn check(&self, p: Point) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OutOfBounds { point: p.to_string(), dims: self.to_string() })
        }
    }

    /// The whole grid as a rectangle.
    pub fn rect(&self) -> Rect {
        Rect { lo: Point::new(1, 1), hi: Point::new(self.m, self.n) }
    }
}

impl fmt::Display for GridDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]x[{}]", self.m, self.n)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    pub x: u32,
    pub y: u32,
}

impl Point {
    pub const fn new(x: u32, y: u32) -> Self {
        Point { x, y }
    }

    /// Taxicab distance.
    pub fn l1(&self, other: Point) -> u32 {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y)
    }

    /// Shifts by `(k, l)`, failing if a coordinate leaves the positive quadrant.
    pub fn offset(&self, k: i64, l: i64) -> Option<Point> {
        let x = i64::from(self.x) + k;
        let y = i64::from(self.y) + l;
        if x >= 1 && y >= 1 && x <= i64::from(u32::MAX) && y <= i64::from(u32::MAX) {
            Some(Point::new(x as u32, y as u32))
        } else {
            None
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Axis-aligned rectangle `[(a,b),(c,d)]`, both corners inclusive.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rect {
    pub lo: Point,
    pub hi: Point,
}

impl Rect {
    pub fn new(lo: Point, hi: Point) -> Result<Self> {
        if lo.x > hi.x || lo.y > hi.y {
            return Err(domain(format!("degenerate rectangle [{lo},{hi}]")));
        }
        Ok(Rect { lo, hi })
    }

    pub fn width(&self) -> u32 {
        self.hi.x - self.lo.x + 1
    }

    pub fn height(&self) -> u32 {
        self.hi.y - self.lo.y + 1
    }

    /// `(w(R), h(R))`.
    pub fn dim(&self) -> (u32, u32) {
        (self.width(), self.height())
    }

    pub fn area(&self) -> usize {
        self.width() as usize * self.height() as usize
    }

    pub fn contains(&self, p: Point) -> bool {
        (self.lo.x..=self.hi.x).contains(&p.x) && (self.lo.y..=self.hi.y).contains(&p.y)
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (self.lo.x..=self.hi.x).flat_map(move |x| (self.lo.y..=self.hi.y).map(move |y| Point::new(x, y)))
    }

    /// Minimum l1 distance between a cell of `self` and a cell of `other`.
    pub fn distance(&self, other: &Rect) -> u32 {
        let gap = |lo1: u32, hi1: u32, lo2: u32, hi2: u32| {
            if lo2 > hi1 {
                lo2 - hi1
            } else { lo1.saturating_sub(hi2) }
        };
        gap(self.lo.x, self.hi.x, other.lo.x, other.hi.x) + gap(self.lo.y, self.hi.y, other.lo.y, other.hi.y)
    }

    pub fn to_set(&self, dims: GridDims) -> Result<PointSet> {
        PointSet::from_points(dims, self.points())
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// A set of points bound to a grid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    dims: GridDims,
    pub(crate) bits: Bits,
}

impl PointSet {
    pub fn new(dims: GridDims) -> Self {
        PointSet { dims, bits: Bits::new(dims.cells()) }
    }

    pub fn full(dims: GridDims) -> Self {
        PointSet { dims, bits: Bits::full(dims.cells()) }
    }

    /// Collects points, silently merging duplicates.
    pub fn from_points(dims: GridDims, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut s = PointSet::new(dims);
        for p in points {
            s.insert(p)?;
        }
        Ok(s)
    }

    pub(crate) fn from_bits(dims: GridDims, bits: Bits) -> Self {
        debug_assert_eq!(bits.len(), dims.cells());
        PointSet { dims, bits }
    }

    pub fn dims(&self) -> GridDims {
        self.dims
    }

    /// Inserts `p`; returns true when it was not already present.
    pub fn insert(&mut self, p: Point) -> Result<bool> {
        self.dims.check(p)?;
        Ok(self.bits.set(self.dims.index(p)))
    }

    pub fn remove(&mut self, p: Point) -> bool {
        self.dims.contains(p) && self.bits.clear(self.dims.index(p))
    }

    pub fn contains(&self, p: Point) -> bool {
        self.dims.contains(p) && self.bits.get(self.dims.index(p))
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.dims.cells()
    }

    /// Points in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        self.bits.ones().map(|i| self.dims.point(i))
    }

    pub fn to_vec(&self) -> Vec<Point> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.dims == other.dims && self.bits.is_subset(&other.bits)
    }

    pub fn intersects(&self, other: &PointSet) -> bool {
        self.dims == other.dims && self.bits.intersects(&other.bits)
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet> {
        self.same_dims(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(PointSet::from_bits(self.dims, bits))
    }

    pub fn intersection(&self, other: &PointSet) -> Result<PointSet> {
        self.same_dims(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(PointSet::from_bits(self.dims, bits))
    }

    pub fn difference(&self, other: &PointSet) -> Result<PointSet> {
        self.same_dims(other)?;
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Ok(PointSet::from_bits(self.dims, bits))
    }

    /// `self ∖ {p}`.
    pub fn without(&self, p: Point) -> PointSet {
        let mut s = self.clone();
        s.remove(p);
        s
    }

    /// Re-binds the same points to a larger (or equal) grid.
    pub fn embed(&self, dims: GridDims) -> Result<PointSet> {
        PointSet::from_points(dims, self.iter())
    }

    fn same_dims(&self, other: &PointSet) -> Result<()> {
        if self.dims == other.dims {
            Ok(())
        } else {
            Err(domain(format!("point sets on {} and {} cannot be combined", self.dims, other.dims)))
        }
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet{} ", self.dims)?;
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `A + (k, l)` placed in `target`.
pub fn translate(a: &PointSet, k: i64, l: i64, target: GridDims) -> Result<PointSet> {
    let mut out = PointSet::new(target);
    for p in a.iter() {
        let q = p.offset(k, l).ok_or_else(|| Error::OutOfBounds {
            point: format!("{p}+({k},{l})"),
            dims: target.to_string(),
        })?;
        out.insert(q)?;
    }
    Ok(out)
}

/// Minimum l1 distance between members of `a` and `b`.
pub fn set_distance(a: &PointSet, b: &PointSet) -> Result<u32> {
    if a.is_empty() || b.is_empty() {
        return Err(domain("set distance of an empty set"));
    }
    let bs = b.to_vec();
    Ok(a.iter()
        .map(|p| bs.iter().map(|&q| p.l1(q)).min().unwrap_or(u32::MAX))
        .min()
        .unwrap_or(u32::MAX))
}

/// Half-turn image `(x, y) ↦ (m' − x + 1, n' − y + 1)` inside `target = (m', n')`.
pub fn rotate180(a: &PointSet, target: GridDims) -> Result<PointSet> {
    let mut out = PointSet::new(target);
    for p in a.iter() {
        if p.x > target.m() || p.y > target.n() {
            return Err(Error::OutOfBounds { point: p.to_string(), dims: target.to_string() });
        }
        out.insert(Point::new(target.m() - p.x + 1, target.n() - p.y + 1))?;
    }
    Ok(out)
}

/// Mirror in the main diagonal, `(x, y) ↦ (y, x)`.
pub fn transpose(a: &PointSet) -> PointSet {
    let dims = a.dims().transposed();
    let mut out = PointSet::new(dims);
    for p in a.iter() {
        out.bits.set(dims.index(Point::new(p.y, p.x)));
    }
    out
}
