//! Boxes `[n_1] × … × [n_d]` with the nearest-neighbour lattice structure,
//! and the `r`-neighbour closure on them.

use std::collections::VecDeque;
use std::fmt;

use crate::bits::Bits;
use crate::error::{domain, Error, Result};

/// Default bound on the number of cells of a d-dimensional lattice.
pub const DEFAULT_CELL_CAP: u64 = 10_000_000;

/// A point of a lattice; coordinates are 1-based.
pub type Coords = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticeDims {
    sides: Vec<u32>,
    strides: Vec<usize>,
    cells: usize,
}

impl LatticeDims {
    /// `[n]^d` under the default cell cap.
    pub fn cube(side: u32, dim: usize) -> Result<Self> {
        Self::with_cap(vec![side; dim], DEFAULT_CELL_CAP)
    }

    pub fn cube_with_cap(side: u32, dim: usize, cap: u64) -> Result<Self> {
        Self::with_cap(vec![side; dim], cap)
    }

    pub fn boxed(sides: Vec<u32>) -> Result<Self> {
        Self::with_cap(sides, DEFAULT_CELL_CAP)
    }

    pub fn with_cap(sides: Vec<u32>, cap: u64) -> Result<Self> {
        if sides.is_empty() {
            return Err(domain("lattice dimension must be at least 1"));
        }
        if sides.contains(&0) {
            return Err(domain(format!("lattice sides must be positive, got {sides:?}")));
        }
        let total: u128 = sides.iter().map(|&s| u128::from(s)).product();
        if total > u128::from(cap) {
            return Err(Error::CellCap { cells: total, cap });
        }
        // Last coordinate varies fastest, matching the 2D column-major layout.
        let mut strides = vec![1usize; sides.len()];
        for i in (0..sides.len() - 1).rev() {
            strides[i] = strides[i + 1] * sides[i + 1] as usize;
        }
        Ok(LatticeDims { sides, strides, cells: total as usize })
    }

    pub fn dim(&self) -> usize {
        self.sides.len()
    }

    pub fn sides(&self) -> &[u32] {
        &self.sides
    }

    /// Common side length when the box is a cube.
    pub fn cube_side(&self) -> Option<u32> {
        let s = self.sides[0];
        self.sides.iter().all(|&t| t == s).then_some(s)
    }

    pub fn cells(&self) -> usize {
        self.cells
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        p.len() == self.dim() && p.iter().zip(&self.sides).all(|(&c, &s)| (1..=s).contains(&c))
    }

    pub(crate) fn index(&self, p: &[u32]) -> usize {
        p.iter().zip(&self.strides).map(|(&c, &st)| (c as usize - 1) * st).sum()
    }

    pub(crate) fn coords(&self, mut i: usize) -> Coords {
        let mut out = vec![0; self.dim()];
        for (k, &st) in self.strides.iter().enumerate() {
            out[k] = (i / st) as u32 + 1;
            i %= st;
        }
        out
    }

    fn check(&self, p: &[u32]) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OutOfBounds { point: format!("{p:?}"), dims: self.to_string() })
        }
    }

    /// Calls `f` on each lattice neighbour of cell `i`.
    #[inline]
    pub(crate) fn for_each_neighbour(&self, i: usize, mut f: impl FnMut(usize)) {
        let mut rest = i;
        for (k, &st) in self.strides.iter().enumerate() {
            let c = rest / st;
            rest %= st;
            if c > 0 {
                f(i - st);
            }
            if c + 1 < self.sides[k] as usize {
                f(i + st);
            }
        }
    }
}

impl fmt::Display for LatticeDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sides.iter().map(|s| format!("[{s}]")).collect();
        f.write_str(&parts.join("x"))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticeSet {
    dims: LatticeDims,
    pub(crate) bits: Bits,
}

impl LatticeSet {
    pub fn new(dims: LatticeDims) -> Self {
        let bits = Bits::new(dims.cells());
        LatticeSet { dims, bits }
    }

    pub fn full(dims: LatticeDims) -> Self {
        let bits = Bits::full(dims.cells());
        LatticeSet { dims, bits }
    }

    pub fn from_points<I, P>(dims: LatticeDims, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: AsRef<[u32]>,
    {
        let mut s = LatticeSet::new(dims);
        for p in points {
            s.insert(p.as_ref())?;
        }
        Ok(s)
    }

    pub fn dims(&self) -> &LatticeDims {
        &self.dims
    }

    pub fn insert(&mut self, p: &[u32]) -> Result<bool> {
        self.dims.check(p)?;
        Ok(self.bits.set(self.dims.index(p)))
    }

    pub fn remove(&mut self, p: &[u32]) -> bool {
        self.dims.contains(p) && self.bits.clear(self.dims.index(p))
    }

    pub fn contains(&self, p: &[u32]) -> bool {
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
    pub fn iter(&self) -> impl Iterator<Item = Coords> + '_ {
        self.bits.ones().map(|i| self.dims.coords(i))
    }

    pub fn without(&self, p: &[u32]) -> LatticeSet {
        let mut s = self.clone();
        s.remove(p);
        s
    }

    pub fn is_subset(&self, other: &LatticeSet) -> bool {
        self.dims == other.dims && self.bits.is_subset(&other.bits)
    }
}

impl fmt::Debug for LatticeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticeSet{} ", self.dims)?;
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Debug)]
pub struct LatticeClosure {
    pub infected: LatticeSet,
    pub generations: u32,
}

/// Least fixpoint containing `a` under the `r`-neighbour rule.
pub fn closure_d(dims: &LatticeDims, r: u32, a: &LatticeSet) -> Result<LatticeClosure> {
    if r == 0 {
        return Err(domain("threshold r must be at least 1"));
    }
    if a.dims() != dims {
        return Err(domain(format!("set lives on {}, expected {dims}", a.dims())));
    }
    let mut infected = a.bits.clone();
    let mut count = vec![0u8; dims.cells()];
    let mut frontier: VecDeque<usize> = a.bits.ones().collect();
    let mut generations = 0;
    let mut next = Vec::new();
    while !frontier.is_empty() {
        for &v in frontier.iter() {
            dims.for_each_neighbour(v, |u| {
                if !infected.get(u) {
                    count[u] += 1;
                    if u32::from(count[u]) >= r {
                        infected.set(u);
                        next.push(u);
                    }
                }
            });
        }
        if next.is_empty() {
            break;
        }
        generations += 1;
        frontier.clear();
        frontier.extend(next.drain(..));
    }
    Ok(LatticeClosure { infected: LatticeSet { dims: dims.clone(), bits: infected }, generations })
}

pub fn percolates_d(dims: &LatticeDims, r: u32, a: &LatticeSet) -> Result<bool> {
    Ok(closure_d(dims, r, a)?.infected.is_full())
}
