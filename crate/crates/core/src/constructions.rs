//! Explicit minimal percolating sets on `G(m, n)`.
//!
//! Every generator returns a [`CertifiedSet`]: the points, the property they
//! are claimed to have, the exact cardinality predicted by the construction
//! and the lower bound the construction is guaranteed to meet. The claims are
//! re-checkable with [`CertifiedSet::check`].

use std::fmt;

use num_rational::Ratio;

use crate::error::{domain, Error, Result};
use crate::grid::{rotate180, translate, transpose, GridDims, Point, PointSet};
use crate::percolation::percolates;
use crate::verify::{is_corner_avoiding_minps, is_minps, is_percolating, Verdict};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Claim {
    Percolating,
    Minps,
    CornerAvoidingMinps,
}

impl Claim {
    /// Corner-avoiding sets are in particular minimal.
    pub fn implies_minps(self) -> bool {
        matches!(self, Claim::Minps | Claim::CornerAvoidingMinps)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::Percolating => "percolating",
            Claim::Minps => "minps",
            Claim::CornerAvoidingMinps => "corner-avoiding-minps",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedSet {
    pub set: PointSet,
    pub claim: Claim,
    /// Cardinality predicted by the construction; always equals `set.len()`.
    pub size_formula: usize,
    /// Lower bound on the extremal value the construction witnesses.
    pub bound: usize,
}

impl CertifiedSet {
    fn new(set: PointSet, claim: Claim, size_formula: usize, bound: usize) -> Result<Self> {
        if set.len() != size_formula {
            return Err(Error::Internal(format!(
                "construction produced {} points, formula says {size_formula}",
                set.len()
            )));
        }
        Ok(CertifiedSet { set, claim, size_formula, bound })
    }

    pub fn dims(&self) -> GridDims {
        self.set.dims()
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// Re-runs the verifier for the recorded claim.
    pub fn check(&self) -> Verdict {
        let d = self.dims();
        match self.claim {
            Claim::Percolating => is_percolating(d, &self.set),
            Claim::Minps => is_minps(d, &self.set),
            Claim::CornerAvoidingMinps => {
                is_corner_avoiding_minps(d, &self.set).expect("corner-avoiding sets live on grids of at least 2x2")
            }
        }
    }

    pub fn transposed(&self) -> CertifiedSet {
        CertifiedSet { set: transpose(&self.set), ..self.clone() }
    }
}

fn grid(m: u32, n: u32) -> Result<GridDims> {
    GridDims::new(m, n)
}

/// `L(k; a, b)`: `2k` points in column `a` from row `b`, spanning a `1 × 3k` segment.
pub fn ell(k: u32, a: u32, b: u32, dims: GridDims) -> Result<PointSet> {
    if k == 0 || a == 0 || b == 0 {
        return Err(domain("ladder parameters must be positive"));
    }
    let pts = (0..k).flat_map(|i| [Point::new(a, b + 3 * i), Point::new(a, b + 3 * i + 2)]);
    PointSet::from_points(dims, pts)
}

/// Offsets along one side of the L-shaped set: starting at 2, steps alternate
/// `+1, +2`; when the side length is `≡ 1 (mod 3)` the last step is `+2`
/// instead, landing exactly on the final column.
fn arm(len: u32) -> Vec<u32> {
    let mut out = vec![2];
    let mut pos = 2;
    let mut step = 1;
    while pos < len {
        let remaining = len - pos;
        let s = if remaining == 2 && step == 1 { 2 } else { step };
        pos += s;
        out.push(pos);
        step = 3 - s;
    }
    out
}

/// The L-shaped set along the bottom row and left column.
pub fn simple_minps(m: u32, n: u32) -> Result<CertifiedSet> {
    if m < 2 || n < 2 {
        return Err(domain(format!("simple construction needs m, n >= 2, got {m}x{n}")));
    }
    let dims = grid(m, n)?;
    let row = arm(m);
    let col = arm(n);
    let pts = row.iter().map(|&x| Point::new(x, 1)).chain(col.iter().map(|&y| Point::new(1, y)));
    let set = PointSet::from_points(dims, pts)?;
    let size = row.len() + col.len();
    CertifiedSet::new(set, Claim::Minps, size, size)
}

/// `L(k) ∪ {(2,3k), (4,1), (5,3k+2), (7,3)} ∪ (L(k) + (7,2))` on `[8] × [3k+2]`.
pub fn small_corner_avoiding(k: u32) -> Result<CertifiedSet> {
    if k == 0 {
        return Err(domain("k must be at least 1"));
    }
    let dims = grid(8, 3 * k + 2)?;
    let mut set = ell(k, 1, 1, dims)?;
    for p in [Point::new(2, 3 * k), Point::new(4, 1), Point::new(5, 3 * k + 2), Point::new(7, 3)] {
        set.insert(p)?;
    }
    set = set.union(&ell(k, 8, 3, dims)?)?;
    let size = 4 * k as usize + 4;
    CertifiedSet::new(set, Claim::CornerAvoidingMinps, size, size)
}

/// Joins corner-avoiding `B` on `(m, n)` and `C` on `(m', n')`, `n' ≥ n`, into
/// a corner-avoiding set on `(m + m' + 3, n' + 2)` using two connector points.
pub fn glue(b: &CertifiedSet, c: &CertifiedSet) -> Result<CertifiedSet> {
    for (name, s) in [("left", b), ("right", c)] {
        if s.claim != Claim::CornerAvoidingMinps {
            return Err(domain(format!("glue: {name} input is {}, not corner-avoiding", s.claim)));
        }
    }
    let (m, n) = (b.dims().m(), b.dims().n());
    let (m2, n2) = (c.dims().m(), c.dims().n());
    if n2 < n {
        return Err(domain(format!("glue: right input height {n2} is below left height {n}")));
    }
    let dims = grid(m + m2 + 3, n2 + 2)?;
    let mut set = b.set.embed(dims)?;
    set.insert(Point::new(m + 1, 1))?;
    set.insert(Point::new(m + 3, n2 + 2))?;
    set = set.union(&translate(&c.set, i64::from(m) + 3, 2, dims)?)?;
    CertifiedSet::new(
        set,
        Claim::CornerAvoidingMinps,
        b.size_formula + c.size_formula + 2,
        b.bound + c.bound + 2,
    )
}

/// `k` copies of `X` glued left to right: `glue(X, chain(X, k − 1))`.
pub fn chain(x: &CertifiedSet, k: u32) -> Result<CertifiedSet> {
    if k == 0 {
        return Err(domain("chain needs at least one copy"));
    }
    let mut acc = x.clone();
    for _ in 1..k {
        acc = glue(x, &acc)?;
    }
    acc.bound = k as usize * x.bound;
    Ok(acc)
}

/// `t` rounds of gluing a set to a copy of itself.
pub fn double_t(x: &CertifiedSet, t: u32) -> Result<CertifiedSet> {
    let mut acc = x.clone();
    for _ in 0..t {
        acc = glue(&acc, &acc)?;
    }
    acc.bound = x.bound << t;
    Ok(acc)
}

/// `M` copies of the `[8] × [3N+2]` gadget, on `[11M − 3] × [3N + 2M]`.
pub fn justup(big_m: u32, big_n: u32) -> Result<CertifiedSet> {
    if big_m == 0 || big_n == 0 {
        return Err(domain("justup needs M, N >= 1"));
    }
    let mut c = chain(&small_corner_avoiding(big_n)?, big_m)?;
    c.bound = 4 * big_m as usize * (big_n as usize + 1);
    Ok(c)
}

/// The two one-column extensions of a minimal set on `(m − 1, n)`:
/// `C = A ∪ {(m,a)} ∖ {(m−1,a)}` and `B = A ∪ {(m,a)}`, with `a` the highest
/// row holding a point in the last column.
fn extension_candidates(a: &PointSet) -> Result<(PointSet, PointSet)> {
    let d = a.dims();
    let last = d.m();
    let row = a
        .iter()
        .filter(|p| p.x == last)
        .map(|p| p.y)
        .max()
        .ok_or_else(|| domain("extend: set has no point in its last column, so it cannot percolate"))?;
    let wider = grid(last + 1, d.n())?;
    let mut b = a.embed(wider)?;
    b.insert(Point::new(last + 1, row))?;
    let c = b.without(Point::new(last, row));
    Ok((c, b))
}

/// Extension step trusting minimality of the input: `C` is minimal as soon as
/// it percolates, and otherwise `B` is.
pub(crate) fn extend_step(a: &PointSet) -> Result<PointSet> {
    let (c, b) = extension_candidates(a)?;
    if percolates(c.dims(), &c) {
        Ok(c)
    } else {
        Ok(b)
    }
}

/// One more column, keeping minimality; the result is verified.
pub fn extend(a: &CertifiedSet) -> Result<CertifiedSet> {
    if !a.claim.implies_minps() {
        return Err(domain(format!("extend: input is {}, not minimal", a.claim)));
    }
    let (c, b) = extension_candidates(&a.set)?;
    for cand in [c, b] {
        if is_minps(cand.dims(), &cand).holds {
            let len = cand.len();
            return CertifiedSet::new(cand, Claim::Minps, len, a.bound);
        }
    }
    Err(Error::Internal(format!("extend: neither extension of a set on {} is minimal", a.dims())))
}

/// One more row, by symmetry.
pub fn extend_rows(a: &CertifiedSet) -> Result<CertifiedSet> {
    Ok(extend(&a.transposed())?.transposed())
}

fn grow_to(mut set: PointSet, m: u32, n: u32) -> Result<PointSet> {
    while set.dims().m() < m {
        set = extend_step(&set)?;
    }
    let mut t = transpose(&set);
    while t.dims().m() < n {
        t = extend_step(&t)?;
    }
    Ok(transpose(&t))
}

/// Parameters of the dense construction: `t` doublings of `justup(M, N)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Recipe {
    pub t: u32,
    pub big_m: i64,
    pub big_n: i64,
    /// `2^{t+2} M (N + 1)`, clamped at zero when the parameters degenerate.
    pub bound: u64,
}

impl Recipe {
    fn new(t: u32, big_m: i64, big_n: i64) -> Self {
        let bound = if big_m >= 1 && big_n >= 0 { (4u64 << t) * big_m as u64 * (big_n as u64 + 1) } else { 0 };
        Recipe { t, big_m, big_n, bound }
    }

    fn for_t(m: u32, n: u32, t: u32) -> Self {
        let big_m = (i64::from(m) + 3) / (11i64 << t);
        let big_n = (i64::from(n) - 2 * i64::from(t) - 2 * big_m).div_euclid(3);
        Recipe::new(t, big_m, big_n)
    }

    /// `M, N ≥ 1`, so the construction exists.
    pub fn is_usable(&self) -> bool {
        self.big_m >= 1 && self.big_n >= 1
    }

    /// `(2^t (11M) − 3, 3N + 2M + 2t)`.
    pub fn core_dims(&self) -> Option<(u32, u32)> {
        self.is_usable().then(|| {
            let w = ((11 * self.big_m) << self.t) - 3;
            let h = 3 * self.big_n + 2 * self.big_m + 2 * i64::from(self.t);
            (w as u32, h as u32)
        })
    }

    /// Exact size of `double_t(justup(M, N), t)`.
    pub fn core_size(&self) -> Option<usize> {
        self.is_usable().then(|| {
            let (mm, nn) = (self.big_m as usize, self.big_n as usize);
            let just = 4 * mm * (nn + 1) + 2 * (mm - 1);
            (just << self.t) + 2 * ((1usize << self.t) - 1)
        })
    }
}

/// The parameters used in the asymptotic argument: `t = ⌈log₂ m / 2⌉`,
/// `M = ⌊(m + 3) / (11 · 2^t)⌋`, `N = ⌊(n − 2t − 2M) / 3⌋`.
pub fn proof_recipe(m: u32, n: u32) -> Recipe {
    let mut t = 0;
    while 4u64.pow(t) < u64::from(m) {
        t += 1;
    }
    Recipe::for_t(m, n, t)
}

/// How [`lower_bound_set`] built its answer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    /// `double_t(justup(M, N), t)` grown to the target, possibly transposed.
    Doubled { recipe: Recipe, transposed: bool },
    Simple,
}

/// Every usable `t` for the given orientation, largest core first.
fn recipes(m: u32, n: u32) -> Vec<Recipe> {
    let mut out = Vec::new();
    let mut t = 0;
    while (11u64 << t) <= u64::from(m) + 3 {
        let r = Recipe::for_t(m, n, t);
        if r.is_usable() {
            out.push(r);
        }
        t += 1;
    }
    out
}

/// Chooses the route with the largest predicted size.
pub fn lower_bound_route(m: u32, n: u32) -> Route {
    let simple = arm(m).len() + arm(n).len();
    let mut best = (simple, Route::Simple);
    let proof_t = proof_recipe(m, n).t;
    let orient: &[(u32, u32, bool)] = if m == n { &[(m, n, false)] } else { &[(m, n, false), (n, m, true)] };
    for &(mm, nn, transposed) in orient {
        let mut rs = recipes(mm, nn);
        // Prefer the proof's own t among equal sizes.
        rs.sort_by_key(|r| (r.t != proof_t, r.t));
        for r in rs {
            let size = r.core_size().unwrap_or(0);
            if size > best.0 || (size == best.0 && best.1 == Route::Simple) {
                best = (size, Route::Doubled { recipe: r, transposed });
            }
        }
    }
    best.1
}

/// A large minimal percolating set on exactly `(m, n)`.
pub fn lower_bound_set(m: u32, n: u32) -> Result<CertifiedSet> {
    if m < 2 || n < 2 {
        return Err(domain(format!("lower bound construction needs m, n >= 2, got {m}x{n}")));
    }
    match lower_bound_route(m, n) {
        Route::Simple => simple_minps(m, n),
        Route::Doubled { recipe, transposed } => {
            let (mm, nn) = if transposed { (n, m) } else { (m, n) };
            let core = double_t(&justup(recipe.big_m as u32, recipe.big_n as u32)?, recipe.t)?;
            let mut set = grow_to(core.set, mm, nn)?;
            if transposed {
                set = transpose(&set);
            }
            let len = set.len();
            CertifiedSet::new(set, Claim::Minps, len, recipe.bound as usize)
        }
    }
}

/// Surrounds a minimal set on `(m, n)`, `n ≥ 4`, with two ladder gadgets to
/// get a corner-avoiding set on `(m + 16, n + 8)`.
pub fn cavreg_embed(a: &CertifiedSet) -> Result<CertifiedSet> {
    if !a.claim.implies_minps() {
        return Err(domain(format!("cavreg: input is {}, not minimal", a.claim)));
    }
    let (m, n) = (a.dims().m(), a.dims().n());
    if n < 4 {
        return Err(domain(format!("cavreg: needs n >= 4, got {n}")));
    }
    let dims = grid(m + 16, n + 8)?;
    let big_n = n.div_ceil(3);
    let mut gadget = ell(big_n, 1, 1, dims)?;
    for p in [Point::new(2, 3 * big_n), Point::new(4, 1), Point::new(5, n + 4), Point::new(7, 5)] {
        gadget.insert(p)?;
    }
    let mirrored = rotate180(&gadget, dims)?;
    let set = gadget.union(&translate(&a.set, 8, 4, dims)?)?.union(&mirrored)?;
    let extra = 2 * (2 * big_n as usize + 4);
    let bound = a.bound + (4 * n as usize).div_ceil(3);
    CertifiedSet::new(set, Claim::CornerAvoidingMinps, a.size_formula + extra, bound)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lower: usize,
    /// Which construction attains `lower`.
    pub lower_family: &'static str,
    /// Whether the attaining set was run through the verifier.
    pub certified: bool,
    /// `(m + 2)(n + 2) / 6`.
    pub upper: Ratio<u64>,
}

/// Above this many cells [`bounds`] trusts the constructions instead of
/// re-verifying them.
pub const BOUNDS_VERIFY_CELLS: usize = 20_000;

pub fn upper_bound(m: u32, n: u32) -> Ratio<u64> {
    Ratio::new((u64::from(m) + 2) * (u64::from(n) + 2), 6)
}

pub fn bounds(m: u32, n: u32) -> Result<Bounds> {
    if m < 2 || n < 2 {
        return Err(domain(format!("bounds need m, n >= 2, got {m}x{n}")));
    }
    let mut cands: Vec<(&'static str, CertifiedSet)> =
        vec![("simple", simple_minps(m, n)?), ("lower", lower_bound_set(m, n)?)];
    if m >= 18 && n >= 12 {
        let inner = lower_bound_set(m - 16, n - 8)?;
        cands.push(("cavreg", cavreg_embed(&inner)?));
    }
    let verify = (m as usize) * (n as usize) <= BOUNDS_VERIFY_CELLS;
    let mut best: Option<(&'static str, usize)> = None;
    for (name, c) in cands {
        if best.is_some_and(|(_, s)| s >= c.len()) {
            continue;
        }
        if verify && !c.check().holds {
            return Err(Error::Internal(format!("{name} construction failed verification on {m}x{n}")));
        }
        best = Some((name, c.len()));
    }
    let (lower_family, lower) = best.expect("simple construction always exists");
    Ok(Bounds { lower, lower_family, certified: verify, upper: upper_bound(m, n) })
}
