//! Exhaustive oracles for `E(m, n)`, `E_c(m, n)` and the minimum size of a
//! percolating set.
//!
//! Sets are 128-bit boards indexed like [`GridDims`] cells, so lexicographic
//! order on points is the order of cell indices. The maximisation is a
//! depth-first branch and bound over cells in index order, include branch
//! first, so the first maximiser met is the lexicographically smallest one.
//!
//! Pruning:
//! * the partial set must stay independent (no point lies in the closure of
//!   the others), which every subset of a minimal set is;
//! * the partial set together with all undecided cells must percolate;
//! * once the partial set percolates nothing more can be added;
//! * partial lex-leader tests against the grid symmetries discard sets that
//!   are not the smallest image in their orbit.
//!
//! Work is split into prefix tasks in index order. Tasks share only the best
//! `(value, task)` pair, and a task gives up on a subtree whose bound ties the
//! best only when that best came from an earlier task, which keeps the
//! reported witness independent of scheduling.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::grid::{GridDims, Point, PointSet};
use crate::lattice::{LatticeDims, LatticeSet};
use crate::verify::Corners;

/// Largest number of cells the board representation holds.
pub const MAX_SEARCH_CELLS: usize = 128;

type Board = u128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Target {
    E,
    Ec,
    MinPerc,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::E => "E",
            Target::Ec => "Ec",
            Target::MinPerc => "minperc",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    pub workers: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: None, max_time: None, workers: default_workers() }
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_max_nodes(mut self, n: u64) -> Self {
        self.max_nodes = Some(n);
        self
    }

    pub fn with_max_time(mut self, t: Duration) -> Self {
        self.max_time = Some(t);
        self
    }

    pub fn with_workers(mut self, w: usize) -> Self {
        self.workers = w;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.workers == 0 || self.max_nodes == Some(0) || self.max_time == Some(Duration::ZERO) {
            return Err(domain("search budget entries must be positive"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult<S = PointSet> {
    pub target: Target,
    pub value: usize,
    pub witness: S,
    /// The whole space was covered, so `value` is exact.
    pub exhaustive: bool,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// The cell graph, the closure rule and the symmetries used for pruning.
struct Space {
    cells: usize,
    full: Board,
    r: u32,
    nbr: Vec<Board>,
    /// `(n, row-1 mask, row-n mask)` for planar grids with `r = 2`.
    planar: Option<(u32, Board, Board)>,
    /// Inverse permutations of the non-identity symmetries.
    sym_inv: Vec<Vec<u8>>,
    /// `J_L ∪ J_R` when maximising corner-avoiding sets, else empty.
    corners: Board,
}

#[inline]
fn bit(i: usize) -> Board {
    1 << i
}

#[inline]
fn ones(mut b: Board) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (b != 0).then(|| {
            let t = b.trailing_zeros() as usize;
            b &= b - 1;
            t
        })
    })
}

fn mask_below(i: usize) -> Board {
    if i >= 128 {
        Board::MAX
    } else {
        bit(i) - 1
    }
}

/// Dihedral images of `(x, y)`, 0-based; the last four only for squares.
fn dihedral(m: u32, n: u32, x: u32, y: u32) -> [(u32, u32); 8] {
    let (mx, ny) = (m - 1 - x, n - 1 - y);
    [(x, y), (mx, y), (x, ny), (mx, ny), (y, x), (ny, mx), (ny, x), (y, mx)]
}

impl Space {
    fn planar(dims: GridDims, corner_subgroup: bool) -> Result<Self> {
        let cells = dims.cells();
        if cells > MAX_SEARCH_CELLS {
            return Err(domain(format!("search handles at most {MAX_SEARCH_CELLS} cells, {dims} has {cells}")));
        }
        let (m, n) = (dims.m(), dims.n());
        let mut nbr = vec![0; cells];
        let (mut bottom, mut top) = (0, 0);
        for (i, slot) in nbr.iter_mut().enumerate() {
            let p = dims.point(i);
            for (dx, dy) in [(-1, 0), (1, 0), (0, -1), (0, 1)] {
                if let Some(q) = p.offset(dx, dy).filter(|&q| dims.contains(q)) {
                    *slot |= bit(dims.index(q));
                }
            }
            if p.y == 1 {
                bottom |= bit(i);
            }
            if p.y == n {
                top |= bit(i);
            }
        }
        let group: &[usize] = match (m == n, corner_subgroup) {
            (false, false) => &[1, 2, 3],
            (true, false) => &[1, 2, 3, 4, 5, 6, 7],
            (false, true) => &[3],
            (true, true) => &[3, 4, 5],
        };
        let sym_inv = group
            .iter()
            .map(|&g| {
                let mut inv = vec![0u8; cells];
                for (i, slot) in inv.iter_mut().enumerate() {
                    let p = dims.point(i);
                    // Every element used here is an involution except the
                    // quarter turns, whose inverses are each other.
                    let g_inv = match g {
                        6 => 7,
                        7 => 6,
                        g => g,
                    };
                    let (x, y) = dihedral(m, n, p.x - 1, p.y - 1)[g_inv];
                    *slot = dims.index(Point::new(x + 1, y + 1)) as u8;
                }
                inv
            })
            .collect();
        let corners = if corner_subgroup {
            Corners::of(dims)?.to_set(dims).iter().fold(0, |b, p| b | bit(dims.index(p)))
        } else {
            0
        };
        Ok(Space {
            cells,
            full: mask_below(cells),
            r: 2,
            nbr,
            planar: Some((n, bottom, top)),
            sym_inv,
            corners,
        })
    }

    fn lattice(dims: &LatticeDims, r: u32) -> Result<Self> {
        let cells = dims.cells();
        if cells > MAX_SEARCH_CELLS {
            return Err(domain(format!("search handles at most {MAX_SEARCH_CELLS} cells, {dims} has {cells}")));
        }
        if r == 0 {
            return Err(domain("threshold r must be at least 1"));
        }
        let mut nbr = vec![0; cells];
        for (i, slot) in nbr.iter_mut().enumerate() {
            dims.for_each_neighbour(i, |u| *slot |= bit(u));
        }
        Ok(Space { cells, full: mask_below(cells), r, nbr, planar: None, sym_inv: Vec::new(), corners: 0 })
    }

    fn close(&self, a: Board) -> Board {
        match self.planar {
            Some((n, bottom, top)) => {
                let mut inf = a;
                loop {
                    let below = (inf << 1) & !bottom & self.full;
                    let above = (inf >> 1) & !top;
                    let left = (inf << n) & self.full;
                    let right = inf >> n;
                    let two = (below & above) | (left & right) | ((below | above) & (left | right));
                    let next = inf | two;
                    if next == inf {
                        return inf;
                    }
                    inf = next;
                }
            }
            None => self.close_generic(a),
        }
    }

    fn close_generic(&self, a: Board) -> Board {
        let mut inf = a;
        let mut fresh = a;
        while fresh != 0 {
            let mut cand = 0;
            for v in ones(fresh) {
                cand |= self.nbr[v];
            }
            cand &= !inf;
            let mut added = 0;
            for u in ones(cand) {
                if (self.nbr[u] & inf).count_ones() >= self.r {
                    added |= bit(u);
                }
            }
            inf |= added;
            fresh = added;
        }
        inf
    }

    /// Whether `a ∪ {v}` stays independent (and, for corner-avoiding
    /// targets, keeps every single-deletion closure off the corners).
    fn can_include(&self, a: Board, cl_a: Board, v: usize) -> bool {
        if cl_a & bit(v) != 0 {
            return false;
        }
        let b = a | bit(v);
        ones(a).all(|u| {
            let c = self.close(b & !bit(u));
            c & bit(u) == 0 && c & self.corners == 0
        })
    }

    /// False when some symmetry provably maps every completion of `a`
    /// (decided on cells `< i`) to a lexicographically smaller set.
    fn may_be_leader(&self, a: Board, i: usize) -> bool {
        self.sym_inv.iter().all(|inv| {
            for (c, &src) in inv.iter().enumerate().take(i) {
                let src = src as usize;
                if src >= i {
                    return true;
                }
                let (mine, image) = (a & bit(c) != 0, a & bit(src) != 0);
                if mine != image {
                    return mine;
                }
            }
            true
        })
    }
}

fn pack(value: usize, task: usize) -> u64 {
    ((value as u64) << 32) | u64::from(u32::MAX - task as u32)
}

fn unpack(p: u64) -> (usize, usize) {
    ((p >> 32) as usize, (u32::MAX - (p & 0xffff_ffff) as u32) as usize)
}

struct Shared<'a> {
    space: &'a Space,
    best: AtomicU64,
    nodes: AtomicU64,
    abort: AtomicBool,
    start: Instant,
    budget: SearchBudget,
}

impl Shared<'_> {
    fn tick(&self, local: &mut u64) -> bool {
        *local += 1;
        if *local & 0xff == 0 {
            let total = self.nodes.fetch_add(256, Ordering::Relaxed) + 256;
            if self.budget.max_nodes.is_some_and(|cap| total >= cap)
                || self.budget.max_time.is_some_and(|t| self.start.elapsed() >= t)
            {
                self.abort.store(true, Ordering::Relaxed);
            }
        }
        !self.abort.load(Ordering::Relaxed)
    }
}

enum Mode<'b> {
    Split { depth: usize, tasks: &'b mut Vec<(Board, usize)> },
    Solve { task: usize, best: &'b mut Option<(usize, Board)> },
}

struct Dfs<'a, 'b> {
    sh: &'a Shared<'a>,
    mode: Mode<'b>,
    local_nodes: u64,
}

impl Dfs<'_, '_> {
    fn visit(&mut self, a: Board, i: usize, cl: Board) {
        let sp = self.sh.space;
        if !self.sh.tick(&mut self.local_nodes) {
            return;
        }
        if let Mode::Split { depth, tasks } = &mut self.mode {
            if i == *depth || cl == sp.full {
                tasks.push((a, i));
                return;
            }
        }
        if cl == sp.full {
            self.record(a);
            return;
        }
        if cl & sp.corners != 0 || i == sp.cells {
            return;
        }
        if let Mode::Solve { task, .. } = self.mode {
            let bound = a.count_ones() as usize + sp.cells - i;
            let (bv, bt) = unpack(self.sh.best.load(Ordering::Relaxed));
            if bound < bv || (bound == bv && bt <= task) {
                return;
            }
        }
        if !sp.may_be_leader(a, i) {
            return;
        }
        let undecided = sp.full & !mask_below(i);
        if sp.close(a | undecided) != sp.full {
            return;
        }
        if sp.can_include(a, cl, i) {
            let b = a | bit(i);
            self.visit(b, i + 1, sp.close(b));
        }
        self.visit(a, i + 1, cl);
    }

    fn record(&mut self, a: Board) {
        if let Mode::Solve { task, best } = &mut self.mode {
            let v = a.count_ones() as usize;
            if best.is_none_or(|(bv, _)| v > bv) {
                **best = Some((v, a));
                self.sh.best.fetch_max(pack(v, *task), Ordering::Relaxed);
            }
        }
    }
}

fn split_depth(cells: usize) -> usize {
    (cells / 2).min(12)
}

/// Largest independent percolating board, lexicographically first among ties.
fn maximise(space: &Space, budget: SearchBudget) -> Result<(Option<(usize, Board)>, bool, u64, Duration)> {
    budget.validate()?;
    let sh = Shared {
        space,
        best: AtomicU64::new(pack(0, u32::MAX as usize)),
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        start: Instant::now(),
        budget,
    };
    let mut tasks = Vec::new();
    let mut dfs = Dfs { sh: &sh, mode: Mode::Split { depth: split_depth(space.cells), tasks: &mut tasks }, local_nodes: 0 };
    dfs.visit(0, 0, 0);
    let split_nodes = dfs.local_nodes;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(budget.workers)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let results: Vec<(Option<(usize, Board)>, u64)> = pool.install(|| {
        tasks
            .par_iter()
            .enumerate()
            .map(|(task, &(a, i))| {
                let mut best = None;
                let mut dfs = Dfs { sh: &sh, mode: Mode::Solve { task, best: &mut best }, local_nodes: 0 };
                dfs.visit(a, i, space.close(a));
                let n = dfs.local_nodes;
                (best, n)
            })
            .collect()
    });
    let nodes = split_nodes + results.iter().map(|r| r.1).sum::<u64>();
    let mut winner: Option<(usize, Board)> = None;
    for (best, _) in results {
        if let Some((v, a)) = best {
            if winner.is_none_or(|(wv, _)| v > wv) {
                winner = Some((v, a));
            }
        }
    }
    let exhaustive = !sh.abort.load(Ordering::Relaxed);
    Ok((winner, exhaustive, nodes, sh.start.elapsed()))
}

fn board_to_set(dims: GridDims, b: Board) -> PointSet {
    PointSet::from_points(dims, ones(b).map(|i| dims.point(i))).expect("board cells lie in the grid")
}

/// `E(m, n)`: the largest minimal percolating set.
pub fn exact_e(dims: GridDims, budget: SearchBudget) -> Result<SearchResult> {
    let space = Space::planar(dims, false)?;
    let (best, exhaustive, nodes, elapsed) = maximise(&space, budget)?;
    let (value, board) = best.unwrap_or((0, 0));
    Ok(SearchResult { target: Target::E, value, witness: board_to_set(dims, board), exhaustive, nodes, elapsed })
}

/// `E_c(m, n)`, or 0 with an empty witness when no corner-avoiding set exists.
pub fn exact_ec(dims: GridDims, budget: SearchBudget) -> Result<SearchResult> {
    let space = Space::planar(dims, true)?;
    let (best, exhaustive, nodes, elapsed) = maximise(&space, budget)?;
    let (value, board) = best.unwrap_or((0, 0));
    Ok(SearchResult { target: Target::Ec, value, witness: board_to_set(dims, board), exhaustive, nodes, elapsed })
}

/// First percolating board of exactly `k` points in index order.
fn first_of_size(space: &Space, k: usize, sh: &Shared<'_>, nodes: &mut u64) -> Option<Board> {
    fn go(sp: &Space, sh: &Shared<'_>, k: usize, a: Board, i: usize, cl: Board, nodes: &mut u64) -> Option<Board> {
        if !sh.tick(nodes) {
            return None;
        }
        if cl == sp.full {
            return Some(a);
        }
        let size = a.count_ones() as usize;
        if size == k || sp.cells - i < k - size || !sp.may_be_leader(a, i) {
            return None;
        }
        if sp.close(a | (sp.full & !mask_below(i))) != sp.full {
            return None;
        }
        if sp.can_include(a, cl, i) {
            let b = a | bit(i);
            if let Some(found) = go(sp, sh, k, b, i + 1, sp.close(b), nodes) {
                return Some(found);
            }
        }
        go(sp, sh, k, a, i + 1, cl, nodes)
    }
    go(space, sh, k, 0, 0, 0, nodes)
}

fn minimise(space: &Space, budget: SearchBudget) -> Result<(usize, Board, bool, u64, Duration)> {
    budget.validate()?;
    let sh = Shared {
        space,
        best: AtomicU64::new(0),
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        start: Instant::now(),
        budget,
    };
    let mut nodes = 0;
    for k in 0..=space.cells {
        if let Some(b) = first_of_size(space, k, &sh, &mut nodes) {
            return Ok((k, b, true, nodes, sh.start.elapsed()));
        }
        if sh.abort.load(Ordering::Relaxed) {
            return Ok((space.cells, space.full, false, nodes, sh.start.elapsed()));
        }
    }
    Err(Error::Internal("the full set always percolates".into()))
}

/// Smallest percolating set of the grid.
pub fn min_percolating(dims: GridDims, budget: SearchBudget) -> Result<SearchResult> {
    let space = Space::planar(dims, false)?;
    let (value, board, exhaustive, nodes, elapsed) = minimise(&space, budget)?;
    Ok(SearchResult { target: Target::MinPerc, value, witness: board_to_set(dims, board), exhaustive, nodes, elapsed })
}

/// Smallest percolating set of a lattice box under the `r`-neighbour rule.
pub fn min_percolating_d(dims: &LatticeDims, r: u32, budget: SearchBudget) -> Result<SearchResult<LatticeSet>> {
    let space = Space::lattice(dims, r)?;
    let (value, board, exhaustive, nodes, elapsed) = minimise(&space, budget)?;
    let witness = LatticeSet::from_points(dims.clone(), ones(board).map(|i| dims.coords(i)))?;
    Ok(SearchResult { target: Target::MinPerc, value, witness, exhaustive, nodes, elapsed })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub m: u32,
    pub n: u32,
    pub value: usize,
    pub exhaustive: bool,
}

/// `E(m, n)` for `1 ≤ m ≤ max_m`, `1 ≤ n ≤ max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityTable {
    pub max_m: u32,
    pub max_n: u32,
    /// Row-major in `m`, then `n`.
    pub entries: Vec<TableEntry>,
}

impl MonotonicityTable {
    pub fn get(&self, m: u32, n: u32) -> Option<&TableEntry> {
        if m == 0 || n == 0 || m > self.max_m || n > self.max_n {
            return None;
        }
        self.entries.get(((m - 1) * self.max_n + (n - 1)) as usize)
    }

    /// Broken monotonicity or upper-bound relations among exact entries.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for e in self.entries.iter().filter(|e| e.exhaustive) {
            for (dm, dn) in [(1, 0), (0, 1)] {
                if let Some(f) = self.get(e.m + dm, e.n + dn).filter(|f| f.exhaustive) {
                    if f.value < e.value {
                        out.push(format!("E({},{}) = {} < E({},{}) = {}", f.m, f.n, f.value, e.m, e.n, e.value));
                    }
                }
            }
            let cap = (u64::from(e.m) + 2) * (u64::from(e.n) + 2);
            if e.m >= 2 && e.n >= 2 && 6 * e.value as u64 > cap {
                out.push(format!("E({},{}) = {} exceeds ({}+2)({}+2)/6", e.m, e.n, e.value, e.m, e.n));
            }
        }
        out
    }
}

/// Solves each unordered pair once, using `E(m, n) = E(n, m)`.
pub fn monotonicity_table(max_m: u32, max_n: u32, budget: SearchBudget) -> Result<MonotonicityTable> {
    let mut solved = std::collections::HashMap::new();
    let mut entries = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            let key = (m.max(n), m.min(n));
            if let std::collections::hash_map::Entry::Vacant(e) = solved.entry(key) {
                let r = exact_e(GridDims::new(key.0, key.1)?, budget)?;
                e.insert((r.value, r.exhaustive));
            }
            let (value, exhaustive) = solved[&key];
            entries.push(TableEntry { m, n, value, exhaustive });
        }
    }
    Ok(MonotonicityTable { max_m, max_n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::percolation::closure;
    use crate::verify::{is_corner_avoiding_minps, is_minps};

    fn dims(m: u32, n: u32) -> GridDims {
        GridDims::new(m, n).unwrap()
    }

    fn serial() -> SearchBudget {
        SearchBudget::unlimited().with_workers(1)
    }

    #[test]
    fn board_closure_matches_reference() {
        let d = dims(5, 4);
        let sp = Space::planar(d, false).unwrap();
        let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
        for _ in 0..2000 {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            let b = Board::from(x) & Board::from(x.rotate_left(23)) & sp.full;
            let reference = closure(d, &board_to_set(d, b)).infected;
            assert_eq!(board_to_set(d, sp.close(b)), reference);
            assert_eq!(sp.close_generic(b), sp.close(b));
        }
    }

    #[test]
    fn symmetries_are_permutations() {
        for (m, n) in [(3, 3), (4, 2), (5, 5)] {
            for corner in [false, true] {
                let sp = Space::planar(dims(m, n), corner).unwrap();
                for inv in &sp.sym_inv {
                    let mut seen: Vec<u8> = inv.clone();
                    seen.sort();
                    assert_eq!(seen, (0..sp.cells as u8).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(exact_e(dims(1, 1), serial()).unwrap().value, 1);
        assert_eq!(exact_e(dims(3, 3), serial()).unwrap().value, 4);
        assert_eq!(exact_e(dims(4, 3), serial()).unwrap().value, 4);
        let r = exact_e(dims(2, 2), serial()).unwrap();
        assert_eq!(r.value, 2);
        assert!(r.exhaustive);
        assert_eq!(r.witness, PointSet::from_points(dims(2, 2), [Point::new(1, 1), Point::new(2, 2)]).unwrap());
    }

    #[test]
    fn witnesses_are_certified() {
        for (m, n) in [(3, 3), (4, 4), (5, 3)] {
            let r = exact_e(dims(m, n), serial()).unwrap();
            assert!(is_minps(dims(m, n), &r.witness).holds);
            assert_eq!(r.witness.len(), r.value);
        }
    }

    #[test]
    fn corner_avoiding_values() {
        let r = exact_ec(dims(2, 2), serial()).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.witness.is_empty());
        assert!(r.exhaustive);
        let r = exact_ec(dims(8, 5), SearchBudget::default()).unwrap();
        assert!(r.value >= 8);
        assert!(is_corner_avoiding_minps(dims(8, 5), &r.witness).unwrap().holds);
    }

    #[test]
    fn worker_count_does_not_change_witness() {
        for (m, n) in [(4, 4), (5, 4), (6, 3)] {
            let one = exact_e(dims(m, n), serial()).unwrap();
            let many = exact_e(dims(m, n), SearchBudget::unlimited().with_workers(4)).unwrap();
            assert_eq!(one.value, many.value);
            assert_eq!(one.witness, many.witness);
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let r = exact_e(dims(6, 5), SearchBudget::unlimited().with_max_nodes(500).with_workers(1)).unwrap();
        assert!(!r.exhaustive);
        assert!(exact_e(dims(3, 3), SearchBudget::unlimited().with_workers(0)).is_err());
    }

    #[test]
    fn too_many_cells_rejected() {
        assert!(exact_e(dims(12, 11), serial()).is_err());
    }

    #[test]
    fn min_percolating_values() {
        assert_eq!(min_percolating(dims(1, 1), serial()).unwrap().value, 1);
        for n in 2..=4 {
            let r = min_percolating(dims(n, n), serial()).unwrap();
            assert_eq!(r.value, n as usize);
            assert!(r.exhaustive);
        }
        let cube = LatticeDims::cube(2, 3).unwrap();
        let r = min_percolating_d(&cube, 2, serial()).unwrap();
        assert_eq!(r.value, 3);
    }

    #[test]
    fn table_uses_symmetry() {
        let t = monotonicity_table(4, 3, serial()).unwrap();
        assert_eq!(t.get(3, 2), t.get(2, 3).map(|e| TableEntry { m: 3, n: 2, ..e.clone() }).as_ref());
        assert!(t.violations().is_empty(), "{:?}", t.violations());
        assert_eq!(t.get(4, 1).unwrap().value, 3);
    }
}
