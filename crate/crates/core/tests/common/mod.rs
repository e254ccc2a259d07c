#![allow(dead_code)]

use minps_core::{GridDims, Point, PointSet};

/// Repeated full sweeps of the two-neighbour rule until nothing changes.
pub fn sweep_closure(m: u32, n: u32, seed: &[bool]) -> Vec<bool> {
    let (m, n) = (m as usize, n as usize);
    let mut cur = seed.to_vec();
    loop {
        let mut next = cur.clone();
        for x in 0..m {
            for y in 0..n {
                if cur[x * n + y] {
                    continue;
                }
                let mut k = 0;
                if x > 0 && cur[(x - 1) * n + y] {
                    k += 1;
                }
                if x + 1 < m && cur[(x + 1) * n + y] {
                    k += 1;
                }
                if y > 0 && cur[x * n + y - 1] {
                    k += 1;
                }
                if y + 1 < n && cur[x * n + y + 1] {
                    k += 1;
                }
                if k >= 2 {
                    next[x * n + y] = true;
                }
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

pub fn to_flags(s: &PointSet) -> Vec<bool> {
    let d = s.dims();
    let mut v = vec![false; d.cells()];
    for p in s.iter() {
        v[(p.x as usize - 1) * d.n() as usize + (p.y as usize - 1)] = true;
    }
    v
}

pub fn from_flags(d: GridDims, v: &[bool]) -> PointSet {
    let n = d.n() as usize;
    let pts = v
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| Point::new((i / n) as u32 + 1, (i % n) as u32 + 1));
    PointSet::from_points(d, pts).unwrap()
}

pub fn from_mask(d: GridDims, mask: u64) -> PointSet {
    let v: Vec<bool> = (0..d.cells()).map(|i| mask >> i & 1 == 1).collect();
    from_flags(d, &v)
}

/// `E(m, n)` by checking every subset, for `mn ≤ 20`.
pub fn brute_force_e(m: u32, n: u32) -> usize {
    let d = GridDims::new(m, n).unwrap();
    let cells = d.cells();
    assert!(cells <= 20);
    let full = vec![true; cells];
    let perc: Vec<bool> = (0u64..1 << cells)
        .map(|mask| {
            let v: Vec<bool> = (0..cells).map(|i| mask >> i & 1 == 1).collect();
            sweep_closure(m, n, &v) == full
        })
        .collect();
    (0u64..1 << cells)
        .filter(|&mask| perc[mask as usize])
        .filter(|&mask| (0..cells).filter(|i| mask >> i & 1 == 1).all(|i| !perc[(mask & !(1 << i)) as usize]))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
