//! Fixed workloads shared by the benchmarks.

use minps_core::constructions::lower_bound_set;
use minps_core::{GridDims, PointSet};

/// A large minimal percolating set on the `n × n` grid.
pub fn dense_minps(n: u32) -> (GridDims, PointSet) {
    let s = lower_bound_set(n, n).expect("n >= 2");
    (s.dims(), s.set)
}
