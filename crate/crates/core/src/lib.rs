//! Two-neighbour bootstrap percolation on finite grids: closures, minimality
//! certificates, explicit large minimal percolating sets and exact search.

mod bits;
pub mod constructions;
pub mod ddim;
pub mod error;
pub mod grid;
pub mod io;
pub mod lattice;
pub mod percolation;
pub mod render;
pub mod search;
pub mod verify;

pub use constructions::{CertifiedSet, Claim};
pub use error::{Error, Result};
pub use grid::{GridDims, Point, PointSet, Rect};
pub use lattice::{closure_d, percolates_d, Coords, LatticeDims, LatticeSet};
pub use percolation::{closure, closure_rects, percolates, Closure, RectDecomposition};
pub use render::{render, RenderOptions};
pub use search::{SearchBudget, SearchResult, Target};
pub use verify::{is_corner_avoiding_minps, is_minps, is_minps_d, is_percolating, Reason, Verdict};
