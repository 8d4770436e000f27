//! Space-filling-curve flattening of 2-D grids and the locality measures used
//! to compare Hilbert, Morton and Zigzag (raster) orderings.
//!
//! * [`curves`]: index codecs, materialized [`CurveMap`]s, flatten / fold, and
//!   patch-order permutations.
//! * [`metrics`]: DeGrid deformation, preservation sweeps, dilation factors,
//!   scale traces and hierarchy checks.
//! * [`toyset`]: the 18-image shape dataset and DTW comparisons.
//! * [`io`]: PGM and CSV formats.

pub mod curves;
pub mod error;
pub mod io;
pub mod metrics;
pub mod toyset;

pub use curves::{build_map, flatten, fold, CurveKind, CurveMap, GrayImage, GridPoint};
pub use error::{Error, Result};
