//! Locality measures for a [`CurveMap`](crate::curves::CurveMap): DeGrid
//! deformation and preservation sweeps, square-to-linear dilation, and
//! scale-robustness diagnostics.

mod degrid;
mod dilation;
mod dyadic;
mod hierarchy;
mod scale;

pub use degrid::{
    default_thresholds, degrid, degrid_with, log_thresholds, preservation, preservation_sweep,
    preservation_table, write_sweep_csv, DeGridField, DistanceForm, SweepRow,
};
pub use dilation::{dilation, DilationMode, DilationReport, MAX_ALL_PAIRS_ORDER};
pub use dyadic::Dyadic;
pub use hierarchy::hierarchy_check;
pub use scale::{scale_trace, ScaleTrace};
