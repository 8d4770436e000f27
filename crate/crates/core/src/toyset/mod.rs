//! Synthetic shape dataset and DTW comparison of flattened images.

mod dtw;
mod shapes;
mod table;

pub use dtw::{dtw, dtw_with, Normalize};
pub use shapes::{generate_shape, Scale, Shape, ShapeSpec, RESOLUTIONS};
pub use table::{dtw_table, Comparison, DtwResult, DtwTable, COMPARISONS};
