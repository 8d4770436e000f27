use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sfc_core::metrics::{DilationMode, Dyadic};
use sfc_core::toyset::{Normalize, Shape};
use sfc_core::CurveKind;

#[derive(Debug, Parser)]
#[command(
    name = "sfc",
    version,
    about = "Space-filling-curve flattening and locality metrics for 2-D grids",
    after_help = "Environment:\n  SFC_THREADS  cap on worker threads (default: hardware concurrency)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Export a curve map as `d,x,y` CSV.
    Map(MapArgs),
    /// Flatten a PGM image into a `d,value` sequence.
    Flatten(FlattenArgs),
    /// Fold a `d,value` sequence back into a PGM image.
    Fold(FoldArgs),
    /// Hilbert patch-order permutation as `slot,raster_index` CSV.
    PatchOrder(PatchOrderArgs),
    /// Per-position DeGrid values (CSV) or heatmap (PGM).
    Degrid(DegridArgs),
    /// Grid-structure preservation sweep for Hilbert, Morton and Zigzag.
    Preserve(PreserveArgs),
    /// Empirical square-to-linear dilation factor.
    Dilation(DilationArgs),
    /// Fold-image distances of two parameters across curve orders.
    ScaleTrace(ScaleTraceArgs),
    /// Count coarse/fine index nesting violations.
    Hierarchy(HierarchyArgs),
    /// Render the 18-image shape dataset as PGM files.
    Toyset(ToysetArgs),
    /// DTW distance between two `d,value` sequences.
    Dtw(DtwArgs),
    /// DTW table over the shape dataset.
    DtwTable(DtwTableArgs),
    /// Run the full reproduction pipeline into a directory.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pgm,
}

pub fn parse_curve(s: &str) -> Result<CurveKind, String> {
    s.parse().map_err(|e: sfc_core::Error| e.to_string())
}

pub fn parse_mode(s: &str) -> Result<DilationMode, String> {
    s.parse().map_err(|e: sfc_core::Error| e.to_string())
}

pub fn parse_normalize(s: &str) -> Result<Normalize, String> {
    s.parse().map_err(|e: sfc_core::Error| e.to_string())
}

pub fn parse_dyadic(s: &str) -> Result<Dyadic, String> {
    s.parse().map_err(|e: sfc_core::Error| e.to_string())
}

pub fn parse_shape(s: &str) -> Result<Shape, String> {
    s.parse().map_err(|e: sfc_core::Error| e.to_string())
}

/// Curve plus grid size, either `--order N` or `--width W --height H`.
#[derive(Debug, Args)]
pub struct GridArgs {
    /// Curve family: hilbert, morton, zigzag or ghilbert
    #[arg(long, default_value = "hilbert", value_parser = parse_curve)]
    pub curve: CurveKind,
    /// Grid of side 2^N
    #[arg(long, conflicts_with_all = ["width", "height"])]
    pub order: Option<u32>,
    /// Grid width in cells
    #[arg(long, requires = "height")]
    pub width: Option<u32>,
    /// Grid height in cells
    #[arg(long, requires = "width")]
    pub height: Option<u32>,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    /// Output path; the payload goes to stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Output format (csv)
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct FlattenArgs {
    /// Curve family: hilbert, morton, zigzag or ghilbert
    #[arg(long, default_value = "hilbert", value_parser = parse_curve)]
    pub curve: CurveKind,
    /// Input PGM image (P2 or P5)
    #[arg(long)]
    pub input: PathBuf,
    /// Output format (csv)
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct FoldArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Input `d,value` CSV sequence
    #[arg(long)]
    pub input: PathBuf,
    /// Output format (pgm)
    #[arg(long, value_enum, default_value = "pgm")]
    pub format: Format,
    /// Output PGM path
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct PatchOrderArgs {
    /// Patch grid of side 2^N
    #[arg(long, conflicts_with_all = ["width", "height"])]
    pub order: Option<u32>,
    /// Patch-grid width
    #[arg(long, requires = "height")]
    pub width: Option<u32>,
    /// Patch-grid height
    #[arg(long, requires = "width")]
    pub height: Option<u32>,
    /// Output format (csv)
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct DegridArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Neighborhood radius in sequence steps
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Use squared distances instead of Euclidean
    #[arg(long)]
    pub squared: bool,
    /// Output format: csv (per position) or pgm (P2 heatmap)
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct PreserveArgs {
    /// Grid of side 2^N
    #[arg(long, default_value_t = 3)]
    pub order: u32,
    /// Neighborhood radius in sequence steps
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Use squared distances instead of Euclidean
    #[arg(long)]
    pub squared: bool,
    /// Smallest threshold (default: 0.99 x smallest DeGrid value)
    #[arg(long, requires = "eps_max")]
    pub eps_min: Option<f64>,
    /// Largest threshold (default: 1.01 x largest DeGrid value)
    #[arg(long, requires = "eps_min")]
    pub eps_max: Option<f64>,
    /// Number of log-spaced thresholds
    #[arg(long, default_value_t = 64)]
    pub eps_steps: usize,
    /// Output format (csv)
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct DilationArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Pair sampling: all-pairs (order <= 5) or adjacent
    #[arg(long, default_value = "all-pairs", value_parser = parse_mode)]
    pub mode: DilationMode,
    /// Output format (json)
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct ScaleTraceArgs {
    /// Curve family: hilbert, morton or zigzag
    #[arg(long, default_value = "hilbert", value_parser = parse_curve)]
    pub curve: CurveKind,
    /// First parameter as P/Q with Q a power of two
    #[arg(long, value_parser = parse_dyadic)]
    pub t1: Dyadic,
    /// Second parameter as P/Q with Q a power of two
    #[arg(long, value_parser = parse_dyadic)]
    pub t2: Dyadic,
    /// Smallest order
    #[arg(long, default_value_t = 1)]
    pub n_min: u32,
    /// Largest order
    #[arg(long, default_value_t = 10)]
    pub n_max: u32,
    /// Output format (json)
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct HierarchyArgs {
    /// Curve family: hilbert, morton or zigzag
    #[arg(long, default_value = "hilbert", value_parser = parse_curve)]
    pub curve: CurveKind,
    /// Coarse order n (compares against n + 1)
    #[arg(long, default_value_t = 3)]
    pub order: u32,
    /// Output format (json)
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct ToysetArgs {
    /// Shapes to render
    #[arg(long, value_delimiter = ',', default_value = "circle,square,triangle", value_parser = parse_shape)]
    pub shapes: Vec<Shape>,
    /// Output format (pgm)
    #[arg(long, value_enum, default_value = "pgm")]
    pub format: Format,
    /// Output directory
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct DtwArgs {
    /// First `d,value` CSV sequence
    #[arg(long)]
    pub a: PathBuf,
    /// Second `d,value` CSV sequence
    #[arg(long)]
    pub b: PathBuf,
    /// Cost normalization: none or path
    #[arg(long, default_value = "none", value_parser = parse_normalize)]
    pub normalize: Normalize,
    /// Output format (json)
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct DtwTableArgs {
    /// Curves to compare (repeatable or comma-separated)
    #[arg(long, value_delimiter = ',', default_value = "hilbert,morton,zigzag", value_parser = parse_curve)]
    pub curve: Vec<CurveKind>,
    /// Shapes to include
    #[arg(long, value_delimiter = ',', default_value = "circle,square,triangle", value_parser = parse_shape)]
    pub shapes: Vec<Shape>,
    /// Cost normalization: none or path
    #[arg(long, default_value = "none", value_parser = parse_normalize)]
    pub normalize: Normalize,
    /// Output format: csv or json
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Output directory (default: report-YYYY-MM-DD)
    #[arg(long)]
    pub out: Option<PathBuf>,
}
