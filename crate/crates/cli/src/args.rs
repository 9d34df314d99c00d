//! Flag definitions shared by the subcommands.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use templia::param::LatticeRange;
use templia::{ComplexPoint, GridSpec, SymbolicTemplate};

#[derive(Parser, Debug)]
#[command(
    name = "templia",
    version,
    about = "Symbolic-template iteration of two quadratic maps: Julia sets, Mandelbrot slices and friends."
)]
pub struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true, env = "TEMPLIA_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Template Julia raster of a parameter pair.
    Julia(JuliaArgs),
    /// Fixed-template Mandelbrot slice over the c1 plane for a fixed c0.
    MandelSlice(SliceArgs),
    /// One slice per point of a c0 lattice.
    MandelLattice(LatticeArgs),
    /// Nested slice windows with boundary box-counting estimates.
    Zoom(ZoomArgs),
    /// The fixed-map indicator F over binary expansions of [0, 1].
    FixedMap(FixedMapArgs),
    /// Count of length-L templates with bounded orbit of 0, per c1.
    Hybrid(HybridArgs),
    /// Julia rasters with a single error injected at successive positions.
    ErrorSweep(ErrorSweepArgs),
    /// Boundary distance between truncated-template and reference Julia sets.
    Converge(ConvergeArgs),
    /// Connectivity verdict of a template Julia raster.
    Classify(ClassifyArgs),
    /// Box-counting dimension of a template Julia boundary.
    Dimension(DimensionArgs),
}

fn complex(s: &str) -> Result<ComplexPoint, String> {
    ComplexPoint::from_str(s).map_err(|e| e.to_string())
}

fn template(s: &str) -> Result<SymbolicTemplate, String> {
    SymbolicTemplate::from_str(s).map_err(|e| e.to_string())
}

fn lattice(s: &str) -> Result<LatticeRange, String> {
    LatticeRange::from_str(s).map_err(|e| e.to_string())
}

/// `CENTER:WIDTH`, e.g. `-0.75+0.1i:0.5`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub center: ComplexPoint,
    pub width: f64,
}

fn window(s: &str) -> Result<Window, String> {
    let (c, w) = s
        .rsplit_once(':')
        .ok_or_else(|| format!("window {s:?} is not CENTER:WIDTH"))?;
    let width: f64 = w.parse().map_err(|_| format!("bad window width {w:?}"))?;
    Ok(Window { center: complex(c)?, width })
}

#[derive(Args, Debug, Clone)]
pub struct OutArgs {
    /// Output directory (created if missing).
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    /// Parameter of map 0, as a+bi.
    #[arg(long, default_value = "0", value_parser = complex, allow_hyphen_values = true)]
    pub c0: ComplexPoint,
    /// Parameter of map 1, as a+bi.
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub c1: ComplexPoint,
}

#[derive(Args, Debug, Clone)]
pub struct RasterArgs {
    /// Template: periodic:011 | word:0110 | error:k=30,N=200 | random:seed=42,N=200,p=0.5 | binary:a=0.375,L=15.
    #[arg(long, value_parser = template, default_value = "periodic:1")]
    pub template: SymbolicTemplate,
    /// Iteration budget.
    #[arg(long, default_value_t = 200)]
    pub iters: usize,
    /// Pixels per side.
    #[arg(long, default_value_t = 512)]
    pub px: usize,
    /// Window center (default: 0).
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub center: Option<ComplexPoint>,
    /// Window width and height (default: 2R + 0.2 for Julia sets, 4 for slices).
    #[arg(long)]
    pub width: Option<f64>,
}

impl RasterArgs {
    pub fn grid(&self, default_width: f64) -> templia::Result<GridSpec> {
        GridSpec::square(
            self.center.unwrap_or(ComplexPoint::ZERO),
            self.width.unwrap_or(default_width),
            self.px,
        )
    }
}

#[derive(Args, Debug)]
pub struct JuliaArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[command(flatten)]
    pub raster: RasterArgs,
    /// Also write a colour PPM with this palette (spectrum, ice).
    #[arg(long)]
    pub palette: Option<String>,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct SliceArgs {
    /// Fixed parameter of map 0, as a+bi.
    #[arg(long, default_value = "0", value_parser = complex, allow_hyphen_values = true)]
    pub c0: ComplexPoint,
    #[command(flatten)]
    pub raster: RasterArgs,
    /// Also write a colour PPM with this palette (spectrum, ice).
    #[arg(long)]
    pub palette: Option<String>,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct LatticeArgs {
    /// Real parts of c0 as start:step:end (inclusive).
    #[arg(long, value_parser = lattice, allow_hyphen_values = true)]
    pub re: LatticeRange,
    /// Imaginary parts of c0 as start:step:end (inclusive).
    #[arg(long, value_parser = lattice, allow_hyphen_values = true)]
    pub im: LatticeRange,
    #[command(flatten)]
    pub raster: RasterArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct ZoomArgs {
    /// Fixed parameter of map 0, as a+bi.
    #[arg(long, default_value = "0", value_parser = complex, allow_hyphen_values = true)]
    pub c0: ComplexPoint,
    /// Template spec.
    #[arg(long, value_parser = template, default_value = "periodic:1")]
    pub template: SymbolicTemplate,
    /// Window as CENTER:WIDTH; repeat for nested zooms.
    #[arg(long = "window", value_parser = window, required = true, allow_hyphen_values = true)]
    pub windows: Vec<Window>,
    /// Iteration budget.
    #[arg(long, default_value_t = 200)]
    pub iters: usize,
    /// Pixels per side of every window.
    /// Pixels per side (window 2R + 0.2).
    #[arg(long, default_value_t = 512)]
    pub px: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct FixedMapArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Binary expansion length.
    #[arg(long = "L", default_value_t = 15)]
    pub l: usize,
    /// Number of samples a = i / (resolution - 1).
    #[arg(long, default_value_t = 4096)]
    pub resolution: usize,
    /// Steps of the repeated expansion word.
    #[arg(long, default_value_t = templia::param::FIXED_MAP_MAX_ITER)]
    pub iters: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum HybridModeArg {
    Exact,
    MonteCarlo,
}

#[derive(Args, Debug)]
pub struct HybridArgs {
    /// Fixed parameter of map 0, as a+bi.
    #[arg(long, default_value = "0", value_parser = complex, allow_hyphen_values = true)]
    pub c0: ComplexPoint,
    /// Template length.
    #[arg(long = "L", default_value_t = 12)]
    pub l: usize,
    /// Enumerate every word or sample them.
    #[arg(long, value_enum, default_value_t = HybridModeArg::Exact)]
    pub mode: HybridModeArg,
    /// Words drawn in Monte Carlo mode.
    #[arg(long, default_value_t = 4096)]
    pub samples: usize,
    /// Seed for Monte Carlo mode (required there).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Pixels per side.
    #[arg(long, default_value_t = 512)]
    pub px: usize,
    /// Window center over c1 (default: 0).
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub center: Option<ComplexPoint>,
    /// Window width (default: 4).
    #[arg(long)]
    pub width: Option<f64>,
    /// Palette for the count image.
    #[arg(long, default_value = "spectrum")]
    pub palette: String,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct ErrorSweepArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Set c0 = c1 + PERTURB instead of using --c0.
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub perturb: Option<ComplexPoint>,
    /// 1-based error positions.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,10,30,200")]
    pub positions: Vec<usize>,
    /// Template length (also the iteration budget).
    #[arg(long = "N", default_value_t = 200)]
    pub n: usize,
    /// Pixels per side (window 2R + 0.2).
    #[arg(long, default_value_t = 512)]
    pub px: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct ConvergeArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Template spec; root lengths are taken from it.
    #[arg(long, value_parser = template)]
    pub template: SymbolicTemplate,
    /// Root lengths n.
    #[arg(long, value_delimiter = ',', default_value = "1,5,10,25,50,100,200")]
    pub roots: Vec<usize>,
    /// Reference iteration budget.
    #[arg(long, default_value_t = 200)]
    pub reference: usize,
    /// Also compare templates sharing a root of this length (random templates only).
    #[arg(long)]
    pub common_root: Option<usize>,
    /// Pixels per side (window 2R + 0.2).
    #[arg(long, default_value_t = 512)]
    pub px: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[command(flatten)]
    pub raster: RasterArgs,
    /// Largest component size (pixels) still counted as dust.
    #[arg(long, default_value_t = templia::raster::DEFAULT_DUST_THRESHOLD)]
    pub dust_threshold: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct DimensionArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[command(flatten)]
    pub raster: RasterArgs,
    /// Smallest box size (default: 2 pixels).
    #[arg(long)]
    pub min_scale: Option<f64>,
    /// Largest box size (default: 1/8 of the window).
    #[arg(long)]
    pub max_scale: Option<f64>,
    /// Number of geometric box sizes.
    #[arg(long, default_value_t = 6)]
    pub levels: usize,
    #[command(flatten)]
    pub out: OutArgs,
}
