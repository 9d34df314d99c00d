//! Symbolic-template dynamics of pairs of complex quadratic maps.
//!
//! Two maps `f_c0(z) = z^2 + c0` and `f_c1(z) = z^2 + c1` are iterated
//! according to a binary template: symbol `s_n` selects the map applied at
//! step `n`. On top of that kernel the crate builds
//!
//! * template Julia rasters, their boundaries, connectivity verdicts,
//!   Hausdorff distances and box-counting dimension estimates ([`raster`]);
//! * parameter-plane constructions: fixed-template Mandelbrot slices,
//!   lattices and zooms, the fixed-map indicator `F`, hybrid counts, error
//!   sweeps and root-convergence curves ([`param`]);
//! * deterministic writers for netpbm images and text tables ([`io`]).
//!
//! All rendering is data-parallel over rows with [`rayon`]; every output is
//! a pure function of its inputs and does not depend on the thread count.

pub mod dynamics;
pub mod error;
pub mod io;
pub mod param;
pub mod raster;

pub use dynamics::{
    escape_radius, step, template_orbit, ComplexPoint, OrbitOutcome, ParameterPair, SplitMix64,
    SymbolicTemplate, TemplateRoot,
};
pub use error::{Error, Result};
pub use raster::{
    box_counting_dimension, classify_connectivity, extract_boundary, hausdorff_distance,
    render_julia, BoundaryPointSet, BoxCountEstimate, ClassifiedRaster, ConnectivityReport,
    GridSpec, Verdict,
};
