//! Parameter-plane constructions.

mod fixed_map;
mod hybrid;
mod slice;
mod stats;
mod sweep;

pub use fixed_map::{fixed_map_f, fixed_map_f_with, FixedMapSamples, FIXED_MAP_MAX_ITER};
pub use hybrid::{hybrid_mandelbrot, HybridMode, HybridRaster, EXACT_COST_WARNING, EXACT_MAX_LEN};
pub use slice::{
    default_slice_grid, mandel_slice, slice_lattice, zoom_sequence, C0Lattice, LatticeRange,
    MandelSliceRaster, ZoomLevel,
};
pub use stats::{wilson_interval, Z_99};
pub use sweep::{
    common_root_comparison, convergence_experiment, error_sweep, CommonRootComparison,
    ConvergenceCurve, ConvergenceEntry,
};
