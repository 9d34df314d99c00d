//! Rasterized template prisoner/escape sets and the metrics computed on them.

mod boundary;
mod boxcount;
mod connectivity;
mod grid;
mod hausdorff;
mod julia;

pub use boundary::{extract_boundary, extract_boundary_with, BoundaryPointSet, EdgeRule};
pub use boxcount::{box_counting_dimension, default_box_scales, BoxCountEstimate, BoxScales};
pub use connectivity::{
    classify_connectivity, label_components, ConnectivityReport, CoverStats, DisjointSet,
    Verdict, COARSE_COVER, DEFAULT_DUST_THRESHOLD, DOMINANT_FRACTION, FINE_COVER,
};
pub use grid::GridSpec;
pub use hausdorff::{directed_hausdorff, hausdorff_distance};
pub use julia::{render_julia, Cell, ClassifiedRaster, EscapeRaster, DEFAULT_MAX_ITER};
