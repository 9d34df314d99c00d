//! Fixed-template Mandelbrot slices over the `c1` plane.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::dynamics::orbit::iterate_word;
use crate::dynamics::{ComplexPoint, SymbolicTemplate};
use crate::error::{Error, Result};
use crate::raster::{
    box_counting_dimension, default_box_scales, extract_boundary_with, BoundaryPointSet,
    BoxCountEstimate, EdgeRule, EscapeRaster, GridSpec,
};

/// Per-pixel boundedness of the orbit of 0 with `c0` fixed and `c1` at the
/// pixel center.
#[derive(Clone, Debug, PartialEq)]
pub struct MandelSliceRaster {
    pub grid: GridSpec,
    pub fixed_c0: ComplexPoint,
    pub template: String,
    /// Escape index per pixel, `None` when bounded.
    pub cells: Vec<Option<u32>>,
    pub max_iter: usize,
}

impl MandelSliceRaster {
    pub fn bounded_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_none()).count()
    }
}

impl EscapeRaster for MandelSliceRaster {
    fn grid(&self) -> &GridSpec {
        &self.grid
    }

    fn max_iter(&self) -> usize {
        self.max_iter
    }

    fn escape_index(&self, index: usize) -> Option<u32> {
        self.cells[index]
    }
}

/// `c1` in `[-2, 2]^2`.
pub fn default_slice_grid(pixels: usize) -> Result<GridSpec> {
    GridSpec::square(ComplexPoint::ZERO, 4.0, pixels)
}

pub fn mandel_slice(
    t: &SymbolicTemplate,
    c0: ComplexPoint,
    grid: &GridSpec,
    max_iter: usize,
) -> Result<MandelSliceRaster> {
    if max_iter == 0 {
        return Err(Error::InvalidArgument("maxIter must be >= 1".into()));
    }
    let word = t.word(max_iter)?;
    let a = c0.as_complex();
    let base_radius = 2f64.max(c0.norm());

    let mut cells = vec![None; grid.len()];
    cells
        .par_chunks_mut(grid.pixels_x)
        .enumerate()
        .for_each(|(iy, row)| {
            let im = grid.pixel_im(iy);
            for (ix, cell) in row.iter_mut().enumerate() {
                let c1 = Complex64::new(grid.pixel_re(ix), im);
                let r = base_radius.max(c1.norm());
                let (escape, _) = iterate_word(Complex64::new(0.0, 0.0), [a, c1], &word, r * r);
                *cell = escape.map(|e| e as u32);
            }
        });

    Ok(MandelSliceRaster {
        grid: *grid,
        fixed_c0: c0,
        template: t.to_string(),
        cells,
        max_iter,
    })
}

/// `start:step:end`, both ends inclusive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LatticeRange {
    pub start: f64,
    pub step: f64,
    pub end: f64,
}

impl LatticeRange {
    pub fn new(start: f64, step: f64, end: f64) -> Result<Self> {
        if !(start.is_finite() && step.is_finite() && end.is_finite()) {
            return Err(Error::InvalidArgument("lattice range must be finite".into()));
        }
        if step <= 0.0 {
            return Err(Error::InvalidArgument(format!("lattice step {step} must be > 0")));
        }
        if end < start {
            return Err(Error::InvalidArgument(format!("empty lattice range {start}..{end}")));
        }
        Ok(Self { start, step, end })
    }

    pub fn single(value: f64) -> Result<Self> {
        Self::new(value, 1.0, value)
    }

    pub fn count(&self) -> usize {
        ((self.end - self.start) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.count())
            .map(|i| self.start + i as f64 * self.step)
            .collect()
    }
}

impl FromStr for LatticeRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidArgument(format!("bad lattice number {p:?} in {s:?}")))
        };
        match parts.as_slice() {
            [v] => Self::single(num(v)?),
            [a, st, b] => Self::new(num(a)?, num(st)?, num(b)?),
            _ => Err(Error::InvalidArgument(format!(
                "lattice range {s:?} is not start:step:end"
            ))),
        }
    }
}

impl fmt::Display for LatticeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.step, self.end)
    }
}

/// A rectangular lattice of `c0` values.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct C0Lattice {
    pub re: LatticeRange,
    pub im: LatticeRange,
}

impl C0Lattice {
    /// Row-major: imaginary part in the outer loop, real part inner, both
    /// ascending.
    pub fn points(&self) -> Result<Vec<ComplexPoint>> {
        let re = self.re.values();
        self.im
            .values()
            .into_iter()
            .flat_map(|im| re.iter().map(move |&r| ComplexPoint::new(r, im)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.re.count() * self.im.count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn slice_lattice(
    t: &SymbolicTemplate,
    lattice: &C0Lattice,
    grid: &GridSpec,
    max_iter: usize,
) -> Result<Vec<MandelSliceRaster>> {
    lattice
        .points()?
        .into_iter()
        .map(|c0| mandel_slice(t, c0, grid, max_iter))
        .collect()
}

#[derive(Debug)]
pub struct ZoomLevel {
    pub raster: MandelSliceRaster,
    pub boundary: BoundaryPointSet,
    /// Box-counting estimate of the boundary; an empty or featureless
    /// boundary gives a degenerate-regression error.
    pub dimension: Result<BoxCountEstimate>,
}

/// One slice and boundary dimension estimate per window. Windows are meant
/// to be nested; a window outside its predecessor only triggers a warning.
pub fn zoom_sequence(
    t: &SymbolicTemplate,
    c0: ComplexPoint,
    windows: &[GridSpec],
    max_iter: usize,
) -> Result<Vec<ZoomLevel>> {
    if windows.is_empty() {
        return Err(Error::InvalidArgument("zoom needs at least one window".into()));
    }
    for (k, pair) in windows.windows(2).enumerate() {
        if !pair[0].contains_window(&pair[1]) {
            log::warn!("zoom window {} is not contained in window {}", k + 1, k);
        }
    }
    windows
        .iter()
        .map(|grid| {
            let raster = mandel_slice(t, c0, grid, max_iter)?;
            let boundary = extract_boundary_with(&raster, EdgeRule::Interior);
            let dimension = box_counting_dimension(&boundary, default_box_scales(grid));
            Ok(ZoomLevel {
                raster,
                boundary,
                dimension,
            })
        })
        .collect()
}
