use num_complex::Complex64;
use rayon::prelude::*;

use super::grid::GridSpec;
use crate::dynamics::{escape_radius, ParameterPair, SymbolicTemplate};
use crate::dynamics::orbit::quad;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ITER: usize = 200;

/// Per-pixel classification of a template orbit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cell {
    /// `None` for prisoner pixels.
    pub escape_index: Option<u32>,
    /// Exterior distance estimate `|z| ln|z| / |dz/dz0|` at escape, in
    /// complex-plane units; zero for prisoners, infinite when unknown.
    pub distance: f64,
}

impl Cell {
    pub const PRISONER: Cell = Cell {
        escape_index: None,
        distance: 0.0,
    };

    /// An escape pixel with no distance information.
    pub fn escaped(index: u32) -> Self {
        Self {
            escape_index: Some(index),
            distance: f64::INFINITY,
        }
    }

    #[inline]
    pub fn is_prisoner(&self) -> bool {
        self.escape_index.is_none()
    }
}

/// Read access shared by dynamic-plane and parameter-plane rasters.
pub trait EscapeRaster {
    fn grid(&self) -> &GridSpec;
    fn max_iter(&self) -> usize;
    fn escape_index(&self, index: usize) -> Option<u32>;

    fn is_prisoner(&self, index: usize) -> bool {
        self.escape_index(index).is_none()
    }

    fn prisoner_count(&self) -> usize {
        (0..self.grid().len()).filter(|&i| self.is_prisoner(i)).count()
    }
}

/// A template prisoner/escape raster over a window of the dynamic plane.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassifiedRaster {
    pub grid: GridSpec,
    pub cells: Vec<Cell>,
    pub max_iter: usize,
    pub pair: ParameterPair,
    /// Canonical spec string of the template.
    pub template: String,
}

impl ClassifiedRaster {
    pub fn from_cells(
        grid: GridSpec,
        cells: Vec<Cell>,
        max_iter: usize,
        pair: ParameterPair,
        template: impl Into<String>,
    ) -> Result<Self> {
        if cells.len() != grid.len() {
            return Err(Error::InvalidGrid(format!(
                "{} cells for a {}x{} grid",
                cells.len(),
                grid.pixels_x,
                grid.pixels_y
            )));
        }
        Ok(Self {
            grid,
            cells,
            max_iter,
            pair,
            template: template.into(),
        })
    }

    pub fn cell(&self, ix: usize, iy: usize) -> &Cell {
        &self.cells[self.grid.index(ix, iy)]
    }

    pub fn prisoner_mask(&self) -> Vec<bool> {
        self.cells.iter().map(Cell::is_prisoner).collect()
    }
}

impl EscapeRaster for ClassifiedRaster {
    fn grid(&self) -> &GridSpec {
        &self.grid
    }

    fn max_iter(&self) -> usize {
        self.max_iter
    }

    fn escape_index(&self, index: usize) -> Option<u32> {
        self.cells[index].escape_index
    }
}

/// Orbit of one pixel center, tracking the derivative with respect to the
/// starting point for the exterior distance estimate.
#[inline]
fn classify_point(z0: Complex64, params: [Complex64; 2], word: &[u8], radius_sqr: f64) -> Cell {
    let estimate = |z: Complex64, dz: Complex64| {
        let m = z.norm();
        m * m.ln() / dz.norm()
    };
    let mut z = z0;
    let mut dz = Complex64::new(1.0, 0.0);
    if z.norm_sqr() > radius_sqr {
        return Cell {
            escape_index: Some(0),
            distance: estimate(z, dz),
        };
    }
    for (n, &s) in word.iter().enumerate() {
        dz = 2.0 * z * dz;
        z = quad(z, params[s as usize]);
        if z.norm_sqr() > radius_sqr {
            return Cell {
                escape_index: Some(n as u32 + 1),
                distance: estimate(z, dz),
            };
        }
    }
    Cell::PRISONER
}

/// Classifies every pixel center of `grid` by its template orbit.
///
/// Rows are evaluated in parallel; each cell depends only on its own center,
/// so the output is identical for any thread count.
pub fn render_julia(
    pair: &ParameterPair,
    template: &SymbolicTemplate,
    grid: &GridSpec,
    max_iter: usize,
) -> Result<ClassifiedRaster> {
    if max_iter == 0 {
        return Err(Error::InvalidArgument("maxIter must be >= 1".into()));
    }
    let word = template.word(max_iter)?;
    let radius = escape_radius(pair);
    let radius_sqr = radius * radius;
    let params = pair.table();

    let mut cells = vec![Cell::PRISONER; grid.len()];
    cells
        .par_chunks_mut(grid.pixels_x)
        .enumerate()
        .for_each(|(iy, row)| {
            let im = grid.pixel_im(iy);
            for (ix, cell) in row.iter_mut().enumerate() {
                let z0 = Complex64::new(grid.pixel_re(ix), im);
                *cell = classify_point(z0, params, &word, radius_sqr);
            }
        });

    ClassifiedRaster::from_cells(*grid, cells, max_iter, *pair, template.to_string())
}
