use super::grid::GridSpec;
use super::julia::EscapeRaster;
use crate::dynamics::ComplexPoint;

/// How pixels on the window frame are treated by boundary extraction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeRule {
    /// Outside the window counts as escape, so prisoner pixels on the frame
    /// are boundary pixels. Right when the set fits inside the window.
    #[default]
    EscapeAtEdge,
    /// Only in-window neighbours are examined. For zoomed windows that cut
    /// through the set.
    Interior,
}

/// Centers of prisoner pixels 4-adjacent to an escape pixel.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryPointSet {
    pub points: Vec<ComplexPoint>,
    /// Raster indices of the boundary pixels, aligned with `points`.
    pub pixels: Vec<usize>,
    pub source_grid: GridSpec,
}

impl BoundaryPointSet {
    /// A free point set, e.g. a synthetic test construction; `source_grid`
    /// only bounds the admissible box-counting scales.
    pub fn from_points(points: Vec<ComplexPoint>, source_grid: GridSpec) -> Self {
        Self {
            points,
            pixels: Vec::new(),
            source_grid,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn extract_boundary<R: EscapeRaster + ?Sized>(raster: &R) -> BoundaryPointSet {
    extract_boundary_with(raster, EdgeRule::EscapeAtEdge)
}

pub fn extract_boundary_with<R: EscapeRaster + ?Sized>(
    raster: &R,
    rule: EdgeRule,
) -> BoundaryPointSet {
    let grid = *raster.grid();
    let (w, h) = (grid.pixels_x, grid.pixels_y);
    let escapes = |ix: isize, iy: isize| -> bool {
        if ix < 0 || iy < 0 || ix >= w as isize || iy >= h as isize {
            rule == EdgeRule::EscapeAtEdge
        } else {
            !raster.is_prisoner(grid.index(ix as usize, iy as usize))
        }
    };

    let mut points = Vec::new();
    let mut pixels = Vec::new();
    for iy in 0..h {
        for ix in 0..w {
            let index = grid.index(ix, iy);
            if !raster.is_prisoner(index) {
                continue;
            }
            let (x, y) = (ix as isize, iy as isize);
            if escapes(x - 1, y) || escapes(x + 1, y) || escapes(x, y - 1) || escapes(x, y + 1) {
                points.push(grid.pixel_center(ix, iy));
                pixels.push(index);
            }
        }
    }
    BoundaryPointSet {
        points,
        pixels,
        source_grid: grid,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::ParameterPair;
    use crate::raster::julia::{Cell, ClassifiedRaster};

    fn raster(w: usize, h: usize, prisoner: impl Fn(usize, usize) -> bool) -> ClassifiedRaster {
        let grid = GridSpec::new(ComplexPoint::ZERO, w as f64, h as f64, w, h).unwrap();
        let cells = (0..w * h)
            .map(|i| {
                let (x, y) = grid.coords(i);
                if prisoner(x, y) {
                    Cell::PRISONER
                } else {
                    Cell::escaped(1)
                }
            })
            .collect();
        ClassifiedRaster::from_cells(grid, cells, 10, ParameterPair::constant(ComplexPoint::ZERO), "t")
            .unwrap()
    }

    #[test]
    fn all_prisoner_gives_frame() {
        let r = raster(6, 5, |_, _| true);
        let b = extract_boundary(&r);
        assert_eq!(b.len(), 2 * 6 + 2 * 3);
        for &i in &b.pixels {
            let (x, y) = r.grid.coords(i);
            assert!(x == 0 || y == 0 || x == 5 || y == 4);
        }
        assert!(extract_boundary_with(&r, EdgeRule::Interior).is_empty());
    }

    #[test]
    fn all_escape_gives_nothing() {
        assert!(extract_boundary(&raster(4, 4, |_, _| false)).is_empty());
    }

    #[test]
    fn square_block_outline() {
        let r = raster(7, 7, |x, y| (2..5).contains(&x) && (2..5).contains(&y));
        let b = extract_boundary(&r);
        assert_eq!(b.len(), 8);
        assert!(!b.pixels.contains(&r.grid.index(3, 3)));
    }

    #[test]
    fn diagonal_contact_is_not_boundary() {
        // Centre pixel touches escape only diagonally once its 4-neighbours
        // are prisoners.
        let r = raster(5, 5, |x, y| (1..4).contains(&x) && (1..4).contains(&y) || (x, y) == (2, 0));
        let b = extract_boundary(&r);
        assert!(!b.pixels.contains(&r.grid.index(2, 2)));
    }
}
