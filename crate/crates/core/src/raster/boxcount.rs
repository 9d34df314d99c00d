//! Box-counting dimension of a point set.

use std::collections::HashSet;

use super::boundary::BoundaryPointSet;
use super::grid::GridSpec;
use crate::error::{Error, Result};

/// Geometric scale ladder from `max` down to `min`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoxScales {
    pub min: f64,
    pub max: f64,
    pub levels: usize,
}

impl BoxScales {
    pub fn new(min: f64, max: f64, levels: usize) -> Result<Self> {
        if levels < 3 {
            return Err(Error::InvalidArgument(format!(
                "box counting needs at least 3 levels, got {levels}"
            )));
        }
        if !(min.is_finite() && max.is_finite() && 0.0 < min && min < max) {
            return Err(Error::InvalidArgument(format!(
                "box scales need 0 < min < max, got min={min}, max={max}"
            )));
        }
        Ok(Self { min, max, levels })
    }

    pub fn epsilons(&self) -> Vec<f64> {
        let ratio = (self.min / self.max).ln() / (self.levels - 1) as f64;
        (0..self.levels)
            .map(|k| match k {
                0 => self.max,
                k if k + 1 == self.levels => self.min,
                k => self.max * (ratio * k as f64).exp(),
            })
            .collect()
    }
}

/// Two pixels up to an eighth of the shorter window side, six levels.
pub fn default_box_scales(grid: &GridSpec) -> BoxScales {
    BoxScales {
        min: 2.0 * grid.pixel_size(),
        max: grid.width.min(grid.height) / 8.0,
        levels: 6,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoxCountEstimate {
    /// Least-squares slope of ln N(eps) against ln(1/eps).
    pub dimension: f64,
    /// (eps, N(eps)) from the largest scale to the smallest.
    pub table: Vec<(f64, usize)>,
}

fn count_boxes(points: &[(f64, f64)], origin: (f64, f64), eps: f64) -> usize {
    points
        .iter()
        .map(|&(x, y)| {
            (
                ((x - origin.0) / eps).floor() as i64,
                ((y - origin.1) / eps).floor() as i64,
            )
        })
        .collect::<HashSet<_>>()
        .len()
}

/// An empty point set counts zero boxes at every scale and so reports a
/// degenerate regression.
pub fn box_counting_dimension(pts: &BoundaryPointSet, scales: BoxScales) -> Result<BoxCountEstimate> {
    let scales = BoxScales::new(scales.min, scales.max, scales.levels)?;
    let window = pts.source_grid.width.max(pts.source_grid.height);
    if scales.max > window {
        return Err(Error::InvalidArgument(format!(
            "max box scale {} exceeds the window size {window}",
            scales.max
        )));
    }

    let xy: Vec<(f64, f64)> = pts.points.iter().map(|p| (p.re(), p.im())).collect();
    let origin = xy
        .iter()
        .fold((f64::INFINITY, f64::INFINITY), |(mx, my), &(x, y)| (mx.min(x), my.min(y)));
    let table: Vec<(f64, usize)> = scales
        .epsilons()
        .into_iter()
        .map(|eps| (eps, count_boxes(&xy, origin, eps)))
        .collect();

    if table.iter().all(|&(_, n)| n == table[0].1) {
        return Err(Error::DegenerateRegression {
            levels: table.len(),
            count: table[0].1,
        });
    }

    let n = table.len() as f64;
    let xs: Vec<f64> = table.iter().map(|&(e, _)| -e.ln()).collect();
    let ys: Vec<f64> = table.iter().map(|&(_, c)| (c as f64).ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();

    Ok(BoxCountEstimate {
        dimension: sxy / sxx,
        table,
    })
}
