//! Hybrid counts: for fixed `c0`, how many length-`L` templates keep the
//! orbit of 0 bounded at each `c1`.
//!
//! An orbit counts as escaped once `|xi| > R`, or `|xi| = R` with `R > 2`:
//! in that case `|xi^2 + c| >= R^2 - R > R`, so divergence is already
//! certain and does not depend on symbols beyond the word.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::dynamics::orbit::quad;
use crate::dynamics::{ComplexPoint, SplitMix64};
use crate::error::{Error, Result};
use crate::raster::GridSpec;

/// Largest `L` accepted for exhaustive enumeration.
pub const EXACT_MAX_LEN: usize = 20;
/// Above this `L` exhaustive enumeration logs a cost warning.
pub const EXACT_COST_WARNING: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HybridMode {
    /// All `2^L` words.
    Exact,
    /// `samples` words shared by every pixel; word `w` takes its symbols
    /// from the high bits of `SplitMix64::at(seed, w)`, symbol 0 first.
    MonteCarlo { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct HybridRaster {
    pub grid: GridSpec,
    pub fixed_c0: ComplexPoint,
    pub l: usize,
    pub mode: HybridMode,
    pub counts: Vec<u64>,
    /// `2^L` for exact mode, the sample count otherwise.
    pub total: u64,
}

impl HybridRaster {
    pub fn fraction(&self, index: usize) -> f64 {
        self.counts[index] as f64 / self.total as f64
    }
}

#[derive(Clone, Copy)]
struct Escape {
    radius_sqr: f64,
    inclusive: bool,
}

impl Escape {
    fn new(c0: Complex64, c1: Complex64) -> Self {
        let r = 2f64.max(c0.norm()).max(c1.norm());
        Self {
            radius_sqr: r * r,
            inclusive: r > 2.0,
        }
    }

    #[inline]
    fn test(self, z: Complex64) -> bool {
        let m = z.norm_sqr();
        m > self.radius_sqr || (self.inclusive && m >= self.radius_sqr)
    }
}

/// Depth-first enumeration; a subtree is dropped as soon as its prefix
/// escapes.
fn count_exact(params: [Complex64; 2], l: usize, esc: Escape) -> u64 {
    let mut count = 0u64;
    let mut stack = vec![(Complex64::new(0.0, 0.0), 0usize)];
    while let Some((z, depth)) = stack.pop() {
        if depth == l {
            count += 1;
            continue;
        }
        for c in params {
            let next = quad(z, c);
            if !esc.test(next) {
                stack.push((next, depth + 1));
            }
        }
    }
    count
}

fn count_sampled(params: [Complex64; 2], l: usize, words: &[u64], esc: Escape) -> u64 {
    words
        .iter()
        .filter(|&&w| {
            let mut z = Complex64::new(0.0, 0.0);
            (0..l).all(|n| {
                z = quad(z, params[((w >> (63 - n)) & 1) as usize]);
                !esc.test(z)
            })
        })
        .count() as u64
}

pub fn hybrid_mandelbrot(
    c0: ComplexPoint,
    grid: &GridSpec,
    l: usize,
    mode: HybridMode,
) -> Result<HybridRaster> {
    if l == 0 {
        return Err(Error::InvalidArgument("template length L must be >= 1".into()));
    }
    let (total, words) = match mode {
        HybridMode::Exact => {
            if l > EXACT_MAX_LEN {
                return Err(Error::InvalidArgument(format!(
                    "exact enumeration supports L <= {EXACT_MAX_LEN}, got {l}; use Monte Carlo"
                )));
            }
            if l > EXACT_COST_WARNING {
                log::warn!(
                    "exact hybrid enumeration at L = {l}: up to 2^{l} orbits per pixel over {} pixels",
                    grid.len()
                );
            }
            (1u64 << l, Vec::new())
        }
        HybridMode::MonteCarlo { samples, seed } => {
            if samples == 0 {
                return Err(Error::InvalidArgument("Monte Carlo needs >= 1 sample".into()));
            }
            if l > 64 {
                return Err(Error::InvalidArgument(format!(
                    "Monte Carlo words are limited to L <= 64, got {l}"
                )));
            }
            let words = (0..samples as u64).map(|w| SplitMix64::at(seed, w)).collect();
            (samples as u64, words)
        }
    };

    let a = c0.as_complex();
    let mut counts = vec![0u64; grid.len()];
    counts
        .par_chunks_mut(grid.pixels_x)
        .enumerate()
        .for_each(|(iy, row)| {
            let im = grid.pixel_im(iy);
            for (ix, out) in row.iter_mut().enumerate() {
                let c1 = Complex64::new(grid.pixel_re(ix), im);
                let esc = Escape::new(a, c1);
                *out = match mode {
                    HybridMode::Exact => count_exact([a, c1], l, esc),
                    HybridMode::MonteCarlo { .. } => count_sampled([a, c1], l, &words, esc),
                };
            }
        });

    Ok(HybridRaster {
        grid: *grid,
        fixed_c0: c0,
        l,
        mode,
        counts,
        total,
    })
}
