//! Connectivity verdicts for template prisoner rasters.
//!
//! A pure pixel-center sampling misses both thin connections (pinch points
//! between interior components fall between pixel centers) and Cantor sets
//! (zero area, so no center survives the iteration budget). Each escaping
//! cell therefore carries an exterior distance estimate, and components are
//! counted on two covers of the set:
//!
//! * the fine cover: prisoners plus pixels within `FINE_COVER` pixel sizes
//!   of the set, which resolves sub-pixel gaps;
//! * the coarse cover: pixels within `COARSE_COVER` pixel sizes, i.e. pixels
//!   the set passes through, which bridges sub-pixel pinches.
//!
//! Verdicts: `Empty` when the coarse cover is empty; `Dust` when every fine
//! component has at most `dust_threshold` pixels; `Connected` when the coarse
//! cover is a single component and the largest fine component holds at least
//! `DOMINANT_FRACTION` of the fine cover; `Disconnected` otherwise. The last
//! condition separates a connected set with pinches (one dominant body plus
//! slivers) from a cloud of comparable pieces linked only below pixel scale.

use super::julia::ClassifiedRaster;
use crate::error::{Error, Result};

pub const FINE_COVER: f64 = 0.02;
pub const COARSE_COVER: f64 = 0.5;
pub const DOMINANT_FRACTION: f64 = 0.25;
pub const DEFAULT_DUST_THRESHOLD: usize = 16;

/// Union-find with path halving and union by size.
#[derive(Clone, Debug)]
pub struct DisjointSet {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut i: u32) -> u32 {
        while self.parent[i as usize] != i {
            let grand = self.parent[self.parent[i as usize] as usize];
            self.parent[i as usize] = grand;
            i = grand;
        }
        i
    }

    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        true
    }

    pub fn size_of(&mut self, i: u32) -> u32 {
        let r = self.find(i);
        self.size[r as usize]
    }
}

/// Sizes of the 8-connected components of `mask` (row-major, `width` wide),
/// in order of each component's first pixel.
pub fn label_components(mask: &[bool], width: usize) -> Vec<usize> {
    let height = mask.len().checked_div(width).unwrap_or(0);
    let mut dsu = DisjointSet::new(mask.len());
    for y in 0..height {
        for x in 0..width {
            let i = y * width + x;
            if !mask[i] {
                continue;
            }
            // Previously visited neighbours: W, NW, N, NE.
            if x > 0 && mask[i - 1] {
                dsu.union(i as u32, (i - 1) as u32);
            }
            if y > 0 {
                let up = i - width;
                if mask[up] {
                    dsu.union(i as u32, up as u32);
                }
                if x > 0 && mask[up - 1] {
                    dsu.union(i as u32, (up - 1) as u32);
                }
                if x + 1 < width && mask[up + 1] {
                    dsu.union(i as u32, (up + 1) as u32);
                }
            }
        }
    }
    let mut sizes = Vec::new();
    for (i, _) in mask.iter().enumerate().filter(|(_, &m)| m) {
        let i = i as u32;
        if dsu.find(i) == i {
            sizes.push(dsu.size_of(i) as usize);
        }
    }
    sizes
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Connected,
    Disconnected,
    Dust,
    Empty,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Connected => "Connected",
            Verdict::Disconnected => "Disconnected",
            Verdict::Dust => "Dust",
            Verdict::Empty => "Empty",
        }
    }

    /// Connected or Disconnected: the set has a component above dust size.
    pub fn is_substantial(self) -> bool {
        matches!(self, Verdict::Connected | Verdict::Disconnected)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Component statistics of one cover.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CoverStats {
    pub pixels: usize,
    pub components: usize,
    pub largest: usize,
}

impl CoverStats {
    fn from_mask(mask: &[bool], width: usize) -> Self {
        let sizes = label_components(mask, width);
        Self {
            pixels: sizes.iter().sum(),
            components: sizes.len(),
            largest: sizes.iter().copied().max().unwrap_or(0),
        }
    }

    pub fn largest_fraction(&self) -> f64 {
        if self.pixels == 0 {
            0.0
        } else {
            self.largest as f64 / self.pixels as f64
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConnectivityReport {
    /// Component count at the scale that decided the verdict.
    pub component_count: usize,
    /// Largest component over all cover pixels, at the deciding scale.
    pub largest_component_fraction: f64,
    pub dust_threshold: usize,
    pub verdict: Verdict,
    pub prisoner_pixels: usize,
    pub fine: CoverStats,
    pub coarse: CoverStats,
}

pub fn classify_connectivity(
    raster: &ClassifiedRaster,
    dust_threshold: usize,
) -> Result<ConnectivityReport> {
    if dust_threshold == 0 {
        return Err(Error::InvalidArgument("dust threshold must be >= 1".into()));
    }
    let width = raster.grid.pixels_x;
    let unit = raster.grid.pixel_size();
    let cover = |scale: f64| -> Vec<bool> {
        let limit = scale * unit;
        raster
            .cells
            .iter()
            .map(|c| c.is_prisoner() || c.distance <= limit)
            .collect()
    };
    let fine = CoverStats::from_mask(&cover(FINE_COVER), width);
    let coarse = CoverStats::from_mask(&cover(COARSE_COVER), width);

    let (verdict, decided_by) = if coarse.pixels == 0 {
        (Verdict::Empty, coarse)
    } else if fine.largest <= dust_threshold {
        (Verdict::Dust, fine)
    } else if coarse.components == 1 && fine.largest_fraction() >= DOMINANT_FRACTION {
        (Verdict::Connected, coarse)
    } else if coarse.components > 1 {
        (Verdict::Disconnected, coarse)
    } else {
        (Verdict::Disconnected, fine)
    };

    Ok(ConnectivityReport {
        component_count: decided_by.components,
        largest_component_fraction: decided_by.largest_fraction(),
        dust_threshold,
        verdict,
        prisoner_pixels: raster.cells.iter().filter(|c| c.is_prisoner()).count(),
        fine,
        coarse,
    })
}
