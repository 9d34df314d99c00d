//! Error propagation sweeps and root-convergence experiments.

use crate::dynamics::{ComplexPoint, ParameterPair, SymbolicTemplate};
use crate::error::{Error, Result};
use crate::raster::{extract_boundary, hausdorff_distance, render_julia, ClassifiedRaster, GridSpec};

/// One Julia raster per error position `k` (1-based) of an all-ones word of
/// length `n`: step `k` applies `f_c0` instead of `f_c1`.
pub fn error_sweep(
    c1: ComplexPoint,
    c0: ComplexPoint,
    positions: &[usize],
    n: usize,
    grid: &GridSpec,
) -> Result<Vec<ClassifiedRaster>> {
    let pair = ParameterPair::new(c0, c1);
    positions
        .iter()
        .map(|&k| {
            let t = SymbolicTemplate::propagating_error(k, n)?;
            render_julia(&pair, &t, grid, n)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceEntry {
    pub n: usize,
    /// `None` when either boundary is empty.
    pub distance: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceCurve {
    pub pair: ParameterPair,
    pub template: String,
    pub reference_length: usize,
    pub entries: Vec<ConvergenceEntry>,
}

impl ConvergenceCurve {
    pub fn distance_at(&self, n: usize) -> Option<f64> {
        self.entries.iter().find(|e| e.n == n).and_then(|e| e.distance)
    }
}

/// Boundary distance between the Julia raster of each `n`-root (iterated
/// `n` steps) and the reference raster (`reference_length` steps).
pub fn convergence_experiment(
    pair: &ParameterPair,
    t: &SymbolicTemplate,
    root_lengths: &[usize],
    reference_length: usize,
    grid: &GridSpec,
) -> Result<ConvergenceCurve> {
    if root_lengths.is_empty() {
        return Err(Error::InvalidArgument("no root lengths given".into()));
    }
    if root_lengths.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("root lengths must be strictly increasing".into()));
    }
    if let Some(&n) = root_lengths.iter().find(|&&n| n == 0 || n > reference_length) {
        return Err(Error::InvalidArgument(format!(
            "root length {n} outside 1..={reference_length}"
        )));
    }
    let reference = extract_boundary(&render_julia(pair, t, grid, reference_length)?);

    let entries = root_lengths
        .iter()
        .map(|&n| {
            let root = t.k_root(n)?.into_template();
            let boundary = extract_boundary(&render_julia(pair, &root, grid, n)?);
            let distance = match hausdorff_distance(&boundary, &reference) {
                Ok(d) => Some(d),
                Err(Error::EmptyPointSet) => {
                    log::warn!("empty boundary at root length {n}");
                    None
                }
                Err(e) => return Err(e),
            };
            Ok(ConvergenceEntry { n, distance })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ConvergenceCurve {
        pair: *pair,
        template: t.to_string(),
        reference_length,
        entries,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommonRootComparison {
    pub base: SymbolicTemplate,
    /// Agrees with `base` on the first `root` symbols, random afterwards.
    pub partner: SymbolicTemplate,
    /// `partner` with its first symbol flipped.
    pub control: SymbolicTemplate,
    pub shared_root_distance: f64,
    pub control_distance: f64,
}

/// Julia boundary distance between templates sharing a `root`-root and
/// between templates differing in their first symbol.
///
/// The base is `RandomSeeded(seed, len, 1/2)`; the partner keeps its first
/// `root` symbols and takes the rest from `RandomSeeded(seed + 1, len, 1/2)`.
pub fn common_root_comparison(
    pair: &ParameterPair,
    seed: u64,
    root: usize,
    len: usize,
    grid: &GridSpec,
) -> Result<CommonRootComparison> {
    if root == 0 || root >= len {
        return Err(Error::InvalidArgument(format!("root {root} outside 1..{len}")));
    }
    let base = SymbolicTemplate::random(seed, len, 0.5)?;
    let other = SymbolicTemplate::random(seed.wrapping_add(1), len, 0.5)?.word(len)?;
    let mut partner_word = base.word(root)?;
    partner_word.extend_from_slice(&other[root..]);
    let mut control_word = partner_word.clone();
    control_word[0] ^= 1;
    let partner = SymbolicTemplate::finite(partner_word)?;
    let control = SymbolicTemplate::finite(control_word)?;

    let boundary = |t: &SymbolicTemplate| render_julia(pair, t, grid, len).map(|r| extract_boundary(&r));
    let (b0, b1, b2) = (boundary(&base)?, boundary(&partner)?, boundary(&control)?);
    Ok(CommonRootComparison {
        shared_root_distance: hausdorff_distance(&b0, &b1)?,
        control_distance: hausdorff_distance(&b0, &b2)?,
        base,
        partner,
        control,
    })
}
