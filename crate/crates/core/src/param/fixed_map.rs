//! The fixed-map indicator `F: [0, 1] -> {0, 1}`.
//!
//! Each sample `a` is expanded into `L` binary digits (infinite form for
//! dyadic values). The digit word is repeated as a periodic block and the
//! orbit of 0 is followed for `max_iter` steps; `F(a) = 1` when it stays
//! bounded. Repetition keeps `F` a function of the `L` digits alone while
//! giving slow escapes room to show up.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::dynamics::orbit::iterate_word;
use crate::dynamics::{escape_radius, ParameterPair, SymbolicTemplate};
use crate::error::{Error, Result};

pub const FIXED_MAP_MAX_ITER: usize = 200;

#[derive(Clone, Debug, PartialEq)]
pub struct FixedMapSamples {
    pub pair: ParameterPair,
    pub l: usize,
    pub max_iter: usize,
    /// `(a, F(a))` with `a` strictly increasing.
    pub samples: Vec<(f64, u8)>,
}

impl FixedMapSamples {
    pub fn is_constant(&self) -> bool {
        self.samples.windows(2).all(|w| w[0].1 == w[1].1)
    }

    pub fn ones(&self) -> usize {
        self.samples.iter().filter(|s| s.1 == 1).count()
    }
}

pub fn fixed_map_f(pair: &ParameterPair, l: usize, resolution: usize) -> Result<FixedMapSamples> {
    fixed_map_f_with(pair, l, resolution, FIXED_MAP_MAX_ITER)
}

pub fn fixed_map_f_with(
    pair: &ParameterPair,
    l: usize,
    resolution: usize,
    max_iter: usize,
) -> Result<FixedMapSamples> {
    if l == 0 {
        return Err(Error::InvalidArgument("expansion length L must be >= 1".into()));
    }
    if resolution < 2 {
        return Err(Error::InvalidArgument(format!("resolution {resolution} must be >= 2")));
    }
    if max_iter == 0 {
        return Err(Error::InvalidArgument("maxIter must be >= 1".into()));
    }
    let r = escape_radius(pair);
    let params = pair.table();
    let samples = (0..resolution)
        .into_par_iter()
        .map(|i| {
            let a = i as f64 / (resolution - 1) as f64;
            let digits = SymbolicTemplate::binary_expansion(a, l)?.word(l)?;
            let word = SymbolicTemplate::periodic(digits)?.word(max_iter)?;
            let (escape, _) = iterate_word(Complex64::new(0.0, 0.0), params, &word, r * r);
            Ok((a, u8::from(escape.is_none())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FixedMapSamples {
        pair: *pair,
        l,
        max_iter,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::ComplexPoint;

    fn pt(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint::from_parts(re, im)
    }

    #[test]
    fn zero_pair_is_all_ones() {
        let f = fixed_map_f(&ParameterPair::constant(ComplexPoint::ZERO), 15, 257).unwrap();
        assert_eq!(f.ones(), 257);
        assert_eq!(f.samples[0].0, 0.0);
        assert_eq!(f.samples[256].0, 1.0);
        assert!(f.samples.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn dust_parameter_is_all_zeros() {
        let c = pt(-0.5622, -0.62);
        let f = fixed_map_f(&ParameterPair::constant(c), 15, 512).unwrap();
        assert_eq!(f.ones(), 0);
    }

    #[test]
    fn equal_maps_give_constant_f() {
        for c in [pt(-0.75, 0.0), pt(0.3, 0.5), pt(-1.0, 0.0)] {
            let f = fixed_map_f(&ParameterPair::constant(c), 10, 300).unwrap();
            assert!(f.is_constant(), "{c}");
        }
    }

    #[test]
    fn mixed_pair_is_not_constant() {
        let pair = ParameterPair::new(pt(-0.5622, -0.62), pt(-0.117, -0.76));
        let f = fixed_map_f(&pair, 15, 4096).unwrap();
        assert!(!f.is_constant());
    }

    #[test]
    fn sample_matches_direct_iteration() {
        // a = 0.5 expands to 0111..., i.e. one step of c0 then c1 forever
        // within each block of L = 4: block 0111 repeated.
        let pair = ParameterPair::new(pt(-1.0, 0.0), pt(0.0, 0.0));
        let f = fixed_map_f_with(&pair, 4, 3, 40).unwrap();
        assert_eq!(f.samples[1], (0.5, 1));
    }

    #[test]
    fn rejects_bad_arguments() {
        let p = ParameterPair::constant(ComplexPoint::ZERO);
        assert!(fixed_map_f(&p, 0, 10).is_err());
        assert!(fixed_map_f(&p, 5, 1).is_err());
        assert!(fixed_map_f_with(&p, 5, 4, 0).is_err());
    }
}
