use num_complex::Complex64;

use super::complex::ComplexPoint;
use super::template::SymbolicTemplate;
use crate::error::{Error, Result};

/// The parameters of the two iterated maps, `f_c0` and `f_c1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParameterPair {
    pub c0: ComplexPoint,
    pub c1: ComplexPoint,
}

impl ParameterPair {
    pub fn new(c0: ComplexPoint, c1: ComplexPoint) -> Self {
        Self { c0, c1 }
    }

    /// Both maps equal `f_c`.
    pub fn constant(c: ComplexPoint) -> Self {
        Self { c0: c, c1: c }
    }

    /// The parameter selected by a template symbol.
    #[inline]
    pub fn select(&self, symbol: u8) -> ComplexPoint {
        if symbol == 0 {
            self.c0
        } else {
            self.c1
        }
    }

    #[inline]
    pub(crate) fn table(&self) -> [Complex64; 2] {
        [self.c0.as_complex(), self.c1.as_complex()]
    }
}

/// Result of iterating a template orbit under a finite budget.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitOutcome {
    pub escaped: bool,
    /// First `n` with `|xi_n| > R`.
    pub escape_index: Option<usize>,
    /// `|xi_n|` at the last iterate examined.
    pub final_magnitude: f64,
    /// Number of map applications performed.
    pub iters_used: usize,
}

/// One application of `f_c(z) = z^2 + c`.
#[inline]
pub fn step(z: ComplexPoint, c: ComplexPoint) -> Complex64 {
    quad(z.as_complex(), c.as_complex())
}

#[inline(always)]
pub(crate) fn quad(z: Complex64, c: Complex64) -> Complex64 {
    Complex64::new(z.re * z.re - z.im * z.im + c.re, 2.0 * z.re * z.im + c.im)
}

/// `R = max(2, |c0|, |c1|)`.
///
/// For `|z| > R` and `|c| <= R`, `|z^2 + c| >= |z|^2 - |c| > |z|(|z| - 1) >= |z|`,
/// so once an orbit leaves the disk of radius `R` it diverges under either map.
pub fn escape_radius(pair: &ParameterPair) -> f64 {
    2f64.max(pair.c0.norm()).max(pair.c1.norm())
}

/// Core loop over an explicit word; the budget is `word.len()`.
#[inline]
pub(crate) fn iterate_word(
    z0: Complex64,
    params: [Complex64; 2],
    word: &[u8],
    radius_sqr: f64,
) -> (Option<usize>, Complex64) {
    let mut z = z0;
    if z.norm_sqr() > radius_sqr {
        return (Some(0), z);
    }
    for (n, &s) in word.iter().enumerate() {
        z = quad(z, params[s as usize]);
        if z.norm_sqr() > radius_sqr {
            return (Some(n + 1), z);
        }
    }
    (None, z)
}

/// Iterates a template orbit over an explicit word (`maxIter = word.len()`).
pub fn template_orbit_word(
    xi0: ComplexPoint,
    pair: &ParameterPair,
    word: &[u8],
    radius: f64,
) -> OrbitOutcome {
    let (escape, z) = iterate_word(xi0.as_complex(), pair.table(), word, radius * radius);
    OrbitOutcome {
        escaped: escape.is_some(),
        escape_index: escape,
        final_magnitude: z.norm(),
        iters_used: escape.unwrap_or(word.len()),
    }
}

/// Iterates `xi_{n+1} = f_{c_{s_n}}(xi_n)` from `xi0` for at most `max_iter`
/// steps, stopping at the first iterate with `|xi_n| > radius`.
pub fn template_orbit(
    xi0: ComplexPoint,
    pair: &ParameterPair,
    template: &SymbolicTemplate,
    max_iter: usize,
    radius: f64,
) -> Result<OrbitOutcome> {
    if max_iter == 0 {
        return Err(Error::InvalidArgument("maxIter must be >= 1".into()));
    }
    let min_radius = escape_radius(pair);
    if radius.is_nan() || radius < min_radius {
        return Err(Error::InvalidArgument(format!(
            "escape radius {radius} below the sound bound {min_radius}"
        )));
    }
    let word = template.word(max_iter)?;
    Ok(template_orbit_word(xi0, pair, &word, radius))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint::from_parts(re, im)
    }

    fn pair(c0: (f64, f64), c1: (f64, f64)) -> ParameterPair {
        ParameterPair::new(pt(c0.0, c0.1), pt(c1.0, c1.1))
    }

    #[test]
    fn step_examples() {
        assert_eq!(step(pt(0.0, 0.0), pt(-0.75, 0.0)), Complex64::new(-0.75, 0.0));
        assert_eq!(step(pt(0.0, 1.0), pt(0.0, 0.0)), Complex64::new(-1.0, 0.0));
        // (1 - i)^2 = -2i
        let z = step(pt(1.0, -1.0), pt(-0.117, -0.76));
        assert!((z.re + 0.117).abs() < 1e-15 && (z.im + 2.76).abs() < 1e-15);
    }

    #[test]
    fn escape_radius_examples() {
        assert_eq!(escape_radius(&pair((0.0, 0.0), (0.0, 0.0))), 2.0);
        assert_eq!(escape_radius(&pair((0.0, 0.0), (-1.0, -0.55))), 2.0);
        assert_eq!(escape_radius(&pair((3.0, 4.0), (0.0, 0.0))), 5.0);
    }

    #[test]
    fn orbit_examples() {
        let any: SymbolicTemplate = "random:seed=5,N=200,p=0.5".parse().unwrap();
        let zero = pair((0.0, 0.0), (0.0, 0.0));
        let o = template_orbit(pt(0.0, 0.0), &zero, &any, 200, 2.0).unwrap();
        assert!(!o.escaped);
        assert_eq!(o.final_magnitude, 0.0);
        assert_eq!(o.iters_used, 200);

        // 0 -> 0 -> -1 -> 1 -> 0 -> ...
        let p = pair((0.0, 0.0), (-1.0, 0.0));
        let alt: SymbolicTemplate = "periodic:01".parse().unwrap();
        let o = template_orbit(pt(0.0, 0.0), &p, &alt, 200, 2.0).unwrap();
        assert!(!o.escaped && o.escape_index.is_none());
        let o = template_orbit(pt(0.0, 0.0), &p, &alt, 3, 2.0).unwrap();
        assert_eq!(o.final_magnitude, 1.0);

        let ones = pair((1.0, 0.0), (1.0, 0.0));
        let o = template_orbit(pt(2.0, 0.0), &ones, &"periodic:0".parse().unwrap(), 10, 2.0)
            .unwrap();
        assert!(o.escaped);
        assert_eq!(o.escape_index, Some(1));
        assert_eq!(o.final_magnitude, 5.0);
        assert_eq!(o.iters_used, 1);
    }

    #[test]
    fn orbit_errors() {
        let p = pair((0.0, 0.0), (0.0, 0.0));
        let w: SymbolicTemplate = "word:0101".parse().unwrap();
        assert!(matches!(
            template_orbit(pt(0.0, 0.0), &p, &w, 5, 2.0),
            Err(Error::TemplateTooShort { max_iter: 5, len: 4 })
        ));
        assert!(template_orbit(pt(0.0, 0.0), &p, &w, 0, 2.0).is_err());
        assert!(template_orbit(pt(0.0, 0.0), &p, &w, 4, 1.5).is_err());
    }

    #[test]
    fn escape_at_start() {
        let p = pair((0.0, 0.0), (0.0, 0.0));
        let o = template_orbit(pt(3.0, 0.0), &p, &"periodic:1".parse().unwrap(), 5, 2.0).unwrap();
        assert_eq!(o.escape_index, Some(0));
        assert_eq!(o.iters_used, 0);
        assert!(o.final_magnitude > 2.0);
    }

    fn arb_c(max: f64) -> impl Strategy<Value = ComplexPoint> {
        (0.0..max, 0.0..std::f64::consts::TAU)
            .prop_map(|(r, t): (f64, f64)| ComplexPoint::from_parts(r * t.cos(), r * t.sin()))
    }

    proptest! {
        #[test]
        fn escape_soundness(c0 in arb_c(4.0), c1 in arb_c(4.0), s in 0u8..2, u in 1.0001f64..2.0, t in 0.0..std::f64::consts::TAU) {
            let p = ParameterPair::new(c0, c1);
            let r = escape_radius(&p);
            let z = pt(u * r * t.cos(), u * r * t.sin());
            prop_assume!(z.norm() > r);
            let next = step(z, p.select(s));
            prop_assert!(next.norm() > z.norm());
        }

        #[test]
        fn shift_preimage_identity(
            c0 in arb_c(1.5), c1 in arb_c(1.5),
            block in proptest::collection::vec(0u8..2, 1..6),
            z in arb_c(2.5), m in 2usize..60,
        ) {
            let p = ParameterPair::new(c0, c1);
            let r = escape_radius(&p);
            let t = SymbolicTemplate::periodic(block).unwrap();
            let a = template_orbit(z, &p, &t, m, r).unwrap();
            // The index-0 test only exists on the left-hand side.
            prop_assume!(a.escape_index != Some(0));
            let next = ComplexPoint::try_from(step(z, p.select(t.symbol(0).unwrap()))).unwrap();
            let b = template_orbit(next, &p, &t.shift(1).unwrap(), m - 1, r).unwrap();
            prop_assert_eq!(a.escaped, b.escaped);
            if a.escaped {
                prop_assert_eq!(a.escape_index.unwrap(), b.escape_index.unwrap() + 1);
            }
        }

        #[test]
        fn constant_template_reduction(
            c in arb_c(1.2), z in arb_c(2.0),
            w1 in proptest::collection::vec(0u8..2, 50),
            w2 in proptest::collection::vec(0u8..2, 50),
        ) {
            let p = ParameterPair::constant(c);
            let r = escape_radius(&p);
            let a = template_orbit_word(z, &p, &w1, r);
            let b = template_orbit_word(z, &p, &w2, r);
            prop_assert_eq!(a, b);
        }
    }
}
