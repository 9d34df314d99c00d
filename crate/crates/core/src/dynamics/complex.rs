use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A finite point of the complex plane.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct ComplexPoint(Complex64);

impl ComplexPoint {
    pub const ZERO: ComplexPoint = ComplexPoint(Complex64::new(0.0, 0.0));

    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(Self(Complex64::new(re, im)))
        } else {
            Err(Error::NonFinite { re, im })
        }
    }

    /// Builds a point from components already known to be finite.
    ///
    /// Panics on NaN or infinite input.
    pub fn from_parts(re: f64, im: f64) -> Self {
        Self::new(re, im).expect("finite complex components")
    }

    pub fn real(re: f64) -> Self {
        Self::from_parts(re, 0.0)
    }

    #[inline]
    pub fn re(self) -> f64 {
        self.0.re
    }

    #[inline]
    pub fn im(self) -> f64 {
        self.0.im
    }

    #[inline]
    pub fn as_complex(self) -> Complex64 {
        self.0
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.0.norm()
    }

    pub fn distance(self, other: ComplexPoint) -> f64 {
        (self.0 - other.0).norm()
    }
}

impl TryFrom<Complex64> for ComplexPoint {
    type Error = Error;

    fn try_from(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        p.0
    }
}

/// Formats as the command-line literal `a+bi` / `a-bi`, shortest round-trip
/// digits.
impl fmt::Display for ComplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re(), self.im());
        if im < 0.0 {
            write!(f, "{re}-{}i", -im)
        } else {
            write!(f, "{re}+{im}i")
        }
    }
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` with no embedded spaces. Exponents
/// (`1e-3+2E+1i`) are accepted; a bare `i` means one.
impl FromStr for ComplexPoint {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::ComplexLiteral(text.to_string());
        let s = text.trim();
        if s.is_empty() || s.contains(char::is_whitespace) {
            return Err(bad());
        }
        let Some(body) = s.strip_suffix('i') else {
            let re: f64 = s.parse().map_err(|_| bad())?;
            return Self::new(re, 0.0).map_err(|_| bad());
        };

        // Split at the last sign that is neither leading nor part of an exponent.
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));

        let parse_imag = |t: &str| -> Result<f64> {
            match t {
                "" | "+" => Ok(1.0),
                "-" => Ok(-1.0),
                _ => t.parse().map_err(|_| bad()),
            }
        };
        let (re, im) = match split {
            Some(pos) => {
                let re: f64 = body[..pos].parse().map_err(|_| bad())?;
                (re, parse_imag(&body[pos..])?)
            }
            None => (0.0, parse_imag(body)?),
        };
        Self::new(re, im).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> (f64, f64) {
        let p: ComplexPoint = s.parse().unwrap();
        (p.re(), p.im())
    }

    #[test]
    fn parses_literals() {
        assert_eq!(parse("0"), (0.0, 0.0));
        assert_eq!(parse("-0.62-0.432i"), (-0.62, -0.432));
        assert_eq!(parse("-0.2+0.6i"), (-0.2, 0.6));
        assert_eq!(parse("i"), (0.0, 1.0));
        assert_eq!(parse("-i"), (0.0, -1.0));
        assert_eq!(parse("1-i"), (1.0, -1.0));
        assert_eq!(parse("0.76i"), (0.0, 0.76));
        assert_eq!(parse("1e-3+2E+1i"), (1e-3, 20.0));
        assert_eq!(parse("-1e-2"), (-0.01, 0.0));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1 + 2i", "abc", "1+2j", "nan", "1+infi", "++1i"] {
            assert!(s.parse::<ComplexPoint>().is_err(), "{s}");
        }
    }

    #[test]
    fn display_round_trips() {
        for (re, im) in [(-0.5622, -0.62), (0.375, 0.333), (0.0, 0.0), (3.0, -4.0)] {
            let p = ComplexPoint::from_parts(re, im);
            assert_eq!(p.to_string().parse::<ComplexPoint>().unwrap(), p);
        }
        assert_eq!(ComplexPoint::from_parts(-0.117, -0.76).to_string(), "-0.117-0.76i");
    }

    #[test]
    fn rejects_non_finite() {
        assert!(ComplexPoint::new(f64::NAN, 0.0).is_err());
        assert!(ComplexPoint::new(0.0, f64::INFINITY).is_err());
    }
}
