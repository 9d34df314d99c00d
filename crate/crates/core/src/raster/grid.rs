use crate::dynamics::{escape_radius, ComplexPoint, ParameterPair};
use crate::error::{Error, Result};

/// A rectangular sampling window of the complex plane.
///
/// Pixel `(ix, iy)` covers a `width / pixels_x` by `height / pixels_y` cell;
/// row 0 is the top of the window, so the imaginary part grows upward.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub center: ComplexPoint,
    pub width: f64,
    pub height: f64,
    pub pixels_x: usize,
    pub pixels_y: usize,
}

impl GridSpec {
    pub const DEFAULT_PIXELS: usize = 512;

    pub fn new(
        center: ComplexPoint,
        width: f64,
        height: f64,
        pixels_x: usize,
        pixels_y: usize,
    ) -> Result<Self> {
        if pixels_x < 2 || pixels_y < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2x2 pixels, got {pixels_x}x{pixels_y}"
            )));
        }
        let (pw, ph) = (width / pixels_x as f64, height / pixels_y as f64);
        if !(width > 0.0 && height > 0.0 && pw.is_finite() && ph.is_finite() && pw > 0.0 && ph > 0.0)
        {
            return Err(Error::InvalidGrid(format!(
                "window {width}x{height} must be positive and finite"
            )));
        }
        Ok(Self {
            center,
            width,
            height,
            pixels_x,
            pixels_y,
        })
    }

    pub fn square(center: ComplexPoint, side: f64, pixels: usize) -> Result<Self> {
        Self::new(center, side, side, pixels, pixels)
    }

    /// The window `[re_min, re_max] x [im_min, im_max]`.
    pub fn from_bounds(
        re: (f64, f64),
        im: (f64, f64),
        pixels_x: usize,
        pixels_y: usize,
    ) -> Result<Self> {
        let center = ComplexPoint::new((re.0 + re.1) / 2.0, (im.0 + im.1) / 2.0)?;
        Self::new(center, re.1 - re.0, im.1 - im.0, pixels_x, pixels_y)
    }

    /// Centered at 0 with side `2R + 0.2`, enclosing every prisoner set of the pair.
    pub fn for_pair(pair: &ParameterPair, pixels: usize) -> Result<Self> {
        Self::square(ComplexPoint::ZERO, 2.0 * escape_radius(pair) + 0.2, pixels)
    }

    pub fn pixel_width(&self) -> f64 {
        self.width / self.pixels_x as f64
    }

    pub fn pixel_height(&self) -> f64 {
        self.height / self.pixels_y as f64
    }

    /// The smaller pixel side, used as the length unit of pixel-scale tests.
    pub fn pixel_size(&self) -> f64 {
        self.pixel_width().min(self.pixel_height())
    }

    pub fn pixel_diagonal(&self) -> f64 {
        self.pixel_width().hypot(self.pixel_height())
    }

    pub fn len(&self) -> usize {
        self.pixels_x * self.pixels_y
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn left(&self) -> f64 {
        self.center.re() - self.width / 2.0
    }

    pub fn top(&self) -> f64 {
        self.center.im() + self.height / 2.0
    }

    pub fn right(&self) -> f64 {
        self.center.re() + self.width / 2.0
    }

    pub fn bottom(&self) -> f64 {
        self.center.im() - self.height / 2.0
    }

    #[inline]
    pub fn index(&self, ix: usize, iy: usize) -> usize {
        iy * self.pixels_x + ix
    }

    #[inline]
    pub fn coords(&self, index: usize) -> (usize, usize) {
        (index % self.pixels_x, index / self.pixels_x)
    }

    #[inline]
    pub fn pixel_re(&self, ix: usize) -> f64 {
        self.left() + (ix as f64 + 0.5) * self.pixel_width()
    }

    #[inline]
    pub fn pixel_im(&self, iy: usize) -> f64 {
        self.top() - (iy as f64 + 0.5) * self.pixel_height()
    }

    pub fn pixel_center(&self, ix: usize, iy: usize) -> ComplexPoint {
        ComplexPoint::from_parts(self.pixel_re(ix), self.pixel_im(iy))
    }

    /// The pixel whose cell contains `(re, im)`, if inside the window.
    pub fn pixel_of(&self, re: f64, im: f64) -> Option<(usize, usize)> {
        let fx = ((re - self.left()) / self.pixel_width()).floor();
        let fy = ((self.top() - im) / self.pixel_height()).floor();
        if fx >= 0.0 && fy >= 0.0 && fx < self.pixels_x as f64 && fy < self.pixels_y as f64 {
            Some((fx as usize, fy as usize))
        } else {
            None
        }
    }

    /// True when `inner` lies within this window (up to rounding).
    pub fn contains_window(&self, inner: &GridSpec) -> bool {
        let eps = 1e-12 * self.width.max(self.height);
        inner.left() >= self.left() - eps
            && inner.right() <= self.right() + eps
            && inner.bottom() >= self.bottom() - eps
            && inner.top() <= self.top() + eps
    }
}
