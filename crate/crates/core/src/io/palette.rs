/// Piecewise-linear colour ramp with a separate prisoner colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Palette {
    pub name: &'static str,
    pub prisoner: [u8; 3],
    stops: &'static [[u8; 3]],
}

impl Palette {
    /// Blue, cyan, green, yellow, red. Every colour on the ramp has a
    /// saturated channel, so none equals the black prisoner colour.
    pub const SPECTRUM: Palette = Palette {
        name: "spectrum",
        prisoner: [0, 0, 0],
        stops: &[[0, 0, 255], [0, 255, 255], [0, 255, 0], [255, 255, 0], [255, 0, 0]],
    };

    /// Dark blue through white; the darkest stop keeps a blue channel.
    pub const ICE: Palette = Palette {
        name: "ice",
        prisoner: [0, 0, 0],
        stops: &[[8, 16, 96], [32, 128, 224], [255, 255, 255]],
    };

    pub const ALL: [Palette; 2] = [Palette::SPECTRUM, Palette::ICE];

    pub fn by_name(name: &str) -> Option<Palette> {
        Self::ALL.into_iter().find(|p| p.name == name)
    }

    /// Colour at `t` in `[0, 1]` (clamped).
    pub fn color_at(&self, t: f64) -> [u8; 3] {
        let t = if t.is_nan() { 0.0 } else { t.clamp(0.0, 1.0) };
        let segments = self.stops.len() - 1;
        let x = t * segments as f64;
        let k = (x.floor() as usize).min(segments - 1);
        let f = x - k as f64;
        let (a, b) = (self.stops[k], self.stops[k + 1]);
        std::array::from_fn(|i| (a[i] as f64 + (b[i] as f64 - a[i] as f64) * f).round() as u8)
    }

    /// Escape indices on a logarithmic ramp: fast escapes at the low end,
    /// `max_iter - 1` and beyond at the high end.
    pub fn escape_color(&self, escape_index: Option<u32>, max_iter: usize) -> [u8; 3] {
        match escape_index {
            None => self.prisoner,
            Some(_) if max_iter < 2 => self.color_at(0.0),
            Some(e) => {
                let e = (e as f64).min((max_iter - 1) as f64);
                self.color_at((1.0 + e).ln() / (max_iter as f64).ln())
            }
        }
    }

    /// Linear in `count / total`.
    pub fn count_color(&self, count: u64, total: u64) -> [u8; 3] {
        self.color_at(count as f64 / total.max(1) as f64)
    }
}
