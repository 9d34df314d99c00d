use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;

use crate::dynamics::ParameterPair;
use crate::error::{Error, Result};
use crate::raster::GridSpec;

/// Key used for the only field that differs between identical runs.
pub const WALL_CLOCK_KEY: &str = "wall_clock_seconds";

/// `key=value` lines in sorted key order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunManifest {
    entries: BTreeMap<String, String>,
    outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        let mut m = Self::default();
        m.set("command", command);
        m.set("version", env!("CARGO_PKG_VERSION"));
        m
    }

    /// Newlines in values are escaped so each entry stays on one line.
    pub fn set(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        let value = value.to_string().replace('\\', "\\\\").replace('\n', "\\n");
        self.entries.insert(key.into(), value);
        self
    }

    pub fn set_pair(&mut self, pair: &ParameterPair) -> &mut Self {
        self.set("c0", pair.c0).set("c1", pair.c1)
    }

    pub fn set_grid(&mut self, prefix: &str, grid: &GridSpec) -> &mut Self {
        self.set(format!("{prefix}.center"), grid.center)
            .set(format!("{prefix}.width"), grid.width)
            .set(format!("{prefix}.height"), grid.height)
            .set(format!("{prefix}.pixels_x"), grid.pixels_x)
            .set(format!("{prefix}.pixels_y"), grid.pixels_y)
    }

    pub fn add_output(&mut self, name: impl Into<String>) -> &mut Self {
        self.outputs.push(name.into());
        self
    }

    pub fn set_wall_clock(&mut self, seconds: f64) -> &mut Self {
        self.set(WALL_CLOCK_KEY, format!("{seconds:.6}"))
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn outputs(&self) -> &[String] {
        &self.outputs
    }

    pub fn to_text(&self) -> String {
        let mut all = self.entries.clone();
        all.insert("outputs".into(), self.outputs.join(","));
        all.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text()).map_err(Error::from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{ComplexPoint, SymbolicTemplate};

    fn julia_manifest(seconds: f64) -> RunManifest {
        let mut m = RunManifest::new("julia");
        let pair = ParameterPair::new(ComplexPoint::ZERO, ComplexPoint::from_parts(-0.62, -0.432));
        m.set_pair(&pair)
            .set("template", SymbolicTemplate::random(42, 200, 0.5).unwrap())
            .set("maxIter", 200)
            .set_grid("grid", &GridSpec::for_pair(&pair, 512).unwrap())
            .add_output("julia.pgm")
            .set_wall_clock(seconds);
        m
    }

    #[test]
    fn contents() {
        let text = julia_manifest(0.5).to_text();
        assert!(text.lines().any(|l| l == "maxIter=200"));
        assert!(text.contains("seed=42"));
        assert!(text.lines().any(|l| l == "outputs=julia.pgm"));
        assert!(text.lines().any(|l| l == "c1=-0.62-0.432i"));
        let keys: Vec<&str> = text.lines().map(|l| l.split('=').next().unwrap()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn identical_runs_differ_only_in_wall_clock() {
        let (a, b) = (julia_manifest(0.5).to_text(), julia_manifest(7.25).to_text());
        assert_ne!(a, b);
        let strip = |s: &str| -> Vec<String> {
            s.lines().filter(|l| !l.starts_with(WALL_CLOCK_KEY)).map(String::from).collect()
        };
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn values_stay_on_one_line() {
        let mut m = RunManifest::new("x");
        m.set("note", "a\nb");
        assert!(m.to_text().lines().any(|l| l == "note=a\\nb"));
    }
}
