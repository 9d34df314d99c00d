use std::path::Path;

use crate::error::{Error, Result};
use crate::param::{ConvergenceCurve, FixedMapSamples};
use crate::raster::BoxCountEstimate;

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

/// A CSV table with a header row and `\n` line endings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String> {
        if self.rows.is_empty() {
            return Err(Error::InvalidArgument("refusing to write an empty table".into()));
        }
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        Ok(out)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_csv()?).map_err(Error::from)
    }
}

impl From<&FixedMapSamples> for CsvTable {
    fn from(f: &FixedMapSamples) -> Self {
        let mut t = CsvTable::new(["a", "F"]);
        for &(a, v) in &f.samples {
            t.push(vec![format_real(a), v.to_string()]);
        }
        t
    }
}

/// Entries without a distance (empty boundary) get an empty field.
impl From<&ConvergenceCurve> for CsvTable {
    fn from(c: &ConvergenceCurve) -> Self {
        let mut t = CsvTable::new(["n", "hausdorff_distance"]);
        for e in &c.entries {
            t.push(vec![e.n.to_string(), e.distance.map(format_real).unwrap_or_default()]);
        }
        t
    }
}

impl From<&BoxCountEstimate> for CsvTable {
    fn from(b: &BoxCountEstimate) -> Self {
        let mut t = CsvTable::new(["epsilon", "count"]);
        for &(eps, n) in &b.table {
            t.push(vec![format_real(eps), n.to_string()]);
        }
        t
    }
}
