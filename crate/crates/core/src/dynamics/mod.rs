//! Templates, map steps and escape-tested template orbits.

mod complex;
pub(crate) mod orbit;
mod rng;
mod template;

pub use complex::ComplexPoint;
pub use orbit::{
    escape_radius, step, template_orbit, template_orbit_word, OrbitOutcome, ParameterPair,
};
pub use rng::SplitMix64;
pub use template::{SymbolicTemplate, TemplateRoot};
