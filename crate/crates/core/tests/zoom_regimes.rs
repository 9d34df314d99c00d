//! Boundary box-counting along the [011] slice at c0 = -0.2+0.6i: a smooth
//! stretch and a hairy stretch keep distinct estimates under nested zooms.

use templia::param::zoom_sequence;
use templia::raster::GridSpec;
use templia::{ComplexPoint, SymbolicTemplate};

fn nested(center: ComplexPoint) -> Vec<GridSpec> {
    [0.08, 0.04, 0.02]
        .iter()
        .map(|&w| GridSpec::square(center, w, 256).unwrap())
        .collect()
}

fn estimates(center: ComplexPoint) -> Vec<f64> {
    let t: SymbolicTemplate = "periodic:011".parse().unwrap();
    let c0 = ComplexPoint::from_parts(-0.2, 0.6);
    zoom_sequence(&t, c0, &nested(center), 200)
        .unwrap()
        .iter()
        .map(|level| level.dimension.as_ref().unwrap().dimension)
        .collect()
}

#[test]
fn low_and_high_dimension_regions_stay_apart() {
    let low = estimates(ComplexPoint::from_parts(0.6289, 0.2305));
    let high = estimates(ComplexPoint::from_parts(-0.4492, 0.3945));
    for (l, h) in low.iter().zip(&high) {
        assert!(h - l >= 0.15, "low {low:?} high {high:?}");
        assert!((1.0..2.0).contains(l) && (1.0..2.0).contains(h));
    }
}
