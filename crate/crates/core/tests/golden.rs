//! Byte-exact regression against stored renders in `tests/golden`.
//! Run with `TEMPLIA_BLESS=1` to rewrite them after a verified change.

use std::path::PathBuf;

use templia::io::{decode_pnm, raster_pgm};
use templia::param::{error_sweep, mandel_slice};
use templia::raster::{render_julia, GridSpec};
use templia::{ComplexPoint, ParameterPair, SymbolicTemplate};

fn pt(re: f64, im: f64) -> ComplexPoint {
    ComplexPoint::from_parts(re, im)
}

fn check(name: &str, bytes: Vec<u8>) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("TEMPLIA_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &bytes).unwrap();
        return;
    }
    let stored = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(stored == bytes, "{name} differs from the stored render");
}

#[test]
fn julia_period_three() {
    let pair = ParameterPair::new(ComplexPoint::ZERO, pt(-0.62, -0.432));
    let t: SymbolicTemplate = "periodic:011".parse().unwrap();
    let grid = GridSpec::for_pair(&pair, 128).unwrap();
    let r = render_julia(&pair, &t, &grid, 200).unwrap();
    let bytes = raster_pgm(&r).unwrap();
    assert_eq!(decode_pnm(&bytes).unwrap().prisoner_mask(), r.prisoner_mask());
    check("julia_c3_011.pgm", bytes);
}

#[test]
fn slice_period_three() {
    let t: SymbolicTemplate = "periodic:011".parse().unwrap();
    let grid = GridSpec::square(ComplexPoint::ZERO, 4.0, 128).unwrap();
    let s = mandel_slice(&t, pt(-0.2, 0.6), &grid, 200).unwrap();
    check("slice_011.pgm", raster_pgm(&s).unwrap());
}

#[test]
fn error_sweep_frames() {
    let c1 = pt(-0.62, -0.432);
    let grid = GridSpec::for_pair(&ParameterPair::new(ComplexPoint::ZERO, c1), 128).unwrap();
    let frames = error_sweep(c1, ComplexPoint::ZERO, &[1, 30], 200, &grid).unwrap();
    check("error_c3_k001.pgm", raster_pgm(&frames[0]).unwrap());
    check("error_c3_k030.pgm", raster_pgm(&frames[1]).unwrap());

    let c1 = pt(-0.117, -0.856);
    let c0 = pt(-0.017, -0.756);
    let grid = GridSpec::for_pair(&ParameterPair::new(c0, c1), 128).unwrap();
    let frames = error_sweep(c1, c0, &[10], 200, &grid).unwrap();
    check("error_c7_perturb_k010.pgm", raster_pgm(&frames[0]).unwrap());
}
