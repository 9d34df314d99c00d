//! Renderers checked against independent plain-loop implementations.

use num_complex::Complex64;
use templia::param::{fixed_map_f_with, hybrid_mandelbrot, mandel_slice, HybridMode};
use templia::raster::{classify_connectivity, render_julia, EscapeRaster, GridSpec, Verdict};
use templia::{escape_radius, ComplexPoint, ParameterPair, SplitMix64, SymbolicTemplate};

fn pt(re: f64, im: f64) -> ComplexPoint {
    ComplexPoint::from_parts(re, im)
}

/// Textbook escape-time loop for a single map.
fn classical_escape(z0: Complex64, c: Complex64, max_iter: usize) -> Option<usize> {
    let r = 2f64.max(c.norm());
    let mut z = z0;
    for n in 0..=max_iter {
        if z.norm() > r {
            return Some(n);
        }
        if n < max_iter {
            z = z * z + c;
        }
    }
    None
}

#[test]
fn constant_pair_matches_classical_julia_renderer() {
    for c in [pt(-0.75, 0.0), pt(-0.117, -0.76), pt(0.285, 0.01), pt(-1.0, -0.55)] {
        let pair = ParameterPair::constant(c);
        let grid = GridSpec::for_pair(&pair, 128).unwrap();
        let t: SymbolicTemplate = "random:seed=5,N=150,p=0.5".parse().unwrap();
        let r = render_julia(&pair, &t, &grid, 150).unwrap();
        let mut mismatches = 0;
        for i in 0..grid.len() {
            let (ix, iy) = grid.coords(i);
            let z0 = Complex64::new(grid.pixel_re(ix), grid.pixel_im(iy));
            let expected = classical_escape(z0, c.as_complex(), 150);
            // Norm comparison may differ from the squared test at the last ulp.
            if r.escape_index(i).map(|e| e as usize) != expected {
                mismatches += 1;
            }
        }
        assert!(mismatches <= 2, "{c}: {mismatches} mismatches");
    }
}

#[test]
fn two_map_renderer_matches_explicit_loop() {
    let pair = ParameterPair::new(pt(0.0, 0.0), pt(-1.0, -0.55));
    let t: SymbolicTemplate = "periodic:001".parse().unwrap();
    let grid = GridSpec::for_pair(&pair, 96).unwrap();
    let r = render_julia(&pair, &t, &grid, 120).unwrap();
    let cs = [pair.c0.as_complex(), pair.c1.as_complex()];
    let r2 = escape_radius(&pair).powi(2);
    for i in 0..grid.len() {
        let (ix, iy) = grid.coords(i);
        let mut z = Complex64::new(grid.pixel_re(ix), grid.pixel_im(iy));
        let mut escaped = z.norm_sqr() > r2;
        let mut n = 0;
        while !escaped && n < 120 {
            z = z * z + cs[[0, 0, 1][n % 3]];
            n += 1;
            escaped = z.norm_sqr() > r2;
        }
        assert_eq!(r.is_prisoner(i), !escaped, "pixel {i}");
    }
}

#[test]
fn slice_with_ones_template_is_the_mandelbrot_set() {
    let grid = GridSpec::square(pt(-0.5, 0.0), 3.0, 96).unwrap();
    let t = SymbolicTemplate::periodic(vec![1]).unwrap();
    let s = mandel_slice(&t, pt(0.4, 0.4), &grid, 200).unwrap();
    let mut mismatches = 0;
    for i in 0..grid.len() {
        let (ix, iy) = grid.coords(i);
        let c = Complex64::new(grid.pixel_re(ix), grid.pixel_im(iy));
        if s.is_prisoner(i) != classical_escape(Complex64::new(0.0, 0.0), c, 200).is_none() {
            mismatches += 1;
        }
    }
    assert!(mismatches <= 2, "{mismatches}");
}

#[test]
fn hybrid_exact_matches_brute_force_enumeration() {
    let c0 = pt(-0.5622, -0.62);
    let grid = GridSpec::from_bounds((-1.5, 0.5), (-1.0, 1.0), 8, 8).unwrap();
    let h = hybrid_mandelbrot(c0, &grid, 10, HybridMode::Exact).unwrap();
    for i in 0..grid.len() {
        let (ix, iy) = grid.coords(i);
        let c1 = Complex64::new(grid.pixel_re(ix), grid.pixel_im(iy));
        let r2 = 2f64.max(c0.norm()).max(c1.norm()).powi(2);
        let count = (0u32..1024)
            .filter(|w| {
                let mut z = Complex64::new(0.0, 0.0);
                (0..10).all(|n| {
                    z = z * z + if (w >> (9 - n)) & 1 == 1 { c1 } else { c0.as_complex() };
                    z.norm_sqr() <= r2
                })
            })
            .count() as u64;
        assert_eq!(h.counts[i], count, "pixel {i}");
    }
}

#[test]
fn hybrid_large_c1_keeps_only_the_zero_word() {
    let grid = GridSpec::square(pt(3.0, 0.0), 1e-12, 2).unwrap();
    let h = hybrid_mandelbrot(ComplexPoint::ZERO, &grid, 10, HybridMode::Exact).unwrap();
    assert!(h.counts.iter().all(|&c| c == 1), "{:?}", h.counts);
    let mc = HybridMode::MonteCarlo { samples: 4096, seed: 77 };
    let h = hybrid_mandelbrot(ComplexPoint::ZERO, &GridSpec::square(ComplexPoint::ZERO, 1e-12, 2).unwrap(), 10, mc)
        .unwrap();
    assert!(h.counts.iter().all(|&c| c == 4096));
}

#[test]
fn fixed_map_matches_direct_iteration() {
    let pair = ParameterPair::new(pt(-0.5622, -0.62), pt(-0.117, -0.76));
    let f = fixed_map_f_with(&pair, 15, 257, 200).unwrap();
    let r2 = escape_radius(&pair).powi(2);
    for &(a, bit) in &f.samples {
        // Digits by repeated doubling, taking 1 only when strictly above 1
        // after doubling (the non-terminating form of dyadic values).
        let mut x = a;
        let digits: Vec<usize> = (0..15)
            .map(|_| {
                x *= 2.0;
                if x > 1.0 {
                    x -= 1.0;
                    1
                } else {
                    0
                }
            })
            .collect();
        let digits = if a == 1.0 { vec![1; 15] } else { digits };
        let cs = [pair.c0.as_complex(), pair.c1.as_complex()];
        let mut z = Complex64::new(0.0, 0.0);
        let bounded = (0..200).all(|n| {
            z = z * z + cs[digits[n % 15]];
            z.norm_sqr() <= r2
        });
        assert_eq!(bit, u8::from(bounded), "a = {a}");
    }
}

/// Sampled correspondence between slice membership of `(c0, c1)` and the
/// connectivity verdict of the matching template Julia set.
#[test]
fn slice_membership_agrees_with_julia_connectivity() {
    let configs = [
        (pt(0.0, 0.0), "periodic:011"),
        (pt(-0.2, 0.6), "periodic:011"),
        (pt(0.0, 0.0), "periodic:01"),
        (pt(0.0, 0.0), "periodic:001"),
    ];
    let mut rng = SplitMix64::new(2718);
    let (mut agree, mut total) = (0, 0);
    for (c0, spec) in configs {
        let t: SymbolicTemplate = spec.parse().unwrap();
        let grid = GridSpec::square(ComplexPoint::ZERO, 4.0, 64).unwrap();
        let slice = mandel_slice(&t, c0, &grid, 200).unwrap();
        // Pixels at least two pixels away from the slice boundary.
        let interior: Vec<usize> = (0..grid.len())
            .filter(|&i| {
                let (ix, iy) = grid.coords(i);
                let own = slice.is_prisoner(i);
                (ix >= 2 && iy >= 2 && ix + 2 < 64 && iy + 2 < 64)
                    && (iy - 2..=iy + 2)
                        .all(|y| (ix - 2..=ix + 2).all(|x| slice.is_prisoner(grid.index(x, y)) == own))
            })
            .collect();
        // Balance bounded and escaping samples.
        let (inside, outside): (Vec<usize>, Vec<usize>) =
            interior.iter().partition(|&&i| slice.is_prisoner(i));
        let mut picks = Vec::new();
        for (pool, n) in [(&inside, 13), (&outside, 12)] {
            for _ in 0..n {
                picks.push(pool[rng.below(pool.len() as u64) as usize]);
            }
        }
        for i in picks {
            let (ix, iy) = grid.coords(i);
            let pair = ParameterPair::new(c0, grid.pixel_center(ix, iy));
            let jgrid = GridSpec::for_pair(&pair, 256).unwrap();
            let raster = render_julia(&pair, &t, &jgrid, 200).unwrap();
            let v = classify_connectivity(&raster, 16).unwrap().verdict;
            let connected_like = matches!(v, Verdict::Connected | Verdict::Disconnected);
            total += 1;
            agree += usize::from(connected_like == slice.is_prisoner(i));
        }
    }
    assert_eq!(total, 100);
    assert!(agree >= 95, "agreement {agree}/100");
}
