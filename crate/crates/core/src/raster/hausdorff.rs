//! Exact Hausdorff distance between finite point sets.
//!
//! Brute force with the early-break trick: while scanning `b` for the nearest
//! point to `a[i]`, stop as soon as a candidate is closer than the running
//! maximum, since `a[i]` can no longer raise it. Visiting `a` in a shuffled
//! order makes large maxima appear early, so most scans stop after a few
//! candidates. The shuffle is seeded, so results are reproducible (and the
//! value is exact regardless of order).

use rayon::prelude::*;

use super::boundary::BoundaryPointSet;
use crate::dynamics::{ComplexPoint, SplitMix64};
use crate::error::{Error, Result};

const SHUFFLE_SEED: u64 = 0x4841_5553_444f_5246;
const CHUNK: usize = 256;

fn to_xy(points: &[ComplexPoint]) -> Vec<[f64; 2]> {
    points.iter().map(|p| [p.re(), p.im()]).collect()
}

fn directed_sqr(a: &[[f64; 2]], b: &[[f64; 2]]) -> f64 {
    let mut order: Vec<usize> = (0..a.len()).collect();
    SplitMix64::new(SHUFFLE_SEED).shuffle(&mut order);

    // Chunks run in parallel; each seeds its bound with the global maximum
    // known when it starts, which only prunes, never changes the result.
    let mut best = 0.0f64;
    for block in order.chunks(CHUNK * rayon::current_num_threads().max(1)) {
        let floor = best;
        let block_max = block
            .par_chunks(CHUNK)
            .map(|chunk| {
                let mut local = floor;
                for &i in chunk {
                    let [ax, ay] = a[i];
                    let mut nearest = f64::INFINITY;
                    for &[bx, by] in b {
                        let d = (ax - bx) * (ax - bx) + (ay - by) * (ay - by);
                        if d < nearest {
                            nearest = d;
                            if nearest <= local {
                                break;
                            }
                        }
                    }
                    if nearest > local {
                        local = nearest;
                    }
                }
                local
            })
            .reduce(|| floor, f64::max);
        best = best.max(block_max);
    }
    best
}

/// sup over `a` of the distance to the nearest point of `b`.
pub fn directed_hausdorff(a: &[ComplexPoint], b: &[ComplexPoint]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    Ok(directed_sqr(&to_xy(a), &to_xy(b)).sqrt())
}

pub fn hausdorff_distance(a: &BoundaryPointSet, b: &BoundaryPointSet) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let (xa, xb) = (to_xy(&a.points), to_xy(&b.points));
    Ok(directed_sqr(&xa, &xb).max(directed_sqr(&xb, &xa)).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raster::GridSpec;
    use proptest::prelude::*;

    fn set(pts: &[(f64, f64)]) -> BoundaryPointSet {
        let grid = GridSpec::square(ComplexPoint::ZERO, 4.0, 8).unwrap();
        BoundaryPointSet::from_points(
            pts.iter().map(|&(x, y)| ComplexPoint::from_parts(x, y)).collect(),
            grid,
        )
    }

    fn oracle(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
        let dir = |p: &[(f64, f64)], q: &[(f64, f64)]| {
            p.iter()
                .map(|&(x, y)| {
                    q.iter()
                        .map(|&(u, v)| (x - u).hypot(y - v))
                        .fold(f64::INFINITY, f64::min)
                })
                .fold(0.0, f64::max)
        };
        dir(a, b).max(dir(b, a))
    }

    #[test]
    fn simple_cases() {
        let a = set(&[(0.0, 0.0), (1.0, 0.0)]);
        let b = set(&[(0.0, 0.0)]);
        assert_eq!(hausdorff_distance(&a, &b).unwrap(), 1.0);
        assert_eq!(hausdorff_distance(&a, &a).unwrap(), 0.0);
        let c = set(&[(3.0, 4.0)]);
        assert_eq!(hausdorff_distance(&b, &c).unwrap(), 5.0);
    }

    #[test]
    fn empty_sets_rejected() {
        let a = set(&[(0.0, 0.0)]);
        assert!(matches!(hausdorff_distance(&a, &set(&[])), Err(Error::EmptyPointSet)));
        assert!(directed_hausdorff(&[], &a.points).is_err());
    }

    #[test]
    fn directed_is_asymmetric() {
        let a = [ComplexPoint::ZERO];
        let b = [ComplexPoint::ZERO, ComplexPoint::from_parts(2.0, 0.0)];
        assert_eq!(directed_hausdorff(&a, &b).unwrap(), 0.0);
        assert_eq!(directed_hausdorff(&b, &a).unwrap(), 2.0);
    }

    #[test]
    fn large_sets_match_oracle() {
        let mut rng = SplitMix64::new(7);
        let mut gen = |n: usize, shift: f64| -> Vec<(f64, f64)> {
            (0..n).map(|_| (rng.next_f64() + shift, rng.next_f64())).collect()
        };
        let a = gen(3000, 0.0);
        let b = gen(2000, 0.3);
        let d = hausdorff_distance(&set(&a), &set(&b)).unwrap();
        assert!((d - oracle(&a, &b)).abs() <= 1e-12);
    }

    fn points() -> impl Strategy<Value = Vec<(f64, f64)>> {
        prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..40)
    }

    proptest! {
        #[test]
        fn agrees_with_oracle(a in points(), b in points()) {
            let d = hausdorff_distance(&set(&a), &set(&b)).unwrap();
            prop_assert!((d - oracle(&a, &b)).abs() <= 1e-12);
        }

        #[test]
        fn metric_axioms(a in points(), b in points(), c in points()) {
            let (a, b, c) = (set(&a), set(&b), set(&c));
            let ab = hausdorff_distance(&a, &b).unwrap();
            let ba = hausdorff_distance(&b, &a).unwrap();
            let bc = hausdorff_distance(&b, &c).unwrap();
            let ac = hausdorff_distance(&a, &c).unwrap();
            prop_assert_eq!(ab, ba);
            prop_assert!(ab >= 0.0);
            prop_assert_eq!(hausdorff_distance(&a, &a).unwrap(), 0.0);
            prop_assert!(ac <= ab + bc + 1e-12);
        }
    }
}
