//! SYM-PART problems: nine identical Pareto-set line segments arranged on a
//! 3x3 grid of tiles with spacing 10, the rotated variant turning the
//! whole variable space by 45 degrees.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_4;

const A: f64 = 1.0; // segment half-length
const TILE: f64 = 10.0; // tile spacing in both directions

/// Tile index in {-1, 0, 1} for one coordinate.
fn tile_index(v: f64) -> f64 {
    libm::round(v / TILE).clamp(-1.0, 1.0)
}

pub fn evaluate_simple(x: &[f64]) -> [f64; 2] {
    let u = x[0] - TILE * tile_index(x[0]);
    let v = x[1] - TILE * tile_index(x[1]);
    [
        (u + A) * (u + A) + v * v,
        (u - A) * (u - A) + v * v,
    ]
}

fn rotate(x1: f64, x2: f64, angle: f64) -> (f64, f64) {
    let (s, c) = (libm::sin(angle), libm::cos(angle));
    (c * x1 + s * x2, -s * x1 + c * x2)
}

pub fn evaluate_rotated(x: &[f64]) -> [f64; 2] {
    let (z1, z2) = rotate(x[0], x[1], FRAC_PI_4);
    evaluate_simple(&[z1, z2])
}

/// Subsets are indexed row-major over the 3x3 tile grid; the local segment
/// is x2 = 0, x1 in [-A, A].
pub fn ps_point_simple(subset: usize, t: f64) -> Vec<f64> {
    let (i, j) = ((subset / 3) as f64 - 1.0, (subset % 3) as f64 - 1.0);
    vec![TILE * i + A * (2.0 * t - 1.0), TILE * j]
}

pub fn ps_point_rotated(subset: usize, t: f64) -> Vec<f64> {
    let z = ps_point_simple(subset, t);
    let (x1, x2) = rotate(z[0], z[1], -FRAC_PI_4);
    vec![x1, x2]
}

/// f1 = (s+A)^2, f2 = (s-A)^2 for s in [-A, A].
pub fn pf_point(t: f64) -> [f64; 2] {
    let s = A * (2.0 * t - 1.0);
    [(s + A) * (s + A), (s - A) * (s - A)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn center_tile_is_a_double_sphere() {
        let f = evaluate_simple(&[0.0, 0.0]);
        assert_eq!(f, [1.0, 1.0]);
        let f = evaluate_simple(&[1.0, 0.0]);
        assert_eq!(f, [4.0, 0.0]);
    }

    #[test]
    fn all_nine_tiles_are_equivalent() {
        let base = evaluate_simple(&[0.3, 0.0]);
        for subset in 0..9 {
            let p = ps_point_simple(subset, 0.65);
            let q = ps_point_simple(0, 0.65);
            let fp = evaluate_simple(&p);
            let fq = evaluate_simple(&q);
            assert!((fp[0] - fq[0]).abs() < 1e-9);
            assert!((fp[1] - fq[1]).abs() < 1e-9);
        }
        let _ = base;
    }

    #[test]
    fn rotated_ps_maps_back_onto_simple_objectives() {
        for subset in 0..9 {
            for t in [0.0, 0.25, 0.8] {
                let x = ps_point_rotated(subset, t);
                let f = evaluate_rotated(&x);
                let g = evaluate_simple(&ps_point_simple(subset, t));
                assert!((f[0] - g[0]).abs() < 1e-9);
                assert!((f[1] - g[1]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn rotated_ps_stays_in_bounds() {
        for subset in 0..9 {
            for t in [0.0, 1.0] {
                let x = ps_point_rotated(subset, t);
                assert!(x.iter().all(|v| v.abs() <= 20.0), "{x:?}");
            }
        }
    }
}
