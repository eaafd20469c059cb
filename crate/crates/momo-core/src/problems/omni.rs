//! Omni-test in two variables: f1 = sum sin(pi x_i), f2 = sum cos(pi x_i)
//! on [0, 6]^2. Per variable the optimal phase interval is x in [1, 1.5]
//! modulo 2, and both variables must share the same phase offset, giving
//! 3 x 3 = 9 equivalent diagonal segments.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

pub fn evaluate(x: &[f64]) -> [f64; 2] {
    let f1 = x.iter().map(|&v| libm::sin(PI * v)).sum();
    let f2 = x.iter().map(|&v| libm::cos(PI * v)).sum();
    [f1, f2]
}

/// Subset indexed over the pair of per-variable intervals; both variables
/// advance together with the shared parameter t.
pub fn ps_point(subset: usize, t: f64) -> Vec<f64> {
    let k1 = (subset / 3) as f64;
    let k2 = (subset % 3) as f64;
    vec![2.0 * k1 + 1.0 + 0.5 * t, 2.0 * k2 + 1.0 + 0.5 * t]
}

/// Quarter circle of radius 2 in the negative quadrant.
pub fn pf_point(t: f64) -> [f64; 2] {
    let theta = PI * (1.0 + 0.5 * t);
    [2.0 * libm::sin(theta), 2.0 * libm::cos(theta)]
}
