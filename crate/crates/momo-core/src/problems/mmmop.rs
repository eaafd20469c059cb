//! MMMOP problems (variant A settings). Each splits the variables into one
//! position variable x1 driving the front shape and one or two distance
//! variables whose penalty g has several equivalent global minima, one per
//! Pareto subset:
//!
//!   f1 = (1 + g) * h1(x1),  f2 = (1 + g) * h2(x1),  x in [0, 1]^D
//!
//! with h linear (MMMOP1A) or on the unit circle (the concave variants),
//! and g built from cos^2 terms whose zeros sit at (2i+1)/(2p).

use super::ProblemId;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

/// cos^2(p*pi*v): exactly p zeros in [0,1], at v = (2i+1)/(2p).
fn comb(v: f64, p: f64) -> f64 {
    let c = libm::cos(p * PI * v);
    c * c
}

fn distance_penalty(id: ProblemId, x: &[f64]) -> f64 {
    match id {
        ProblemId::Mmmop1a => comb(x[1], 5.0) + 4.0 * (x[2] - 0.5) * (x[2] - 0.5),
        ProblemId::Mmmop2a => comb(x[1], 3.0) + comb(x[2], 2.0),
        ProblemId::Mmmop3a => comb(x[1], 3.0),
        ProblemId::Mmmop4a => comb(x[1], 4.0),
        // same subset count as 4A but unevenly spaced minima
        ProblemId::Mmmop5a => comb(x[1] * x[1], 4.0),
        ProblemId::Mmmop6a => comb(x[1], 2.0),
        _ => unreachable!("not an MMMOP problem"),
    }
}

fn shape(id: ProblemId, x1: f64) -> [f64; 2] {
    match id {
        ProblemId::Mmmop1a => [x1, 1.0 - x1],
        _ => [libm::sin(PI * x1 / 2.0), libm::cos(PI * x1 / 2.0)],
    }
}

pub fn evaluate(id: ProblemId, x: &[f64]) -> [f64; 2] {
    let g = distance_penalty(id, x);
    let h = shape(id, x[0]);
    [(1.0 + g) * h[0], (1.0 + g) * h[1]]
}

/// Distance-variable values at the subset's global minimum.
fn subset_minimum(id: ProblemId, subset: usize) -> Vec<f64> {
    let zero = |p: usize, i: usize| (2 * i + 1) as f64 / (2 * p) as f64;
    match id {
        ProblemId::Mmmop1a => vec![zero(5, subset), 0.5],
        ProblemId::Mmmop2a => vec![zero(3, subset / 2), zero(2, subset % 2)],
        ProblemId::Mmmop3a => vec![zero(3, subset)],
        ProblemId::Mmmop4a => vec![zero(4, subset)],
        ProblemId::Mmmop5a => vec![libm::sqrt(zero(4, subset))],
        ProblemId::Mmmop6a => vec![zero(2, subset)],
        _ => unreachable!("not an MMMOP problem"),
    }
}

pub fn ps_point(id: ProblemId, subset: usize, t: f64) -> Vec<f64> {
    let mut x = vec![t];
    x.extend(subset_minimum(id, subset));
    x
}

pub fn pf_point(id: ProblemId, t: f64) -> [f64; 2] {
    shape(id, t)
}
