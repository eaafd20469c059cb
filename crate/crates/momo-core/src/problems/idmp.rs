//! IDMP-M2 problems (types T1-T4). Two equivalent vertical Pareto segments
//! at x1 = -0.5 and x1 = +0.5; x2 sweeps the linear front. The type scales
//! the convergence distance of the right segment, making its basin
//! increasingly flat (imbalanced) from T1 to T4 while both segments stay
//! exactly optimal.

use super::ProblemId;
use alloc::vec;
use alloc::vec::Vec;

fn scale(id: ProblemId) -> f64 {
    match id {
        ProblemId::IdmpM2T1 => 1.0,
        ProblemId::IdmpM2T2 => 0.75,
        ProblemId::IdmpM2T3 => 0.5,
        ProblemId::IdmpM2T4 => 0.25,
        _ => unreachable!("not an IDMP problem"),
    }
}

pub fn evaluate(id: ProblemId, x: &[f64]) -> [f64; 2] {
    let g = (x[0] + 0.5).abs().min(scale(id) * (x[0] - 0.5).abs());
    let t = 0.5 * (x[1] + 1.0);
    [g + t, g + 1.0 - t]
}

pub fn ps_point(subset: usize, t: f64) -> Vec<f64> {
    let x1 = if subset == 0 { -0.5 } else { 0.5 };
    vec![x1, 2.0 * t - 1.0]
}

pub fn pf_point(t: f64) -> [f64; 2] {
    [t, 1.0 - t]
}
