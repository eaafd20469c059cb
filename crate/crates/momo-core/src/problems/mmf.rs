//! The MMF test functions (MMF1-MMF8). All are two-variable, two-objective
//! minimization problems whose Pareto set consists of several equivalent
//! branches in variable space mapping onto one front.
//!
//! Where a problem has two x2 branches, the deviation term is measured to
//! the nearest branch; the objective depends on the deviation only through
//! even functions, so every branch is exactly optimal.

use super::ProblemId;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

fn sin(x: f64) -> f64 {
    libm::sin(x)
}
fn cos(x: f64) -> f64 {
    libm::cos(x)
}
fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

/// Deviation of x2 from the nearest of two parallel branch curves.
fn nearest_branch(x2: f64, b1: f64, b2: f64) -> f64 {
    let d1 = x2 - b1;
    let d2 = x2 - b2;
    if d1.abs() <= d2.abs() {
        d1
    } else {
        d2
    }
}

/// MMF2/MMF3 distance shaping: zero iff y = 0.
fn ripple(y: f64) -> f64 {
    2.0 * (4.0 * y * y - 2.0 * cos(20.0 * y * PI / core::f64::consts::SQRT_2) + 2.0)
}

fn mmf7_spine(a: f64) -> f64 {
    (0.3 * a * a * cos(24.0 * PI * a + 4.0 * PI) + 0.6 * a) * sin(6.0 * PI * a + PI)
}

pub fn evaluate(id: ProblemId, x: &[f64]) -> [f64; 2] {
    let (x1, x2) = (x[0], x[1]);
    match id {
        ProblemId::Mmf1 => {
            let a = (x1 - 2.0).abs();
            let y = x2 - sin(6.0 * PI * a + PI);
            [a, 1.0 - sqrt(a) + 2.0 * y * y]
        }
        ProblemId::Mmf2 => {
            let s = sqrt(x1);
            let y = nearest_branch(x2, s, 1.0 + s);
            [x1, 1.0 - s + ripple(y)]
        }
        ProblemId::Mmf3 => {
            let s = sqrt(x1);
            let y = nearest_branch(x2, s, 0.5 + s);
            [x1, 1.0 - s + ripple(y)]
        }
        ProblemId::Mmf4 => {
            let a = x1.abs();
            let b = sin(PI * a);
            let y = nearest_branch(x2, b, 1.0 + b);
            [a, 1.0 - a * a + 2.0 * y * y]
        }
        ProblemId::Mmf5 => {
            let a = (x1 - 2.0).abs();
            let b = sin(6.0 * PI * a + PI);
            let y = nearest_branch(x2, b, 2.0 + b);
            [a, 1.0 - sqrt(a) + 2.0 * y * y]
        }
        ProblemId::Mmf6 => {
            let a = (x1 - 2.0).abs();
            let b = sin(6.0 * PI * a + PI);
            let y = nearest_branch(x2, b, 1.0 + b);
            [a, 1.0 - sqrt(a) + 2.0 * y * y]
        }
        ProblemId::Mmf7 => {
            let a = (x1 - 2.0).abs();
            let y = x2 - mmf7_spine(a);
            [a, 1.0 - sqrt(a) + y * y]
        }
        ProblemId::Mmf8 => {
            let a = x1.abs();
            let b = sin(a) + a;
            let y = nearest_branch(x2, b, 4.0 + b);
            let f1 = sin(a);
            [f1, sqrt(1.0 - f1 * f1) + 2.0 * y * y]
        }
        _ => unreachable!("not an MMF problem"),
    }
}

pub fn ps_point(id: ProblemId, subset: usize, t: f64) -> Vec<f64> {
    match id {
        ProblemId::Mmf1 => {
            // subsets: x1 in [1,2] and [2,3]
            let x1 = if subset == 0 { 1.0 + t } else { 2.0 + t };
            vec![x1, sin(6.0 * PI * (x1 - 2.0).abs() + PI)]
        }
        ProblemId::Mmf2 => {
            let x1 = t;
            let b = sqrt(x1);
            vec![x1, if subset == 0 { b } else { 1.0 + b }]
        }
        ProblemId::Mmf3 => {
            let x1 = t;
            let b = sqrt(x1);
            vec![x1, if subset == 0 { b } else { 0.5 + b }]
        }
        ProblemId::Mmf4 => {
            // subsets: sign of x1 crossed with the two x2 branches
            let x1 = if subset % 2 == 0 { -t } else { t };
            let b = sin(PI * x1.abs());
            vec![x1, if subset < 2 { b } else { 1.0 + b }]
        }
        ProblemId::Mmf5 | ProblemId::Mmf6 => {
            let offset = if id == ProblemId::Mmf5 { 2.0 } else { 1.0 };
            let x1 = if subset % 2 == 0 { 1.0 + t } else { 2.0 + t };
            let b = sin(6.0 * PI * (x1 - 2.0).abs() + PI);
            vec![x1, if subset < 2 { b } else { offset + b }]
        }
        ProblemId::Mmf7 => {
            let x1 = if subset == 0 { 1.0 + t } else { 2.0 + t };
            vec![x1, mmf7_spine((x1 - 2.0).abs())]
        }
        ProblemId::Mmf8 => {
            let x1 = if subset % 2 == 0 { -PI * t } else { PI * t };
            let b = sin(x1.abs()) + x1.abs();
            vec![x1, if subset < 2 { b } else { 4.0 + b }]
        }
        _ => unreachable!("not an MMF problem"),
    }
}

pub fn pf_point(id: ProblemId, t: f64) -> [f64; 2] {
    match id {
        ProblemId::Mmf1
        | ProblemId::Mmf2
        | ProblemId::Mmf3
        | ProblemId::Mmf5
        | ProblemId::Mmf6
        // parameterized so the tangent stays bounded at the f1 = 0 end,
        // which keeps chord-length tabulation accurate there
        | ProblemId::Mmf7 => [t * t, 1.0 - t],
        ProblemId::Mmf4 => [t, 1.0 - t * t],
        ProblemId::Mmf8 => {
            let theta = t * PI / 2.0;
            [sin(theta), cos(theta)]
        }
        _ => unreachable!("not an MMF problem"),
    }
}
