//! Bounded real-coded variation operators: simulated binary crossover and
//! polynomial mutation, in the parent-and-bound-aware form used by the
//! classic NSGA-II codes.
//!
//! Draw order is fixed and documented so runs reproduce exactly:
//! SBX draws one gate for the whole operator, then per variable one
//! recombination gate, one spread draw (only when parents differ) and one
//! swap gate. PM draws one gate per variable and one perturbation draw for
//! mutated variables.

use crate::rng::RandomStream;
use crate::types::{Bounds, DecisionVector, Error};
use alloc::vec::Vec;

const EPS: f64 = 1e-14;

/// Simulated binary crossover. With probability `1 - pc` the children are
/// plain copies of the parents. Each variable is recombined with
/// probability 0.5, otherwise copied; recombined children are swapped with
/// probability 0.5. Children are clipped to the bounds.
pub fn sbx_crossover(
    p1: &[f64],
    p2: &[f64],
    pc: f64,
    eta_c: f64,
    bounds: &Bounds,
    rng: &mut RandomStream,
) -> Result<(DecisionVector, DecisionVector), Error> {
    if p1.len() != p2.len() {
        return Err(Error::LengthMismatch {
            expected: p1.len(),
            got: p2.len(),
        });
    }
    if p1.len() != bounds.dim() {
        return Err(Error::LengthMismatch {
            expected: bounds.dim(),
            got: p1.len(),
        });
    }

    let mut c1: Vec<f64> = p1.to_vec();
    let mut c2: Vec<f64> = p2.to_vec();
    if rng.uniform() > pc {
        return Ok((c1, c2));
    }

    for i in 0..p1.len() {
        if rng.uniform() > 0.5 {
            continue;
        }
        if (p1[i] - p2[i]).abs() <= EPS {
            continue;
        }
        let (y1, y2) = if p1[i] < p2[i] {
            (p1[i], p2[i])
        } else {
            (p2[i], p1[i])
        };
        let (xl, xu) = (bounds.lower[i], bounds.upper[i]);
        let u = rng.uniform();

        let spread = |beta: f64| -> f64 {
            let alpha = 2.0 - libm::pow(beta, -(eta_c + 1.0));
            if u <= 1.0 / alpha {
                libm::pow(u * alpha, 1.0 / (eta_c + 1.0))
            } else {
                libm::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta_c + 1.0))
            }
        };

        let beta_l = 1.0 + 2.0 * (y1 - xl) / (y2 - y1);
        let betaq = spread(beta_l);
        let mut a = 0.5 * ((y1 + y2) - betaq * (y2 - y1));

        let beta_u = 1.0 + 2.0 * (xu - y2) / (y2 - y1);
        let betaq = spread(beta_u);
        let mut b = 0.5 * ((y1 + y2) + betaq * (y2 - y1));

        a = a.clamp(xl, xu);
        b = b.clamp(xl, xu);
        if rng.uniform() <= 0.5 {
            core::mem::swap(&mut a, &mut b);
        }
        c1[i] = a;
        c2[i] = b;
    }
    Ok((c1, c2))
}

/// Polynomial mutation. Each variable is perturbed with probability `pm`
/// using the bounded polynomial density with index `eta_m`.
pub fn polynomial_mutation(
    x: &[f64],
    pm: f64,
    eta_m: f64,
    bounds: &Bounds,
    rng: &mut RandomStream,
) -> Result<DecisionVector, Error> {
    if x.len() != bounds.dim() {
        return Err(Error::LengthMismatch {
            expected: bounds.dim(),
            got: x.len(),
        });
    }
    let mut out: Vec<f64> = x.to_vec();
    for i in 0..out.len() {
        if rng.uniform() > pm {
            continue;
        }
        let (xl, xu) = (bounds.lower[i], bounds.upper[i]);
        let span = xu - xl;
        let y = out[i];
        let delta1 = (y - xl) / span;
        let delta2 = (xu - y) / span;
        let u = rng.uniform();
        let mut_pow = 1.0 / (eta_m + 1.0);
        let deltaq = if u < 0.5 {
            let xy = 1.0 - delta1;
            let val = 2.0 * u + (1.0 - 2.0 * u) * libm::pow(xy, eta_m + 1.0);
            libm::pow(val, mut_pow) - 1.0
        } else {
            let xy = 1.0 - delta2;
            let val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * libm::pow(xy, eta_m + 1.0);
            1.0 - libm::pow(val, mut_pow)
        };
        out[i] = (y + deltaq * span).clamp(xl, xu);
    }
    Ok(out)
}
