//! Quality metrics computed over run archives: IGD (objective space),
//! IGDX (decision space), cover rate and PSP.
//!
//! Metrics are always computed against the full archive of evaluated
//! solutions, never the final population alone.

use crate::types::{DecisionVector, Error, ObjectiveVector};
use alloc::vec::Vec;

/// Guard against division by a vanishing IGDX when composing PSP.
pub const PSP_IGDX_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsReport {
    pub igd: f64,
    pub igdx: f64,
    pub cr: f64,
    pub psp: f64,
    /// True when IGDX fell below the division guard and PSP was capped.
    pub psp_guard_hit: bool,
}

fn mean_nearest_distance(reference: &[Vec<f64>], attained: &[Vec<f64>]) -> Result<f64, Error> {
    if reference.is_empty() || attained.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dim = reference[0].len();
    if attained[0].len() != dim {
        return Err(Error::LengthMismatch {
            expected: dim,
            got: attained[0].len(),
        });
    }
    let mut total = 0.0;
    for r in reference {
        let mut best = f64::INFINITY;
        for a in attained {
            let d2: f64 = r.iter().zip(a).map(|(x, y)| (x - y) * (x - y)).sum();
            if d2 < best {
                best = d2;
            }
        }
        total += libm::sqrt(best);
    }
    Ok(total / reference.len() as f64)
}

/// Inverted generational distance in objective space: mean over reference
/// front points of the Euclidean distance to the nearest attained point.
pub fn igd(attained: &[ObjectiveVector], reference: &[ObjectiveVector]) -> Result<f64, Error> {
    mean_nearest_distance(reference, attained)
}

/// Same construction in decision space, against the reference Pareto set.
pub fn igdx(attained: &[DecisionVector], reference_ps: &[DecisionVector]) -> Result<f64, Error> {
    mean_nearest_distance(reference_ps, attained)
}

/// Cover rate: per-dimension squared overlap ratio between the attained
/// bounding box and the reference PS bounding box, combined as a 2D-th
/// root of the product. Dimensions where the reference box has zero extent
/// are skipped.
pub fn cover_rate(
    attained: &[DecisionVector],
    reference_ps: &[DecisionVector],
) -> Result<f64, Error> {
    if attained.is_empty() || reference_ps.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dim = reference_ps[0].len();
    let box_of = |points: &[Vec<f64>], i: usize| -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for p in points {
            lo = lo.min(p[i]);
            hi = hi.max(p[i]);
        }
        (lo, hi)
    };
    let mut product = 1.0;
    let mut counted = 0usize;
    for i in 0..dim {
        let (rlo, rhi) = box_of(reference_ps, i);
        if rhi <= rlo {
            continue; // degenerate reference extent
        }
        let (alo, ahi) = box_of(attained, i);
        let overlap = ahi.min(rhi) - alo.max(rlo);
        if overlap <= 0.0 {
            return Ok(0.0);
        }
        let ratio = (overlap / (rhi - rlo)).min(1.0);
        product *= ratio * ratio;
        counted += 1;
    }
    if counted == 0 {
        return Ok(1.0);
    }
    Ok(libm::pow(product, 1.0 / (2.0 * counted as f64)))
}

/// Pareto set proximity: CR / max(IGDX, 1e-12).
pub fn psp(attained: &[DecisionVector], reference_ps: &[DecisionVector]) -> Result<f64, Error> {
    let cr = cover_rate(attained, reference_ps)?;
    let igdx_val = igdx(attained, reference_ps)?;
    Ok(cr / igdx_val.max(PSP_IGDX_FLOOR))
}

/// All four metrics over one archive.
pub fn report(
    attained_x: &[DecisionVector],
    attained_f: &[ObjectiveVector],
    reference_ps: &[DecisionVector],
    reference_pf: &[ObjectiveVector],
) -> Result<MetricsReport, Error> {
    let igd_val = igd(attained_f, reference_pf)?;
    let igdx_val = igdx(attained_x, reference_ps)?;
    let cr = cover_rate(attained_x, reference_ps)?;
    let guard = igdx_val < PSP_IGDX_FLOOR;
    Ok(MetricsReport {
        igd: igd_val,
        igdx: igdx_val,
        cr,
        psp: cr / igdx_val.max(PSP_IGDX_FLOOR),
        psp_guard_hit: guard,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RandomStream;

    /// Exhaustive double-loop oracle, written independently of the
    /// implementation above.
    fn igd_oracle(attained: &[Vec<f64>], reference: &[Vec<f64>]) -> f64 {
        let mut sum = 0.0;
        for r in reference {
            let mut best = f64::INFINITY;
            for a in attained {
                let mut d = 0.0;
                for i in 0..r.len() {
                    d += (r[i] - a[i]).powi(2);
                }
                best = best.min(d.sqrt());
            }
            sum += best;
        }
        sum / reference.len() as f64
    }

    #[test]
    fn igd_self_is_zero() {
        let pts = vec![vec![0.0, 0.0], vec![1.0, 2.0]];
        assert_eq!(igd(&pts, &pts).unwrap(), 0.0);
    }

    #[test]
    fn igd_hand_case() {
        let reference = vec![vec![0.0, 0.0], vec![1.0, 1.0]];
        let attained = vec![vec![0.0, 0.0]];
        let v = igd(&attained, &reference).unwrap();
        assert!((v - core::f64::consts::SQRT_2 / 2.0).abs() < 1e-10);
    }

    #[test]
    fn igd_rejects_empty() {
        let pts = vec![vec![0.0, 0.0]];
        assert!(igd(&[], &pts).is_err());
        assert!(igd(&pts, &[]).is_err());
    }

    #[test]
    fn igd_igdx_match_oracle() {
        let mut rng = RandomStream::new(17);
        for _ in 0..200 {
            let n = 1 + rng.index(10);
            let m = 1 + rng.index(10);
            let d = 2 + rng.index(2);
            let a: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..d).map(|_| rng.uniform()).collect())
                .collect();
            let r: Vec<Vec<f64>> = (0..m)
                .map(|_| (0..d).map(|_| rng.uniform()).collect())
                .collect();
            let v = igd(&a, &r).unwrap();
            assert!((v - igd_oracle(&a, &r)).abs() < 1e-12);
            let w = igdx(&a, &r).unwrap();
            assert!((w - igd_oracle(&a, &r)).abs() < 1e-12);
        }
    }

    #[test]
    fn igd_monotone_under_added_points() {
        let mut rng = RandomStream::new(18);
        let r: Vec<Vec<f64>> = (0..20)
            .map(|_| vec![rng.uniform(), rng.uniform()])
            .collect();
        let mut a: Vec<Vec<f64>> = vec![vec![rng.uniform(), rng.uniform()]];
        let mut last = igd(&a, &r).unwrap();
        for _ in 0..20 {
            a.push(vec![rng.uniform(), rng.uniform()]);
            let next = igd(&a, &r).unwrap();
            assert!(next <= last + 1e-15);
            last = next;
        }
    }

    #[test]
    fn igd_permutation_invariant() {
        let mut rng = RandomStream::new(19);
        let mut a: Vec<Vec<f64>> = (0..10)
            .map(|_| vec![rng.uniform(), rng.uniform()])
            .collect();
        let r: Vec<Vec<f64>> = (0..10)
            .map(|_| vec![rng.uniform(), rng.uniform()])
            .collect();
        let before = igd(&a, &r).unwrap();
        a.reverse();
        assert_eq!(igd(&a, &r).unwrap(), before);
    }

    #[test]
    fn cover_rate_full_and_disjoint() {
        let r = vec![vec![0.0, 0.0], vec![1.0, 1.0]];
        assert_eq!(cover_rate(&r, &r).unwrap(), 1.0);
        let far = vec![vec![5.0, 0.0], vec![6.0, 1.0]];
        assert_eq!(cover_rate(&far, &r).unwrap(), 0.0);
    }

    #[test]
    fn cover_rate_half_overlap_hand_formula() {
        // reference box [0,1]^2; attained box [0.5,1.5]x[0,1]:
        // delta = (0.5^2 * 1^2), cr = delta^(1/(2*2)) = 0.5^(1/2)
        let r = vec![vec![0.0, 0.0], vec![1.0, 1.0]];
        let a = vec![vec![0.5, 0.0], vec![1.5, 1.0]];
        let v = cover_rate(&a, &r).unwrap();
        assert!((v - 0.5f64.sqrt()).abs() < 1e-12, "{v}");
    }

    #[test]
    fn cover_rate_skips_degenerate_dims() {
        // reference has zero extent in dim 1
        let r = vec![vec![0.0, 3.0], vec![1.0, 3.0]];
        let a = vec![vec![0.25, 0.0], vec![0.75, 9.0]];
        let v = cover_rate(&a, &r).unwrap();
        // only dim 0 counts: (0.5^2)^(1/2) = 0.5
        assert!((v - 0.5).abs() < 1e-12);
    }

    #[test]
    fn psp_composes_cr_and_igdx() {
        let mut rng = RandomStream::new(20);
        let a: Vec<Vec<f64>> = (0..15)
            .map(|_| vec![rng.uniform(), rng.uniform()])
            .collect();
        let r: Vec<Vec<f64>> = (0..15)
            .map(|_| vec![rng.uniform(), rng.uniform()])
            .collect();
        let v = psp(&a, &r).unwrap();
        let expected = cover_rate(&a, &r).unwrap() / igdx(&a, &r).unwrap();
        assert!((v - expected).abs() < 1e-12);
    }

    #[test]
    fn psp_guard_caps_at_floor() {
        let r = vec![vec![0.0, 0.0], vec![1.0, 1.0]];
        let v = psp(&r, &r).unwrap();
        assert_eq!(v, 1.0 / PSP_IGDX_FLOOR);
        let rep = report(&r, &r, &r, &r).unwrap();
        assert!(rep.psp_guard_hit);
    }

    #[test]
    fn psp_zero_cr_is_zero() {
        let r = vec![vec![0.0, 0.0], vec![1.0, 1.0]];
        let a = vec![vec![5.0, 5.0], vec![6.0, 6.0]];
        assert_eq!(psp(&a, &r).unwrap(), 0.0);
    }
}
