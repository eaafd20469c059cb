//! Two-sided Wilcoxon rank-sum test with midrank tie handling.
//!
//! P-values are exact (full null distribution of the rank sum) for pooled
//! sizes up to 20 and use the tie-corrected normal approximation with
//! continuity correction beyond that.

use crate::types::Error;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

const EXACT_LIMIT: usize = 20;

/// Location of the first sample relative to the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Less,
    Equivalent,
    Greater,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankSumResult {
    /// Rank sum of the first sample in the pooled midranked data.
    pub rank_sum: f64,
    /// Two-sided p-value.
    pub p_value: f64,
}

impl RankSumResult {
    /// Significance verdict at level `alpha`, with the direction taken from
    /// the rank-sum deviation from its null expectation.
    pub fn location(&self, alpha: f64, n: usize, m: usize) -> Location {
        let expected = n as f64 * (n + m + 1) as f64 / 2.0;
        if self.p_value >= alpha || self.rank_sum == expected {
            Location::Equivalent
        } else if self.rank_sum < expected {
            Location::Less
        } else {
            Location::Greater
        }
    }
}

/// Midranks of the pooled sample; ties share the average rank.
fn midranks(pooled: &[f64]) -> Vec<f64> {
    let n = pooled.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| pooled[a].total_cmp(&pooled[b]));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && pooled[order[j + 1]] == pooled[order[i]] {
            j += 1;
        }
        let avg = (i + j + 2) as f64 / 2.0; // ranks are 1-based
        for &idx in &order[i..=j] {
            ranks[idx] = avg;
        }
        i = j + 1;
    }
    ranks
}

pub fn rank_sum_test(a: &[f64], b: &[f64]) -> Result<RankSumResult, Error> {
    let (n, m) = (a.len(), b.len());
    if n < 2 || m < 2 {
        return Err(Error::InvalidArgument(String::from(
            "each sample needs at least 2 values",
        )));
    }
    let mut pooled: Vec<f64> = Vec::with_capacity(n + m);
    pooled.extend_from_slice(a);
    pooled.extend_from_slice(b);
    let ranks = midranks(&pooled);
    let rank_sum: f64 = ranks[..n].iter().sum();

    let p_value = if n + m <= EXACT_LIMIT {
        exact_p(&ranks, n, rank_sum)
    } else {
        normal_p(&ranks, n, m, rank_sum)
    };
    Ok(RankSumResult { rank_sum, p_value })
}

/// Convenience wrapper: verdict for sample `a` against `b` at level `alpha`.
pub fn wilcoxon_rank_sum(a: &[f64], b: &[f64], alpha: f64) -> Result<Location, Error> {
    let r = rank_sum_test(a, b)?;
    Ok(r.location(alpha, a.len(), b.len()))
}

/// Exact two-sided p: tabulate the null distribution of the rank sum over
/// all n-subsets of the pooled midranks (doubled so they are integers).
fn exact_p(ranks: &[f64], n: usize, observed: f64) -> f64 {
    let scaled: Vec<usize> = ranks.iter().map(|&r| (2.0 * r) as usize).collect();
    let total: usize = scaled.iter().sum();
    // dp[k][s] = number of k-subsets with scaled rank sum s
    let mut dp = vec![vec![0u64; total + 1]; n + 1];
    dp[0][0] = 1;
    for &r in &scaled {
        for k in (0..n).rev() {
            for s in 0..=(total - r) {
                if dp[k][s] > 0 {
                    dp[k + 1][s + r] += dp[k][s];
                }
            }
        }
    }
    let observed_scaled = libm::round(2.0 * observed) as usize;
    let counts = &dp[n];
    let all: u64 = counts.iter().sum();
    let low: u64 = counts[..=observed_scaled.min(total)].iter().sum();
    let high: u64 = counts[observed_scaled.min(total)..].iter().sum();
    let p = 2.0 * (low.min(high) as f64) / all as f64;
    p.min(1.0)
}

/// Normal approximation with tie correction and continuity correction.
fn normal_p(ranks: &[f64], n: usize, m: usize, observed: f64) -> f64 {
    let nt = (n + m) as f64;
    let mean = n as f64 * (nt + 1.0) / 2.0;
    // tie counts from repeated midranks
    let mut sorted = ranks.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }
    let var = (n as f64 * m as f64 / 12.0) * ((nt + 1.0) - tie_term / (nt * (nt - 1.0)));
    if var <= 0.0 {
        return 1.0;
    }
    let diff = observed - mean;
    let cc = if diff > 0.0 {
        -0.5
    } else if diff < 0.0 {
        0.5
    } else {
        0.0
    };
    let z = (diff + cc) / libm::sqrt(var);
    libm::erfc(z.abs() / core::f64::consts::SQRT_2).min(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RandomStream;

    /// Exact-enumeration oracle: walk every n-subset of pooled indices.
    fn enumeration_p(a: &[f64], b: &[f64]) -> f64 {
        let n = a.len();
        let mut pooled: Vec<f64> = a.to_vec();
        pooled.extend_from_slice(b);
        let ranks = midranks(&pooled);
        let observed: f64 = ranks[..n].iter().sum();
        let total = pooled.len();
        let mut low = 0u64;
        let mut high = 0u64;
        let mut all = 0u64;
        let mut pick = vec![false; total];
        fn walk(
            ranks: &[f64],
            pick: &mut Vec<bool>,
            start: usize,
            left: usize,
            observed: f64,
            low: &mut u64,
            high: &mut u64,
            all: &mut u64,
        ) {
            if left == 0 {
                let s: f64 = ranks
                    .iter()
                    .zip(pick.iter())
                    .filter(|(_, &p)| p)
                    .map(|(r, _)| r)
                    .sum();
                *all += 1;
                if s <= observed + 1e-9 {
                    *low += 1;
                }
                if s >= observed - 1e-9 {
                    *high += 1;
                }
                return;
            }
            for i in start..=(ranks.len() - left) {
                pick[i] = true;
                walk(ranks, pick, i + 1, left - 1, observed, low, high, all);
                pick[i] = false;
            }
        }
        walk(
            &ranks, &mut pick, 0, n, observed, &mut low, &mut high, &mut all,
        );
        (2.0 * low.min(high) as f64 / all as f64).min(1.0)
    }

    #[test]
    fn identical_samples_equivalent() {
        let a = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(wilcoxon_rank_sum(&a, &a, 0.05).unwrap(), Location::Equivalent);
    }

    #[test]
    fn all_equal_degenerate_equivalent() {
        let a = [5.0; 6];
        let b = [5.0; 7];
        assert_eq!(wilcoxon_rank_sum(&a, &b, 0.05).unwrap(), Location::Equivalent);
    }

    #[test]
    fn separated_samples_significant() {
        let a = [1.0, 2.0, 3.0, 4.0];
        let b = [10.0, 11.0, 12.0, 13.0];
        // exact p = 2/C(8,4) = 2/70 ~= 0.0286 < 0.05
        let r = rank_sum_test(&a, &b).unwrap();
        assert!((r.p_value - 2.0 / 70.0).abs() < 1e-12, "p = {}", r.p_value);
        assert_eq!(wilcoxon_rank_sum(&a, &b, 0.05).unwrap(), Location::Less);
        assert_eq!(wilcoxon_rank_sum(&b, &a, 0.05).unwrap(), Location::Greater);
    }

    #[test]
    fn sample_too_small_rejected() {
        assert!(rank_sum_test(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn exact_p_matches_enumeration_for_small_samples() {
        let mut rng = RandomStream::new(77);
        for n in 2..=6usize {
            for m in 2..=6usize {
                if n + m > 12 {
                    continue;
                }
                for _ in 0..20 {
                    // draws from a small discrete support so ties occur
                    let a: Vec<f64> = (0..n).map(|_| rng.index(6) as f64).collect();
                    let b: Vec<f64> = (0..m).map(|_| rng.index(6) as f64).collect();
                    let r = rank_sum_test(&a, &b).unwrap();
                    let oracle = enumeration_p(&a, &b);
                    assert!(
                        (r.p_value - oracle).abs() < 1e-12,
                        "n={n} m={m} a={a:?} b={b:?}: {} vs {oracle}",
                        r.p_value
                    );
                }
            }
        }
    }

    #[test]
    fn shifted_normals_detected_at_n31() {
        let mut rng = RandomStream::new(88);
        let gauss = |rng: &mut RandomStream| {
            let u1: f64 = rng.uniform().max(1e-12);
            let u2: f64 = rng.uniform();
            (-2.0 * u1.ln()).sqrt() * (2.0 * core::f64::consts::PI * u2).cos()
        };
        let mut detected = 0;
        for _ in 0..100 {
            let a: Vec<f64> = (0..31).map(|_| gauss(&mut rng)).collect();
            let b: Vec<f64> = (0..31).map(|_| gauss(&mut rng) + 2.0).collect();
            if wilcoxon_rank_sum(&a, &b, 0.05).unwrap() == Location::Less {
                detected += 1;
            }
        }
        assert!(detected >= 95, "detected {detected}/100");
    }

    #[test]
    fn normal_approx_close_to_exact_at_boundary() {
        // same data scored by both paths should roughly agree
        let a: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let b: Vec<f64> = (0..10).map(|i| i as f64 + 2.5).collect();
        let pooled: Vec<f64> = a.iter().chain(&b).copied().collect();
        let ranks = midranks(&pooled);
        let w: f64 = ranks[..10].iter().sum();
        let exact = exact_p(&ranks, 10, w);
        let approx = normal_p(&ranks, 10, 10, w);
        assert!((exact - approx).abs() < 0.02, "{exact} vs {approx}");
    }
}
