//! Non-domination ranking (fast non-dominated sorting), minimization.

use crate::types::Error;
use alloc::vec;
use alloc::vec::Vec;

/// Pareto dominance: `a` dominates `b` iff a <= b componentwise and
/// a < b in at least one component. Exact floating comparison, no epsilon.
pub fn dominates(a: &[f64], b: &[f64]) -> Result<bool, Error> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    let mut strictly_less = false;
    for (&ai, &bi) in a.iter().zip(b) {
        if ai > bi {
            return Ok(false);
        }
        if ai < bi {
            strictly_less = true;
        }
    }
    Ok(strictly_less)
}

/// Fast non-dominated sorting. Returns one rank per input point
/// (0 = first front). O(n^2 M), fine at the population sizes used here.
pub fn non_dominated_sort(points: &[Vec<f64>]) -> Result<Vec<usize>, Error> {
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let m = points[0].len();
    for p in points {
        if p.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                got: p.len(),
            });
        }
    }

    let mut dominated_by: Vec<Vec<usize>> = vec![Vec::new(); n]; // i dominates these
    let mut domination_count = vec![0usize; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if dominates(&points[i], &points[j])? {
                dominated_by[i].push(j);
                domination_count[j] += 1;
            } else if dominates(&points[j], &points[i])? {
                dominated_by[j].push(i);
                domination_count[i] += 1;
            }
        }
    }

    let mut ranks = vec![usize::MAX; n];
    let mut front: Vec<usize> = (0..n).filter(|&i| domination_count[i] == 0).collect();
    let mut rank = 0;
    while !front.is_empty() {
        let mut next = Vec::new();
        for &i in &front {
            ranks[i] = rank;
            for &j in &dominated_by[i] {
                domination_count[j] -= 1;
                if domination_count[j] == 0 {
                    next.push(j);
                }
            }
        }
        front = next;
        rank += 1;
    }
    Ok(ranks)
}
