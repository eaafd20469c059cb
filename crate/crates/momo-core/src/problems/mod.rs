//! The 21 multi-modal multi-objective benchmark problems, their bounds,
//! evaluators and reference Pareto-set/front generators.
//!
//! Reference Pareto fronts are sampled uniformly by arc length along the
//! known front curve; reference Pareto sets are sampled with a uniform
//! parameterization inside each equivalent subset, with point counts per
//! subset balanced to within one.

mod idmp;
mod mmf;
mod mmmop;
mod omni;
mod sympart;

use crate::types::{Bounds, DecisionVector, Error, ObjectiveVector};
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PfGeometry {
    Convex,
    Concave,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemId {
    Mmf1,
    Mmf2,
    Mmf3,
    Mmf4,
    Mmf5,
    Mmf6,
    Mmf7,
    Mmf8,
    SymPartSimple,
    SymPartRotated,
    OmniTest,
    Mmmop1a,
    Mmmop2a,
    Mmmop3a,
    Mmmop4a,
    Mmmop5a,
    Mmmop6a,
    IdmpM2T1,
    IdmpM2T2,
    IdmpM2T3,
    IdmpM2T4,
}

pub const ALL_PROBLEMS: [ProblemId; 21] = [
    ProblemId::Mmf1,
    ProblemId::Mmf2,
    ProblemId::Mmf3,
    ProblemId::Mmf4,
    ProblemId::Mmf5,
    ProblemId::Mmf6,
    ProblemId::Mmf7,
    ProblemId::Mmf8,
    ProblemId::SymPartSimple,
    ProblemId::SymPartRotated,
    ProblemId::OmniTest,
    ProblemId::Mmmop1a,
    ProblemId::Mmmop2a,
    ProblemId::Mmmop3a,
    ProblemId::Mmmop4a,
    ProblemId::Mmmop5a,
    ProblemId::Mmmop6a,
    ProblemId::IdmpM2T1,
    ProblemId::IdmpM2T2,
    ProblemId::IdmpM2T3,
    ProblemId::IdmpM2T4,
];

/// Reference Pareto set and front of one problem. Both sets have the same
/// size; metrics treat them as plain point clouds.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceSet {
    pub ps_points: Vec<DecisionVector>,
    pub pf_points: Vec<ObjectiveVector>,
}

/// Static description plus evaluator of one benchmark problem.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub id: ProblemId,
    pub dim: usize,
    pub objectives: usize,
    pub pss_count: usize,
    pub pf_geometry: PfGeometry,
    pub bounds: Bounds,
}

pub fn list_problems() -> Vec<Problem> {
    ALL_PROBLEMS.iter().map(|&id| Problem::get(id)).collect()
}

impl ProblemId {
    /// Stable lowercase identifier used in file names and on the CLI.
    pub fn name(self) -> &'static str {
        match self {
            ProblemId::Mmf1 => "mmf1",
            ProblemId::Mmf2 => "mmf2",
            ProblemId::Mmf3 => "mmf3",
            ProblemId::Mmf4 => "mmf4",
            ProblemId::Mmf5 => "mmf5",
            ProblemId::Mmf6 => "mmf6",
            ProblemId::Mmf7 => "mmf7",
            ProblemId::Mmf8 => "mmf8",
            ProblemId::SymPartSimple => "sym_part_simple",
            ProblemId::SymPartRotated => "sym_part_rotated",
            ProblemId::OmniTest => "omni_test",
            ProblemId::Mmmop1a => "mmmop1a",
            ProblemId::Mmmop2a => "mmmop2a",
            ProblemId::Mmmop3a => "mmmop3a",
            ProblemId::Mmmop4a => "mmmop4a",
            ProblemId::Mmmop5a => "mmmop5a",
            ProblemId::Mmmop6a => "mmmop6a",
            ProblemId::IdmpM2T1 => "idmp_m2_t1",
            ProblemId::IdmpM2T2 => "idmp_m2_t2",
            ProblemId::IdmpM2T3 => "idmp_m2_t3",
            ProblemId::IdmpM2T4 => "idmp_m2_t4",
        }
    }

    pub fn from_name(name: &str) -> Option<ProblemId> {
        let lowered: alloc::string::String = name
            .chars()
            .map(|c| match c {
                '-' | ' ' => '_',
                c => c.to_ascii_lowercase(),
            })
            .collect();
        ALL_PROBLEMS
            .iter()
            .copied()
            .find(|id| id.name() == lowered)
    }
}

impl Problem {
    pub fn get(id: ProblemId) -> Problem {
        use ProblemId::*;
        let (dim, pss, geometry, lower, upper): (usize, usize, PfGeometry, Vec<f64>, Vec<f64>) =
            match id {
                Mmf1 => (2, 2, PfGeometry::Convex, vec![1.0, -1.0], vec![3.0, 1.0]),
                Mmf2 => (2, 2, PfGeometry::Convex, vec![0.0, 0.0], vec![1.0, 2.0]),
                Mmf3 => (2, 2, PfGeometry::Convex, vec![0.0, 0.0], vec![1.0, 1.5]),
                Mmf4 => (2, 4, PfGeometry::Concave, vec![-1.0, 0.0], vec![1.0, 2.0]),
                Mmf5 => (2, 4, PfGeometry::Convex, vec![1.0, -1.0], vec![3.0, 3.0]),
                Mmf6 => (2, 4, PfGeometry::Convex, vec![1.0, -1.0], vec![3.0, 2.0]),
                Mmf7 => (2, 2, PfGeometry::Convex, vec![1.0, -1.0], vec![3.0, 1.0]),
                Mmf8 => (
                    2,
                    4,
                    PfGeometry::Concave,
                    vec![-core::f64::consts::PI, 0.0],
                    vec![core::f64::consts::PI, 9.0],
                ),
                SymPartSimple | SymPartRotated => (
                    2,
                    9,
                    PfGeometry::Convex,
                    vec![-20.0, -20.0],
                    vec![20.0, 20.0],
                ),
                OmniTest => (2, 9, PfGeometry::Convex, vec![0.0, 0.0], vec![6.0, 6.0]),
                Mmmop1a => (3, 5, PfGeometry::Linear, vec![0.0; 3], vec![1.0; 3]),
                Mmmop2a => (3, 6, PfGeometry::Concave, vec![0.0; 3], vec![1.0; 3]),
                Mmmop3a => (2, 3, PfGeometry::Concave, vec![0.0; 2], vec![1.0; 2]),
                Mmmop4a => (2, 4, PfGeometry::Concave, vec![0.0; 2], vec![1.0; 2]),
                Mmmop5a => (2, 4, PfGeometry::Concave, vec![0.0; 2], vec![1.0; 2]),
                Mmmop6a => (2, 2, PfGeometry::Concave, vec![0.0; 2], vec![1.0; 2]),
                IdmpM2T1 | IdmpM2T2 | IdmpM2T3 | IdmpM2T4 => (
                    2,
                    2,
                    PfGeometry::Linear,
                    vec![-1.0, -1.0],
                    vec![1.0, 1.0],
                ),
            };
        Problem {
            id,
            dim,
            objectives: 2,
            pss_count: pss,
            pf_geometry: geometry,
            bounds: Bounds::new(lower, upper),
        }
    }

    pub fn by_name(name: &str) -> Option<Problem> {
        ProblemId::from_name(name).map(Problem::get)
    }

    pub fn name(&self) -> &'static str {
        self.id.name()
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<ObjectiveVector, Error> {
        if x.len() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        for (i, &v) in x.iter().enumerate() {
            if v < self.bounds.lower[i] || v > self.bounds.upper[i] || !v.is_finite() {
                return Err(Error::OutOfBounds { dim: i, value: v });
            }
        }
        use ProblemId::*;
        let f = match self.id {
            Mmf1 | Mmf2 | Mmf3 | Mmf4 | Mmf5 | Mmf6 | Mmf7 | Mmf8 => mmf::evaluate(self.id, x),
            SymPartSimple => sympart::evaluate_simple(x),
            SymPartRotated => sympart::evaluate_rotated(x),
            OmniTest => omni::evaluate(x),
            Mmmop1a | Mmmop2a | Mmmop3a | Mmmop4a | Mmmop5a | Mmmop6a => {
                mmmop::evaluate(self.id, x)
            }
            IdmpM2T1 | IdmpM2T2 | IdmpM2T3 | IdmpM2T4 => idmp::evaluate(self.id, x),
        };
        Ok(f.to_vec())
    }

    /// Size of the reference PS/PF, chosen as the count closest to 1000
    /// that splits evenly across the equivalent subsets.
    pub fn reference_size(&self) -> usize {
        use ProblemId::*;
        match self.id {
            SymPartSimple | SymPartRotated | OmniTest | Mmmop3a => 999,
            Mmmop2a => 1002,
            _ => 1000,
        }
    }

    /// Point in decision space on the given equivalent subset, with the
    /// subset-local parameter t in [0, 1].
    fn ps_point(&self, subset: usize, t: f64) -> DecisionVector {
        use ProblemId::*;
        match self.id {
            Mmf1 | Mmf2 | Mmf3 | Mmf4 | Mmf5 | Mmf6 | Mmf7 | Mmf8 => {
                mmf::ps_point(self.id, subset, t)
            }
            SymPartSimple => sympart::ps_point_simple(subset, t),
            SymPartRotated => sympart::ps_point_rotated(subset, t),
            OmniTest => omni::ps_point(subset, t),
            Mmmop1a | Mmmop2a | Mmmop3a | Mmmop4a | Mmmop5a | Mmmop6a => {
                mmmop::ps_point(self.id, subset, t)
            }
            IdmpM2T1 | IdmpM2T2 | IdmpM2T3 | IdmpM2T4 => idmp::ps_point(subset, t),
        }
    }

    /// Point on the Pareto front curve at parameter t in [0, 1]. The
    /// parameterization need not be uniform; `generate_reference`
    /// resamples by arc length.
    fn pf_point(&self, t: f64) -> [f64; 2] {
        use ProblemId::*;
        match self.id {
            Mmf1 | Mmf2 | Mmf3 | Mmf4 | Mmf5 | Mmf6 | Mmf7 | Mmf8 => mmf::pf_point(self.id, t),
            SymPartSimple | SymPartRotated => sympart::pf_point(t),
            OmniTest => omni::pf_point(t),
            Mmmop1a | Mmmop2a | Mmmop3a | Mmmop4a | Mmmop5a | Mmmop6a => {
                mmmop::pf_point(self.id, t)
            }
            IdmpM2T1 | IdmpM2T2 | IdmpM2T3 | IdmpM2T4 => idmp::pf_point(t),
        }
    }

    pub fn generate_reference(&self) -> ReferenceSet {
        let total = self.reference_size();
        let ps_points = self.sample_ps(total);
        let pf_points = self.sample_pf(total);
        ReferenceSet {
            ps_points,
            pf_points,
        }
    }

    fn sample_ps(&self, total: usize) -> Vec<DecisionVector> {
        let k = self.pss_count;
        let base = total / k;
        let extra = total % k;
        let mut out = Vec::with_capacity(total);
        for subset in 0..k {
            let n = base + usize::from(subset < extra);
            for i in 0..n {
                let t = if n == 1 { 0.5 } else { i as f64 / (n - 1) as f64 };
                out.push(self.ps_point(subset, t));
            }
        }
        out
    }

    fn sample_pf(&self, total: usize) -> Vec<ObjectiveVector> {
        // Resample the front curve uniformly by arc length: tabulate the
        // chord-length parameterization on a fine grid, then invert it.
        const GRID: usize = 20_000;
        let mut params = Vec::with_capacity(GRID + 1);
        let mut lengths = Vec::with_capacity(GRID + 1);
        let mut acc = 0.0;
        let mut prev = self.pf_point(0.0);
        params.push(0.0);
        lengths.push(0.0);
        for i in 1..=GRID {
            let t = i as f64 / GRID as f64;
            let p = self.pf_point(t);
            acc += libm::sqrt(
                (p[0] - prev[0]) * (p[0] - prev[0]) + (p[1] - prev[1]) * (p[1] - prev[1]),
            );
            params.push(t);
            lengths.push(acc);
            prev = p;
        }
        let total_len = acc;
        let mut out = Vec::with_capacity(total);
        let mut cursor = 0usize;
        for i in 0..total {
            let target = if total == 1 {
                0.0
            } else {
                total_len * i as f64 / (total - 1) as f64
            };
            while cursor + 1 < lengths.len() && lengths[cursor + 1] < target {
                cursor += 1;
            }
            let t = if cursor + 1 >= lengths.len() {
                1.0
            } else {
                let seg = lengths[cursor + 1] - lengths[cursor];
                let frac = if seg > 0.0 {
                    (target - lengths[cursor]) / seg
                } else {
                    0.0
                };
                params[cursor] + frac * (params[cursor + 1] - params[cursor])
            };
            let p = self.pf_point(t.clamp(0.0, 1.0));
            out.push(vec![p[0], p[1]]);
        }
        out
    }
}
