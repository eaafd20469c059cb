//! Domain types shared across the crate.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Point in variable space, length D.
pub type DecisionVector = Vec<f64>;
/// Point in objective space, length M. All objectives are minimized.
pub type ObjectiveVector = Vec<f64>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Inputs whose lengths must agree did not.
    LengthMismatch { expected: usize, got: usize },
    /// A numeric argument was outside its admissible range.
    InvalidArgument(String),
    /// A decision vector violated the problem bounds.
    OutOfBounds { dim: usize, value: f64 },
    /// Input set was empty where at least one element is required.
    EmptyInput,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::OutOfBounds { dim, value } => {
                write!(f, "coordinate {dim} out of bounds: {value}")
            }
            Error::EmptyInput => write!(f, "empty input"),
        }
    }
}

/// One evaluated candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub x: DecisionVector,
    pub f: ObjectiveVector,
    /// 1-based ordinal of the evaluation that produced this solution.
    pub eval_index: usize,
    /// Non-domination rank (0 = first front), when assigned.
    pub rank: Option<usize>,
    /// Cluster label, when assigned.
    pub cluster_id: Option<usize>,
}

impl Solution {
    pub fn new(x: DecisionVector, f: ObjectiveVector, eval_index: usize) -> Self {
        Self {
            x,
            f,
            eval_index,
            rank: None,
            cluster_id: None,
        }
    }
}

/// Surviving set of exactly N solutions between generations.
pub type Population = Vec<Solution>;

/// Append-only log of every evaluated solution, in evaluation order.
/// Its length equals the number of function evaluations spent so far.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Archive {
    entries: Vec<Solution>,
}

impl Archive {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, s: Solution) {
        debug_assert_eq!(s.eval_index, self.entries.len() + 1);
        self.entries.push(s);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Solution] {
        &self.entries
    }

    pub fn decision_vectors(&self) -> Vec<DecisionVector> {
        self.entries.iter().map(|s| s.x.clone()).collect()
    }

    pub fn objective_vectors(&self) -> Vec<ObjectiveVector> {
        self.entries.iter().map(|s| s.f.clone()).collect()
    }
}

/// Box constraints of the variable space.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Self {
        assert_eq!(lower.len(), upper.len());
        assert!(
            lower.iter().zip(&upper).all(|(l, u)| l < u),
            "lower bound must be strictly below upper bound in every dimension"
        );
        Self { lower, upper }
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .enumerate()
                .all(|(i, &v)| v >= self.lower[i] && v <= self.upper[i])
    }

    pub fn clip(&self, x: &mut [f64]) {
        for (i, v) in x.iter_mut().enumerate() {
            *v = v.clamp(self.lower[i], self.upper[i]);
        }
    }
}

/// Run configuration. Defaults follow the standard desk-scale protocol:
/// N=50, a budget of 1000 evaluations, Pc=1, Pm=1/D, eta_c=eta_m=20.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub pop_size: usize,
    pub nfe_max: usize,
    pub pc: f64,
    pub eta_c: f64,
    /// Per-variable mutation probability. `None` means 1/D.
    pub pm: Option<f64>,
    pub eta_m: f64,
    pub seed: u64,
    /// Budget fractions at which population snapshots are captured.
    pub snapshot_fractions: Vec<f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            pop_size: 50,
            nfe_max: 1000,
            pc: 1.0,
            eta_c: 20.0,
            pm: None,
            eta_m: 20.0,
            seed: 1,
            snapshot_fractions: alloc::vec![0.25, 0.5, 0.75, 1.0],
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.pop_size < 4 {
            return Err(Error::InvalidArgument(String::from("pop_size must be >= 4")));
        }
        if self.nfe_max < self.pop_size {
            return Err(Error::InvalidArgument(String::from(
                "nfe_max must be >= pop_size",
            )));
        }
        if !(0.0..=1.0).contains(&self.pc) {
            return Err(Error::InvalidArgument(String::from("pc must be in [0,1]")));
        }
        if let Some(pm) = self.pm {
            if !(0.0..=1.0).contains(&pm) {
                return Err(Error::InvalidArgument(String::from("pm must be in [0,1]")));
            }
        }
        if self.eta_c <= 0.0 || self.eta_m <= 0.0 {
            return Err(Error::InvalidArgument(String::from(
                "distribution indices must be positive",
            )));
        }
        Ok(())
    }

    pub fn mutation_probability(&self, dim: usize) -> f64 {
        self.pm.unwrap_or(1.0 / dim as f64)
    }
}

/// History of instantaneous optimal cluster counts k* and their running
/// average, rounded up, which is the stabilized count actually used for
/// clustering.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ClusterTracker {
    history: Vec<usize>,
}

impl ClusterTracker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn update(&mut self, k_star: usize) -> Result<usize, Error> {
        if k_star < 2 {
            return Err(Error::InvalidArgument(String::from("k_star must be >= 2")));
        }
        self.history.push(k_star);
        Ok(self.stabilized().unwrap())
    }

    /// ceil(mean of history); `None` before the first update.
    pub fn stabilized(&self) -> Option<usize> {
        if self.history.is_empty() {
            return None;
        }
        let sum: usize = self.history.iter().sum();
        Some(sum.div_ceil(self.history.len()))
    }

    pub fn history(&self) -> &[usize] {
        &self.history
    }
}
