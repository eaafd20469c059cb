//! Plain-text key-value files for run configuration and experiment plans.
//!
//! Format: one `key = value` pair per line; `#` starts a comment. Unknown
//! keys are rejected so typos fail loudly.

use crate::CliError;
use momo_core::problems::{ProblemId, ALL_PROBLEMS};
use momo_core::types::RunConfig;
use std::collections::BTreeMap;
use std::path::Path;

fn parse_pairs(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut pairs = BTreeMap::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Usage(format!(
                "line {}: expected `key = value`, found {raw:?}",
                ln + 1
            )));
        };
        pairs.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(pairs)
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Usage(format!("bad value for {key}: {value:?}")))
}

/// Applies config keys from `pairs` onto `config`, consuming them.
fn apply_config_keys(
    pairs: &mut BTreeMap<String, String>,
    config: &mut RunConfig,
) -> Result<(), CliError> {
    if let Some(v) = pairs.remove("pop_size") {
        config.pop_size = parse_num("pop_size", &v)?;
    }
    if let Some(v) = pairs.remove("nfe_max") {
        config.nfe_max = parse_num("nfe_max", &v)?;
    }
    if let Some(v) = pairs.remove("pc") {
        config.pc = parse_num("pc", &v)?;
    }
    if let Some(v) = pairs.remove("eta_c") {
        config.eta_c = parse_num("eta_c", &v)?;
    }
    if let Some(v) = pairs.remove("pm") {
        config.pm = Some(parse_num("pm", &v)?);
    }
    if let Some(v) = pairs.remove("eta_m") {
        config.eta_m = parse_num("eta_m", &v)?;
    }
    if let Some(v) = pairs.remove("seed") {
        config.seed = parse_num("seed", &v)?;
    }
    if let Some(v) = pairs.remove("snapshot_fractions") {
        let fractions: Result<Vec<f64>, _> = v
            .split(',')
            .map(|s| parse_num::<f64>("snapshot_fractions", s.trim()))
            .collect();
        config.snapshot_fractions = fractions?;
    }
    Ok(())
}

fn reject_unknown(pairs: BTreeMap<String, String>) -> Result<(), CliError> {
    if let Some(key) = pairs.into_keys().next() {
        return Err(CliError::Usage(format!("unknown key: {key}")));
    }
    Ok(())
}

/// Run configuration file for `momo run --config`.
pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path)?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<RunConfig, CliError> {
    let mut pairs = parse_pairs(text)?;
    let mut config = RunConfig::default();
    apply_config_keys(&mut pairs, &mut config)?;
    reject_unknown(pairs)?;
    config
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(config)
}

/// A batch of runs: every problem crossed with every seed.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentPlan {
    pub problems: Vec<ProblemId>,
    pub seeds: Vec<u64>,
    pub config: RunConfig,
}

impl Default for ExperimentPlan {
    /// The full benchmark protocol: all 21 problems, seeds 1..=31,
    /// default run configuration.
    fn default() -> Self {
        ExperimentPlan {
            problems: ALL_PROBLEMS.to_vec(),
            seeds: (1..=31).collect(),
            config: RunConfig::default(),
        }
    }
}

impl ExperimentPlan {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.problems.is_empty() {
            return Err(CliError::Usage("plan lists no problems".into()));
        }
        if self.seeds.is_empty() {
            return Err(CliError::Usage("plan lists no seeds".into()));
        }
        let mut sorted = self.seeds.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.seeds.len() {
            return Err(CliError::Usage("plan seeds must be distinct".into()));
        }
        self.config
            .validate()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(())
    }
}

/// Seed lists accept either `a..b` (inclusive) or a comma list.
fn parse_seeds(value: &str) -> Result<Vec<u64>, CliError> {
    if let Some((lo, hi)) = value.split_once("..") {
        let lo: u64 = parse_num("seeds", lo.trim())?;
        let hi: u64 = parse_num("seeds", hi.trim())?;
        if lo > hi {
            return Err(CliError::Usage(format!("empty seed range {value:?}")));
        }
        return Ok((lo..=hi).collect());
    }
    value
        .split(',')
        .map(|s| parse_num("seeds", s.trim()))
        .collect()
}

fn parse_problems(value: &str) -> Result<Vec<ProblemId>, CliError> {
    if value.trim().eq_ignore_ascii_case("all") {
        return Ok(ALL_PROBLEMS.to_vec());
    }
    value
        .split(',')
        .map(|s| {
            let name = s.trim();
            ProblemId::from_name(name)
                .ok_or_else(|| CliError::Usage(format!("unknown problem: {name}")))
        })
        .collect()
}

pub fn load_plan(path: &Path) -> Result<ExperimentPlan, CliError> {
    let text = std::fs::read_to_string(path)?;
    parse_plan(&text)
}

pub fn parse_plan(text: &str) -> Result<ExperimentPlan, CliError> {
    let mut pairs = parse_pairs(text)?;
    let mut plan = ExperimentPlan::default();
    if let Some(v) = pairs.remove("problems") {
        plan.problems = parse_problems(&v)?;
    }
    if let Some(v) = pairs.remove("seeds") {
        plan.seeds = parse_seeds(&v)?;
    }
    apply_config_keys(&mut pairs, &mut plan.config)?;
    reject_unknown(pairs)?;
    plan.validate()?;
    Ok(plan)
}
