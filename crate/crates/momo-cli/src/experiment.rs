//! Runs and batch experiments: artifact layout, reference-set resolution,
//! and the parallel sweep behind `momo bench`.
//!
//! Output layout for a batch under `out/`:
//! `runs/<problem>/seed_<k>/{archive,k_history,snapshot_<tag>}.csv`,
//! plus `metrics.csv` and `summary.csv` at the top level.

use crate::csvio::{self, MetricsRow};
use crate::plan::ExperimentPlan;
use crate::CliError;
use momo_core::engine::RunRecord;
use momo_core::{metrics, Problem, ProblemId, RunConfig};
use rayon::prelude::*;
use std::path::{Path, PathBuf};

pub const REFSET_DIR_ENV: &str = "MOMO_REFSET_DIR";

/// Directory holding `ps_<name>.csv` / `pf_<name>.csv` files: the
/// `MOMO_REFSET_DIR` environment variable when set, else `./refsets`.
pub fn refset_dir() -> PathBuf {
    match std::env::var_os(REFSET_DIR_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => PathBuf::from("refsets"),
    }
}

pub fn write_refset(problem: &Problem, dir: &Path) -> Result<(), CliError> {
    let refset = problem.generate_reference();
    csvio::write_matrix(&dir.join(format!("ps_{}.csv", problem.name())), &refset.ps_points)?;
    csvio::write_matrix(&dir.join(format!("pf_{}.csv", problem.name())), &refset.pf_points)?;
    Ok(())
}

/// Loads a reference set from `dir`, failing with a hint to run
/// `momo refset` when the files are absent.
pub fn load_refset(
    problem: &Problem,
    dir: &Path,
) -> Result<(Vec<Vec<f64>>, Vec<Vec<f64>>), CliError> {
    let ps_path = dir.join(format!("ps_{}.csv", problem.name()));
    let pf_path = dir.join(format!("pf_{}.csv", problem.name()));
    if !ps_path.exists() || !pf_path.exists() {
        return Err(CliError::Runtime(format!(
            "missing reference set for {} in {} (generate it with `momo refset`)",
            problem.name(),
            dir.display()
        )));
    }
    Ok((csvio::read_matrix(&ps_path)?, csvio::read_matrix(&pf_path)?))
}

/// Executes one run and persists its artifacts under `dir`.
pub fn run_and_persist(
    problem: &Problem,
    config: &RunConfig,
    dir: &Path,
) -> Result<RunRecord, CliError> {
    let record = momo_core::run(problem, config)?;
    csvio::write_archive(&dir.join("archive.csv"), record.archive.entries())?;
    csvio::write_k_history(&dir.join("k_history.csv"), &record.k_history)?;
    for snapshot in &record.snapshots {
        let tag = csvio::fraction_tag(snapshot.fraction);
        csvio::write_snapshot(&dir.join(format!("snapshot_{tag}.csv")), snapshot)?;
    }
    Ok(record)
}

pub fn score_archive(
    problem: &Problem,
    xs: &[Vec<f64>],
    fs: &[Vec<f64>],
    refset_dir: &Path,
    seed: u64,
) -> Result<MetricsRow, CliError> {
    let (ps, pf) = load_refset(problem, refset_dir)?;
    let report = metrics::report(xs, fs, &ps, &pf)?;
    Ok(MetricsRow {
        problem: problem.name().to_string(),
        seed,
        igd: report.igd,
        igdx: report.igdx,
        cr: report.cr,
        psp: report.psp,
    })
}

pub struct BatchOutcome {
    pub metrics: Vec<MetricsRow>,
    /// Human-readable descriptions of runs that failed.
    pub failures: Vec<String>,
}

/// Runs the full plan, one worker per (problem, seed). Failed runs are
/// reported and the batch continues; metrics keep plan order regardless of
/// completion order, so reruns are byte-identical.
pub fn run_experiment(
    plan: &ExperimentPlan,
    out_dir: &Path,
    refsets: &Path,
) -> Result<BatchOutcome, CliError> {
    plan.validate()?;
    // fail fast on missing reference files before spending run time
    for &id in &plan.problems {
        load_refset(&Problem::get(id), refsets)?;
    }
    let tasks: Vec<(ProblemId, u64)> = plan
        .problems
        .iter()
        .flat_map(|&p| plan.seeds.iter().map(move |&s| (p, s)))
        .collect();
    let results: Vec<Result<MetricsRow, String>> = tasks
        .par_iter()
        .map(|&(id, seed)| {
            let problem = Problem::get(id);
            let mut config = plan.config.clone();
            config.seed = seed;
            let dir = out_dir
                .join("runs")
                .join(problem.name())
                .join(format!("seed_{seed}"));
            run_and_persist(&problem, &config, &dir)
                .and_then(|record| {
                    score_archive(
                        &problem,
                        &record.archive.decision_vectors(),
                        &record.archive.objective_vectors(),
                        refsets,
                        seed,
                    )
                })
                .map_err(|e| format!("{} seed {seed}: {e}", problem.name()))
        })
        .collect();

    let mut metrics_rows = Vec::new();
    let mut failures = Vec::new();
    for result in results {
        match result {
            Ok(row) => metrics_rows.push(row),
            Err(msg) => failures.push(msg),
        }
    }
    csvio::write_metrics(&out_dir.join("metrics.csv"), &metrics_rows)?;
    let summary = crate::report::summarize(&metrics_rows);
    crate::report::write_summary(&out_dir.join("summary.csv"), &summary)?;
    Ok(BatchOutcome {
        metrics: metrics_rows,
        failures,
    })
}
