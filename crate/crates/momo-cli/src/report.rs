//! Summary statistics and dataset comparison: per-problem mean/std rows,
//! rank-sum verdicts against a baseline dataset, and win/tie/loss tallies.

use crate::csvio::MetricsRow;
use crate::CliError;
use momo_core::stats::{wilcoxon_rank_sum, Location};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

pub const ALPHA: f64 = 0.05;

pub const METRIC_NAMES: [&str; 4] = ["igd", "igdx", "cr", "psp"];

/// Whether larger values of a metric are better.
pub fn higher_is_better(metric: &str) -> bool {
    matches!(metric, "cr" | "psp")
}

fn metric_value(row: &MetricsRow, metric: &str) -> f64 {
    match metric {
        "igd" => row.igd,
        "igdx" => row.igdx,
        "cr" => row.cr,
        "psp" => row.psp,
        _ => unreachable!("unknown metric {metric}"),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub problem: String,
    pub metric: String,
    pub mean: f64,
    pub std: f64,
    pub values: Vec<f64>,
}

/// Per-seed values grouped as (problem, metric) in first-appearance order
/// of the problems.
pub fn summarize(rows: &[MetricsRow]) -> Vec<SummaryRow> {
    let mut order: Vec<String> = Vec::new();
    let mut grouped: BTreeMap<String, Vec<&MetricsRow>> = BTreeMap::new();
    for row in rows {
        if !grouped.contains_key(&row.problem) {
            order.push(row.problem.clone());
        }
        grouped.entry(row.problem.clone()).or_default().push(row);
    }
    let mut out = Vec::new();
    for problem in order {
        for metric in METRIC_NAMES {
            let values: Vec<f64> = grouped[&problem]
                .iter()
                .map(|r| metric_value(r, metric))
                .collect();
            let n = values.len() as f64;
            let mean = values.iter().sum::<f64>() / n;
            let var = if values.len() > 1 {
                values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)
            } else {
                0.0
            };
            out.push(SummaryRow {
                problem: problem.clone(),
                metric: metric.to_string(),
                mean,
                std: var.sqrt(),
                values,
            });
        }
    }
    out
}

pub fn write_summary(path: &Path, rows: &[SummaryRow]) -> Result<(), CliError> {
    let mut out = String::from("problem,metric,mean,std\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{}", r.problem, r.metric, r.mean, r.std);
    }
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Rank-sum verdict for `candidate` against `ours`, oriented so the result
/// reads "candidate is Better/Equivalent/Worse". For error-like metrics
/// (igd, igdx) smaller values win; for cr/psp larger values win.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Better,
    Equivalent,
    Worse,
}

impl Verdict {
    pub fn symbol(self) -> &'static str {
        match self {
            Verdict::Better => "+",
            Verdict::Equivalent => "=",
            Verdict::Worse => "-",
        }
    }
}

pub fn compare(
    candidate: &[f64],
    ours: &[f64],
    metric: &str,
    alpha: f64,
) -> Result<Verdict, CliError> {
    let location =
        wilcoxon_rank_sum(candidate, ours, alpha).map_err(|e| CliError::Runtime(e.to_string()))?;
    Ok(match (location, higher_is_better(metric)) {
        (Location::Equivalent, _) => Verdict::Equivalent,
        (Location::Greater, true) | (Location::Less, false) => Verdict::Better,
        (Location::Greater, false) | (Location::Less, true) => Verdict::Worse,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WtlCounts {
    pub wins: usize,
    pub ties: usize,
    pub losses: usize,
}

/// Win/tie/loss tally over problems for one metric: how often the
/// candidate dataset beats the baseline dataset.
pub fn wtl_table(
    candidate: &[MetricsRow],
    baseline: &[MetricsRow],
    metric: &str,
    alpha: f64,
) -> Result<WtlCounts, CliError> {
    let mut counts = WtlCounts::default();
    for (problem, cand_values, base_values) in aligned_values(candidate, baseline, metric)? {
        let _ = problem;
        match compare(&cand_values, &base_values, metric, alpha)? {
            Verdict::Better => counts.wins += 1,
            Verdict::Equivalent => counts.ties += 1,
            Verdict::Worse => counts.losses += 1,
        }
    }
    Ok(counts)
}

/// Groups both datasets by problem, seed-aligned, erroring when the two
/// datasets cover different problems or seed sets.
pub fn aligned_values(
    candidate: &[MetricsRow],
    baseline: &[MetricsRow],
    metric: &str,
) -> Result<Vec<(String, Vec<f64>, Vec<f64>)>, CliError> {
    let group = |rows: &[MetricsRow]| {
        let mut map: BTreeMap<String, Vec<(u64, f64)>> = BTreeMap::new();
        for r in rows {
            map.entry(r.problem.clone())
                .or_default()
                .push((r.seed, metric_value(r, metric)));
        }
        for values in map.values_mut() {
            values.sort_by_key(|&(seed, _)| seed);
        }
        map
    };
    let cand = group(candidate);
    let base = group(baseline);
    if cand.keys().collect::<Vec<_>>() != base.keys().collect::<Vec<_>>() {
        return Err(CliError::Runtime(
            "candidate and baseline cover different problems".into(),
        ));
    }
    let mut out = Vec::new();
    for (problem, cand_values) in cand {
        let base_values = &base[&problem];
        let cand_seeds: Vec<u64> = cand_values.iter().map(|&(s, _)| s).collect();
        let base_seeds: Vec<u64> = base_values.iter().map(|&(s, _)| s).collect();
        if cand_seeds != base_seeds {
            return Err(CliError::Runtime(format!(
                "seed sets differ for problem {problem}"
            )));
        }
        out.push((
            problem,
            cand_values.iter().map(|&(_, v)| v).collect(),
            base_values.iter().map(|&(_, v)| v).collect(),
        ));
    }
    Ok(out)
}

/// Renders the report text: the summary table, plus verdict columns and
/// W/T/L rows when a baseline dataset is given.
pub fn render_report(
    ours: &[MetricsRow],
    baseline: Option<&[MetricsRow]>,
) -> Result<String, CliError> {
    let summary = summarize(ours);
    let mut out = String::new();
    let _ = writeln!(out, "{:<18} {:>6} {:>14} {:>14}", "problem", "metric", "mean", "std");
    for row in &summary {
        let _ = writeln!(
            out,
            "{:<18} {:>6} {:>14.6e} {:>14.6e}",
            row.problem, row.metric, row.mean, row.std
        );
    }
    if let Some(base) = baseline {
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "baseline comparison (rank-sum, alpha = {ALPHA}; +/=/- means the baseline is better/equivalent/worse):"
        );
        for metric in METRIC_NAMES {
            let mut verdicts = Vec::new();
            for (problem, base_values, our_values) in aligned_values(base, ours, metric)? {
                let verdict = compare(&base_values, &our_values, metric, ALPHA)?;
                verdicts.push((problem, verdict));
            }
            let counts = wtl_table(base, ours, metric, ALPHA)?;
            let _ = writeln!(
                out,
                "{metric}: W/T/L = {}/{}/{}  [{}]",
                counts.wins,
                counts.ties,
                counts.losses,
                verdicts
                    .iter()
                    .map(|(p, v)| format!("{p}{}", v.symbol()))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
    }
    Ok(out)
}
