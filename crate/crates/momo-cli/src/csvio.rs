//! CSV readers and writers for archives, reference sets, run artifacts and
//! metric tables. Floats are written with the shortest representation that
//! round-trips, so reading back reproduces the exact bit pattern.

use crate::CliError;
use momo_core::engine::Snapshot;
use momo_core::types::Solution;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, contents)?;
    Ok(())
}

/// Archive CSV with header `eval_index,x_1..x_D,f_1..f_M`.
pub fn write_archive(path: &Path, entries: &[Solution]) -> Result<(), CliError> {
    let (d, m) = match entries.first() {
        Some(s) => (s.x.len(), s.f.len()),
        None => return Err(CliError::Runtime("empty archive".into())),
    };
    let mut out = String::from("eval_index");
    for i in 1..=d {
        let _ = write!(out, ",x_{i}");
    }
    for i in 1..=m {
        let _ = write!(out, ",f_{i}");
    }
    out.push('\n');
    for s in entries {
        let _ = write!(out, "{}", s.eval_index);
        for v in s.x.iter().chain(s.f.iter()) {
            let _ = write!(out, ",{v}");
        }
        out.push('\n');
    }
    write_atomic(path, &out)
}

/// Reads an archive CSV back into decision and objective vectors. The
/// header's `x_*`/`f_*` columns determine the split.
pub fn read_archive(path: &Path) -> Result<(Vec<Vec<f64>>, Vec<Vec<f64>>), CliError> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| CliError::Runtime(format!("{}: empty file", path.display())))?;
    let cols: Vec<&str> = header.split(',').collect();
    if cols.first() != Some(&"eval_index") {
        return Err(CliError::Runtime(format!(
            "{}: expected archive header starting with eval_index",
            path.display()
        )));
    }
    let d = cols.iter().filter(|c| c.starts_with("x_")).count();
    let m = cols.iter().filter(|c| c.starts_with("f_")).count();
    if d == 0 || m == 0 || cols.len() != 1 + d + m {
        return Err(CliError::Runtime(format!(
            "{}: malformed archive header",
            path.display()
        )));
    }
    let mut xs = Vec::new();
    let mut fs_ = Vec::new();
    for (ln, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 1 + d + m {
            return Err(CliError::Runtime(format!(
                "{}:{}: expected {} fields, found {}",
                path.display(),
                ln + 2,
                1 + d + m,
                fields.len()
            )));
        }
        let parse = |s: &str| -> Result<f64, CliError> {
            s.parse()
                .map_err(|_| CliError::Runtime(format!("{}:{}: bad number {s:?}", path.display(), ln + 2)))
        };
        xs.push(fields[1..1 + d].iter().map(|s| parse(s)).collect::<Result<_, _>>()?);
        fs_.push(fields[1 + d..].iter().map(|s| parse(s)).collect::<Result<_, _>>()?);
    }
    Ok((xs, fs_))
}

/// Header-less numeric matrix (reference-set format).
pub fn write_matrix(path: &Path, rows: &[Vec<f64>]) -> Result<(), CliError> {
    let mut out = String::new();
    for row in rows {
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
    write_atomic(path, &out)
}

pub fn read_matrix(path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let text = fs::read_to_string(path)?;
    let mut rows = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let row: Result<Vec<f64>, _> = line.split(',').map(|s| s.parse::<f64>()).collect();
        rows.push(row.map_err(|_| {
            CliError::Runtime(format!("{}:{}: bad number", path.display(), ln + 1))
        })?);
    }
    Ok(rows)
}

/// Per-generation cluster counts: `generation,k_star,k_bar`.
pub fn write_k_history(path: &Path, history: &[(usize, usize)]) -> Result<(), CliError> {
    let mut out = String::from("generation,k_star,k_bar\n");
    for (gen, (k_star, k_bar)) in history.iter().enumerate() {
        let _ = writeln!(out, "{},{k_star},{k_bar}", gen + 1);
    }
    write_atomic(path, &out)
}

/// Snapshot population with cluster labels:
/// `eval_index,cluster,x_1..x_D,f_1..f_M`.
pub fn write_snapshot(path: &Path, snapshot: &Snapshot) -> Result<(), CliError> {
    let (d, m) = match snapshot.population.first() {
        Some(s) => (s.x.len(), s.f.len()),
        None => return Err(CliError::Runtime("empty snapshot".into())),
    };
    let mut out = String::from("eval_index,cluster");
    for i in 1..=d {
        let _ = write!(out, ",x_{i}");
    }
    for i in 1..=m {
        let _ = write!(out, ",f_{i}");
    }
    out.push('\n');
    for s in &snapshot.population {
        let _ = write!(out, "{},{}", s.eval_index, s.cluster_id.unwrap_or(0));
        for v in s.x.iter().chain(s.f.iter()) {
            let _ = write!(out, ",{v}");
        }
        out.push('\n');
    }
    write_atomic(path, &out)
}

/// File tag for a snapshot fraction: 0.25 → "25", 1.0 → "100".
pub fn fraction_tag(fraction: f64) -> String {
    format!("{}", (fraction * 100.0).round() as u32)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricsRow {
    pub problem: String,
    pub seed: u64,
    pub igd: f64,
    pub igdx: f64,
    pub cr: f64,
    pub psp: f64,
}

pub const METRICS_HEADER: &str = "problem,seed,igd,igdx,cr,psp";

pub fn write_metrics(path: &Path, rows: &[MetricsRow]) -> Result<(), CliError> {
    let mut out = String::from(METRICS_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.problem, r.seed, r.igd, r.igdx, r.cr, r.psp
        );
    }
    write_atomic(path, &out)
}

pub fn read_metrics(path: &Path) -> Result<Vec<MetricsRow>, CliError> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == METRICS_HEADER => {}
        _ => {
            return Err(CliError::Runtime(format!(
                "{}: expected header {METRICS_HEADER:?}",
                path.display()
            )))
        }
    }
    let mut rows = Vec::new();
    for (ln, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 6 {
            return Err(CliError::Runtime(format!(
                "{}:{}: expected 6 fields",
                path.display(),
                ln + 2
            )));
        }
        let bad = |what: &str| CliError::Runtime(format!("{}:{}: bad {what}", path.display(), ln + 2));
        rows.push(MetricsRow {
            problem: f[0].to_string(),
            seed: f[1].parse().map_err(|_| bad("seed"))?,
            igd: f[2].parse().map_err(|_| bad("igd"))?,
            igdx: f[3].parse().map_err(|_| bad("igdx"))?,
            cr: f[4].parse().map_err(|_| bad("cr"))?,
            psp: f[5].parse().map_err(|_| bad("psp"))?,
        });
    }
    Ok(rows)
}
