use clap::{Parser, Subcommand};
use momo_cli::csvio::{self, MetricsRow};
use momo_cli::{experiment, plan, report, CliError};
use momo_core::problems::{list_problems, Problem, ProblemId};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "momo",
    about = "Multi-modal multi-objective optimizer with benchmark problems and quality metrics",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the optimizer once on a single problem
    Run {
        /// Benchmark problem name (see `momo refset --problem all` for the list)
        #[arg(long)]
        problem: String,
        /// Random seed
        #[arg(long)]
        seed: u64,
        /// Optional run configuration file (key = value lines)
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output directory for archive, cluster history and snapshots
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a batch of problems and seeds in parallel and score every run
    Bench {
        /// Experiment plan file (problems, seeds, config overrides)
        #[arg(long)]
        plan: PathBuf,
        /// Output directory for per-run artifacts, metrics.csv and summary.csv
        #[arg(long)]
        out: PathBuf,
        /// Number of worker threads (defaults to the number of cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Generate reference decision/objective sets for a problem
    Refset {
        /// Problem name, or `all` for every benchmark problem
        #[arg(long)]
        problem: String,
        /// Directory to write ps_<name>.csv and pf_<name>.csv into
        #[arg(long)]
        out: PathBuf,
    },
    /// Score a stored archive against a problem's reference sets
    Score {
        /// Archive CSV produced by `momo run`
        #[arg(long)]
        archive: PathBuf,
        /// Problem the archive was produced on
        #[arg(long)]
        problem: String,
    },
    /// Summarize a metrics directory, optionally comparing to a baseline
    Report {
        /// Directory containing metrics.csv (as written by `momo bench`)
        #[arg(long = "in")]
        in_dir: PathBuf,
        /// Directory containing a baseline metrics.csv to compare against
        #[arg(long)]
        baseline: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version requests are successful exits; anything else is
            // a usage error
            use clap::error::ErrorKind;
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn parse_problem(name: &str) -> Result<ProblemId, CliError> {
    ProblemId::from_name(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown problem `{name}` (known problems: {})",
            list_problems()
                .iter()
                .map(|p| p.name())
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })
}

fn load_metrics_dir(dir: &Path) -> Result<Vec<MetricsRow>, CliError> {
    let path = dir.join("metrics.csv");
    if !path.is_file() {
        return Err(CliError::Usage(format!(
            "{} not found; expected a directory containing metrics.csv",
            path.display()
        )));
    }
    csvio::read_metrics(&path)
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Run {
            problem,
            seed,
            config,
            out,
        } => {
            let problem = Problem::get(parse_problem(&problem)?);
            let mut config = match config {
                Some(path) => plan::load_config(&path)?,
                None => momo_core::types::RunConfig::default(),
            };
            config.seed = seed;
            experiment::run_and_persist(&problem, &config, &out)?;
            println!(
                "wrote archive.csv, k_history.csv and snapshots for {} (seed {seed}) to {}",
                problem.name(),
                out.display()
            );
            Ok(())
        }
        Command::Bench { plan, out, jobs } => {
            if let Some(jobs) = jobs {
                if jobs == 0 {
                    return Err(CliError::Usage("--jobs must be at least 1".into()));
                }
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build_global()
                    .map_err(|e| CliError::Runtime(e.to_string()))?;
            }
            let plan = plan::load_plan(&plan)?;
            let refsets = experiment::refset_dir();
            let outcome = experiment::run_experiment(&plan, &out, &refsets)?;
            println!(
                "completed {} runs over {} problems; metrics in {}",
                outcome.metrics.len(),
                plan.problems.len(),
                out.join("metrics.csv").display()
            );
            if !outcome.failures.is_empty() {
                for failure in &outcome.failures {
                    eprintln!("run failed: {failure}");
                }
                return Err(CliError::Runtime(format!(
                    "{} of {} runs failed",
                    outcome.failures.len(),
                    outcome.metrics.len() + outcome.failures.len()
                )));
            }
            Ok(())
        }
        Command::Refset { problem, out } => {
            let problems: Vec<ProblemId> = if problem.eq_ignore_ascii_case("all") {
                momo_core::problems::ALL_PROBLEMS.to_vec()
            } else {
                vec![parse_problem(&problem)?]
            };
            for id in problems {
                let problem = Problem::get(id);
                experiment::write_refset(&problem, &out)?;
                println!(
                    "wrote ps_{name}.csv and pf_{name}.csv to {}",
                    out.display(),
                    name = problem.name()
                );
            }
            Ok(())
        }
        Command::Score { archive, problem } => {
            let problem = Problem::get(parse_problem(&problem)?);
            let refsets = experiment::refset_dir();
            let (xs, fs) = csvio::read_archive(&archive)?;
            let row = experiment::score_archive(&problem, &xs, &fs, &refsets, 0)?;
            println!("problem,igd,igdx,cr,psp");
            println!(
                "{},{},{},{},{}",
                problem.name(),
                row.igd,
                row.igdx,
                row.cr,
                row.psp
            );
            Ok(())
        }
        Command::Report { in_dir, baseline } => {
            let ours = load_metrics_dir(&in_dir)?;
            let baseline = baseline.map(|dir| load_metrics_dir(&dir)).transpose()?;
            print!("{}", report::render_report(&ours, baseline.as_deref())?);
            Ok(())
        }
    }
}
