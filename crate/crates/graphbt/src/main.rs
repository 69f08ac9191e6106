use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use graphbt::experiment::{grid_experiments, subdirect_experiments, to_csv};
use graphbt::{run, verify_report, GridKind, Goal, Mode, ProblemSpec};

#[derive(Parser)]
#[command(name = "graphbt", version, about = "Backtrack search in symmetric groups with labelled digraph stacks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a JSON problem spec and print a JSON report.
    Solve {
        #[arg(long)]
        spec: PathBuf,
        /// Overrides the spec's mode.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        /// Overrides the spec's goal.
        #[arg(long, value_enum)]
        goal: Option<Goal>,
        /// Cross-check against the brute-force oracle.
        #[arg(long)]
        oracle: bool,
        /// Also write the report's statistics to this file.
        #[arg(long)]
        stats_out: Option<PathBuf>,
    },
    /// Run an experiment suite and print CSV.
    Experiment {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Leon,
    Orbital,
    Strong,
    Full,
    All,
}

impl ModeArg {
    fn modes(self) -> Vec<Mode> {
        match self {
            ModeArg::Leon => vec![Mode::Leon],
            ModeArg::Orbital => vec![Mode::Orbital],
            ModeArg::Strong => vec![Mode::Strong],
            ModeArg::Full => vec![Mode::Full],
            ModeArg::All => Mode::ALL.to_vec(),
        }
    }
}

#[derive(Subcommand)]
enum Suite {
    /// Stabilisers in the n × n grid group.
    Grid {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: GridKind,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, value_enum, default_value = "all")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Intersections of cosets of subdirect products.
    Subdirect {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, value_enum, default_value = "all")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> anyhow::Result<()> {
    match Cli::parse().command {
        Command::Solve { spec, mode, goal, oracle, stats_out } => {
            let text = fs::read_to_string(&spec).with_context(|| format!("reading {}", spec.display()))?;
            let mut problem = ProblemSpec::from_json(&text)?;
            if let Some(m) = mode {
                problem.mode = m;
            }
            if let Some(g) = goal {
                problem.goal = g;
            }
            let report = run(&problem, oracle)?;
            if !verify_report(&problem, &report)? {
                bail!("report failed membership verification");
            }
            println!("{}", report.to_json());
            if let Some(path) = stats_out {
                fs::write(&path, serde_json::to_string_pretty(&report.stats)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if report.oracle_agrees == Some(false) {
                bail!("search result disagrees with the oracle");
            }
        }
        Command::Experiment { suite } => {
            let rows = match suite {
                Suite::Grid { n, kind, count, mode, seed } => {
                    grid_experiments(n, kind, count, &mode.modes(), seed)?
                }
                Suite::Subdirect { k, n, count, mode, seed } => {
                    subdirect_experiments(k, n, count, &mode.modes(), seed)?
                }
            };
            print!("{}", to_csv(&rows));
        }
    }
    Ok(())
}
