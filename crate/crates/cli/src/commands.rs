//! Argument definitions and subcommand dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use laclust::harness::{
    alpha_sweep, corrupt, run, run_trials, synth, Algorithm, PlantedInstance, RunSpec, SynthConfig,
};
use laclust::{Dataset, ErrorRate, Labeling, Objective};

use crate::io::{parse_labels, parse_points, write_labels, write_points, Result};
use crate::report::{emit_report, write_json, write_sweep_table, SweepJson, TrialsJson};

#[derive(Debug, Parser)]
#[command(name = "laclust", version, about = "Clustering with noisy predicted labels")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a planted Gaussian instance.
    Synth(SynthArgs),
    /// Corrupt reference labels the way a noisy predictor would.
    Corrupt(CorruptArgs),
    /// Run one algorithm at a known error rate.
    Run(RunArgs),
    /// Run one algorithm over a grid of guessed error rates and keep the best.
    Sweep(SweepArgs),
    /// Repeat runs over consecutive seeds and report mean and spread.
    Trials(TrialsArgs),
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub per_cluster: usize,
    #[arg(long)]
    pub dim: usize,
    #[arg(long, default_value_t = 10.0)]
    pub separation: f64,
    #[arg(long, default_value_t = 1.0)]
    pub spread: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out_points: PathBuf,
    #[arg(long)]
    pub out_labels: PathBuf,
}

#[derive(Debug, Args)]
pub struct CorruptArgs {
    #[arg(long)]
    pub points: PathBuf,
    /// Reference labels to corrupt.
    #[arg(long)]
    pub labels: PathBuf,
    /// Skip the first row of every input CSV.
    #[arg(long)]
    pub header: bool,
    #[arg(long)]
    pub alpha: f64,
    #[arg(long, default_value = "means")]
    pub objective: Objective,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    #[arg(long)]
    pub points: PathBuf,
    /// Predicted labels.
    #[arg(long)]
    pub labels: PathBuf,
    /// Reference labels; enables `cost_vs_truth`.
    #[arg(long)]
    pub truth: Option<PathBuf>,
    /// Number of clusters; defaults to one more than the largest label.
    #[arg(long)]
    pub k: Option<usize>,
    /// Skip the first row of every input CSV.
    #[arg(long)]
    pub header: bool,
}

/// `--rounds`: a positive count, or `auto` to derive it from `--delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rounds(pub Option<usize>);

impl std::str::FromStr for Rounds {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "auto" {
            return Ok(Rounds(None));
        }
        match s.parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("expected a positive integer or 'auto', got '{s}'")),
            Ok(r) => Ok(Rounds(Some(r))),
        }
    }
}

#[derive(Debug, Args)]
pub struct RunOptions {
    /// Objective for predictor-naive and sampling.
    #[arg(long, default_value = "means")]
    pub objective: Objective,
    #[arg(long, default_value_t = 0.1)]
    pub delta: f64,
    /// k-medians rounds per cluster, or `auto`.
    #[arg(long, default_value = "1")]
    pub rounds: Rounds,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub algo: Algorithm,
    #[arg(long)]
    pub alpha: f64,
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub options: RunOptions,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Record wall-clock time in `wall_ms`.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub algo: Algorithm,
    #[arg(long, default_value_t = 15)]
    pub grid: usize,
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub options: RunOptions,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the sweep as a CSV table.
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct TrialsArgs {
    /// One or more algorithms, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub algo: Vec<Algorithm>,
    #[arg(long)]
    pub alpha: f64,
    #[arg(long, default_value_t = 20)]
    pub runs: usize,
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub options: RunOptions,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

struct Inputs {
    data: Dataset,
    labels: Labeling,
    truth: Option<Labeling>,
}

impl InputArgs {
    fn load(&self) -> Result<Inputs> {
        let data = parse_points(&self.points, self.header)?;
        let labels = parse_labels(&self.labels, self.header, self.k)?;
        labels.validate_for(&data)?;
        let truth = match &self.truth {
            Some(path) => {
                let t = parse_labels(path, self.header, Some(labels.k()))?;
                t.validate_for(&data)?;
                Some(t)
            }
            None => None,
        };
        Ok(Inputs { data, labels, truth })
    }
}

impl RunOptions {
    fn spec(&self, algo: Algorithm, alpha: f64) -> Result<RunSpec> {
        Ok(RunSpec {
            objective: self.objective,
            delta: self.delta,
            rounds: self.rounds.0,
            ..RunSpec::new(algo, ErrorRate::new(alpha)?, self.seed)
        })
    }
}

pub fn execute(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Synth(a) => {
            let inst = synth(&SynthConfig::uniform(a.k, a.per_cluster, a.dim, a.separation, a.spread, a.seed))?;
            write_points(&a.out_points, &inst.data)?;
            write_labels(&a.out_labels, &inst.truth)
        }
        Command::Corrupt(a) => {
            let data = parse_points(&a.points, a.header)?;
            let truth = parse_labels(&a.labels, a.header, None)?;
            let inst = PlantedInstance::from_truth(data, truth)?;
            let labels = corrupt(&inst, ErrorRate::new(a.alpha)?, a.objective, a.seed)?;
            write_labels(&a.out, &labels)
        }
        Command::Run(a) => {
            let input = a.input.load()?;
            let spec = a.options.spec(a.algo, a.alpha)?;
            let report = run(&input.data, &input.labels, input.truth.as_ref(), &spec)?;
            emit_report(&report, a.timing, a.out.as_deref())
        }
        Command::Sweep(a) => {
            let input = a.input.load()?;
            // alpha is replaced at every grid point
            let spec = a.options.spec(a.algo, 0.0)?;
            let sweep = alpha_sweep(&input.data, &input.labels, input.truth.as_ref(), &spec, a.grid)?;
            if let Some(path) = &a.table {
                write_sweep_table(&sweep, path)?;
            }
            write_json(&SweepJson::new(&sweep, a.timing), a.out.as_deref())
        }
        Command::Trials(a) => {
            let input = a.input.load()?;
            let summaries = a
                .algo
                .iter()
                .map(|&algo| {
                    let spec = a.options.spec(algo, a.alpha)?;
                    let t = run_trials(&input.data, &input.labels, input.truth.as_ref(), &spec, a.runs)?;
                    Ok(TrialsJson::from(&t))
                })
                .collect::<Result<Vec<_>>>()?;
            write_json(&summaries, a.out.as_deref())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn rounds_values() {
        assert_eq!("auto".parse(), Ok(Rounds(None)));
        assert_eq!("7".parse(), Ok(Rounds(Some(7))));
        assert!("0".parse::<Rounds>().is_err());
        assert!("x".parse::<Rounds>().is_err());
    }

    #[test]
    fn run_flags_parse() {
        let base = ["laclust", "run", "--algo", "la-kmedians", "--points", "p", "--labels", "l", "--alpha", "0.2"];
        let Command::Run(a) = Cli::try_parse_from(base).unwrap().command else { panic!("not run") };
        assert_eq!(a.options.rounds, Rounds(Some(1)));
        assert_eq!(a.options.objective, Objective::Means);
        let cli =
            Cli::try_parse_from(base.iter().copied().chain(["--rounds", "auto", "--objective", "medians"])).unwrap();
        let Command::Run(a) = cli.command else { panic!("not run") };
        assert_eq!(a.options.rounds, Rounds(None));
        assert_eq!(a.options.objective, Objective::Medians);
        assert!(Cli::try_parse_from(base.iter().copied().chain(["--algo", "nope"])).is_err());
    }
}
