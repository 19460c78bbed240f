//! JSON output. Floats are written with 17 significant digits and fields
//! keep a fixed order, so equal results serialize to equal bytes.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use laclust::harness::{ExperimentReport, RunSpec, SweepResult, TrialSummary};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::io::{CliError, Result};

/// `f64` serialized as `d.dddddddddddddddde±x`; non-finite values become null.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Float(pub f64);

impl Serialize for Float {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

fn floats(values: &[f64]) -> Vec<Float> {
    values.iter().copied().map(Float).collect()
}

#[derive(Debug, Serialize)]
pub struct ConfigJson {
    pub algo: &'static str,
    pub alpha: Float,
    pub objective: String,
    pub delta: Float,
    /// k-medians rounds; null when derived from `delta`.
    pub rounds: Option<usize>,
    pub seed: u64,
    pub q_grid: Vec<Float>,
}

impl From<&RunSpec> for ConfigJson {
    fn from(spec: &RunSpec) -> Self {
        Self {
            algo: spec.algo.name(),
            alpha: Float(spec.alpha.value()),
            objective: spec.objective.to_string(),
            delta: Float(spec.delta),
            rounds: spec.rounds,
            seed: spec.seed,
            q_grid: floats(&spec.q_grid),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub algo: &'static str,
    pub alpha: Float,
    pub k: usize,
    pub seed: u64,
    pub cost_vs_truth: Option<Float>,
    pub cost_min_assign: Float,
    pub factor_bound: Float,
    pub centers: Vec<Vec<Float>>,
    /// Null unless timing was requested, which keeps repeated runs identical.
    pub wall_ms: Option<Float>,
    pub config: ConfigJson,
}

impl ReportJson {
    pub fn new(report: &ExperimentReport, timing: bool) -> Self {
        Self {
            algo: report.algo.name(),
            alpha: Float(report.alpha),
            k: report.k,
            seed: report.seed,
            cost_vs_truth: report.cost_vs_truth.map(Float),
            cost_min_assign: Float(report.cost_min_assign),
            factor_bound: Float(report.factor_bound),
            centers: report.centers.centers().map(floats).collect(),
            wall_ms: timing.then_some(Float(report.wall_ms)),
            config: (&report.config).into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SweepJson {
    pub best: ReportJson,
    pub table: Vec<ReportJson>,
}

impl SweepJson {
    pub fn new(sweep: &SweepResult, timing: bool) -> Self {
        Self {
            best: ReportJson::new(&sweep.best, timing),
            table: sweep.table.iter().map(|r| ReportJson::new(r, timing)).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TrialsJson {
    pub algo: &'static str,
    pub runs: usize,
    pub mean: Float,
    pub std_dev: Float,
    pub costs: Vec<Float>,
}

impl From<&TrialSummary> for TrialsJson {
    fn from(t: &TrialSummary) -> Self {
        Self {
            algo: t.algo.name(),
            runs: t.runs,
            mean: Float(t.mean),
            std_dev: Float(t.std_dev),
            costs: floats(&t.costs),
        }
    }
}

/// Pretty-printed JSON with a trailing newline, to `path` or stdout.
pub fn write_json<T: Serialize>(value: &T, path: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Invalid(e.to_string()))?;
    text.push('\n');
    match path {
        Some(p) => {
            let io = |e| CliError::Io { path: p.to_path_buf(), source: e };
            let mut w = BufWriter::new(File::create(p).map_err(io)?);
            w.write_all(text.as_bytes()).map_err(io)?;
            w.flush().map_err(io)
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io { path: "<stdout>".into(), source: e }),
    }
}

pub fn emit_report(report: &ExperimentReport, timing: bool, path: Option<&Path>) -> Result<()> {
    write_json(&ReportJson::new(report, timing), path)
}

/// One row per sweep point: `alpha,cost_vs_truth,cost_min_assign,factor_bound`.
pub fn write_sweep_table(sweep: &SweepResult, path: &Path) -> Result<()> {
    let io = |e| CliError::Io { path: path.to_path_buf(), source: e };
    let mut w = BufWriter::new(File::create(path).map_err(io)?);
    writeln!(w, "alpha,cost_vs_truth,cost_min_assign,factor_bound").map_err(io)?;
    for r in &sweep.table {
        let truth = r.cost_vs_truth.map_or(String::new(), |c| format!("{c:.16e}"));
        writeln!(w, "{:.16e},{truth},{:.16e},{:.16e}", r.alpha, r.cost_min_assign, r.factor_bound).map_err(io)?;
    }
    w.flush().map_err(io)
}
