//! On-disk run records: a JSON document with config echo and per-iteration
//! rows, convertible to CSV with fixed columns.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, SolverId};
use crate::error::Result;

/// Header metadata of a run: enough to replay it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceMeta {
    pub config: ExperimentConfig,
    pub solver: SolverId,
    pub epsilon: f64,
    pub seed: u64,
    pub version: String,
    /// Wall-clock timestamp (seconds since the epoch); excluded from the
    /// determinism fingerprint.
    pub created_unix: u64,
}

/// One per-iteration row. `v_err` is `V(x_*, z_{k+1})` and `norm_err` is
/// `||z_{k+1} - x_*||_2` when the solution is known; `objective` is the
/// problem's reported objective when it has one; `bound_eq`/`bound_value`
/// hold the theorem-bound column when one applies to the solver.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub iter: usize,
    pub i_k: usize,
    pub l_accepted: f64,
    pub s_k: f64,
    pub v_err: Option<f64>,
    pub norm_err: Option<f64>,
    pub objective: Option<f64>,
    pub bound_eq: Option<String>,
    pub bound_value: Option<f64>,
    pub elapsed_s: f64,
}

/// Final-point summary of a run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceSummary {
    pub iters: usize,
    pub stop_reason: String,
    pub v_err: Option<f64>,
    pub norm_err: Option<f64>,
    pub objective: Option<f64>,
    pub elapsed_s: f64,
    /// Restart stage summaries `(stage, iters, next_radius_sq)`, when the
    /// solver restarts.
    pub restart_stages: Vec<(usize, usize, f64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceFile {
    pub meta: TraceMeta,
    pub rows: Vec<TraceRow>,
    pub summary: TraceSummary,
}

/// CSV column header, fixed.
pub const CSV_HEADER: &str =
    "iter,i_k,L_accepted,S_k,V_err,norm_err,objective,bound_eq,bound_value,elapsed_s";

fn fmt_opt(v: Option<f64>) -> String {
    // `{}` on f64 renders the shortest decimal that round-trips.
    v.map(|x| format!("{x}")).unwrap_or_default()
}

impl TraceFile {
    /// Renders the rows as CSV (header line plus one line per iteration).
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                r.iter,
                r.i_k,
                r.l_accepted,
                r.s_k,
                fmt_opt(r.v_err),
                fmt_opt(r.norm_err),
                fmt_opt(r.objective),
                r.bound_eq.clone().unwrap_or_default(),
                fmt_opt(r.bound_value),
                r.elapsed_s,
            ));
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_csv())?;
        Ok(())
    }

    /// Serialization of everything except wall-clock fields; two runs of the
    /// same config must agree on this exactly.
    pub fn body_fingerprint(&self) -> String {
        let mut clone = self.clone();
        clone.meta.created_unix = 0;
        for r in &mut clone.rows {
            r.elapsed_s = 0.0;
        }
        clone.summary.elapsed_s = 0.0;
        serde_json::to_string(&clone).expect("trace serializes")
    }

    /// Basename (no extension) identifying the run.
    pub fn file_stem(&self) -> String {
        format!(
            "{}__{}__eps{:e}",
            self.meta.config.problem.label(),
            self.meta.solver.label(),
            self.meta.epsilon
        )
    }
}

/// Export a trace file in the requested format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExportFormat {
    Csv,
    Json,
}

pub fn export_trace(trace: &TraceFile, format: ExportFormat, path: &Path) -> Result<()> {
    match format {
        ExportFormat::Csv => trace.write_csv(path),
        ExportFormat::Json => trace.write_json(path),
    }
}
