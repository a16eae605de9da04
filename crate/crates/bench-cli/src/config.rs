//! Experiment configuration: a JSON document that fully determines a batch
//! of runs, so experiments are replayable and diffable.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use mirror_prox::operators::CoeffCase;

use crate::error::{BenchError, Result};

/// Which solver a run uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverId {
    /// Universal mirror prox (budget-stopped).
    Alg1Ump,
    /// Restarted universal mirror prox.
    Alg2Restart,
    /// No-restart solver, additive-delta condition.
    Alg3Delta,
    /// No-restart solver for smooth operators (no delta slack).
    Alg4Smooth,
    /// No-restart solver, L-scaled delta condition.
    Alg5Scaled,
}

impl SolverId {
    pub fn label(self) -> &'static str {
        match self {
            SolverId::Alg1Ump => "alg1_ump",
            SolverId::Alg2Restart => "alg2_restart",
            SolverId::Alg3Delta => "alg3_delta",
            SolverId::Alg4Smooth => "alg4_smooth",
            SolverId::Alg5Scaled => "alg5_scaled",
        }
    }
}

/// Operator selection for the Minty experiments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MintyOperator {
    Identity,
    Diag,
    Holder,
    Composite,
}

/// The problem family a config runs on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum ProblemSpec {
    CoveringBall {
        case: CoeffCase,
        n: usize,
        m: usize,
        s: usize,
        seed: u64,
    },
    Minty {
        operator: MintyOperator,
        n: usize,
        radius: f64,
    },
}

impl ProblemSpec {
    pub fn label(&self) -> String {
        match self {
            ProblemSpec::CoveringBall { case, n, m, s, .. } => {
                let case = match case {
                    CoeffCase::Lomax10 => "lomax10",
                    CoeffCase::ChiSq3 => "chisq3",
                };
                format!("covering_{case}_n{n}_m{m}_s{s}")
            }
            ProblemSpec::Minty {
                operator,
                n,
                radius,
            } => {
                let op = match operator {
                    MintyOperator::Identity => "identity",
                    MintyOperator::Diag => "diag",
                    MintyOperator::Holder => "holder",
                    MintyOperator::Composite => "composite",
                };
                format!("minty_{op}_n{n}_r{radius}")
            }
        }
    }
}

/// A batch of runs: every solver in `solvers` crossed with every entry of
/// `epsilon_grid`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub problem: ProblemSpec,
    pub solvers: Vec<SolverId>,
    pub epsilon_grid: Vec<f64>,
    pub delta: f64,
    pub l0: f64,
    pub mu: f64,
    pub max_iters: usize,
    pub output_dir: PathBuf,
    /// Records whether this config is a desk-scale substitute of a
    /// full-scale experiment. Informational.
    #[serde(default)]
    pub desk_scale: bool,
    /// Seed for start-point generation (and problem generation where the
    /// problem spec does not carry its own seed).
    #[serde(default)]
    pub seed: u64,
    /// Report the universal method's last extrapolation point instead of the
    /// last iterate. The no-restart solvers always report their iterate, the
    /// point their guarantees are stated for.
    #[serde(default)]
    pub ump_reports_extrapolation: bool,
    /// Per-iteration backtracking cap.
    #[serde(default = "default_backtracks")]
    pub max_backtracks: usize,
}

fn default_backtracks() -> usize {
    60
}

fn positive(v: f64) -> bool {
    v.is_finite() && v > 0.0
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.solvers.is_empty() {
            return Err(BenchError::Config("solver list is empty".into()));
        }
        if self.epsilon_grid.is_empty() {
            return Err(BenchError::Config("epsilon grid is empty".into()));
        }
        if self.epsilon_grid.iter().any(|&e| !positive(e)) {
            return Err(BenchError::Config(
                "epsilon entries must be positive".into(),
            ));
        }
        if !positive(self.l0) || !positive(self.mu) {
            return Err(BenchError::Config("l0 and mu must be positive".into()));
        }
        if self.delta < 0.0 {
            return Err(BenchError::Config("delta must be >= 0".into()));
        }
        if self.max_iters == 0 || self.max_backtracks == 0 {
            return Err(BenchError::Config(
                "max_iters and max_backtracks must be >= 1".into(),
            ));
        }
        match &self.problem {
            ProblemSpec::CoveringBall { n, m, s, .. } => {
                if *n == 0 || *m == 0 || *s == 0 {
                    return Err(BenchError::Config("covering-ball dims must be >= 1".into()));
                }
            }
            ProblemSpec::Minty { n, radius, .. } => {
                if *n == 0 || !positive(*radius) {
                    return Err(BenchError::Config(
                        "minty problems need n >= 1 and radius > 0".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let cfg: ExperimentConfig = serde_json::from_str(json)?;
        cfg.validate()?;
        Ok(cfg)
    }
}
