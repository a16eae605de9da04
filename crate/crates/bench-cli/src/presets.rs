//! Canned experiment families at desk or full scale.
//!
//! Desk scale substitutes the full-scale dimensions with sizes that complete
//! in seconds while keeping every algorithm parameter (epsilon grid, delta,
//! l0, mu) identical; only dimensions and iteration caps differ between the
//! scales. All seeds are fixed constants so preset runs are replayable.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, MintyOperator, ProblemSpec, SolverId};
use crate::error::{BenchError, Result};
use crate::experiment::run_experiment;
use crate::trace_file::TraceFile;
use mirror_prox::operators::CoeffCase;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preset {
    /// Covering-ball problem, Lomax-distributed constraint coefficients;
    /// the three no-restart solvers with their bound columns.
    Fig1Case1,
    /// Covering-ball problem, chi-square coefficients; adds the restarted
    /// solver to the comparison.
    Fig2Case2,
    /// Identity Minty operator on balls of radius 1, 2, 3; restarted solver
    /// against the no-restart family.
    FigViIdentity,
    /// Ill-conditioned diagonal Minty operator; universal method against the
    /// additive-delta and scaled-delta solvers.
    FigViDiag,
}

impl Preset {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "fig1_case1" => Ok(Preset::Fig1Case1),
            "fig2_case2" => Ok(Preset::Fig2Case2),
            "fig_vi_identity" => Ok(Preset::FigViIdentity),
            "fig_vi_diag" => Ok(Preset::FigViDiag),
            other => Err(BenchError::UnknownPreset(other.into())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig1Case1 => "fig1_case1",
            Preset::Fig2Case2 => "fig2_case2",
            Preset::FigViIdentity => "fig_vi_identity",
            Preset::FigViDiag => "fig_vi_diag",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scale {
    Desk,
    Full,
}

impl Scale {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "desk" => Ok(Scale::Desk),
            "full" => Ok(Scale::Full),
            other => Err(BenchError::Config(format!("unknown scale `{other}`"))),
        }
    }
}

/// The shared parameter grid: `epsilon in {10^-3i}`, `delta = 0.01`,
/// identical across scales.
fn epsilon_grid() -> Vec<f64> {
    vec![1e-3, 1e-6, 1e-9, 1e-12, 1e-15, 1e-18, 1e-21, 1e-24]
}

const DELTA: f64 = 0.01;
const L0: f64 = 1.0;

/// Fixed preset seeds (documented in the README).
const COVERING_SEED: u64 = 20_240_501;
const MINTY_SEED: u64 = 20_240_502;

/// The experiment configs a preset expands to.
pub fn preset_configs(preset: Preset, scale: Scale, output_dir: PathBuf) -> Vec<ExperimentConfig> {
    let covering_n = match scale {
        Scale::Desk => 1_000,
        Scale::Full => 1_000_000,
    };
    let minty_n = match scale {
        Scale::Desk => 10_000,
        Scale::Full => 1_000_000,
    };
    let covering_iters = match scale {
        Scale::Desk => 300,
        Scale::Full => 2_000,
    };
    let minty_iters = match scale {
        Scale::Desk => 600,
        Scale::Full => 2_000,
    };
    let desk = scale == Scale::Desk;

    match preset {
        Preset::Fig1Case1 | Preset::Fig2Case2 => {
            let case = match preset {
                Preset::Fig1Case1 => CoeffCase::Lomax10,
                _ => CoeffCase::ChiSq3,
            };
            let mut solvers = vec![
                SolverId::Alg3Delta,
                SolverId::Alg4Smooth,
                SolverId::Alg5Scaled,
            ];
            if preset == Preset::Fig2Case2 {
                solvers.insert(0, SolverId::Alg2Restart);
            }
            vec![ExperimentConfig {
                problem: ProblemSpec::CoveringBall {
                    case,
                    n: covering_n,
                    m: 5,
                    s: 10,
                    seed: COVERING_SEED,
                },
                solvers,
                epsilon_grid: epsilon_grid(),
                delta: DELTA,
                l0: L0,
                mu: 2.0,
                max_iters: covering_iters,
                output_dir,
                desk_scale: desk,
                seed: COVERING_SEED,
                ump_reports_extrapolation: false,
                max_backtracks: 60,
            }]
        }
        Preset::FigViIdentity => [1.0, 2.0, 3.0]
            .into_iter()
            .map(|radius| ExperimentConfig {
                problem: ProblemSpec::Minty {
                    operator: MintyOperator::Identity,
                    n: minty_n,
                    radius,
                },
                solvers: vec![
                    SolverId::Alg2Restart,
                    SolverId::Alg3Delta,
                    SolverId::Alg4Smooth,
                    SolverId::Alg5Scaled,
                ],
                epsilon_grid: epsilon_grid(),
                delta: DELTA,
                l0: L0,
                mu: 1.0,
                max_iters: minty_iters,
                output_dir: output_dir.clone(),
                desk_scale: desk,
                seed: MINTY_SEED,
                ump_reports_extrapolation: false,
                max_backtracks: 60,
            })
            .collect(),
        Preset::FigViDiag => vec![ExperimentConfig {
            problem: ProblemSpec::Minty {
                operator: MintyOperator::Diag,
                n: minty_n,
                radius: 1.0,
            },
            solvers: vec![SolverId::Alg1Ump, SolverId::Alg3Delta, SolverId::Alg5Scaled],
            epsilon_grid: epsilon_grid(),
            delta: DELTA,
            l0: L0,
            mu: 1.0,
            max_iters: minty_iters,
            output_dir,
            desk_scale: desk,
            seed: MINTY_SEED,
            // The universal method's guarantees are carried by its
            // extrapolation points; report those for the comparison.
            ump_reports_extrapolation: true,
            max_backtracks: 60,
        }],
    }
}

/// Runs a preset and returns every produced trace file.
pub fn reproduce_preset(
    preset: Preset,
    scale: Scale,
    output_dir: PathBuf,
) -> Result<Vec<TraceFile>> {
    let mut out = Vec::new();
    for cfg in preset_configs(preset, scale, output_dir) {
        out.extend(run_experiment(&cfg)?);
    }
    Ok(out)
}
