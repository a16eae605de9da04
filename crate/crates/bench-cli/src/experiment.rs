//! Executes experiment configs: builds the problem, runs every
//! (solver, epsilon) pair, attaches theorem-bound columns, and writes one
//! trace file per run.

use std::fs;
use std::sync::Arc;
use std::time::{SystemTime, UNIX_EPOCH};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mirror_prox::estimates::{bound_adaptive_prefix, bound_lemma2_drift, BoundVariant, LHistory};
use mirror_prox::geometry::{max_bregman_radius, ProxSetup};
use mirror_prox::operators::{
    gen_covering_ball, DiagSquares, HolderFixture, Identity, SaddleComposite, VIProblem,
};
use mirror_prox::point::Point;
use mirror_prox::solvers::{
    adaptive_delta_solve, adaptive_scaled_delta_solve, adaptive_smooth_solve, restarted_solve,
    ump_solve, OutputMode, RestartConfig, SolverConfig, StopRule, Trace,
};

use crate::config::{ExperimentConfig, MintyOperator, ProblemSpec, SolverId};
use crate::error::Result;
use crate::trace_file::{TraceFile, TraceMeta, TraceRow, TraceSummary};

/// Hölder fixture parameters used by the `minty holder` problem family.
const HOLDER_MU: f64 = 1.0;
const HOLDER_L: f64 = 1.0;
const HOLDER_NU: f64 = 0.5;

/// Start points are supported on the leading coordinates (up to this many)
/// so that ill-conditioned runs reach the inexactness-dominated regime
/// within desk budgets; with mass spread over every coordinate the compared
/// methods coincide to rounding on the diagonal operator.
const START_SUPPORT: usize = 8;

/// A problem instance prepared for runs: the VI, the prox center, and the
/// initial divergence estimate used to seed bound columns.
pub struct PreparedProblem {
    pub problem: VIProblem<f64>,
    pub center: Point<f64>,
}

/// Builds the VI problem and a seeded start point for a config.
pub fn prepare_problem(cfg: &ExperimentConfig) -> Result<PreparedProblem> {
    match &cfg.problem {
        ProblemSpec::CoveringBall {
            case,
            n,
            m,
            s,
            seed,
        } => {
            let instance = gen_covering_ball::<f64>(*seed, *n, *m, *s, *case)?;
            let problem = instance.into_problem(cfg.mu)?;
            // Prox centered at the origin: feasible, multipliers start at 0.
            let center = Point::zeros(problem.dim());
            Ok(PreparedProblem { problem, center })
        }
        ProblemSpec::Minty {
            operator,
            n,
            radius,
        } => {
            let problem = match operator {
                MintyOperator::Identity => Identity::problem::<f64>(*n, *radius)?,
                MintyOperator::Diag => DiagSquares::problem::<f64>(*n, *radius)?,
                MintyOperator::Holder => {
                    HolderFixture::problem(*n, HOLDER_MU, HOLDER_L, HOLDER_NU, *radius)?
                }
                MintyOperator::Composite => {
                    let sc = Arc::new(SaddleComposite::random(*n, *n, 0.5, 0.5, cfg.seed)?);
                    sc.preconditioned_problem(*radius)?
                }
            };
            let center = boundary_start(problem.dim(), *radius, cfg.seed);
            Ok(PreparedProblem { problem, center })
        }
    }
}

/// Seeded start on the sphere of the given radius, supported on the leading
/// coordinates.
fn boundary_start(dim: usize, radius: f64, seed: u64) -> Point<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5157_ab1e);
    let support = dim.min(START_SUPPORT);
    let mut coords = vec![0.0f64; dim];
    loop {
        let mut norm_sq = 0.0;
        for c in coords.iter_mut().take(support) {
            use rand::Rng;
            let u: f64 = rng.random::<f64>() * 2.0 - 1.0;
            *c = u;
            norm_sq += u * u;
        }
        if norm_sq > 1e-12 {
            let scale = radius / norm_sq.sqrt();
            for c in coords.iter_mut().take(support) {
                *c *= scale;
            }
            return Point::new(coords).expect("finite start point");
        }
    }
}

fn solver_config(cfg: &ExperimentConfig, epsilon: f64, solver: SolverId) -> SolverConfig<f64> {
    SolverConfig {
        epsilon,
        delta: cfg.delta,
        l0: cfg.l0,
        mu: cfg.mu,
        max_iters: cfg.max_iters,
        max_backtracks_per_iter: cfg.max_backtracks,
        output_mode: match solver {
            SolverId::Alg1Ump if cfg.ump_reports_extrapolation => OutputMode::LastW,
            _ => OutputMode::LastZ,
        },
        store_iterates: false,
    }
}

/// Runs one (solver, epsilon) pair.
fn execute_unit(
    prepared: &PreparedProblem,
    cfg: &ExperimentConfig,
    solver: SolverId,
    epsilon: f64,
) -> std::result::Result<Trace<f64>, mirror_prox::Error> {
    let prob = &prepared.problem;
    let scfg = solver_config(cfg, epsilon, solver);
    let setup = ProxSetup::new(prepared.center.clone(), 1.0)?;
    match solver {
        SolverId::Alg1Ump => ump_solve(prob, &setup, &scfg, &StopRule::AutoBudget),
        SolverId::Alg2Restart => {
            let r0_sq = match prob.known_solution.as_ref() {
                Some(sol) => sol.half_sq_dist(&prob.set.project(&prepared.center)?),
                None => max_bregman_radius(&setup, &prob.set)?,
            };
            let rcfg = RestartConfig::new(1.0, r0_sq.max(1e-12).sqrt(), epsilon)?;
            restarted_solve(prob, &scfg, &rcfg, &prob.set.project(&prepared.center)?)
        }
        SolverId::Alg3Delta => {
            adaptive_delta_solve(prob, &setup, &scfg, &StopRule::BoundTarget(epsilon))
        }
        SolverId::Alg4Smooth => {
            adaptive_smooth_solve(prob, &setup, &scfg, &StopRule::BoundTarget(epsilon))
        }
        SolverId::Alg5Scaled => {
            adaptive_scaled_delta_solve(prob, &setup, &scfg, &StopRule::BoundTarget(epsilon))
        }
    }
}

/// Which bound column a solver's rows carry.
fn bound_column(solver: SolverId) -> Option<(&'static str, Option<BoundVariant>)> {
    match solver {
        SolverId::Alg1Ump => Some(("drift", None)),
        SolverId::Alg2Restart => None,
        SolverId::Alg3Delta => Some(("per_step_delta", Some(BoundVariant::PerStepDelta))),
        SolverId::Alg4Smooth => Some(("per_step_product", Some(BoundVariant::PerStepProduct))),
        SolverId::Alg5Scaled => Some(("per_step_flat_delta", Some(BoundVariant::PerStepFlatDelta))),
    }
}

fn build_rows(
    trace: &Trace<f64>,
    prepared: &PreparedProblem,
    cfg: &ExperimentConfig,
    solver: SolverId,
) -> Result<Vec<TraceRow>> {
    let prob = &prepared.problem;
    // Seed for the bound columns: measured initial divergence when the
    // solution is known, else the worst case over the set (a valid upper
    // bound for any solution).
    let z0 = prob.set.project(&prepared.center)?;
    let v0 = match prob.known_solution.as_ref() {
        Some(sol) => sol.half_sq_dist(&z0),
        None => {
            let setup = ProxSetup::new(prepared.center.clone(), 1.0)?;
            max_bregman_radius(&setup, &prob.set)?
        }
    };
    let bound = bound_column(solver);
    let bound_values: Option<Vec<f64>> = match bound {
        Some((_, Some(variant))) if !trace.records.is_empty() => {
            let hist = LHistory::new(
                trace.records.iter().map(|r| r.l_accepted).collect(),
                cfg.mu,
                cfg.delta,
                v0,
            )?;
            Some(bound_adaptive_prefix(&hist, variant)?)
        }
        _ => None,
    };

    Ok(trace
        .records
        .iter()
        .enumerate()
        .map(|(i, rec)| {
            let bound_value = match bound {
                Some(("drift", None)) => Some(bound_lemma2_drift(v0, cfg.delta, rec.s_sum)),
                Some((_, Some(_))) => bound_values.as_ref().map(|b| b[i]),
                _ => None,
            };
            TraceRow {
                iter: rec.k,
                i_k: rec.trials,
                l_accepted: rec.l_accepted,
                s_k: rec.s_sum,
                v_err: rec.v_to_solution,
                norm_err: rec.v_to_solution.map(|v| (2.0 * v).sqrt()),
                objective: rec.objective,
                bound_eq: bound.map(|(name, _)| name.to_string()),
                bound_value,
                elapsed_s: rec.elapsed_s,
            }
        })
        .collect())
}

fn summarize(trace: &Trace<f64>, prepared: &PreparedProblem) -> TraceSummary {
    let prob = &prepared.problem;
    let final_point = &trace.final_point;
    let v_err = prob
        .known_solution
        .as_ref()
        .map(|sol| sol.half_sq_dist(final_point));
    TraceSummary {
        iters: trace.records.len(),
        stop_reason: format!("{:?}", trace.stop_reason),
        v_err,
        norm_err: v_err.map(|v| (2.0 * v).sqrt()),
        objective: prob.objective(final_point),
        elapsed_s: trace.elapsed_s,
        restart_stages: trace
            .restart_markers
            .iter()
            .map(|m| (m.stage, m.iters, m.next_radius_sq))
            .collect(),
    }
}

fn failed_summary(err: &mirror_prox::Error) -> TraceSummary {
    TraceSummary {
        iters: 0,
        stop_reason: format!("failed: {err}"),
        v_err: None,
        norm_err: None,
        objective: None,
        elapsed_s: 0.0,
        restart_stages: Vec::new(),
    }
}

/// Runs the full cartesian product of `cfg.solvers` and `cfg.epsilon_grid`,
/// writing one JSON trace file per pair into `cfg.output_dir`. Solver aborts
/// become trace files with a failure summary; the batch continues.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<TraceFile>> {
    cfg.validate()?;
    let prepared = prepare_problem(cfg)?;
    fs::create_dir_all(&cfg.output_dir)?;
    let created_unix = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);

    let mut out = Vec::new();
    for &solver in &cfg.solvers {
        for &epsilon in &cfg.epsilon_grid {
            let meta = TraceMeta {
                config: cfg.clone(),
                solver,
                epsilon,
                seed: cfg.seed,
                version: env!("CARGO_PKG_VERSION").to_string(),
                created_unix,
            };
            let file = match execute_unit(&prepared, cfg, solver, epsilon) {
                Ok(trace) => TraceFile {
                    rows: build_rows(&trace, &prepared, cfg, solver)?,
                    summary: summarize(&trace, &prepared),
                    meta,
                },
                Err(err) => TraceFile {
                    rows: Vec::new(),
                    summary: failed_summary(&err),
                    meta,
                },
            };
            let path = cfg
                .output_dir
                .join(format!("{}.trace.json", file.file_stem()));
            file.write_json(&path)?;
            out.push(file);
        }
    }
    Ok(out)
}
