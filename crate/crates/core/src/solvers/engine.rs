//! The shared mirror-prox iteration engine.
//!
//! All four non-restarted solvers run the same loop: evaluate the operator at
//! the current iterate, backtrack for the smallest constant satisfying the
//! variant's inexact-smoothness condition
//!
//! `<g(z_k) - g(w_k), z_{k+1} - w_k> <= L_{k+1} (V(w_k, z_k) + V(z_{k+1}, w_k)) + extra`
//!
//! (rebuilding `w_k` and `z_{k+1}` at every trial), then advance. The
//! variants differ in the extra slack term and in the update step: the
//! universal method updates from the anchor alone, the strongly-monotone
//! variants mix in a `mu`-weighted pull toward `w_k`.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::geometry::{max_bregman_radius, mixed_prox_step, prox_step, ProxSetup};
use crate::operators::VIProblem;
use crate::point::Point;
use crate::scalar::{cast, positive, Real};
use crate::solvers::line_search::line_search;
use crate::solvers::{IterationRecord, OutputMode, SolverConfig, StopReason, StopRule, Trace};

/// Which of the four loop shapes is running.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Variant {
    /// Universal method: additive `delta` slack, plain update step.
    Ump,
    /// Additive `delta` slack, mixed update step.
    AdaptiveDelta,
    /// No slack (smooth operators), mixed update step.
    AdaptiveSmooth,
    /// `L * delta` slack, mixed update step.
    AdaptiveScaledDelta,
}

impl Variant {
    fn condition_slack<T: Real>(self, l: T, delta: T) -> T {
        match self {
            Variant::Ump | Variant::AdaptiveDelta => delta,
            Variant::AdaptiveSmooth => T::zero(),
            Variant::AdaptiveScaledDelta => l * delta,
        }
    }
}

struct StepPayload<T> {
    w: Point<T>,
    g_w: Point<T>,
    z_next: Point<T>,
}

pub(crate) fn run_engine<T: Real>(
    prob: &VIProblem<T>,
    setup: &ProxSetup<T>,
    cfg: &SolverConfig<T>,
    stop: &StopRule<T>,
    variant: Variant,
) -> Result<Trace<T>> {
    cfg.validate()?;
    if setup.dim() != prob.dim() {
        return Err(Error::DimensionMismatch {
            expected: prob.dim(),
            got: setup.dim(),
        });
    }
    let set = &prob.set;
    let start = Instant::now();

    // Resolve the stopping rule against what this variant guarantees.
    let budget_target: Option<T> = match (variant, stop) {
        (Variant::Ump, StopRule::AutoBudget) => Some(max_bregman_radius(setup, set)? / cfg.epsilon),
        (Variant::Ump, StopRule::BregmanBudget(t)) => Some(*t),
        (_, StopRule::FixedIters(n)) => {
            if *n == 0 || *n > cfg.max_iters {
                return Err(Error::InvalidParam(format!(
                    "fixed_iters must be in 1..={}, got {n}",
                    cfg.max_iters
                )));
            }
            None
        }
        (v, StopRule::BoundTarget(t)) if v != Variant::Ump => {
            if !positive(*t) {
                return Err(Error::NonPositive {
                    name: "bound target",
                    value: t.to_f64().unwrap_or(f64::NAN),
                });
            }
            None
        }
        (_, rule) => {
            return Err(Error::InvalidParam(format!(
                "stop rule {rule:?} is not supported by this solver"
            )));
        }
    };

    let solution = prob.known_solution.as_ref();
    // The bound-target stop tracks the geometric part of the running quality
    // bound, `prod_i (1 + mu/L_i)^-1 * V0`; the full bound then sits within
    // its accumulated delta terms of this value. `V0` is the measured initial
    // divergence when the solution is known, else the worst case over the set.
    let mut z = setup.argmin_over(set)?;
    let mut bound_geometric = match stop {
        StopRule::BoundTarget(_) => Some(match solution {
            Some(sol) => sol.half_sq_dist(&z),
            None => max_bregman_radius(setup, set)?,
        }),
        _ => None,
    };

    let feas_tol = cast::<T>(1e-9);
    let mut l_prev = cfg.l0;
    let mut s_sum = T::zero();
    let mut w_acc = Point::zeros(prob.dim());
    let mut last_w: Option<Point<T>> = None;
    let mut records = Vec::new();
    let mut stop_reason = StopReason::MaxItersReached;

    for k in 0..cfg.max_iters {
        let g_z = prob.eval(&z);
        let anchor = z.clone();
        let accepted = line_search(
            l_prev,
            cfg.max_backtracks_per_iter,
            |l| {
                let w = prox_step(setup, set, &anchor, &g_z, l)?;
                let g_w = prob.eval(&w);
                let z_next = match variant {
                    Variant::Ump => prox_step(setup, set, &anchor, &g_w, l)?,
                    _ => mixed_prox_step(setup, set, &anchor, &w, &g_w, l, cfg.mu)?,
                };
                Ok(StepPayload { w, g_w, z_next })
            },
            |l, p: &StepPayload<T>| {
                let lhs = g_z.sub(&p.g_w).dot(&p.z_next.sub(&p.w));
                let rhs = l * (p.w.half_sq_dist(&anchor) + p.z_next.half_sq_dist(&p.w))
                    + variant.condition_slack(l, cfg.delta);
                lhs <= rhs
            },
        )
        .map_err(|e| match e {
            Error::LineSearchExhausted { trials, last_l, .. } => Error::LineSearchExhausted {
                iter: k,
                trials,
                last_l,
            },
            other => other,
        })?;

        let l = accepted.l;
        let StepPayload { w, g_w, z_next } = accepted.payload;

        debug_assert!(
            {
                let lhs = g_z.sub(&g_w).dot(&z_next.sub(&w));
                let rhs = l * (w.half_sq_dist(&anchor) + z_next.half_sq_dist(&w))
                    + variant.condition_slack(l, cfg.delta);
                lhs <= rhs
            },
            "accepted step fails its own condition at iteration {k}"
        );
        debug_assert!(
            set.contains(&w, feas_tol) && set.contains(&z_next, feas_tol),
            "infeasible iterate at iteration {k}"
        );

        s_sum += T::one() / l;
        w_acc.axpy(T::one() / l, &w);

        let v_meas = solution.map(|sol| sol.half_sq_dist(&z_next));
        let objective = prob.objective(&z_next);
        records.push(IterationRecord {
            k,
            trials: accepted.trials,
            l_accepted: l,
            s_sum,
            z: cfg.store_iterates.then(|| z_next.clone()),
            w: cfg.store_iterates.then(|| w.clone()),
            v_to_solution: v_meas,
            objective,
            elapsed_s: start.elapsed().as_secs_f64(),
        });

        last_w = Some(w);
        l_prev = l;
        z = z_next;

        if let Some(b) = bound_geometric.as_mut() {
            *b /= T::one() + cfg.mu / l;
        }

        let done = match stop {
            StopRule::FixedIters(n) => {
                if k + 1 >= *n {
                    stop_reason = StopReason::FixedItersReached;
                    true
                } else {
                    false
                }
            }
            StopRule::AutoBudget | StopRule::BregmanBudget(_) => {
                let target = budget_target.expect("budget target resolved above");
                if s_sum >= target {
                    stop_reason = StopReason::BudgetReached;
                    true
                } else {
                    false
                }
            }
            StopRule::BoundTarget(eps) => {
                if bound_geometric.expect("bound state seeded above") <= *eps {
                    stop_reason = StopReason::BoundTargetReached;
                    true
                } else {
                    false
                }
            }
        };
        if done {
            break;
        }
    }

    let weighted_w = (s_sum > T::zero()).then(|| w_acc.scale(T::one() / s_sum));
    let final_point = match cfg.output_mode {
        OutputMode::LastZ => z.clone(),
        OutputMode::LastW => last_w.clone().unwrap_or_else(|| z.clone()),
        OutputMode::WeightedAvgW => weighted_w.clone().unwrap_or_else(|| z.clone()),
    };

    Ok(Trace {
        records,
        restart_markers: Vec::new(),
        last_z: z,
        last_w,
        weighted_w,
        final_point,
        stop_reason,
        elapsed_s: start.elapsed().as_secs_f64(),
    })
}

/// Universal mirror prox: adapts to the operator's smoothness through the
/// additive-slack condition and stops on a Bregman budget
/// (`S_N >= max V / epsilon` by default).
pub fn ump_solve<T: Real>(
    prob: &VIProblem<T>,
    setup: &ProxSetup<T>,
    cfg: &SolverConfig<T>,
    stop: &StopRule<T>,
) -> Result<Trace<T>> {
    run_engine(prob, setup, cfg, stop, Variant::Ump)
}

/// No-restart solver for relatively strongly monotone operators with
/// additive inexactness: mixed update step, condition slack `delta`.
pub fn adaptive_delta_solve<T: Real>(
    prob: &VIProblem<T>,
    setup: &ProxSetup<T>,
    cfg: &SolverConfig<T>,
    stop: &StopRule<T>,
) -> Result<Trace<T>> {
    run_engine(prob, setup, cfg, stop, Variant::AdaptiveDelta)
}

/// No-restart solver for relatively strongly monotone, smooth operators:
/// mixed update step, no condition slack. The line search may exhaust its
/// cap on genuinely nonsmooth operators; that is the documented failure mode.
pub fn adaptive_smooth_solve<T: Real>(
    prob: &VIProblem<T>,
    setup: &ProxSetup<T>,
    cfg: &SolverConfig<T>,
    stop: &StopRule<T>,
) -> Result<Trace<T>> {
    run_engine(prob, setup, cfg, stop, Variant::AdaptiveSmooth)
}

/// No-restart solver with the scaled exit criterion (`L * delta` slack),
/// trading a larger error floor coefficient for cheaper steps when `delta`
/// dominates.
pub fn adaptive_scaled_delta_solve<T: Real>(
    prob: &VIProblem<T>,
    setup: &ProxSetup<T>,
    cfg: &SolverConfig<T>,
    stop: &StopRule<T>,
) -> Result<Trace<T>> {
    run_engine(prob, setup, cfg, stop, Variant::AdaptiveScaledDelta)
}
