//! Deterministic iteration engines for the five solvers, sharing one
//! backtracking line-search state machine and emitting full traces.
//!
//! A solver run is strictly sequential and owns its mutable state; distinct
//! runs share only immutable problems and configs, so they may execute in
//! parallel. Traces are immutable once returned.

mod engine;
mod line_search;
mod restart;

pub use engine::{
    adaptive_delta_solve, adaptive_scaled_delta_solve, adaptive_smooth_solve, ump_solve,
};
pub use line_search::{line_search, LineSearchResult};
pub use restart::restarted_solve;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimates::LHistory;
use crate::point::Point;
use crate::scalar::Real;

/// Which point a solver reports (and a restarted run recenters on).
///
/// The universal method's listing returns the last `z`, while its gap
/// guarantee is proved for the `1/L`-weighted average of the `w` iterates and
/// the restart analysis contracts the last `w`; the mode makes the choice
/// explicit instead of hiding it. `LastZ` is the listing-faithful default.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputMode {
    LastZ,
    LastW,
    WeightedAvgW,
}

/// Shared solver parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolverConfig<T> {
    pub epsilon: T,
    pub delta: T,
    pub l0: T,
    /// Relative strong-monotonicity modulus used by the mixed prox step and
    /// the stopping bounds.
    pub mu: T,
    pub max_iters: usize,
    /// Per-iteration safety cap on backtracking trials.
    pub max_backtracks_per_iter: usize,
    pub output_mode: OutputMode,
    /// Record full iterates in the trace (disable for large dimensions).
    pub store_iterates: bool,
}

impl<T: Real> Default for SolverConfig<T> {
    fn default() -> Self {
        SolverConfig {
            epsilon: crate::scalar::cast(1e-6),
            delta: T::zero(),
            l0: T::one(),
            mu: T::one(),
            max_iters: 10_000,
            max_backtracks_per_iter: 60,
            output_mode: OutputMode::LastZ,
            store_iterates: true,
        }
    }
}

impl<T: Real> SolverConfig<T> {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("epsilon", self.epsilon), ("l0", self.l0), ("mu", self.mu)] {
            if !crate::scalar::positive(v) {
                return Err(Error::NonPositive {
                    name,
                    value: v.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        if self.delta < T::zero() || !self.delta.is_finite() {
            return Err(Error::InvalidParam("delta must be >= 0 and finite".into()));
        }
        if self.max_iters == 0 || self.max_backtracks_per_iter == 0 {
            return Err(Error::InvalidParam(
                "iteration and backtrack caps must be >= 1".into(),
            ));
        }
        Ok(())
    }
}

/// Restart-scheme parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RestartConfig<T> {
    /// Domain constant: `d(x) <= omega / 2` on the unit ball; 1 for the
    /// Euclidean base, overridable.
    pub omega: T,
    /// Initial radius with `V(x_*, x_0) <= r0^2`.
    pub r0: T,
    pub epsilon: T,
}

impl<T: Real> RestartConfig<T> {
    pub fn new(omega: T, r0: T, epsilon: T) -> Result<Self> {
        for (name, v) in [("omega", omega), ("r0", r0), ("epsilon", epsilon)] {
            if !crate::scalar::positive(v) {
                return Err(Error::NonPositive {
                    name,
                    value: v.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(RestartConfig { omega, r0, epsilon })
    }

    /// Euclidean-base config: `omega = 1`.
    pub fn euclidean(r0: T, epsilon: T) -> Result<Self> {
        Self::new(T::one(), r0, epsilon)
    }
}

/// Stopping rule of a run. Each solver accepts the subset that it has a
/// guarantee for and rejects the rest.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopRule<T> {
    /// Universal method default: `S_N >= max_{x in X} V(x, x_0) / epsilon`
    /// (requires a bounded set).
    AutoBudget,
    /// `S_N >= target`.
    BregmanBudget(T),
    /// Exactly this many iterations.
    FixedIters(usize),
    /// No-restart solvers: stop once the geometric part of the running
    /// quality bound, `prod_i (1 + mu/L_i)^-1 * V0`, drops to the target;
    /// the full bound then sits within its accumulated delta terms of it.
    BoundTarget(T),
}

/// Why a run terminated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    BudgetReached,
    FixedItersReached,
    BoundTargetReached,
    MaxItersReached,
    RestartScheduleComplete,
}

/// One iteration of a run. Record `k` carries the points produced by
/// iteration `k`: the extrapolation point `w_k`, the updated iterate
/// `z_{k+1}`, the accepted `L_{k+1}` and the partial sum
/// `S_{k+1} = sum_{j<=k} 1/L_{j+1}` (stage-local under restarts). `v_to_solution`
/// is `V(x_*, z_{k+1})` when the solution is known; `elapsed_s` is cumulative
/// wall time and is informational only.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IterationRecord<T> {
    pub k: usize,
    pub trials: usize,
    pub l_accepted: T,
    pub s_sum: T,
    pub z: Option<Point<T>>,
    pub w: Option<Point<T>>,
    pub v_to_solution: Option<T>,
    pub objective: Option<T>,
    pub elapsed_s: f64,
}

/// Equality ignores `elapsed_s`: wall time is machine-dependent and excluded
/// from every determinism contract.
impl<T: PartialEq> PartialEq for IterationRecord<T> {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k
            && self.trials == other.trials
            && self.l_accepted == other.l_accepted
            && self.s_sum == other.s_sum
            && self.z == other.z
            && self.w == other.w
            && self.v_to_solution == other.v_to_solution
            && self.objective == other.objective
    }
}

/// Stage summary of a restarted run: iterations spent, the stage's final
/// `S`, and the squared radius handed to the next stage.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RestartMarker<T> {
    pub stage: usize,
    pub iters: usize,
    pub s_stage: T,
    pub next_radius_sq: T,
}

/// Full record of a run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Trace<T> {
    pub records: Vec<IterationRecord<T>>,
    pub restart_markers: Vec<RestartMarker<T>>,
    /// Last iterate `z_N` (of the final stage, under restarts).
    pub last_z: Point<T>,
    /// Last extrapolation point `w_{N-1}`, when at least one iteration ran.
    pub last_w: Option<Point<T>>,
    /// `1/L`-weighted average of the `w` iterates (stage-local under restarts).
    pub weighted_w: Option<Point<T>>,
    /// The point selected by the configured output mode.
    pub final_point: Point<T>,
    pub stop_reason: StopReason,
    pub elapsed_s: f64,
}

impl<T: Real> Trace<T> {
    pub fn iters(&self) -> usize {
        self.records.len()
    }

    /// Accepted constants as an evaluable history.
    pub fn l_history(&self, mu: T, delta: T, v0: T) -> Result<LHistory<T>> {
        LHistory::new(
            self.records.iter().map(|r| r.l_accepted).collect(),
            mu,
            delta,
            v0,
        )
    }

    pub fn max_accepted_l(&self) -> Option<T> {
        self.records
            .iter()
            .map(|r| r.l_accepted)
            .fold(None, |acc, l| Some(acc.map_or(l, |a: T| a.max(l))))
    }
}
