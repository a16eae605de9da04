//! Restarted universal mirror prox.
//!
//! Runs the universal method in stages. Stage `p` uses the prox-function
//! centered at the previous stage's output with scale `R_p`, stops once its
//! Bregman budget `S_N >= omega / mu` is met, then shrinks
//! `R_{p+1}^2 = omega R_0^2 / (2^(p+1) mu S_{N_p})` and recenters. The outer
//! loop ends after stage `p` once `p + 1 > log2(2 R_0^2 / epsilon)`.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::geometry::ProxSetup;
use crate::operators::VIProblem;
use crate::point::Point;
use crate::scalar::{cast, two, Real};
use crate::solvers::engine::{run_engine, Variant};
use crate::solvers::{RestartConfig, RestartMarker, SolverConfig, StopReason, StopRule, Trace};

pub fn restarted_solve<T: Real>(
    prob: &VIProblem<T>,
    cfg: &SolverConfig<T>,
    rcfg: &RestartConfig<T>,
    x0: &Point<T>,
) -> Result<Trace<T>> {
    cfg.validate()?;
    if x0.dim() != prob.dim() {
        return Err(Error::DimensionMismatch {
            expected: prob.dim(),
            got: x0.dim(),
        });
    }
    // Restart centers must stay feasible; for the closed sets supported here
    // the stage outputs always are, so an infeasible start is a caller bug.
    if !prob.set.contains(x0, cast(1e-9)) {
        return Err(Error::Infeasible(
            "restart start point lies outside the feasible set".into(),
        ));
    }

    let start = Instant::now();
    let r0_sq = rcfg.r0 * rcfg.r0;
    let stage_budget = rcfg.omega / cfg.mu;
    let schedule_end = (two::<T>() * r0_sq / rcfg.epsilon).log2();

    let mut center = x0.clone();
    let mut radius_sq = r0_sq;
    let mut records = Vec::new();
    let mut markers = Vec::new();
    let mut global_k = 0usize;
    let stop_reason;
    let mut last_stage: Option<Trace<T>> = None;
    let mut stage = 0usize;

    loop {
        if global_k >= cfg.max_iters {
            stop_reason = StopReason::MaxItersReached;
            break;
        }
        let setup = ProxSetup::new(center.clone(), radius_sq.sqrt())?;
        let mut stage_cfg = cfg.clone();
        stage_cfg.max_iters = cfg.max_iters - global_k;
        let offset = start.elapsed().as_secs_f64();
        let stage_trace = run_engine(
            prob,
            &setup,
            &stage_cfg,
            &StopRule::BregmanBudget(stage_budget),
            Variant::Ump,
        )?;

        let stage_iters = stage_trace.records.len();
        let s_stage = stage_trace
            .records
            .last()
            .map(|r| r.s_sum)
            .unwrap_or_else(T::zero);
        for mut rec in stage_trace.records.iter().cloned() {
            rec.k = global_k;
            rec.elapsed_s += offset;
            records.push(rec);
            global_k += 1;
        }

        center = stage_trace.final_point.clone();
        let stage_incomplete = stage_trace.stop_reason == StopReason::MaxItersReached;
        if s_stage > T::zero() {
            radius_sq =
                rcfg.omega * r0_sq / (two::<T>().powi((stage + 1) as i32) * cfg.mu * s_stage);
        }
        markers.push(RestartMarker {
            stage,
            iters: stage_iters,
            s_stage,
            next_radius_sq: radius_sq,
        });
        last_stage = Some(stage_trace);
        stage += 1;

        if stage_incomplete {
            stop_reason = StopReason::MaxItersReached;
            break;
        }
        if cast::<T>(stage as f64) > schedule_end {
            stop_reason = StopReason::RestartScheduleComplete;
            break;
        }
    }

    let last = last_stage.ok_or_else(|| {
        Error::InvalidParam("restarted run executed no stages (max_iters too small)".into())
    })?;

    Ok(Trace {
        records,
        restart_markers: markers,
        last_z: last.last_z,
        last_w: last.last_w,
        weighted_w: last.weighted_w,
        final_point: center,
        stop_reason,
        elapsed_s: start.elapsed().as_secs_f64(),
    })
}
