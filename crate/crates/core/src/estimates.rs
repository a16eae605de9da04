//! Closed-form evaluators for the convergence bounds and iteration-count
//! formulas, driven by the accepted-L history of an actual run so theory can
//! be asserted against measurement.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{cast, positive, two, Real};

/// Accepted step constants `L_1 .. L_{k+1}` of a run together with the
/// modulus, inexactness and initial divergence they are evaluated against.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LHistory<T> {
    pub l_values: Vec<T>,
    pub mu: T,
    pub delta: T,
    /// `V(z_*, z_0)`.
    pub v0: T,
}

impl<T: Real> LHistory<T> {
    pub fn new(l_values: Vec<T>, mu: T, delta: T, v0: T) -> Result<Self> {
        if l_values.is_empty() {
            return Err(Error::InvalidParam("empty L history".into()));
        }
        if l_values.iter().any(|l| !positive(*l)) {
            return Err(Error::InvalidParam(
                "accepted L values must be positive".into(),
            ));
        }
        if !positive(mu) {
            return Err(Error::NonPositive {
                name: "mu",
                value: mu.to_f64().unwrap_or(f64::NAN),
            });
        }
        if delta < T::zero() || v0 < T::zero() {
            return Err(Error::InvalidParam("delta and v0 must be >= 0".into()));
        }
        Ok(LHistory {
            l_values,
            mu,
            delta,
            v0,
        })
    }

    pub fn max_l(&self) -> T {
        self.l_values
            .iter()
            .cloned()
            .fold(T::neg_infinity(), T::max)
    }
}

/// The quality bound formula a history is evaluated under. The first three
/// per-step forms pair with the additive-delta, smooth and scaled-delta
/// solvers respectively; the worst-case forms replace the per-step products
/// by the uniform rate `(1 + mu/2L)^-(k+1)` with `L = max L_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundVariant {
    /// Per-step contraction products with damped delta terms
    /// `delta / (L_j + mu)`.
    PerStepDelta,
    /// Pure per-step contraction product, no delta terms.
    PerStepProduct,
    /// Uniform worst-case geometric rate.
    WorstCaseRate,
    /// Per-step products with one undamped `delta` per step.
    PerStepFlatDelta,
    /// Uniform geometric rate plus the floor `delta (1 + 2L/mu)`.
    WorstCaseRateWithFloor,
    /// Per-step products with delta terms weighted by `L_j / (L_j + mu)`.
    PerStepScaledDelta,
}

/// Gap bound of the universal method after `N` iterations: `2 L V0 / N`.
pub fn bound_ump_gap<T: Real>(l: T, v0: T, n: usize) -> T {
    debug_assert!(n >= 1);
    two::<T>() * l * v0 / cast::<T>(n as f64)
}

/// Divergence drift along the universal method: `V0 + delta * S_N`.
pub fn bound_lemma2_drift<T: Real>(v0: T, delta: T, s_n: T) -> T {
    v0 + delta * s_n
}

/// Restarted-scheme guarantees: output quality `epsilon + 2 Omega L delta / mu^2`
/// and the total inner-iteration count `ceil((2 L Omega / mu) * log2(R0^2 / epsilon))`.
/// The count is 0 when `epsilon >= R0^2` (nonpositive log).
pub fn bound_restart<T: Real>(l: T, omega: T, mu: T, delta: T, r0_sq: T, epsilon: T) -> (T, usize) {
    let quality = epsilon + two::<T>() * omega * l * delta / (mu * mu);
    let log = (r0_sq / epsilon).log2();
    let iters = if log <= T::zero() {
        0
    } else {
        (two::<T>() * l * omega / mu * log)
            .ceil()
            .to_f64()
            .map(|v| v as usize)
            .unwrap_or(usize::MAX)
    };
    (quality, iters)
}

/// Evaluates the selected quality bound at the end of the history.
pub fn bound_adaptive<T: Real>(hist: &LHistory<T>, variant: BoundVariant) -> Result<T> {
    Ok(*bound_adaptive_prefix(hist, variant)?
        .last()
        .expect("history is nonempty"))
}

/// Evaluates the selected bound after every prefix `L_1 .. L_{k+1}` of the
/// history in one pass; entry `k` bounds `V(z_*, z_{k+1})`.
pub fn bound_adaptive_prefix<T: Real>(hist: &LHistory<T>, variant: BoundVariant) -> Result<Vec<T>> {
    if hist.l_values.is_empty() {
        return Err(Error::InvalidParam("empty L history".into()));
    }
    let (mu, delta) = (hist.mu, hist.delta);
    let mut out = Vec::with_capacity(hist.l_values.len());
    match variant {
        // One-step recursions: B <- (1 + mu/L)^-1 B + step-dependent delta term.
        BoundVariant::PerStepDelta
        | BoundVariant::PerStepProduct
        | BoundVariant::PerStepFlatDelta
        | BoundVariant::PerStepScaledDelta => {
            let mut bound = hist.v0;
            for &l in &hist.l_values {
                let contraction = T::one() / (T::one() + mu / l);
                let delta_term = match variant {
                    BoundVariant::PerStepDelta => delta / (l + mu),
                    BoundVariant::PerStepProduct => T::zero(),
                    BoundVariant::PerStepFlatDelta => delta,
                    BoundVariant::PerStepScaledDelta => l * delta / (l + mu),
                    _ => unreachable!(),
                };
                bound = contraction * bound + delta_term;
                out.push(bound);
            }
        }
        // Uniform worst-case forms evaluated with the running max of L.
        BoundVariant::WorstCaseRate | BoundVariant::WorstCaseRateWithFloor => {
            let mut l_hat = T::neg_infinity();
            for (k, &l) in hist.l_values.iter().enumerate() {
                l_hat = l_hat.max(l);
                let rate = (T::one() + mu / (two::<T>() * l_hat)).powi(-((k + 1) as i32));
                let floor = match variant {
                    BoundVariant::WorstCaseRateWithFloor => {
                        delta * (T::one() + two::<T>() * l_hat / mu)
                    }
                    _ => T::zero(),
                };
                out.push(rate * hist.v0 + floor);
            }
        }
    }
    Ok(out)
}

/// Literal evaluation of the closed-form expressions (products and sums as
/// printed), used to cross-check the recursive prefix evaluation.
pub fn bound_adaptive_literal<T: Real>(hist: &LHistory<T>, variant: BoundVariant) -> Result<T> {
    let (mu, delta, v0) = (hist.mu, hist.delta, hist.v0);
    let ls = &hist.l_values;
    if ls.is_empty() {
        return Err(Error::InvalidParam("empty L history".into()));
    }
    let prod_from = |j: usize| -> T {
        // product of (1 + mu/L_i)^-1 over i = j .. end (1-based index j)
        ls[j - 1..]
            .iter()
            .fold(T::one(), |acc, &l| acc / (T::one() + mu / l))
    };
    let k_plus_1 = ls.len();
    Ok(match variant {
        BoundVariant::PerStepDelta => {
            let mut total = prod_from(1) * v0 + delta / (ls[k_plus_1 - 1] + mu);
            for j in 1..k_plus_1 {
                total += delta / (ls[j - 1] + mu) * prod_from(j + 1);
            }
            total
        }
        BoundVariant::PerStepProduct => prod_from(1) * v0,
        BoundVariant::WorstCaseRate => {
            let l_hat = hist.max_l();
            (T::one() + mu / (two::<T>() * l_hat)).powi(-(k_plus_1 as i32)) * v0
        }
        BoundVariant::PerStepFlatDelta => {
            let mut tail = T::one();
            for j in 1..k_plus_1 {
                tail += prod_from(j + 1);
            }
            prod_from(1) * v0 + delta * tail
        }
        BoundVariant::WorstCaseRateWithFloor => {
            let l_hat = hist.max_l();
            (T::one() + mu / (two::<T>() * l_hat)).powi(-(k_plus_1 as i32)) * v0
                + delta * (T::one() + two::<T>() * l_hat / mu)
        }
        BoundVariant::PerStepScaledDelta => {
            let last = ls[k_plus_1 - 1];
            let mut total = prod_from(1) * v0 + last * delta / (last + mu);
            for j in 1..k_plus_1 {
                total += ls[j - 1] * delta / (ls[j - 1] + mu) * prod_from(j + 1);
            }
            total
        }
    })
}

/// Complexity estimate of the older universal-method-with-restarts analysis,
/// minimized over a grid of Hölder exponents:
///
/// `inf_nu ceil( (L_nu / mu)^(2/(1+nu)) * 2^(2/(1+nu)) Omega / eps^((1-nu)/(1+nu)) * log2(2 R0^2 / eps) )`
///
/// with `L_nu = Ltilde * (Ltilde/(2 eps) * (1-nu)(2-nu)/(2-nu))^((1-nu)(1+nu)/(2-nu))`
/// and `Ltilde = L_xy (2 L_xy / mu_y)^(nu/(2-nu)) + L_xx D^((nu-nu^2)/(2-nu))`.
///
/// The `(1-nu)(2-nu)/(2-nu)` factor is evaluated exactly as printed (its
/// fraction is cancellable, which looks like a typo in the source material);
/// the modulus is fixed at 1, matching the lifted operator's normalization.
#[allow(clippy::too_many_arguments)]
pub fn bound_external_comparison<T: Real>(
    l_xy: T,
    l_xx: T,
    mu_y: T,
    diameter: T,
    omega: T,
    epsilon: T,
    r0_sq: T,
    nu_grid: &[T],
) -> Result<T> {
    if nu_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let one = T::one();
    let mu = T::one();
    let mut best = T::infinity();
    for &nu in nu_grid {
        if nu < T::zero() || nu > one {
            return Err(Error::InvalidParam(format!(
                "nu must be in [0, 1], got {nu}"
            )));
        }
        let ltilde = l_xy * (two::<T>() * l_xy / mu_y).powf(nu / (two::<T>() - nu))
            + l_xx * diameter.powf((nu - nu * nu) / (two::<T>() - nu));
        let printed_factor = ((one - nu) * (two::<T>() - nu)) / (two::<T>() - nu);
        let l_nu = ltilde
            * (ltilde / (two::<T>() * epsilon) * printed_factor)
                .powf((one - nu) * (one + nu) / (two::<T>() - nu));
        let exp = two::<T>() / (one + nu);
        let value = (l_nu / mu).powf(exp) * two::<T>().powf(exp) * omega
            / epsilon.powf((one - nu) / (one + nu))
            * (two::<T>() * r0_sq / epsilon).log2();
        best = best.min(value.ceil());
    }
    Ok(best)
}
