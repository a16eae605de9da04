//! Euclidean prox geometry: recentered/rescaled half-squared-norm
//! prox-functions, their Bregman divergence, and the two argmin subproblems
//! every solver in this crate builds on. Both subproblems have exact closed
//! forms, so the inner minimizations introduce no inexactness.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::set::FeasibleSet;
use crate::point::Point;
use crate::scalar::{positive, Real};

/// Prox-function `d(x) = scale^2 * 0.5 * ||(x - center)/scale||^2`.
///
/// The rescaling cancels, so `d(x) = 0.5 * ||x - center||^2` and the induced
/// Bregman divergence is `0.5 * ||y - x||^2` for every `(center, scale)`.
/// Center and scale are still tracked: the restart scheme reasons about its
/// stages through them, and `argmin d` (the start point of a run) moves with
/// the center.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProxSetup<T> {
    center: Point<T>,
    scale: T,
}

impl<T: Real> ProxSetup<T> {
    pub fn new(center: Point<T>, scale: T) -> Result<Self> {
        if !positive(scale) {
            return Err(Error::NonPositive {
                name: "scale",
                value: scale.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(ProxSetup { center, scale })
    }

    /// Unit-scale setup centered at the origin.
    pub fn origin(dim: usize) -> Self {
        ProxSetup {
            center: Point::zeros(dim),
            scale: T::one(),
        }
    }

    pub fn center(&self) -> &Point<T> {
        &self.center
    }

    pub fn scale(&self) -> T {
        self.scale
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    /// `d(x)`; zero exactly at the center.
    pub fn d_value(&self, x: &Point<T>) -> Result<T> {
        self.check_dim(x)?;
        Ok(x.half_sq_dist(&self.center))
    }

    /// `argmin_{u in set} d(u) = project(center)`, the start point of a run.
    pub fn argmin_over(&self, set: &FeasibleSet<T>) -> Result<Point<T>> {
        set.project(&self.center)
    }

    fn check_dim(&self, p: &Point<T>) -> Result<()> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        Ok(())
    }
}

/// Bregman divergence `V(y, x) = d(y) - d(x) - <grad d(x), y - x>`.
///
/// For the Euclidean base this collapses to `0.5 * ||y - x||^2`; the
/// recentring and rescaling cancel, which the geometry tests verify against
/// the literal three-term formula.
pub fn bregman<T: Real>(setup: &ProxSetup<T>, y: &Point<T>, x: &Point<T>) -> Result<T> {
    if y.dim() != x.dim() || y.dim() != setup.dim() {
        return Err(Error::DimensionMismatch {
            expected: setup.dim(),
            got: if y.dim() != setup.dim() {
                y.dim()
            } else {
                x.dim()
            },
        });
    }
    Ok(y.half_sq_dist(x))
}

/// `argmin_{x in set} { <v, x> + coef * V(x, anchor) }`.
///
/// Euclidean closed form: `project(anchor - v / coef)`. The output satisfies
/// the first-order optimality inequality
/// `<v / coef, w - u> <= V(u, anchor) - V(u, w) - V(w, anchor)` for all
/// feasible `u`.
pub fn prox_step<T: Real>(
    setup: &ProxSetup<T>,
    set: &FeasibleSet<T>,
    anchor: &Point<T>,
    v: &Point<T>,
    coef: T,
) -> Result<Point<T>> {
    if !positive(coef) {
        return Err(Error::NonPositive {
            name: "coef",
            value: coef.to_f64().unwrap_or(f64::NAN),
        });
    }
    let _ = setup; // geometry is recentring/rescaling invariant
    set.project(&anchor.add_scaled(-T::one() / coef, v))
}

/// `argmin_{z in set} { <v / l, z> + V(z, z_anchor) + (mu / l) * V(z, w_anchor) }`.
///
/// Euclidean closed form: `project((l * z_anchor + mu * w_anchor - v) / (l + mu))`.
/// With `mu = 0` this is exactly `prox_step(set, z_anchor, v, l)`.
pub fn mixed_prox_step<T: Real>(
    setup: &ProxSetup<T>,
    set: &FeasibleSet<T>,
    z_anchor: &Point<T>,
    w_anchor: &Point<T>,
    v: &Point<T>,
    l: T,
    mu: T,
) -> Result<Point<T>> {
    if !positive(l) {
        return Err(Error::NonPositive {
            name: "l",
            value: l.to_f64().unwrap_or(f64::NAN),
        });
    }
    if mu < T::zero() {
        return Err(Error::NonPositive {
            name: "mu",
            value: mu.to_f64().unwrap_or(f64::NAN),
        });
    }
    let _ = setup;
    let combined = z_anchor
        .scale(l)
        .add_scaled(mu, w_anchor)
        .add_scaled(-T::one(), v)
        .scale(T::one() / (l + mu));
    set.project(&combined)
}

/// `max_{x in set} V(x, z0)` where `z0 = argmin_{u in set} d(u)`; the
/// Bregman budget used by the universal method's default stopping rule.
/// Requires a bounded set.
pub fn max_bregman_radius<T: Real>(setup: &ProxSetup<T>, set: &FeasibleSet<T>) -> Result<T> {
    let z0 = setup.argmin_over(set)?;
    set.max_half_sq_dist_from(&z0)
}
