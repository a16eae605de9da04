//! Feasible sets with exact Euclidean projections.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::Point;
use crate::scalar::{cast, half, positive, Real};

/// Closed convex feasible set. Projection is exact for every variant:
/// radial scaling for balls, componentwise clamping for boxes, blockwise
/// recursion for products (Euclidean projection factorizes over blocks).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum FeasibleSet<T> {
    Ball { center: Point<T>, radius: T },
    Box { lower: Vec<T>, upper: Vec<T> },
    Product(Vec<FeasibleSet<T>>),
}

impl<T: Real> FeasibleSet<T> {
    /// Euclidean ball of positive radius.
    pub fn ball(center: Point<T>, radius: T) -> Result<Self> {
        if !positive(radius) {
            return Err(Error::NonPositive {
                name: "radius",
                value: radius.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(FeasibleSet::Ball { center, radius })
    }

    /// Ball centered at the origin.
    pub fn origin_ball(dim: usize, radius: T) -> Result<Self> {
        Self::ball(Point::zeros(dim), radius)
    }

    /// Axis-aligned box; individual bounds may be infinite.
    pub fn box_bounds(lower: Vec<T>, upper: Vec<T>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::InvalidSet("box bounds length mismatch".into()));
        }
        for (l, u) in lower.iter().zip(&upper) {
            if l.is_nan() || u.is_nan() || l > u {
                return Err(Error::InvalidSet(format!(
                    "box requires lower <= upper, got [{l}, {u}]"
                )));
            }
        }
        Ok(FeasibleSet::Box { lower, upper })
    }

    /// `[0, cap]^dim`, the multiplier box of Lagrangian problems.
    pub fn dual_box(dim: usize, cap: T) -> Result<Self> {
        if !positive(cap) {
            return Err(Error::NonPositive {
                name: "dual cap",
                value: cap.to_f64().unwrap_or(f64::NAN),
            });
        }
        Self::box_bounds(vec![T::zero(); dim], vec![cap; dim])
    }

    /// Cartesian product of blocks.
    pub fn product(blocks: Vec<FeasibleSet<T>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidSet("empty product".into()));
        }
        Ok(FeasibleSet::Product(blocks))
    }

    pub fn dim(&self) -> usize {
        match self {
            FeasibleSet::Ball { center, .. } => center.dim(),
            FeasibleSet::Box { lower, .. } => lower.len(),
            FeasibleSet::Product(blocks) => blocks.iter().map(|b| b.dim()).sum(),
        }
    }

    pub fn is_bounded(&self) -> bool {
        match self {
            FeasibleSet::Ball { .. } => true,
            FeasibleSet::Box { lower, upper } => {
                lower.iter().chain(upper.iter()).all(|v| v.is_finite())
            }
            FeasibleSet::Product(blocks) => blocks.iter().all(|b| b.is_bounded()),
        }
    }

    /// Exact Euclidean projection; returns `p` unchanged when `p` is feasible.
    pub fn project(&self, p: &Point<T>) -> Result<Point<T>> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        Ok(self.project_unchecked(p))
    }

    pub(crate) fn project_unchecked(&self, p: &Point<T>) -> Point<T> {
        match self {
            FeasibleSet::Ball { center, radius } => {
                let d = p.dist(center);
                if d <= *radius {
                    p.clone()
                } else {
                    center.add_scaled(*radius / d, &p.sub(center))
                }
            }
            FeasibleSet::Box { lower, upper } => Point::from_vec(
                p.as_slice()
                    .iter()
                    .zip(lower.iter().zip(upper))
                    .map(|(&v, (&l, &u))| v.max(l).min(u))
                    .collect(),
            ),
            FeasibleSet::Product(blocks) => {
                let mut out = Vec::with_capacity(p.dim());
                let mut offset = 0;
                for b in blocks {
                    let d = b.dim();
                    let slice = Point::from_vec(p.as_slice()[offset..offset + d].to_vec());
                    out.extend_from_slice(b.project_unchecked(&slice).as_slice());
                    offset += d;
                }
                Point::from_vec(out)
            }
        }
    }

    /// Membership up to an absolute tolerance on the defining inequalities.
    pub fn contains(&self, p: &Point<T>, tol: T) -> bool {
        if p.dim() != self.dim() {
            return false;
        }
        match self {
            FeasibleSet::Ball { center, radius } => p.dist(center) <= *radius + tol,
            FeasibleSet::Box { lower, upper } => p
                .as_slice()
                .iter()
                .zip(lower.iter().zip(upper))
                .all(|(&v, (&l, &u))| v >= l - tol && v <= u + tol),
            FeasibleSet::Product(blocks) => {
                let mut offset = 0;
                for b in blocks {
                    let d = b.dim();
                    let slice = Point::from_vec(p.as_slice()[offset..offset + d].to_vec());
                    if !b.contains(&slice, tol) {
                        return false;
                    }
                    offset += d;
                }
                true
            }
        }
    }

    /// Maximum of `0.5 * ||x - from||^2` over the set. Closed form for balls
    /// (the farthest point is the antipode of the nearest boundary point),
    /// farthest corner for boxes, separable sum for products.
    pub fn max_half_sq_dist_from(&self, from: &Point<T>) -> Result<T> {
        if from.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: from.dim(),
            });
        }
        match self {
            FeasibleSet::Ball { center, radius } => {
                let d = from.dist(center);
                Ok(half::<T>() * (*radius + d) * (*radius + d))
            }
            FeasibleSet::Box { lower, upper } => {
                let mut acc = T::zero();
                for (&v, (&l, &u)) in from.as_slice().iter().zip(lower.iter().zip(upper)) {
                    if !l.is_finite() || !u.is_finite() {
                        return Err(Error::UnboundedSet);
                    }
                    let dl = (v - l) * (v - l);
                    let du = (u - v) * (u - v);
                    acc += dl.max(du);
                }
                Ok(half::<T>() * acc)
            }
            FeasibleSet::Product(blocks) => {
                let mut acc = T::zero();
                let mut offset = 0;
                for b in blocks {
                    let d = b.dim();
                    let slice = Point::from_vec(from.as_slice()[offset..offset + d].to_vec());
                    acc += b.max_half_sq_dist_from(&slice)?;
                    offset += d;
                }
                Ok(acc)
            }
        }
    }

    /// Draws a feasible point by projecting a Gaussian sample scaled to the
    /// set's extent. Used by certificate tests and solution checks; makes no
    /// uniformity claim.
    pub fn sample_projected<R: Rng>(&self, rng: &mut R) -> Point<T> {
        match self {
            FeasibleSet::Ball { center, radius } => {
                let g: Vec<T> = (0..center.dim())
                    .map(|_| cast::<T>(standard_normal(rng)) * *radius)
                    .collect();
                self.project_unchecked(&center.add(&Point::from_vec(g)))
            }
            FeasibleSet::Box { lower, upper } => Point::from_vec(
                lower
                    .iter()
                    .zip(upper)
                    .map(|(&l, &u)| {
                        if l.is_finite() && u.is_finite() {
                            l + (u - l) * cast::<T>(rng.random::<f64>())
                        } else {
                            let g = cast::<T>(standard_normal(rng));
                            g.max(l).min(u)
                        }
                    })
                    .collect(),
            ),
            FeasibleSet::Product(blocks) => {
                let mut out = Vec::with_capacity(self.dim());
                for b in blocks {
                    out.extend_from_slice(b.sample_projected(rng).as_slice());
                }
                Point::from_vec(out)
            }
        }
    }
}

/// Box-Muller standard normal draw; closed-form and portable.
pub(crate) fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let u1: f64 = rng.random();
        let u2: f64 = rng.random();
        if u1 > 0.0 {
            return (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
        }
    }
}
