//! Test operators for Minty variational inequalities.

use std::sync::Arc;

use crate::error::Result;
use crate::geometry::FeasibleSet;
use crate::operators::{Operator, VIProblem};
use crate::point::Point;
use crate::scalar::{cast, Real};

/// `g(x) = x`. Strongly monotone with `mu = 1`, Lipschitz with `L = 1`;
/// the solution on any set containing the origin is `0`.
#[derive(Clone, Debug)]
pub struct Identity {
    dim: usize,
}

impl Identity {
    pub fn new(dim: usize) -> Self {
        Identity { dim }
    }

    pub fn lipschitz<T: Real>(&self) -> T {
        T::one()
    }

    pub fn strong_monotonicity<T: Real>(&self) -> T {
        T::one()
    }

    /// Ready-to-run problem on the ball `||x|| <= radius`.
    pub fn problem<T: Real>(dim: usize, radius: T) -> Result<VIProblem<T>> {
        let set = FeasibleSet::origin_ball(dim, radius)?;
        Ok(VIProblem::new(Arc::new(Identity::new(dim)), set, T::one())?
            .with_known_l(T::one())
            .with_known_nu(T::one())
            .with_known_solution(Point::zeros(dim)))
    }
}

impl<T: Real> Operator<T> for Identity {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, z: &Point<T>) -> Point<T> {
        z.clone()
    }
}

/// `g(x)_i = i^2 x_i` (1-based `i`). Lipschitz with `L = n^2`, strongly
/// monotone with `mu = 1`; condition number `kappa = n^2`, so the operator is
/// ill-conditioned for large `n`.
#[derive(Clone, Debug)]
pub struct DiagSquares {
    dim: usize,
}

impl DiagSquares {
    pub fn new(dim: usize) -> Self {
        DiagSquares { dim }
    }

    pub fn lipschitz<T: Real>(&self) -> T {
        cast::<T>((self.dim * self.dim) as f64)
    }

    pub fn strong_monotonicity<T: Real>(&self) -> T {
        T::one()
    }

    pub fn condition_number<T: Real>(&self) -> T {
        self.lipschitz::<T>() / self.strong_monotonicity::<T>()
    }

    pub fn problem<T: Real>(dim: usize, radius: T) -> Result<VIProblem<T>> {
        let op = DiagSquares::new(dim);
        let l = op.lipschitz::<T>();
        let set = FeasibleSet::origin_ball(dim, radius)?;
        Ok(VIProblem::new(Arc::new(op), set, T::one())?
            .with_known_l(l)
            .with_known_nu(T::one())
            .with_known_solution(Point::zeros(dim)))
    }
}

impl<T: Real> Operator<T> for DiagSquares {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, z: &Point<T>) -> Point<T> {
        Point::from_vec(
            z.iter()
                .enumerate()
                .map(|(i, &v)| {
                    let k = cast::<T>(((i + 1) * (i + 1)) as f64);
                    k * v
                })
                .collect(),
        )
    }
}

/// Test fixture with a genuinely Hölder-continuous part:
/// `g(x) = mu x + l_nu ||x||^(nu - 1) x` (and `g(0) = 0`), the gradient of
/// `mu/2 ||x||^2 + l_nu/(1+nu) ||x||^(1+nu)`.
#[derive(Clone, Debug)]
pub struct HolderFixture<T> {
    dim: usize,
    pub mu: T,
    pub l_nu: T,
    pub nu: T,
}

impl<T: Real> HolderFixture<T> {
    pub fn new(dim: usize, mu: T, l_nu: T, nu: T) -> Result<Self> {
        if !crate::scalar::positive(l_nu) {
            return Err(crate::error::Error::NonPositive {
                name: "l_nu",
                value: l_nu.to_f64().unwrap_or(f64::NAN),
            });
        }
        if mu < T::zero() || nu <= T::zero() || nu > T::one() {
            return Err(crate::error::Error::InvalidParam(
                "holder fixture requires mu >= 0 and nu in (0, 1]".into(),
            ));
        }
        Ok(HolderFixture { dim, mu, l_nu, nu })
    }

    pub fn problem(dim: usize, mu: T, l_nu: T, nu: T, radius: T) -> Result<VIProblem<T>> {
        let op = HolderFixture::new(dim, mu, l_nu, nu)?;
        let set = FeasibleSet::origin_ball(dim, radius)?;
        // mu = 0 would make the VI merely monotone; the solver configs
        // require a positive modulus, so floor it at a tiny value then.
        let vi_mu = if mu > T::zero() { mu } else { cast(1e-12) };
        Ok(VIProblem::new(Arc::new(op), set, vi_mu)?
            .with_known_nu(nu)
            .with_known_solution(Point::zeros(dim)))
    }
}

impl<T: Real> Operator<T> for HolderFixture<T> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, z: &Point<T>) -> Point<T> {
        let norm = z.norm();
        if norm == T::zero() {
            return Point::zeros(self.dim);
        }
        let holder_coef = self.l_nu * norm.powf(self.nu - T::one());
        z.scale(self.mu + holder_coef)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: &[f64]) -> Point<f64> {
        Point::new(v.to_vec()).unwrap()
    }

    #[test]
    fn identity_is_identity() {
        let g = Identity::new(2);
        assert_eq!(
            Operator::<f64>::eval(&g, &pt(&[1.0, 2.0])).as_slice(),
            &[1.0, 2.0]
        );
        assert_eq!(Operator::<f64>::eval(&g, &Point::zeros(2)), Point::zeros(2));
    }

    #[test]
    fn diag_squares_values() {
        let g = DiagSquares::new(3);
        assert_eq!(
            Operator::<f64>::eval(&g, &pt(&[1.0, 1.0, 1.0])).as_slice(),
            &[1.0, 4.0, 9.0]
        );
        assert_eq!(Operator::<f64>::eval(&g, &Point::zeros(3)), Point::zeros(3));
    }

    #[test]
    fn diag_squares_condition_number() {
        let g = DiagSquares::new(2);
        assert_eq!(g.condition_number::<f64>(), 4.0);
        assert_eq!(g.lipschitz::<f64>(), 4.0);
        assert_eq!(g.strong_monotonicity::<f64>(), 1.0);
    }

    #[test]
    fn holder_linear_at_nu_one() {
        let g = HolderFixture::new(2, 0.5, 2.0, 1.0).unwrap();
        let x = pt(&[3.0, -4.0]);
        assert_eq!(g.eval(&x), x.scale(2.5));
    }

    #[test]
    fn holder_sqrt_magnitude() {
        let g = HolderFixture::new(2, 0.0, 1.0, 0.5).unwrap();
        let out = g.eval(&pt(&[4.0, 0.0]));
        assert!((out[0] - 2.0f64).abs() < 1e-15);
        assert_eq!(out[1], 0.0);
    }

    #[test]
    fn holder_zero_at_origin() {
        let g = HolderFixture::new(3, 1.0, 1.0, 0.25).unwrap();
        assert_eq!(g.eval(&Point::zeros(3)), Point::zeros(3));
    }
}
