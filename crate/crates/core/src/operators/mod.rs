//! Operators of the benchmark problems: the two Minty test operators, a
//! Hölder-continuity fixture, the lifted bilinear saddle operator with its
//! smoothness constant, and the covering-ball Lagrangian operator with its
//! seeded generators.

mod covering;
mod minty;
mod saddle;

pub use covering::{
    eval_covering_ball, gen_covering_ball, CoeffCase, CoveringBallOperator, CoveringBallProblem,
};
pub use minty::{DiagSquares, HolderFixture, Identity};
pub use saddle::{ltilde, PreconditionedOperator, SaddleComposite};

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::FeasibleSet;
use crate::point::Point;
use crate::scalar::{cast, Real};

/// A (possibly set-valued-selected) operator `g : R^n -> R^n`.
///
/// Implementations are pure and immutable after construction, so values are
/// safe to evaluate concurrently from any number of threads.
pub trait Operator<T: Real>: Send + Sync {
    fn dim(&self) -> usize;

    /// Evaluates `g(z)`. Callers are expected to pass feasible points;
    /// Lagrangian operators panic on multipliers outside their box (the
    /// checked entry point is [`eval_covering_ball`]).
    fn eval(&self, z: &Point<T>) -> Point<T>;

    /// Reported objective value at `z`, when the problem has one.
    fn objective(&self, _z: &Point<T>) -> Option<T> {
        None
    }
}

/// A variational inequality: an operator over a feasible set, with the
/// relative strong-monotonicity modulus and whatever constants are known.
#[derive(Clone)]
pub struct VIProblem<T: Real> {
    operator: Arc<dyn Operator<T>>,
    pub set: FeasibleSet<T>,
    /// Relative strong-monotonicity modulus used by the mixed prox step.
    pub mu: T,
    pub known_l: Option<T>,
    pub known_delta: Option<T>,
    pub known_nu: Option<T>,
    pub known_solution: Option<Point<T>>,
}

impl<T: Real> VIProblem<T> {
    pub fn new(operator: Arc<dyn Operator<T>>, set: FeasibleSet<T>, mu: T) -> Result<Self> {
        if !crate::scalar::positive(mu) {
            return Err(Error::NonPositive {
                name: "mu",
                value: mu.to_f64().unwrap_or(f64::NAN),
            });
        }
        if operator.dim() != set.dim() {
            return Err(Error::DimensionMismatch {
                expected: operator.dim(),
                got: set.dim(),
            });
        }
        Ok(VIProblem {
            operator,
            set,
            mu,
            known_l: None,
            known_delta: None,
            known_nu: None,
            known_solution: None,
        })
    }

    pub fn with_known_l(mut self, l: T) -> Self {
        self.known_l = Some(l);
        self
    }

    pub fn with_known_solution(mut self, solution: Point<T>) -> Self {
        self.known_solution = Some(solution);
        self
    }

    pub fn with_known_nu(mut self, nu: T) -> Self {
        self.known_nu = Some(nu);
        self
    }

    pub fn with_known_delta(mut self, delta: T) -> Self {
        self.known_delta = Some(delta);
        self
    }

    pub fn dim(&self) -> usize {
        self.operator.dim()
    }

    pub fn operator(&self) -> &Arc<dyn Operator<T>> {
        &self.operator
    }

    pub fn eval(&self, z: &Point<T>) -> Point<T> {
        self.operator.eval(z)
    }

    pub fn objective(&self, z: &Point<T>) -> Option<T> {
        self.operator.objective(z)
    }

    /// Verifies the weak (Minty) inequality `<g(x), x* - x> <= tol` at
    /// `samples` feasible points. Cheap certificate that a recorded solution
    /// is plausible; not a proof.
    pub fn check_solution<R: Rng>(&self, samples: usize, tol: T, rng: &mut R) -> Result<()> {
        let sol = self.known_solution.as_ref().ok_or_else(|| {
            Error::InvalidParam("no known solution recorded on this problem".into())
        })?;
        if !self.set.contains(sol, cast(1e-9)) {
            return Err(Error::Infeasible("known solution outside the set".into()));
        }
        for i in 0..samples {
            let x = self.set.sample_projected(rng);
            let g = self.eval(&x);
            let lhs = g.dot(&sol.sub(&x));
            if lhs > tol {
                return Err(Error::InvariantViolation(format!(
                    "Minty inequality violated at sample {i}: <g(x), x*-x> = {lhs}"
                )));
            }
        }
        Ok(())
    }
}

impl<T: Real> std::fmt::Debug for VIProblem<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("VIProblem")
            .field("dim", &self.dim())
            .field("mu", &self.mu)
            .field("known_l", &self.known_l)
            .field("has_solution", &self.known_solution.is_some())
            .finish()
    }
}
