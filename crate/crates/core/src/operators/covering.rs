//! Lagrangian saddle operator of the smallest-covering-ball problem with
//! quadratic functional constraints, plus its seeded instance generators.
//!
//! The primal objective is `psi(x) = max_k ||x - A_k||^2` subject to
//! `phi_p(x) = sum_i alpha_{p i} x_i^2 - 5 <= 0` and `x` in a compact set.
//! The VI operator over `(x, lambda)` is the standard Lagrangian one:
//! `G(x, lambda) = (dpsi(x) + sum_p lambda_p grad phi_p(x), -phi(x))`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{standard_normal, FeasibleSet};
use crate::linalg::Matrix;
use crate::operators::{Operator, VIProblem};
use crate::point::{BlockPoint, Point};
use crate::scalar::{cast, two, Real};

/// Distribution the constraint coefficients are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoeffCase {
    /// Pareto II (Lomax) with shape 10 and scale 1; mean 1/9.
    Lomax10,
    /// Chi-square with 3 degrees of freedom; mean 3.
    ChiSq3,
}

/// Constraint offset in `phi_p(x) = sum_i alpha_{p i} x_i^2 - 5`.
const CONSTRAINT_OFFSET: f64 = 5.0;

/// Default box bound on the Lagrange multipliers.
pub const DEFAULT_DUAL_CAP: f64 = 10.0;

/// Default primal feasible set radius; comfortably contains the generated
/// anchor-point cloud.
pub const DEFAULT_PRIMAL_RADIUS: f64 = 5.0;

/// A generated covering-ball instance. Serializable so bench runs are
/// replayable.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoveringBallProblem<T> {
    pub n: usize,
    pub m: usize,
    pub s: usize,
    pub seed: u64,
    pub case: CoeffCase,
    pub points_a: Vec<Point<T>>,
    pub alpha: Matrix<T>,
    pub dual_cap: T,
    pub primal_set: FeasibleSet<T>,
}

impl<T: Real> CoveringBallProblem<T> {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.m == 0 || self.s == 0 {
            return Err(Error::InvalidParam("dims must be >= 1".into()));
        }
        if self.points_a.len() != self.s || self.points_a.iter().any(|p| p.dim() != self.n) {
            return Err(Error::InvalidParam("anchor point shape mismatch".into()));
        }
        if self.alpha.rows() != self.m || self.alpha.cols() != self.n {
            return Err(Error::InvalidParam("alpha shape mismatch".into()));
        }
        for r in 0..self.m {
            if self.alpha.row(r).iter().any(|&v| v < T::zero()) {
                return Err(Error::InvalidParam("alpha entries must be >= 0".into()));
            }
        }
        if !crate::scalar::positive(self.dual_cap) {
            return Err(Error::NonPositive {
                name: "dual_cap",
                value: self.dual_cap.to_f64().unwrap_or(f64::NAN),
            });
        }
        if self.primal_set.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: self.primal_set.dim(),
            });
        }
        Ok(())
    }

    /// Index of the farthest anchor point (smallest index on ties), defining
    /// the subgradient selection of `psi`.
    pub fn farthest_index(&self, x: &Point<T>) -> usize {
        let mut best = 0;
        let mut best_d = x.dist_sq(&self.points_a[0]);
        for (k, a) in self.points_a.iter().enumerate().skip(1) {
            let d = x.dist_sq(a);
            if d > best_d {
                best = k;
                best_d = d;
            }
        }
        best
    }

    /// `psi(x) = max_k ||x - A_k||^2`, the reported objective.
    pub fn objective(&self, x: &Point<T>) -> T {
        x.dist_sq(&self.points_a[self.farthest_index(x)])
    }

    /// `phi_p(x)` for all `p`.
    pub fn constraints(&self, x: &Point<T>) -> Vec<T> {
        (0..self.m)
            .map(|p| {
                let mut acc = -cast::<T>(CONSTRAINT_OFFSET);
                for (i, &xi) in x.as_slice().iter().enumerate() {
                    acc += self.alpha.get(p, i) * xi * xi;
                }
                acc
            })
            .collect()
    }

    /// Joint feasible set `primal_set x [0, dual_cap]^m`.
    pub fn joint_set(&self) -> Result<FeasibleSet<T>> {
        FeasibleSet::product(vec![
            self.primal_set.clone(),
            FeasibleSet::dual_box(self.m, self.dual_cap)?,
        ])
    }

    /// Wraps the instance into a VI over `(x, lambda)`.
    ///
    /// `mu` is the modulus handed to the mu-dependent solvers; it defaults to
    /// 2 (each `||x - A_k||^2` is 2-strongly convex in `x`) even though the
    /// multiplier block contributes no strong monotonicity, hence it is
    /// configurable.
    pub fn into_problem(self, mu: T) -> Result<VIProblem<T>> {
        self.validate()?;
        let set = self.joint_set()?;
        let op = CoveringBallOperator {
            problem: Arc::new(self),
        };
        VIProblem::new(Arc::new(op), set, mu)
    }

    pub fn default_mu() -> T {
        two()
    }
}

/// Checked evaluation of the Lagrangian operator at a primal/dual pair.
///
/// Returns the `(x, lambda)`-blocked value
/// `(2 (x - A_k*) + 2 sum_p lambda_p (alpha_p . x), (5 - sum_i alpha_{p i} x_i^2)_p)`.
pub fn eval_covering_ball<T: Real>(
    prob: &CoveringBallProblem<T>,
    x: &Point<T>,
    lam: &Point<T>,
) -> Result<BlockPoint<T>> {
    if x.dim() != prob.n {
        return Err(Error::DimensionMismatch {
            expected: prob.n,
            got: x.dim(),
        });
    }
    if lam.dim() != prob.m {
        return Err(Error::DimensionMismatch {
            expected: prob.m,
            got: lam.dim(),
        });
    }
    let tol = cast::<T>(1e-12);
    for &l in lam.iter() {
        if l < -tol || l > prob.dual_cap + tol {
            return Err(Error::Infeasible(format!(
                "multiplier {l} outside [0, {}]",
                prob.dual_cap
            )));
        }
    }
    Ok(eval_covering_ball_unchecked(prob, x, lam))
}

fn eval_covering_ball_unchecked<T: Real>(
    prob: &CoveringBallProblem<T>,
    x: &Point<T>,
    lam: &Point<T>,
) -> BlockPoint<T> {
    let k_star = prob.farthest_index(x);
    let anchor = &prob.points_a[k_star];
    let mut x_block: Vec<T> = x
        .as_slice()
        .iter()
        .zip(anchor.as_slice())
        .map(|(&xi, &ai)| two::<T>() * (xi - ai))
        .collect();
    for (p, &lp) in lam.iter().enumerate() {
        if lp != T::zero() {
            for (i, xb) in x_block.iter_mut().enumerate() {
                *xb += two::<T>() * lp * prob.alpha.get(p, i) * x[i];
            }
        }
    }
    let lam_block: Vec<T> = prob.constraints(x).into_iter().map(|c| -c).collect();
    BlockPoint::from_blocks(&[&Point::from_vec(x_block), &Point::from_vec(lam_block)])
}

/// Operator adapter over the flattened `(x, lambda)` variable.
pub struct CoveringBallOperator<T> {
    problem: Arc<CoveringBallProblem<T>>,
}

impl<T: Real> CoveringBallOperator<T> {
    pub fn problem(&self) -> &CoveringBallProblem<T> {
        &self.problem
    }
}

impl<T: Real> Operator<T> for CoveringBallOperator<T> {
    fn dim(&self) -> usize {
        self.problem.n + self.problem.m
    }

    fn eval(&self, z: &Point<T>) -> Point<T> {
        let n = self.problem.n;
        let x = Point::from_vec(z.as_slice()[..n].to_vec());
        let lam = Point::from_vec(z.as_slice()[n..].to_vec());
        eval_covering_ball(&self.problem, &x, &lam)
            .expect("infeasible multiplier reached the operator")
            .into_point()
    }

    fn objective(&self, z: &Point<T>) -> Option<T> {
        let x = Point::from_vec(z.as_slice()[..self.problem.n].to_vec());
        Some(self.problem.objective(&x))
    }
}

/// Draws an instance: `alpha` i.i.d. from the case distribution, anchor
/// points with i.i.d. standard-normal coordinates. Deterministic in the seed.
pub fn gen_covering_ball<T: Real>(
    seed: u64,
    n: usize,
    m: usize,
    s: usize,
    case: CoeffCase,
) -> Result<CoveringBallProblem<T>> {
    if n == 0 || m == 0 || s == 0 {
        return Err(Error::InvalidParam("dims must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alpha_data: Vec<T> = (0..m * n)
        .map(|_| cast::<T>(sample_case(case, &mut rng)))
        .collect();
    let alpha = Matrix::new(m, n, alpha_data)?;
    let points_a: Vec<Point<T>> = (0..s)
        .map(|_| {
            Point::from_vec(
                (0..n)
                    .map(|_| cast::<T>(standard_normal(&mut rng)))
                    .collect(),
            )
        })
        .collect();
    let prob = CoveringBallProblem {
        n,
        m,
        s,
        seed,
        case,
        points_a,
        alpha,
        dual_cap: cast(DEFAULT_DUAL_CAP),
        primal_set: FeasibleSet::origin_ball(n, cast(DEFAULT_PRIMAL_RADIUS))?,
    };
    prob.validate()?;
    Ok(prob)
}

pub(crate) fn sample_case<R: Rng>(case: CoeffCase, rng: &mut R) -> f64 {
    match case {
        // Inverse CDF: scale * ((1 - U)^(-1/shape) - 1), shape 10, scale 1.
        CoeffCase::Lomax10 => {
            let u: f64 = rng.random();
            (1.0 - u).powf(-0.1) - 1.0
        }
        // Sum of 3 squared standard normals.
        CoeffCase::ChiSq3 => (0..3)
            .map(|_| {
                let g = standard_normal(rng);
                g * g
            })
            .sum(),
    }
}
