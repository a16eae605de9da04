//! The lifted bilinear saddle operator.
//!
//! A strongly convex-concave problem `min_x max_y x^T A y + h(x) - g(y)` with
//! quadratic `h, g` lifts, via convex conjugates, into a four-block operator
//! over `(x, y, a, b)` that is 1-relatively strongly monotone with respect to
//! its companion prox-function
//! `d(x,y,a,b) = mu_x/2 ||x||^2 + mu_y/2 ||y||^2 + ||a||^2/(2(1-mu_x)) + ||b||^2/(2(1-mu_y))`.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{standard_normal, FeasibleSet};
use crate::linalg::Matrix;
use crate::operators::{Operator, VIProblem};
use crate::point::{BlockPoint, Point};
use crate::scalar::{cast, half, positive, two, Real};

/// Bilinear coupling `f(x, y) = x^T A y` with quadratic regularizers whose
/// strong-convexity weights are `mu_x, mu_y` in `(0, 1)`. Block layout of the
/// lifted variable is `(x, y, a, b)` with dims `(n, m, n, m)`.
#[derive(Clone, Debug)]
pub struct SaddleComposite<T> {
    coupling: Matrix<T>,
    pub mu_x: T,
    pub mu_y: T,
}

impl<T: Real> SaddleComposite<T> {
    pub fn new(coupling: Matrix<T>, mu_x: T, mu_y: T) -> Result<Self> {
        for (name, v) in [("mu_x", mu_x), ("mu_y", mu_y)] {
            if !(v > T::zero() && v < T::one()) {
                return Err(Error::InvalidParam(format!(
                    "{name} must lie in (0, 1), got {v}"
                )));
            }
        }
        Ok(SaddleComposite {
            coupling,
            mu_x,
            mu_y,
        })
    }

    /// Standard-normal coupling matrix, deterministic in the seed.
    pub fn random(n: usize, m: usize, mu_x: T, mu_y: T, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data: Vec<T> = (0..n * m)
            .map(|_| cast::<T>(standard_normal(&mut rng)))
            .collect();
        SaddleComposite::new(Matrix::new(n, m, data)?, mu_x, mu_y)
    }

    pub fn primal_dim(&self) -> usize {
        self.coupling.rows()
    }

    pub fn dual_dim(&self) -> usize {
        self.coupling.cols()
    }

    pub fn total_dim(&self) -> usize {
        2 * (self.primal_dim() + self.dual_dim())
    }

    pub fn block_dims(&self) -> Vec<usize> {
        let (n, m) = (self.primal_dim(), self.dual_dim());
        vec![n, m, n, m]
    }

    pub fn coupling(&self) -> &Matrix<T> {
        &self.coupling
    }

    pub fn coupling_norm(&self) -> T {
        self.coupling.spectral_norm()
    }

    fn split<'a>(&self, z: &'a Point<T>) -> (&'a [T], &'a [T], &'a [T], &'a [T]) {
        let (n, m) = (self.primal_dim(), self.dual_dim());
        let s = z.as_slice();
        (
            &s[0..n],
            &s[n..n + m],
            &s[n + m..2 * n + m],
            &s[2 * n + m..2 * (n + m)],
        )
    }

    /// The four-block operator value
    /// `(a + mu_x x + A y, -b + mu_y y - A^T x, -x + a/(1-mu_x), y + b/(1-mu_y))`.
    pub fn eval_blocks(&self, z: &BlockPoint<T>) -> Result<BlockPoint<T>> {
        if z.block_dims() != self.block_dims().as_slice() {
            return Err(Error::InvalidParam(format!(
                "expected block dims {:?}, got {:?}",
                self.block_dims(),
                z.block_dims()
            )));
        }
        let out = Operator::eval(self, z.as_point());
        BlockPoint::new(out, self.block_dims())
    }

    /// Companion prox-function value at `z`.
    pub fn companion_d(&self, z: &Point<T>) -> T {
        let (x, y, a, b) = self.split(z);
        let sq = |s: &[T]| s.iter().map(|&v| v * v).sum::<T>();
        half::<T>()
            * (self.mu_x * sq(x)
                + self.mu_y * sq(y)
                + sq(a) / (T::one() - self.mu_x)
                + sq(b) / (T::one() - self.mu_y))
    }

    /// Bregman divergence of the companion prox-function: a block-weighted
    /// squared distance.
    pub fn companion_bregman(&self, u: &Point<T>, v: &Point<T>) -> T {
        let (ux, uy, ua, ub) = self.split(u);
        let (vx, vy, va, vb) = self.split(v);
        let sqd = |p: &[T], q: &[T]| p.iter().zip(q).map(|(&a, &b)| (a - b) * (a - b)).sum::<T>();
        half::<T>()
            * (self.mu_x * sqd(ux, vx)
                + self.mu_y * sqd(uy, vy)
                + sqd(ua, va) / (T::one() - self.mu_x)
                + sqd(ub, vb) / (T::one() - self.mu_y))
    }

    /// Per-coordinate weights of the companion quadratic.
    fn companion_weights(&self) -> Vec<T> {
        let (n, m) = (self.primal_dim(), self.dual_dim());
        let mut w = Vec::with_capacity(self.total_dim());
        w.extend(std::iter::repeat_n(self.mu_x, n));
        w.extend(std::iter::repeat_n(self.mu_y, m));
        w.extend(std::iter::repeat_n(T::one() / (T::one() - self.mu_x), n));
        w.extend(std::iter::repeat_n(T::one() / (T::one() - self.mu_y), m));
        w
    }

    /// Smoothness constant of the lifted operator with respect to its
    /// companion geometry at `nu = 1`: `||A||_2 / sqrt(mu_x mu_y)`.
    pub fn smoothness(&self) -> T {
        ltilde(
            T::one(),
            T::one(),
            T::zero(),
            self.coupling_norm(),
            T::zero(),
            self.mu_x,
            self.mu_y,
        )
        .expect("nu = 1 accepts any delta")
    }

    /// The same VI expressed in coordinates `z' = D^(1/2) z`, where `D` holds
    /// the companion weights. In these coordinates the companion Bregman
    /// divergence is the plain Euclidean one, so the Euclidean-prox solvers
    /// run with modulus `mu = 1` and smoothness `self.smoothness()`, exactly
    /// matching the lifted operator's certificates. The solution stays at the
    /// origin; the feasible set is the origin ball of the given radius.
    pub fn preconditioned_problem(self: &Arc<Self>, radius: T) -> Result<VIProblem<T>> {
        let weights = self.companion_weights();
        let dim = self.total_dim();
        let op = PreconditionedOperator {
            inner: Arc::clone(self) as Arc<dyn Operator<T>>,
            inv_sqrt: weights.iter().map(|&w| T::one() / w.sqrt()).collect(),
        };
        let set = FeasibleSet::origin_ball(dim, radius)?;
        let l = self.smoothness();
        Ok(VIProblem::new(Arc::new(op), set, T::one())?
            .with_known_l(l)
            .with_known_nu(T::one())
            .with_known_solution(Point::zeros(dim)))
    }
}

impl<T: Real> Operator<T> for SaddleComposite<T> {
    fn dim(&self) -> usize {
        self.total_dim()
    }

    fn eval(&self, z: &Point<T>) -> Point<T> {
        debug_assert_eq!(z.dim(), self.total_dim());
        let (x, y, a, b) = self.split(z);
        let xp = Point::from_vec(x.to_vec());
        let yp = Point::from_vec(y.to_vec());
        let ay = self.coupling.matvec(&yp);
        let atx = self.coupling.t_matvec(&xp);
        let mut out = Vec::with_capacity(self.total_dim());
        // x-block: a + mu_x x + A y
        for i in 0..x.len() {
            out.push(a[i] + self.mu_x * x[i] + ay[i]);
        }
        // y-block: -b + mu_y y - A^T x
        for j in 0..y.len() {
            out.push(-b[j] + self.mu_y * y[j] - atx[j]);
        }
        // a-block: -x + a / (1 - mu_x)
        for i in 0..x.len() {
            out.push(-x[i] + a[i] / (T::one() - self.mu_x));
        }
        // b-block: y + b / (1 - mu_y)
        for j in 0..y.len() {
            out.push(y[j] + b[j] / (T::one() - self.mu_y));
        }
        Point::from_vec(out)
    }
}

/// `g'(z') = D^(-1/2) g(D^(-1/2) z')` for a diagonal weight matrix `D`:
/// the change of variables that turns a diagonal-quadratic prox geometry into
/// the Euclidean one.
pub struct PreconditionedOperator<T> {
    inner: Arc<dyn Operator<T>>,
    inv_sqrt: Vec<T>,
}

impl<T: Real> Operator<T> for PreconditionedOperator<T> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn eval(&self, z: &Point<T>) -> Point<T> {
        let original = Point::from_vec(
            z.as_slice()
                .iter()
                .zip(&self.inv_sqrt)
                .map(|(&v, &s)| v * s)
                .collect(),
        );
        let g = self.inner.eval(&original);
        Point::from_vec(
            g.as_slice()
                .iter()
                .zip(&self.inv_sqrt)
                .map(|(&v, &s)| v * s)
                .collect(),
        )
    }
}

/// Generalized smoothness constant
/// `(2/delta)^((1-nu)/(1+nu)) * (L_xx^(2/(1+nu))/mu_x + L_xy^(2/(1+nu))/sqrt(mu_x mu_y) + L_yy^(2/(1+nu))/mu_y)`.
///
/// At `nu = 1` the delta factor degenerates to 1 and any `delta` is accepted;
/// for `nu < 1` the factor diverges as `delta -> 0`, so `delta > 0` is
/// required there.
pub fn ltilde<T: Real>(delta: T, nu: T, l_xx: T, l_xy: T, l_yy: T, mu_x: T, mu_y: T) -> Result<T> {
    if nu < T::zero() || nu > T::one() {
        return Err(Error::InvalidParam(format!(
            "nu must be in [0, 1], got {nu}"
        )));
    }
    for (name, v) in [("mu_x", mu_x), ("mu_y", mu_y)] {
        if !positive(v) {
            return Err(Error::NonPositive {
                name,
                value: v.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    for (name, v) in [("l_xx", l_xx), ("l_xy", l_xy), ("l_yy", l_yy)] {
        if v < T::zero() {
            return Err(Error::InvalidParam(format!("{name} must be >= 0, got {v}")));
        }
    }
    let one = T::one();
    let inner_exp = two::<T>() / (one + nu);
    let sum = l_xx.powf(inner_exp) / mu_x
        + l_xy.powf(inner_exp) / (mu_x * mu_y).sqrt()
        + l_yy.powf(inner_exp) / mu_y;
    if nu == one {
        return Ok(sum);
    }
    if !positive(delta) {
        return Err(Error::NonPositive {
            name: "delta",
            value: delta.to_f64().unwrap_or(f64::NAN),
        });
    }
    let outer_exp = (one - nu) / (one + nu);
    Ok((two::<T>() / delta).powf(outer_exp) * sum)
}
