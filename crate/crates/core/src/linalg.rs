//! Minimal dense matrix support: the coupling matrix of the saddle operator
//! and the constraint coefficients of the covering-ball problem.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::Point;
use crate::scalar::{cast, Real};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Real> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::InvalidParam(format!(
                "matrix shape {}x{} does not match {} entries",
                rows,
                cols,
                data.len()
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                name: "matrix entry",
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// `A v` with `v` of length `cols`.
    pub fn matvec(&self, v: &Point<T>) -> Point<T> {
        debug_assert_eq!(v.dim(), self.cols);
        let out: Vec<T> = self
            .data
            .chunks_exact(self.cols)
            .map(|row| row.iter().zip(v.as_slice()).map(|(&a, &b)| a * b).sum())
            .collect();
        Point::from_vec(out)
    }

    /// `A^T u` with `u` of length `rows`.
    pub fn t_matvec(&self, u: &Point<T>) -> Point<T> {
        debug_assert_eq!(u.dim(), self.rows);
        let mut out = vec![T::zero(); self.cols];
        for (row, &ur) in self.data.chunks_exact(self.cols).zip(u.as_slice()) {
            for (o, &a) in out.iter_mut().zip(row) {
                *o += a * ur;
            }
        }
        Point::from_vec(out)
    }

    /// Spectral norm `||A||_2` via power iteration on `A^T A`.
    pub fn spectral_norm(&self) -> T {
        // Deterministic start vector, slightly tilted to avoid symmetry traps.
        let coords: Vec<T> = (0..self.cols)
            .map(|i| T::one() + cast::<T>(i as f64) * cast::<T>(1e-3))
            .collect();
        let mut v = Point::from_vec(coords);
        let nrm = v.norm();
        v = v.scale(T::one() / nrm);
        let mut sigma_sq = T::zero();
        let tol = cast::<T>(1e-14);
        for _ in 0..10_000 {
            let av = self.matvec(&v);
            let atav = self.t_matvec(&av);
            let next_sigma_sq = atav.norm();
            if next_sigma_sq == T::zero() {
                return T::zero();
            }
            v = atav.scale(T::one() / next_sigma_sq);
            let rel = ((next_sigma_sq - sigma_sq) / next_sigma_sq).abs();
            sigma_sq = next_sigma_sq;
            if rel < tol {
                break;
            }
        }
        sigma_sq.sqrt()
    }
}
