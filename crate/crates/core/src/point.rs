//! Dense vectors and block-partitioned vectors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{half, Real};

/// A dense point in `R^n`. Entries are finite by construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point<T>(Vec<T>);

impl<T: Real> Point<T> {
    /// Validating constructor: every coordinate must be finite, `n >= 1`.
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidParam("point dimension must be >= 1".into()));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite { name: "coordinate" });
        }
        Ok(Point(coords))
    }

    /// Unchecked constructor for values produced by internal arithmetic.
    pub(crate) fn from_vec(coords: Vec<T>) -> Self {
        debug_assert!(coords.iter().all(|c| c.is_finite()), "non-finite point");
        Point(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Point(vec![T::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.0.iter()
    }

    pub fn dot(&self, other: &Self) -> T {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> T {
        self.dot(self)
    }

    pub fn norm(&self) -> T {
        self.norm_sq().sqrt()
    }

    pub fn dist_sq(&self, other: &Self) -> T {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| (a - b) * (a - b))
            .sum()
    }

    pub fn dist(&self, other: &Self) -> T {
        self.dist_sq(other).sqrt()
    }

    /// `0.5 * ||self - other||^2`, the Euclidean Bregman divergence.
    pub fn half_sq_dist(&self, other: &Self) -> T {
        half::<T>() * self.dist_sq(other)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Point(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Point(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect())
    }

    pub fn scale(&self, c: T) -> Self {
        Point(self.0.iter().map(|&a| a * c).collect())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: T, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a + c * b)
                .collect(),
        )
    }

    /// In-place `self += c * other`; used on the solver hot path.
    pub(crate) fn axpy(&mut self, c: T, other: &Self) {
        debug_assert_eq!(self.dim(), other.dim());
        for (a, &b) in self.0.iter_mut().zip(&other.0) {
            *a += c * b;
        }
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

impl<T: Real> std::ops::Index<usize> for Point<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T: Real> From<Point<T>> for Vec<T> {
    fn from(p: Point<T>) -> Vec<T> {
        p.0
    }
}

/// A point partitioned into consecutive blocks, e.g. `(x, y, a, b)` for the
/// lifted saddle operator or `(x, lambda)` for Lagrangian problems.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockPoint<T> {
    point: Point<T>,
    dims: Vec<usize>,
}

impl<T: Real> BlockPoint<T> {
    pub fn new(point: Point<T>, dims: Vec<usize>) -> Result<Self> {
        let total: usize = dims.iter().sum();
        if total != point.dim() || dims.contains(&0) {
            return Err(Error::InvalidParam(format!(
                "block dims {:?} do not partition dimension {}",
                dims,
                point.dim()
            )));
        }
        Ok(BlockPoint { point, dims })
    }

    pub fn from_blocks(blocks: &[&Point<T>]) -> Self {
        let dims: Vec<usize> = blocks.iter().map(|b| b.dim()).collect();
        let mut coords = Vec::with_capacity(dims.iter().sum());
        for b in blocks {
            coords.extend_from_slice(b.as_slice());
        }
        BlockPoint {
            point: Point::from_vec(coords),
            dims,
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.dims.len()
    }

    pub fn block_dims(&self) -> &[usize] {
        &self.dims
    }

    /// Borrow block `i` as a slice.
    pub fn block(&self, i: usize) -> &[T] {
        let start: usize = self.dims[..i].iter().sum();
        &self.point.as_slice()[start..start + self.dims[i]]
    }

    /// Copy block `i` out as a `Point`.
    pub fn block_point(&self, i: usize) -> Point<T> {
        Point::from_vec(self.block(i).to_vec())
    }

    pub fn as_point(&self) -> &Point<T> {
        &self.point
    }

    pub fn into_point(self) -> Point<T> {
        self.point
    }
}
