//! Scalar abstraction: all core math is generic over an IEEE float type.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar the solvers operate on (`f32` or `f64`).
pub trait Real:
    Float
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum<Self>
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Real for T where
    T: Float
        + FromPrimitive
        + ToPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Sum<T>
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Converts an `f64` constant into `T`.
///
/// Panics if the value is not representable at all (never happens for the
/// constants used in this crate).
pub(crate) fn cast<T: Real>(v: f64) -> T {
    T::from_f64(v).expect("constant not representable in scalar type")
}

pub(crate) fn two<T: Real>() -> T {
    T::one() + T::one()
}

pub(crate) fn half<T: Real>() -> T {
    T::one() / two()
}

/// Strictly positive and finite; NaN and infinities fail.
pub(crate) fn positive<T: Real>(v: T) -> bool {
    v > T::zero() && v.is_finite()
}

/// Smallest usable positive value for the line-search underflow guard.
pub(crate) fn l_floor<T: Real>() -> T {
    match T::from_f64(1e-300) {
        Some(v) if v > T::zero() => v,
        _ => T::min_positive_value(),
    }
}
