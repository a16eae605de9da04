//! Doubling backtracking search shared by every solver.

use crate::error::{Error, Result};
use crate::scalar::{l_floor, positive, two, Real};

/// Outcome of a successful search: the accepted constant, the number of the
/// accepted trial, and whatever the step builder produced at it.
#[derive(Clone, Debug)]
pub struct LineSearchResult<T, P> {
    pub l: T,
    pub trials: usize,
    pub payload: P,
}

/// Finds the smallest trial index `i >= 0` such that the candidate constant
/// `L = 2^(i-1) * l_prev` satisfies `condition`. The step builder runs at
/// every trial because both argmin subproblems depend on `L`.
///
/// `trials` in the result is the accepted `i`. The first trial is
/// `l_prev / 2` (guarded against underflow), so an always-true condition
/// halves the constant. Exceeding `cap` aborts with a diagnostic: in
/// practice it means the modulus and the operator are inconsistent or the
/// arithmetic has broken down.
pub fn line_search<T: Real, P>(
    l_prev: T,
    cap: usize,
    mut build: impl FnMut(T) -> Result<P>,
    condition: impl Fn(T, &P) -> bool,
) -> Result<LineSearchResult<T, P>> {
    if !positive(l_prev) {
        return Err(Error::NonPositive {
            name: "l_prev",
            value: l_prev.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut l = (l_prev / two::<T>()).max(l_floor());
    for i in 0..cap {
        let payload = build(l)?;
        if condition(l, &payload) {
            return Ok(LineSearchResult {
                l,
                trials: i,
                payload,
            });
        }
        l *= two::<T>();
    }
    Err(Error::LineSearchExhausted {
        iter: 0,
        trials: cap,
        last_l: l.to_f64().unwrap_or(f64::NAN),
    })
}
