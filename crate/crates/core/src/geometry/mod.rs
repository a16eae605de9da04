//! Prox-functions, Bregman divergences, feasible sets and the exact argmin
//! subproblems shared by all solvers.

mod prox;
mod set;

pub use prox::{bregman, max_bregman_radius, mixed_prox_step, prox_step, ProxSetup};
pub use set::FeasibleSet;

pub(crate) use set::standard_normal;
