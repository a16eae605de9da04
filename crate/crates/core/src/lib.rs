//! Adaptive mirror-prox solvers for variational inequalities with relatively
//! strongly monotone operators.
//!
//! The crate provides:
//!
//! * [`geometry`]: Euclidean prox-functions, Bregman divergences, feasible
//!   sets with exact projections, and the closed-form argmin subproblems the
//!   solvers are built from;
//! * [`operators`]: the benchmark operators (identity and diagonal-squares
//!   Minty operators, a Hölder fixture, the lifted bilinear saddle operator
//!   with its smoothness constant, and the covering-ball Lagrangian with
//!   seeded generators);
//! * [`solvers`]: five deterministic iteration engines sharing one
//!   backtracking line search: the universal mirror prox, its restarted
//!   version, and three no-restart variants for strongly monotone operators;
//! * [`estimates`]: closed-form evaluators for every convergence bound and
//!   iteration-count formula, driven by the accepted-L history of a run so
//!   theory can be checked against measurement.
//!
//! All numerics are generic over the scalar type through [`Real`]
//! (`f32` or `f64`); the `*64` aliases below fix the common choice.

pub mod error;
pub mod estimates;
pub mod geometry;
pub mod linalg;
pub mod operators;
pub mod point;
pub mod scalar;
pub mod solvers;

pub use error::{Error, Result};
pub use scalar::Real;

pub use geometry::{bregman, max_bregman_radius, mixed_prox_step, prox_step};
pub use point::{BlockPoint, Point};

/// Concrete aliases for the default double-precision instantiation.
pub type Point64 = Point<f64>;
pub type Point32 = Point<f32>;
pub type FeasibleSet64 = geometry::FeasibleSet<f64>;
pub type ProxSetup64 = geometry::ProxSetup<f64>;
pub type VIProblem64 = operators::VIProblem<f64>;
pub type SolverConfig64 = solvers::SolverConfig<f64>;
pub type RestartConfig64 = solvers::RestartConfig<f64>;
pub type Trace64 = solvers::Trace<f64>;
pub type LHistory64 = estimates::LHistory<f64>;
