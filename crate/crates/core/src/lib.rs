//! Numerical engine for the electromagnetic connection: a complex-valued,
//! torsionful affine connection built directly from E and B.
//!
//! The crate constructs the connection from field models, verifies that the
//! symmetry combinations of its Ricci tensor reproduce Maxwell's equations,
//! extracts ∇·B from a Kronecker-signed torsion-derivative sum, transforms
//! connection components under linearized Lorentz boosts, evaluates the
//! trace of the curvature 2-form, and integrates the extended geodesic
//! equations — including the fourth, time equation — for charged-particle
//! motion and decay-rate asymmetry experiments.
//!
//! Conventions, used everywhere without exception:
//! * coordinates (x⁰, x¹, x², x³) = (ct, x, y, z), Gaussian units;
//! * derivatives are taken with respect to x^a, so the stored time
//!   derivative is (1/c) ∂/∂t;
//! * κ = q/(mc²) is the common multiplier of every connection component.

pub mod algebra;
pub mod boost;
pub mod chern;
pub mod cli;
pub mod config;
pub mod connection;
pub mod curvature;
pub mod field;
pub mod geodesic;
pub mod particle;
pub mod report;

pub use algebra::{levi_civita, sqrt_five_sixths, CScalar, SpacetimePoint, Vec3};
pub use connection::{
    build_connection, build_jet, torsion, torsion_epsilon_sum, Connection, ConnectionJet,
    Placement, Torsion,
};
pub use field::{eval_field, preset, FieldError, FieldModel, FieldSample, PresetParams};
pub use particle::ParticleParams;
