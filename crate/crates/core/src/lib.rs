//! Isoparametric families of OT-FKM type.
//!
//! This crate constructs symmetric Clifford systems with exact integer
//! matrices, evaluates the associated degree-4 Cartan-Munzner polynomial and
//! its differential identities, samples the focal submanifolds M+ and M- with
//! orthonormal frames and shape operators, computes sectional and Ricci
//! curvature through the Gauss equation (including multi-start minimum
//! scans), carries pointwise shape-operator models for the homogeneous g = 6
//! and g = 4 focal submanifolds, and answers topological classification
//! queries (bundle triviality, product types, parallelizability,
//! Lusternik-Schnirelmann category) with exact Bernoulli-number arithmetic.
//!
//! Numeric kernels are generic over [`scalar::Scalar`] (`f32` or `f64`); the
//! crate-level alias [`Real`] fixes `f64` for the report and CLI layer.

pub mod clifford;
pub mod linalg;
pub mod octonion;
pub mod rng;
pub mod scalar;

/// Concrete scalar used by the CLI and report layer.
pub type Real = f64;

pub use clifford::{
    build_family, build_system, delta_of_m, drop_generator, trace_invariant,
    verify_clifford_relations, CliffordSystem, Sign, SystemVariant,
};
