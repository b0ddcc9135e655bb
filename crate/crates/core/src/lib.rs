//! Analysis of parameterized quantum circuits as differentiable maps.
//!
//! A parameterized circuit assigns to each parameter tuple a unitary matrix;
//! applying that unitary to a fixed initial state traces out a subset of the
//! unit sphere. This crate treats both assignments as differentiable maps and
//! provides the numerical machinery to study them:
//!
//! - [`linalg`] — dense complex-matrix kernels: Hermitian eigendecomposition,
//!   unitary matrix exponentials and logarithms, SVD-based numerical rank,
//!   Gram-determinant volumes.
//! - [`circuit`] — the circuit model: gates with Hermitian generators, the
//!   circuit file format, parameter spaces, compilation to a unitary.
//! - [`statemap`] — the state map and unitary map, their realifications, and
//!   analytic / finite-difference Jacobians.
//! - [`geometry`] — rank reports, superfluous-parameter detection, rank
//!   landscapes, slices, injectivity and good-set scans, volume elements,
//!   open chains over box covers.
//! - [`haar`] — seeded Haar-random unitary sampling and the density-matrix
//!   deviation expressivity metric.

pub mod circuit;
pub mod geometry;
pub mod haar;
pub mod linalg;
pub mod statemap;
