//! Relativistic two-body scattering built on the SO(3,1) dynamical algebra.
//!
//! The crate provides, bottom up:
//!
//! * [`specfun`] — complex log-Gamma, Gamma ratios, Legendre polynomials and
//!   the Coulomb phase;
//! * [`kinematics`] — the (p1, p2) <-> (P, k) change of variables, Mandelstam
//!   invariants, Jacobian and velocity maps;
//! * [`so31`] — truncated matrix realizations of the spinless principal-series
//!   representations, their commutators and Casimir operators;
//! * [`smatrix`] — partial-wave S-matrix elements from the intertwining
//!   recurrence and its closed form, plus matrix-level verification;
//! * [`amplitude`] — scattering amplitudes (regularized partial-wave sum and
//!   closed form), Coulomb/Mott cross sections and the invariant amplitude.
//!
//! Natural units (hbar = c = 1) are used throughout.

pub mod amplitude;
pub mod error;
pub mod kinematics;
pub mod matrix;
pub mod smatrix;
pub mod so31;
pub mod specfun;

pub use error::{Error, Result};
pub use matrix::CMatrix;

pub use num_complex::Complex64;
