//! Vanishing ideals, Gröbner bases, Hilbert functions and evaluation codes of
//! affine toric sets parameterized by disjoint unions of odd cycles over small
//! finite fields.
//!
//! Every closed form is paired with an independent route: footprint counting,
//! the union-of-boxes formula and evaluation-matrix rank for the Hilbert
//! function; stabilization for the regularity index; enumeration for the size
//! of the toric set.

pub mod cli;
pub mod codes;
pub mod cyclegraph;
pub mod error;
pub mod gf;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
pub use gf::{Fe, Field};

/// Exact counts of monomials and points.
pub type Count = num_bigint::BigUint;
/// Signed exact integers (inclusion–exclusion coefficients, β values).
pub type Integer = num_bigint::BigInt;
/// Exact rationals used by the fraction-free solver.
pub type Rational = num_rational::BigRational;
