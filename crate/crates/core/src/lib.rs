//! Exact-arithmetic toolkit for boundary divisor pairs on Richardson
//! varieties in symmetrizable Kac-Moody flag varieties.
//!
//! The crate builds the divisor data attached to a Bruhat interval `[v, w]`
//! (boundary components with integer multiplicities, the rational pair
//! coefficients, discrepancy tables), validates it against independent
//! routes (Chevalley chain degrees, symbolic chart valuations), and
//! certifies Frobenius splitting of small type A Richardson coordinate
//! rings in positive characteristic.
//!
//! All computation is exact: integers, rationals, and prime fields. The
//! polynomial layer is generic over the coefficient field through the
//! [`poly::Field`] trait; the concrete instantiations used throughout are
//! aliased below.

pub mod cartan;
pub mod error;
pub mod weyl;
pub mod richardson;
pub mod poly;
pub mod typea;
pub mod bsdh;
pub mod fsplit;

pub use error::{Error, Result};

/// Exact rational scalar for divisor coefficients.
pub type Rat = num_rational::Rational64;

/// Characteristic-zero polynomial coefficients.
pub type Q = num_rational::BigRational;

/// Prime fields supported by the splitting computations.
pub type F2 = poly::Fp<2>;
pub type F3 = poly::Fp<3>;
pub type F5 = poly::Fp<5>;
pub type F7 = poly::Fp<7>;

/// Polynomials over the rationals and over the supported prime fields.
pub type QPoly = poly::SparsePolynomial<Q>;
pub type F2Poly = poly::SparsePolynomial<F2>;
pub type F3Poly = poly::SparsePolynomial<F3>;
pub type F5Poly = poly::SparsePolynomial<F5>;
pub type F7Poly = poly::SparsePolynomial<F7>;
