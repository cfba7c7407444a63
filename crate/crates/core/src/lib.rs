//! Exact McKay quivers of finite groups.
//!
//! Groups are modelled by their character tables with values in cyclotomic
//! fields; all arithmetic is exact. The generic building blocks
//! ([`Cyc`], [`Matrix`], [`Poly`]) are parameterized by the scalar type and
//! the aliases below fix the instantiations used throughout the crate.

pub mod catalog;
pub mod chartab;
pub mod cyclotomic;
pub mod galois;
pub mod linalg;
pub mod mckay;
pub mod poly;
pub mod quiver;
pub mod scalar;

#[cfg(test)]
mod testdata;

use num_bigint::BigInt;

pub use catalog::{build, GroupSpec};
pub use chartab::{CharacterTable, ClassFunction, ConjClass, TableError};
pub use cyclotomic::{Cyc, NotRational, ParseError};
pub use galois::IntPolynomial;
pub use linalg::Matrix;
pub use mckay::{mckay_matrix, McKayQuiver};
pub use poly::Poly;
pub use quiver::Quiver;
pub use scalar::{FieldScalar, Scalar};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Element of a cyclotomic field with rational coordinates.
pub type Cyclotomic = Cyc<Rational>;

/// Polynomial with rational coefficients.
pub type RationalPoly = Poly<Rational>;

/// Exact rational matrix.
pub type RationalMatrix = Matrix<Rational>;

/// Arbitrary-precision integer matrix.
pub type IntMatrix = Matrix<BigInt>;
