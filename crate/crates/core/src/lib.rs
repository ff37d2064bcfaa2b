//! Exact computer algebra for split quaternion polynomials and rational
//! motions in the hyperbolic plane.
//!
//! The library provides:
//!
//! - exact split quaternion arithmetic over arbitrary precision rationals,
//!   together with a complexified variant ([`algebra`]),
//! - the non-commutative polynomial ring `S[t]` with left/right division,
//!   evaluation, norm polynomials, reduction and monicization ([`poly`]),
//! - real polynomial utilities: gcd, squarefree part, rational roots and
//!   the enumeration of quadratic splittings of norm polynomials
//!   ([`realpoly`]),
//! - the geometry of the null quadric: line classification, affine planes
//!   of zeros and common-zero solvers ([`geometry`]),
//! - factorization of split quaternion polynomials into linear factors,
//!   a factorizability decision procedure and the real-multiplier
//!   construction for non-factorizable inputs ([`factor`]),
//! - hyperbolic kinematics: rotations, quadrance and trajectory sampling
//!   ([`motion`]),
//! - dual quaternion motion polynomials and their factorization ([`euclid`]),
//! - a small expression parser and pretty printer shared by the command
//!   line tool and the tests ([`expr`]).
//!
//! All arithmetic is exact; algebraic identities hold as decidable
//! equalities and tests assert them without tolerances.

pub mod algebra;
pub mod error;
pub mod euclid;
pub mod expr;
pub mod factor;
pub mod geometry;
pub mod motion;
pub mod poly;
pub mod realpoly;
pub mod scalar;

pub use algebra::{ComplexSplitQuaternion, Ring, SplitQuaternion};
pub use error::Error;
pub use poly::{ComplexSplitPolynomial, Poly, RealPolynomial, SplitPolynomial};
pub use realpoly::QuadraticFactor;
pub use scalar::{CScalar, Scalar};

/// Side selector shared by zero solvers, rulings and factor extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}
