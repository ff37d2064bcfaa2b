//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inversion of an element on the null cone.
    #[error("element is not invertible (norm is zero)")]
    NotInvertible,
    /// Polynomial division by a divisor whose leading coefficient has no
    /// inverse.
    #[error("divisor leading coefficient is not invertible")]
    DivisorLeadingCoefficientNotInvertible,
    /// The zero polynomial was passed where a nonzero one is required.
    #[error("zero polynomial")]
    ZeroPolynomial,
    /// Monicization of a polynomial whose norm polynomial vanishes.
    #[error("norm polynomial is identically zero")]
    NormIdenticallyZero,
    /// Splitting of a real polynomial of odd degree.
    #[error("polynomial has odd degree")]
    OddDegree,
    /// Splitting into quadratics needs irrational coefficients.
    #[error("norm polynomial has no splitting into rational quadratics")]
    IrrationalSplitting,
    /// A generic step was requested on a non-generic input.
    #[error("remainder has no unique zero (non-generic input)")]
    NotGeneric,
    /// Affine zero plane parameters do not span a common ruling.
    #[error("points do not lie on a common ruling")]
    NotOnCommonRuling,
    /// The requested common zero of a quadratic and a remainder line does
    /// not exist.
    #[error("no common zero exists")]
    NoCommonZero,
    /// A singular Clifford translation annihilated the point.
    #[error("translation maps the point to zero")]
    AnnihilatedToZero,
    /// The multiplier search gave up after the candidate cap.
    #[error("multiplier search exhausted its candidate budget")]
    SearchExhausted,
    /// A supplied multiplier override fails the selection conditions.
    #[error("multiplier override rejected: {0}")]
    OverrideRejected(String),
    /// Quadrance of a point on the null circle.
    #[error("point lies on the null circle")]
    PointOnNullCircle,
    /// A point with nonzero scalar part was used as a hyperbolic point.
    #[error("representative is not vectorial or is zero")]
    NotAPoint,
    /// The factor tuple does not multiply to the norm polynomial.
    #[error("factor tuple does not match the norm polynomial")]
    TupleMismatch,
    /// Dual quaternion zero set intersection is empty.
    #[error("zero set intersection is empty")]
    EmptyIntersection,
    /// The Study condition fails.
    #[error("Study condition violated")]
    NotAMotionPolynomial,
    /// Motion polynomial factorization outside the supported special case.
    #[error("unsupported motion polynomial special case: {0}")]
    Unsupported(String),
    /// Malformed JSON for a polynomial.
    #[error("invalid polynomial JSON: {0}")]
    InvalidJson(String),
}
