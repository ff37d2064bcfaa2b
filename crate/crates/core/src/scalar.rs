//! Scalar types: exact rationals and their complexification.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;

/// Exact rational scalar. `BigRational` keeps values in canonical reduced
/// form (positive denominator, gcd one), so equality is structural.
pub type Scalar = BigRational;

/// Complexified scalar: a pair of rationals `re + im*i`.
pub type CScalar = Complex<Scalar>;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational scalar `n/d`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse(text: &str) -> Option<Scalar> {
    text.trim().parse::<BigRational>().ok()
}
