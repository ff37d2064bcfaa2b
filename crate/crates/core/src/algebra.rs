//! Exact split quaternion arithmetic over rational scalars, with a
//! complexified variant.
//!
//! A split quaternion is `h = h0 + h1*i + h2*j + h3*k` subject to the
//! generating relations `i^2 = -j^2 = -k^2 = -ijk = -1`. The quadratic form
//! `h*conj(h) = h0^2 + h1^2 - h2^2 - h3^2` has signature (2,2); its zero set
//! is the null cone of zero divisors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{CScalar, Scalar};

/// Coefficient ring abstraction: the exact rings the polynomial and
/// quaternion machinery is instantiated with.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// Multiplicative inverse, `None` when the element has none.
    fn inverse(&self) -> Option<Self>;
}

impl Ring for Scalar {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Ring for CScalar {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.inv())
        }
    }
}

/// Unit multiplication table for the basis (1, i, j, k): entry `[a][b]`
/// is `(c, sign)` with `e_a * e_b = sign * e_c`. Derived once from the
/// generating relations; the unit tests cross-check it against them.
const UNIT_MUL: [[(usize, i8); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, -1), (3, 1), (2, -1)],
    [(2, 1), (3, -1), (0, 1), (1, -1)],
    [(3, 1), (2, 1), (1, 1), (0, 1)],
];

/// Split quaternion with coefficients in `T`.
///
/// `SplitQuaternion<Scalar>` is the rational algebra; the complexified
/// variant is [`ComplexSplitQuaternion`].
#[derive(Clone, PartialEq, Eq)]
pub struct SplitQuaternion<T = Scalar> {
    pub h0: T,
    pub h1: T,
    pub h2: T,
    pub h3: T,
}

/// Split quaternions with complex rational coefficients.
pub type ComplexSplitQuaternion = SplitQuaternion<CScalar>;

impl<T: Ring> SplitQuaternion<T> {
    pub fn new(h0: T, h1: T, h2: T, h3: T) -> Self {
        SplitQuaternion { h0, h1, h2, h3 }
    }

    pub fn from_scalar(s: T) -> Self {
        SplitQuaternion::new(s, T::zero(), T::zero(), T::zero())
    }

    pub fn unit_i() -> Self {
        SplitQuaternion::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn unit_j() -> Self {
        SplitQuaternion::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn unit_k() -> Self {
        SplitQuaternion::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn components(&self) -> [&T; 4] {
        [&self.h0, &self.h1, &self.h2, &self.h3]
    }

    fn from_components(c: [T; 4]) -> Self {
        let [h0, h1, h2, h3] = c;
        SplitQuaternion::new(h0, h1, h2, h3)
    }

    /// Conjugate: negates the i, j, k components.
    pub fn conj(&self) -> Self {
        SplitQuaternion::new(
            self.h0.clone(),
            -self.h1.clone(),
            -self.h2.clone(),
            -self.h3.clone(),
        )
    }

    /// The quadratic form `h*conj(h) = h0^2 + h1^2 - h2^2 - h3^2`. It can
    /// be negative; invertibility is equivalent to a nonzero norm.
    pub fn norm(&self) -> T {
        let sq = |x: &T| x.clone() * x.clone();
        sq(&self.h0) + sq(&self.h1) - sq(&self.h2) - sq(&self.h3)
    }

    pub fn scalar_part(&self) -> T {
        self.h0.clone()
    }

    pub fn vector_part(&self) -> Self {
        SplitQuaternion::new(
            T::zero(),
            self.h1.clone(),
            self.h2.clone(),
            self.h3.clone(),
        )
    }

    /// `h^{-1} = (h*conj(h))^{-1} * conj(h)`; exists iff the norm is nonzero.
    pub fn inverse(&self) -> Result<Self, crate::Error> {
        match self.norm().inverse() {
            Some(n) => Ok(self.conj().scale(&n)),
            None => Err(crate::Error::NotInvertible),
        }
    }

    /// Symmetric bilinear form `<h,g> = (h*conj(g) + g*conj(h)) / 2`.
    pub fn scalar_product(&self, other: &Self) -> T {
        let h = self.components();
        let g = other.components();
        h[0].clone() * g[0].clone() + h[1].clone() * g[1].clone()
            - h[2].clone() * g[2].clone()
            - h[3].clone() * g[3].clone()
    }

    /// Commutator-based cross product `(h*g - g*h) / 2`; depends only on
    /// the vector parts.
    pub fn cross(&self, other: &Self) -> Self {
        let hg = self.clone() * other.clone();
        let gh = other.clone() * self.clone();
        let d = hg - gh;
        // All components of h*g - g*h are even; halving stays exact over
        // the rings used here because the diagonal terms cancel and each
        // off-diagonal term appears twice.
        SplitQuaternion::from_components([
            halve(d.h0),
            halve(d.h1),
            halve(d.h2),
            halve(d.h3),
        ])
    }

    /// Multiplies every component by a central scalar.
    pub fn scale(&self, s: &T) -> Self {
        SplitQuaternion::new(
            self.h0.clone() * s.clone(),
            self.h1.clone() * s.clone(),
            self.h2.clone() * s.clone(),
            self.h3.clone() * s.clone(),
        )
    }
}

/// Exact halving: `x / 2` computed as `x * (1/2)` via the ring inverse of 2.
fn halve<T: Ring>(x: T) -> T {
    let two = T::one() + T::one();
    let half = two
        .inverse()
        .expect("2 is invertible in the scalar rings used here");
    x * half
}

impl SplitQuaternion<Scalar> {
    /// Integer-component constructor, mostly for tests and tables.
    pub fn from_i64(h0: i64, h1: i64, h2: i64, h3: i64) -> Self {
        SplitQuaternion::new(
            crate::scalar::int(h0),
            crate::scalar::int(h1),
            crate::scalar::int(h2),
            crate::scalar::int(h3),
        )
    }

    /// Lifts rational components into the complexified algebra.
    pub fn complexify(&self) -> ComplexSplitQuaternion {
        let lift = |x: &Scalar| CScalar::new(x.clone(), Scalar::zero());
        SplitQuaternion::new(
            lift(&self.h0),
            lift(&self.h1),
            lift(&self.h2),
            lift(&self.h3),
        )
    }
}

impl ComplexSplitQuaternion {
    /// Complex-scalar conjugation acting on the coefficients only; the
    /// quaternion units are untouched.
    pub fn complex_conj(&self) -> Self {
        SplitQuaternion::new(
            self.h0.conj(),
            self.h1.conj(),
            self.h2.conj(),
            self.h3.conj(),
        )
    }
}

impl<T: Ring> Add for SplitQuaternion<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        SplitQuaternion::new(
            self.h0 + rhs.h0,
            self.h1 + rhs.h1,
            self.h2 + rhs.h2,
            self.h3 + rhs.h3,
        )
    }
}

impl<T: Ring> Sub for SplitQuaternion<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        SplitQuaternion::new(
            self.h0 - rhs.h0,
            self.h1 - rhs.h1,
            self.h2 - rhs.h2,
            self.h3 - rhs.h3,
        )
    }
}

impl<T: Ring> Neg for SplitQuaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        SplitQuaternion::new(-self.h0, -self.h1, -self.h2, -self.h3)
    }
}

impl<T: Ring> Mul for SplitQuaternion<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let a = self.components();
        let b = rhs.components();
        let mut out = [T::zero(), T::zero(), T::zero(), T::zero()];
        for (ia, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (ib, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let (target, sign) = UNIT_MUL[ia][ib];
                let term = (*ca).clone() * (*cb).clone();
                if sign > 0 {
                    out[target] = out[target].clone() + term;
                } else {
                    out[target] = out[target].clone() - term;
                }
            }
        }
        SplitQuaternion::from_components(out)
    }
}

impl<T: Ring> Zero for SplitQuaternion<T> {
    fn zero() -> Self {
        SplitQuaternion::from_scalar(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.h0.is_zero() && self.h1.is_zero() && self.h2.is_zero() && self.h3.is_zero()
    }
}

impl<T: Ring> One for SplitQuaternion<T> {
    fn one() -> Self {
        SplitQuaternion::from_scalar(T::one())
    }
}

impl<T: Ring> Ring for SplitQuaternion<T> {
    fn inverse(&self) -> Option<Self> {
        self.norm().inverse().map(|n| self.conj().scale(&n))
    }
}

impl<T: Ring> fmt::Debug for SplitQuaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?} + {:?}i + {:?}j + {:?}k]",
            self.h0, self.h1, self.h2, self.h3
        )
    }
}

impl fmt::Display for SplitQuaternion<Scalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_quaternion(
            &[
                self.h0.clone(),
                self.h1.clone(),
                self.h2.clone(),
                self.h3.clone(),
            ],
            ["", "i", "j", "k"],
        ))
    }
}

/// Renders a coefficient vector against unit names, e.g. `1 + 2*i - j`.
/// The output reparses to the same value with the expression grammar.
pub(crate) fn format_quaternion(comps: &[Scalar], units: [&str; 4]) -> String {
    use num_traits::Signed;
    let mut out = String::new();
    for (idx, c) in comps.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let unit = units[idx];
        if unit.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(unit);
        } else {
            out.push_str(&format!("{}*{}", mag, unit));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
