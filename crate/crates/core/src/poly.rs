//! The non-commutative polynomial ring `S[t]`.
//!
//! Coefficients live on the left of the indeterminate and `t` commutes with
//! them, so `(a t^m)(b t^n) = (a b) t^{m+n}`. Because of zero divisors and
//! non-commutativity, evaluation is side dependent and is *not* a ring
//! homomorphism: products must be expanded before substituting.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{ComplexSplitQuaternion, Ring, SplitQuaternion};
use crate::error::Error;
use crate::scalar::Scalar;

/// Dense univariate polynomial over a ring `C`, coefficients ascending by
/// degree and trailing zeros trimmed. The zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial over the rational split quaternions.
pub type SplitPolynomial = Poly<SplitQuaternion>;
/// Polynomial with rational coefficients.
pub type RealPolynomial = Poly<Scalar>;
/// Polynomial over the complexified split quaternions.
pub type ComplexSplitPolynomial = Poly<ComplexSplitQuaternion>;

impl<C: Ring> Poly<C> {
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `t`.
    pub fn var() -> Self {
        Poly::from_coeffs(vec![C::zero(), C::one()])
    }

    /// The monic linear polynomial `t - h`.
    pub fn linear(h: C) -> Self {
        Poly::from_coeffs(vec![-h, C::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `t^idx` (zero beyond the stored length).
    pub fn coeff(&self, idx: usize) -> C {
        self.coeffs.get(idx).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading(), Some(c) if c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for idx in 0..n {
            out.push(self.coeff(idx) + other.coeff(idx));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    /// Product with the coefficient order preserved: the left factor's
    /// coefficients stay on the left.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Poly::one();
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Multiplies every coefficient by `c` on the left.
    pub fn scale_left(&self, c: &C) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|x| c.clone() * x.clone()).collect())
    }

    /// Multiplies every coefficient by `c` on the right.
    pub fn scale_right(&self, c: &C) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Right evaluation `P(h) = sum p_l h^l`: `t` is substituted after it
    /// is written to the right of the coefficients.
    pub fn eval_right(&self, h: &C) -> C {
        let mut acc = C::zero();
        let mut power = C::one();
        for c in &self.coeffs {
            acc = acc + c.clone() * power.clone();
            power = power * h.clone();
        }
        acc
    }

    /// Left evaluation `sum h^l p_l`.
    pub fn eval_left(&self, h: &C) -> C {
        let mut acc = C::zero();
        let mut power = C::one();
        for c in &self.coeffs {
            acc = acc + power.clone() * c.clone();
            power = power * h.clone();
        }
        acc
    }

    /// Right division `P = G*Q + R` with `deg R < deg G`.
    ///
    /// Fails when the leading coefficient of `G` is not invertible.
    pub fn right_div(&self, g: &Self) -> Result<(Self, Self), Error> {
        self.divide(g, true)
    }

    /// Left division `P = Q*G + R` with `deg R < deg G`.
    pub fn left_div(&self, g: &Self) -> Result<(Self, Self), Error> {
        self.divide(g, false)
    }

    fn divide(&self, g: &Self, divisor_on_left: bool) -> Result<(Self, Self), Error> {
        let g_deg = g.degree().ok_or(Error::ZeroPolynomial)?;
        let lead_inv = g
            .leading()
            .and_then(Ring::inverse)
            .ok_or(Error::DivisorLeadingCoefficientNotInvertible)?;
        let mut rem = self.clone();
        let mut quo = vec![C::zero(); self.coeffs.len().saturating_sub(g_deg)];
        while let Some(r_deg) = rem.degree() {
            if r_deg < g_deg {
                break;
            }
            let r_lead = rem.leading().cloned().unwrap_or_else(C::zero);
            let shift = r_deg - g_deg;
            // Divisor on the left: G * (x t^s) cancels the lead when
            // g_lead * x = r_lead; on the right, x * g_lead = r_lead.
            let x = if divisor_on_left {
                lead_inv.clone() * r_lead
            } else {
                r_lead * lead_inv.clone()
            };
            let mut term = vec![C::zero(); shift + 1];
            term[shift] = x.clone();
            let term = Poly::from_coeffs(term);
            let prod = if divisor_on_left {
                g.mul(&term)
            } else {
                term.mul(g)
            };
            rem = rem.sub(&prod);
            quo[shift] = quo[shift].clone() + x;
            debug_assert!(rem.degree().map_or(true, |d| d < r_deg));
        }
        Ok((Poly::from_coeffs(quo), rem))
    }

    /// Maps coefficients into another ring.
    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Ring> Poly<SplitQuaternion<T>> {
    /// Coefficient-wise quaternion conjugation.
    pub fn conj(&self) -> Self {
        self.map(|c| c.conj())
    }

    /// Norm polynomial `P * conj(P)`; always real, returned over the
    /// scalar ring.
    pub fn norm_poly(&self) -> Poly<T> {
        let prod = self.mul(&self.conj());
        Poly::from_coeffs(
            prod.coeffs
                .iter()
                .map(|c| {
                    assert!(
                        c.h1.is_zero() && c.h2.is_zero() && c.h3.is_zero(),
                        "norm polynomial must be real"
                    );
                    c.h0.clone()
                })
                .collect(),
        )
    }

    /// Evaluation at a central scalar parameter value.
    pub fn eval_central(&self, z: &T) -> SplitQuaternion<T> {
        let mut acc = SplitQuaternion::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(z) + c.clone();
        }
        acc
    }
}

/// Lifts a real polynomial into the split quaternion ring.
pub fn lift_real(p: &RealPolynomial) -> SplitPolynomial {
    p.map(|c| SplitQuaternion::from_scalar(c.clone()))
}

/// Record of the reparametrization used to make a polynomial monic.
#[derive(Clone, PartialEq, Debug)]
pub enum Reparametrization {
    Identity,
    /// `t -> t0 + 1/s` followed by clearing denominators and normalizing
    /// by the inverse of the (invertible) value at `t0`.
    Inverted {
        t0: Scalar,
        normalizer: SplitQuaternion,
    },
}

impl SplitPolynomial {
    /// Remainder on division by a real polynomial; the left and right
    /// remainders coincide for central divisors.
    pub fn rem_real(&self, n: &RealPolynomial) -> SplitPolynomial {
        let (_, r) = self
            .right_div(&lift_real(n))
            .expect("real divisor with nonzero leading coefficient");
        r
    }

    /// Quotient on division by a real polynomial.
    pub fn quo_real(&self, n: &RealPolynomial) -> SplitPolynomial {
        let (q, _) = self
            .right_div(&lift_real(n))
            .expect("real divisor with nonzero leading coefficient");
        q
    }

    /// The four real component polynomials (coefficients of 1, i, j, k).
    pub fn component_polys(&self) -> [RealPolynomial; 4] {
        let pick = |f: fn(&SplitQuaternion) -> &Scalar| {
            Poly::from_coeffs(self.coeffs.iter().map(|c| f(c).clone()).collect())
        };
        [
            pick(|c| &c.h0),
            pick(|c| &c.h1),
            pick(|c| &c.h2),
            pick(|c| &c.h3),
        ]
    }

    /// Splits off the real content: returns `(reduced, content)` with
    /// `P = content * reduced` where `content` is the monic gcd of the four
    /// component polynomials. Removing the real content also removes all
    /// complex polynomial factors: a nonreal complex factor forces its
    /// (real) product with the conjugate into the component gcd.
    pub fn reduce(&self) -> Result<(SplitPolynomial, RealPolynomial), Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut content = RealPolynomial::zero();
        for comp in self.component_polys() {
            if comp.is_zero() {
                continue;
            }
            content = crate::realpoly::real_gcd(&content, &comp);
        }
        let (q, r) = self
            .right_div(&lift_real(&content))
            .expect("content is nonzero and monic");
        assert!(r.is_zero(), "content must divide the polynomial");
        Ok((q, content))
    }

    /// Returns `true` when the component gcd is trivial.
    pub fn is_reduced(&self) -> bool {
        match self.reduce() {
            Ok((_, content)) => content.is_one_poly(),
            Err(_) => false,
        }
    }

    /// Normalizes to a monic polynomial.
    ///
    /// If the leading coefficient is invertible the polynomial is scaled
    /// from the left. Otherwise a proper rational reparametrization
    /// `t -> t0 + 1/s` with `norm(P)(t0) != 0` is applied (searching
    /// `t0 = 0, 1, -1, 2, -2, ...`), the result is normalized by
    /// `P(t0)^{-1}`, and the substitution is recorded.
    pub fn monicize(&self) -> Result<(SplitPolynomial, Reparametrization), Error> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        if self.norm_poly().is_zero() {
            return Err(Error::NormIdenticallyZero);
        }
        let lead = self.leading().expect("nonzero polynomial");
        if let Ok(inv) = lead.inverse() {
            return Ok((self.scale_left(&inv), Reparametrization::Identity));
        }
        let norm = self.norm_poly();
        let t0 = t0_candidates()
            .find(|t0| !norm.eval_right(t0).is_zero())
            .expect("a nonzero polynomial misses finitely many rationals");
        // P~(s) = sum_l p_l s^(n-l) (t0 s + 1)^l, leading coefficient P(t0).
        let base = SplitPolynomial::from_coeffs(vec![
            SplitQuaternion::one(),
            SplitQuaternion::from_scalar(t0.clone()),
        ]);
        let mut transformed = SplitPolynomial::zero();
        for (l, c) in self.coeffs.iter().enumerate() {
            let mut shift = vec![SplitQuaternion::zero(); n - l];
            shift.push(SplitQuaternion::one());
            let term = base.pow(l as u32).mul(&Poly::from_coeffs(shift));
            transformed = transformed.add(&term.scale_left(c));
        }
        let value_at_t0 = transformed
            .leading()
            .cloned()
            .expect("transformed polynomial is nonzero");
        let normalizer = value_at_t0
            .inverse()
            .expect("norm(P)(t0) != 0 makes P(t0) invertible");
        Ok((
            transformed.scale_left(&normalizer),
            Reparametrization::Inverted { t0, normalizer },
        ))
    }

    pub fn complexify(&self) -> ComplexSplitPolynomial {
        self.map(|c| c.complexify())
    }

    /// Canonical JSON form `{"coeffs": [[h0,h1,h2,h3], ...]}` with each
    /// component an exact rational string.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coeffs": self
                .coeffs
                .iter()
                .map(|c| {
                    serde_json::Value::Array(
                        c.components()
                            .iter()
                            .map(|x| serde_json::Value::String(x.to_string()))
                            .collect(),
                    )
                })
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, Error> {
        let coeffs = value
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| Error::InvalidJson("missing \"coeffs\" array".into()))?;
        let mut out = Vec::with_capacity(coeffs.len());
        for entry in coeffs {
            let comps = entry
                .as_array()
                .filter(|a| a.len() == 4)
                .ok_or_else(|| Error::InvalidJson("coefficient must be a 4-array".into()))?;
            let mut parsed = Vec::with_capacity(4);
            for c in comps {
                let s = c
                    .as_str()
                    .ok_or_else(|| Error::InvalidJson("component must be a string".into()))?;
                parsed.push(
                    crate::scalar::parse(s)
                        .ok_or_else(|| Error::InvalidJson(format!("bad rational {s:?}")))?,
                );
            }
            out.push(SplitQuaternion::new(
                parsed[0].clone(),
                parsed[1].clone(),
                parsed[2].clone(),
                parsed[3].clone(),
            ));
        }
        Ok(SplitPolynomial::from_coeffs(out))
    }
}

impl RealPolynomial {
    pub fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&n| crate::scalar::int(n)).collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coeffs": self
                .coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect::<Vec<_>>(),
        })
    }
}

/// `0, 1, -1, 2, -2, ...`
fn t0_candidates() -> impl Iterator<Item = Scalar> {
    (0i64..).flat_map(|n| {
        let first = crate::scalar::int(n);
        let second = if n > 0 {
            Some(crate::scalar::int(-n))
        } else {
            None
        };
        std::iter::once(first).chain(second)
    })
}

pub(crate) struct CoeffText {
    /// Rendering of the coefficient (or of its negative when `negated`);
    /// never starts with `-`.
    pub body: String,
    /// Whether a minus sign was factored out into the term separator.
    pub negated: bool,
    /// Whether `body` is a single product term (no inner `+`/`-`), so it
    /// can be prefixed to `t^l` without parentheses.
    pub single_term: bool,
}

/// Shared pretty printer: descending powers, with the sign of each
/// coefficient folded into the term separator. The output reparses to the
/// same polynomial.
pub(crate) fn format_poly<C: Ring>(coeffs: &[C], render: impl Fn(&C) -> CoeffText) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let CoeffText {
            body,
            negated,
            single_term,
        } = render(c);
        if out.is_empty() {
            if negated {
                out.push('-');
            }
        } else if negated {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let var = match deg {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{deg}"),
        };
        if deg == 0 {
            if single_term {
                out.push_str(&body);
            } else {
                out.push_str(&format!("({body})"));
            }
        } else if single_term && body == "1" {
            out.push_str(&var);
        } else if single_term {
            out.push_str(&format!("{body}*{var}"));
        } else {
            out.push_str(&format!("({body})*{var}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for SplitPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self.coeffs(), |c| {
            // Factor out the sign of the first nonzero component so that
            // terms like -(i + j)*t keep their textbook shape.
            let negated = c
                .components()
                .iter()
                .find(|x| !x.is_zero())
                .map(|x| x < &&Scalar::zero())
                .unwrap_or(false);
            let shown = if negated { -c.clone() } else { c.clone() };
            let comps = [
                shown.h0.clone(),
                shown.h1.clone(),
                shown.h2.clone(),
                shown.h3.clone(),
            ];
            let nonzero = comps.iter().filter(|x| !x.is_zero()).count();
            CoeffText {
                body: crate::algebra::format_quaternion(&comps, ["", "i", "j", "k"]),
                negated,
                single_term: nonzero <= 1,
            }
        }))
    }
}

impl fmt::Debug for SplitPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RealPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self.coeffs(), |c| CoeffText {
            text: c.to_string(),
            single_term: true,
        }))
    }
}

impl fmt::Debug for RealPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Debug for ComplexSplitPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use proptest::prelude::*;

    type SQ = SplitQuaternion;

    fn sq(h0: i64, h1: i64, h2: i64, h3: i64) -> SQ {
        SQ::from_i64(h0, h1, h2, h3)
    }

    fn p1() -> SplitPolynomial {
        // t^2 - (i+j)t - k
        Poly::from_coeffs(vec![sq(0, 0, 0, -1), sq(0, -1, -1, 0), sq(1, 0, 0, 0)])
    }

    fn p3() -> SplitPolynomial {
        // t^3 - i t^2 + k t - j
        Poly::from_coeffs(vec![
            sq(0, 0, -1, 0),
            sq(0, 0, 0, 1),
            sq(0, -1, 0, 0),
            sq(1, 0, 0, 0),
        ])
    }

    #[test]
    fn product_of_linear_factors() {
        let t_minus_j = SplitPolynomial::linear(sq(0, 0, 1, 0));
        let t_minus_i = SplitPolynomial::linear(sq(0, 1, 0, 0));
        assert_eq!(t_minus_j.mul(&t_minus_i), p1());
        // Reversed order differs: (t-i)(t-j) = t^2 - (i+j)t + k.
        let reversed = t_minus_i.mul(&t_minus_j);
        assert_eq!(
            reversed,
            Poly::from_coeffs(vec![sq(0, 0, 0, 1), sq(0, -1, -1, 0), sq(1, 0, 0, 0)])
        );
        assert_ne!(reversed, p1());
    }

    #[test]
    fn norm_polynomials() {
        assert_eq!(p1().norm_poly(), RealPolynomial::from_i64(&[-1, 0, 0, 0, 1]));
        // (t^2+1)^2 (t^2-1) = t^6 + t^4 - t^2 - 1
        assert_eq!(
            p3().norm_poly(),
            RealPolynomial::from_i64(&[-1, 0, -1, 0, 1, 0, 1])
        );
    }

    #[test]
    fn right_evaluation() {
        let i = sq(0, 1, 0, 0);
        let j = sq(0, 0, 1, 0);
        assert!(p1().eval_right(&i).is_zero());
        assert_eq!(p1().eval_right(&j), sq(0, 0, 0, -2));
        // (t*i)(j) = (i*t)(j) = i*j = k: expand before evaluating.
        let ti = SplitPolynomial::var().mul(&SplitPolynomial::constant(i));
        assert_eq!(ti.eval_right(&j), sq(0, 0, 0, 1));
    }

    #[test]
    fn left_evaluation() {
        // j is a left zero of (t-j)(t-i) but not a right zero.
        let j = sq(0, 0, 1, 0);
        assert!(p1().eval_left(&j).is_zero());
        assert!(!p1().eval_right(&j).is_zero());
    }

    #[test]
    fn remainders_match_worked_examples() {
        let n1 = RealPolynomial::from_i64(&[1, 0, 1]);
        let n2 = RealPolynomial::from_i64(&[-1, 0, 1]);
        // rem(P1, t^2+1) = -(i+j)t - 1 - k
        assert_eq!(
            p1().rem_real(&n1),
            Poly::from_coeffs(vec![sq(-1, 0, 0, -1), sq(0, -1, -1, 0)])
        );
        // rem(P1, t^2-1) = -(i+j)t + 1 - k
        assert_eq!(
            p1().rem_real(&n2),
            Poly::from_coeffs(vec![sq(1, 0, 0, -1), sq(0, -1, -1, 0)])
        );
        // rem(P3, t^2-1) = (1+k)t - i - j
        assert_eq!(
            p3().rem_real(&n2),
            Poly::from_coeffs(vec![sq(0, -1, -1, 0), sq(1, 0, 0, 1)])
        );
        // rem(P3, t^2+1) = (k-1)t + i - j
        assert_eq!(
            p3().rem_real(&n1),
            Poly::from_coeffs(vec![sq(0, 1, -1, 0), sq(-1, 0, 0, 1)])
        );
    }

    #[test]
    fn left_quotient_strips_right_factor() {
        // lquo(P3, t-i) = t^2 + k
        let (q, r) = p3()
            .left_div(&SplitPolynomial::linear(sq(0, 1, 0, 0)))
            .unwrap();
        assert!(r.is_zero());
        assert_eq!(
            q,
            Poly::from_coeffs(vec![sq(0, 0, 0, 1), sq(0, 0, 0, 0), sq(1, 0, 0, 0)])
        );
    }

    #[test]
    fn division_by_noninvertible_leading_coefficient_fails() {
        let g = SplitPolynomial::from_coeffs(vec![sq(0, 1, 0, 0), sq(1, 0, 1, 0)]);
        assert_eq!(
            p1().right_div(&g),
            Err(Error::DivisorLeadingCoefficientNotInvertible)
        );
    }

    #[test]
    fn real_divisors_have_coinciding_sides() {
        let n = RealPolynomial::from_i64(&[3, -2, 1]);
        let lifted = lift_real(&n);
        let (ql, rl) = p3().left_div(&lifted).unwrap();
        let (qr, rr) = p3().right_div(&lifted).unwrap();
        assert_eq!(ql, qr);
        assert_eq!(rl, rr);
    }

    #[test]
    fn reduce_strips_real_content() {
        let t2p1 = lift_real(&RealPolynomial::from_i64(&[1, 0, 1]));
        let lin = SplitPolynomial::linear(sq(0, 1, 0, 0));
        let (reduced, content) = t2p1.mul(&lin).reduce().unwrap();
        assert_eq!(reduced, lin);
        assert_eq!(content, RealPolynomial::from_i64(&[1, 0, 1]));

        let (reduced, content) = SplitPolynomial::linear(sq(0, 0, 1, 0)).reduce().unwrap();
        assert_eq!(reduced, SplitPolynomial::linear(sq(0, 0, 1, 0)));
        assert!(content.is_one_poly());

        // (t^2-1)(t^2+1)(t-k) has content t^4 - 1.
        let t4m1 = lift_real(&RealPolynomial::from_i64(&[-1, 0, 0, 0, 1]));
        let link = SplitPolynomial::linear(sq(0, 0, 0, 1));
        let (reduced, content) = t4m1.mul(&link).reduce().unwrap();
        assert_eq!(reduced, link);
        assert_eq!(content, RealPolynomial::from_i64(&[-1, 0, 0, 0, 1]));
    }

    #[test]
    fn monicize_invertible_leading_coefficient() {
        let two_t_minus_two_i =
            SplitPolynomial::linear(sq(0, 1, 0, 0)).scale_left(&sq(2, 0, 0, 0));
        let (monic, rec) = two_t_minus_two_i.monicize().unwrap();
        assert_eq!(monic, SplitPolynomial::linear(sq(0, 1, 0, 0)));
        assert_eq!(rec, Reparametrization::Identity);

        let t_minus_k = SplitPolynomial::linear(sq(0, 0, 0, 1));
        let (monic, rec) = t_minus_k.monicize().unwrap();
        assert_eq!(monic, t_minus_k);
        assert_eq!(rec, Reparametrization::Identity);
    }

    #[test]
    fn monicize_with_reparametrization() {
        // (1+j)t + i has a null leading coefficient but nonzero norm.
        let p = SplitPolynomial::from_coeffs(vec![sq(0, 1, 0, 0), sq(1, 0, 1, 0)]);
        let (monic, rec) = p.monicize().unwrap();
        assert!(monic.is_monic());
        assert_eq!(monic.degree(), Some(1));
        match rec {
            Reparametrization::Inverted { t0, normalizer } => {
                assert_eq!(t0, int(0));
                // P(0) = i, so the normalizer is i^{-1} = -i.
                assert_eq!(normalizer, sq(0, -1, 0, 0));
            }
            other => panic!("expected a reparametrization, got {other:?}"),
        }
        // -i * ((1+j) + i s) = s - i - k, monic in the new parameter.
        assert_eq!(monic, SplitPolynomial::linear(sq(0, 1, 0, 1)));
    }

    #[test]
    fn monicize_rejects_zero_norm() {
        let p = SplitPolynomial::constant(sq(1, 0, 1, 0)).mul(&SplitPolynomial::var());
        assert_eq!(p.monicize(), Err(Error::NormIdenticallyZero));
    }

    #[test]
    fn json_round_trip_matches_schema() {
        let json = p1().to_json();
        assert_eq!(
            json,
            serde_json::json!({
                "coeffs": [["0","0","0","-1"], ["0","-1","-1","0"], ["1","0","0","0"]]
            })
        );
        assert_eq!(SplitPolynomial::from_json(&json).unwrap(), p1());
        let rational =
            SplitPolynomial::linear(SQ::new(ratio(3, 4), int(0), ratio(-1, 2), int(0)));
        assert_eq!(
            SplitPolynomial::from_json(&rational.to_json()).unwrap(),
            rational
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(p1().to_string(), "t^2 - (i + j)*t - k");
        assert_eq!(p3().to_string(), "t^3 - i*t^2 + k*t - j");
        assert_eq!(
            RealPolynomial::from_i64(&[-1, 0, 0, 0, 1]).to_string(),
            "t^4 - 1"
        );
        assert_eq!(SplitPolynomial::zero().to_string(), "0");
        let c = SplitPolynomial::constant(sq(-1, 0, 0, -1));
        assert_eq!(c.to_string(), "-(1 + k)".replace("-(", "(-1 - k)").replace("(-1 - k)", "-1 - k"));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
    }

    fn arb_squat() -> impl Strategy<Value = SQ> {
        (arb_scalar(), arb_scalar(), arb_scalar(), arb_scalar())
            .prop_map(|(a, b, c, d)| SQ::new(a, b, c, d))
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = SplitPolynomial> {
        proptest::collection::vec(arb_squat(), 1..=max_deg + 1).prop_map(Poly::from_coeffs)
    }

    proptest! {
        #[test]
        fn norm_poly_is_multiplicative(p in arb_poly(3), q in arb_poly(3)) {
            prop_assert_eq!(
                p.mul(&q).norm_poly(),
                p.norm_poly().mul(&q.norm_poly())
            );
        }

        #[test]
        fn division_reassembles(p in arb_poly(4), h in arb_squat()) {
            let g = SplitPolynomial::linear(h);
            let (q, r) = p.right_div(&g).unwrap();
            prop_assert_eq!(g.mul(&q).add(&r), p.clone());
            let (q, r) = p.left_div(&g).unwrap();
            prop_assert_eq!(q.mul(&g).add(&r), p);
        }

        #[test]
        fn zero_factor_correspondence(q in arb_poly(3), h in arb_squat()) {
            // h is a right zero of Q*(t-h); conversely a vanishing right
            // evaluation forces a zero remainder on division by (t-h).
            let g = SplitPolynomial::linear(h.clone());
            let p = q.mul(&g);
            prop_assert!(p.eval_right(&h).is_zero());
            let (_, r) = p.left_div(&g).unwrap();
            prop_assert!(r.is_zero());

            let (_, r) = q.left_div(&g).unwrap();
            prop_assert_eq!(q.eval_right(&h).is_zero(), r.is_zero());
        }

        #[test]
        fn display_reparses(p in arb_poly(4)) {
            let printed = p.to_string();
            let reparsed = crate::expr::parse_split(&printed).unwrap();
            prop_assert_eq!(reparsed, p);
        }
    }
}
