//! Closed-form and series-extracted Hodge integral values.
//!
//! Three families of integrals over moduli spaces of curves are
//! computed, always as exact rationals:
//!
//! * `alpha(q)`, the coefficients of `Q(t) = log((t/2)/sin(t/2))`, with
//!   the Bernoulli closed form `|B_{2q}| / ((2q)(2q)!)`;
//! * the kappa integral `b_q = |B_{2q}| / ((2q) 2^{2q-1} (2q-1)!!)`;
//! * the psi-lambda integrals over the 1-pointed moduli spaces,
//!   extracted from powers of the sine-ratio series.
//!
//! `alpha_via_log` recomputes the alpha values through the formal
//! logarithm, giving an independent route used by the verification
//! suites; the two must agree coefficientwise.

use serde::Serialize;

use crate::number_theory::{bernoulli, double_factorial, factorial};
use crate::rational::Rational;
use crate::series::EvenSeries;

/// alpha_q = |B_{2q}| / ((2q)(2q)!) for q >= 1.
pub fn alpha(q: u32) -> Rational {
    assert!(q >= 1, "alpha requires q >= 1");
    let b = bernoulli(2 * q).abs();
    b / Rational::from_int(2 * q as u64) / Rational::from_int(factorial(2 * q as u64))
}

/// The series Q(t) = log((t/2)/sin(t/2)) to order T, computed through
/// the formal log of the inverted sine-ratio series. Its coefficient of
/// `t^{2q}` must equal [`alpha`]`(q)`; the two share no code beyond
/// rational arithmetic.
pub fn alpha_via_log(order: usize) -> EvenSeries {
    EvenSeries::sine_ratio(order).inverse().log()
}

/// Q(t) assembled from the Bernoulli closed form.
pub fn alpha_series(order: usize) -> EvenSeries {
    let mut coeffs = vec![Rational::zero()];
    for q in 1..=order as u32 {
        coeffs.push(alpha(q));
    }
    EvenSeries::from_coeffs(coeffs)
}

/// The integral of lambda_q lambda_{q-1} kappa_{q-2} over the genus-q
/// moduli space: `|B_{2q}| / ((2q) 2^{2q-1} (2q-1)!!)` for q >= 2.
pub fn kappa_integral(q: u32) -> Rational {
    assert!(q >= 2, "kappa_integral requires q >= 2");
    let b = bernoulli(2 * q).abs();
    let denom = Rational::from_int(2 * q as u64)
        * Rational::from_int(num_bigint::BigInt::from(2).pow(2 * q - 1))
        * Rational::from_int(double_factorial(2 * q as u64 - 1));
    b / denom
}

/// The quotient alpha(q) / kappa_integral(q); it equals 2^{q-1}/q!
/// exactly, which is the content of the Faber ratio identity.
pub fn faber_ratio_check(q: u32) -> Rational {
    alpha(q) / kappa_integral(q)
}

/// The expected value of the Faber ratio, 2^{q-1}/q!.
pub fn faber_ratio_expected(q: u32) -> Rational {
    assert!(q >= 1, "ratio defined for q >= 1");
    Rational::from_int(num_bigint::BigInt::from(2).pow(q - 1))
        / Rational::from_int(factorial(q as u64))
}

/// The integral of psi_1^{2h-2+i} lambda_{h-i} over the 1-pointed
/// genus-h moduli space, for h >= 1 and 0 <= i <= h.
///
/// Extracted as the `t^{2h}` coefficient of `S^{-1} Q^i / i!`, which
/// isolates the `k^i` part of `S^{-k-1} = S^{-1} exp(k Q)`.
pub fn psi_lambda_integral(h: u32, i: u32) -> Rational {
    assert!(h >= 1, "psi_lambda_integral requires h >= 1");
    assert!(i <= h, "index i must satisfy 0 <= i <= h");
    let order = h as usize;
    let s_inv = EvenSeries::sine_ratio(order).inverse();
    let q_pow = alpha_series(order).int_pow(i as i64);
    let coeff = s_inv.mul(&q_pow).coeff(order).clone();
    coeff / Rational::from_int(factorial(i as u64))
}

/// A Hodge integral value tagged by its defining indices. The value is
/// always recomputed from the indices, so the pair stays consistent.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HodgeValue {
    Alpha { q: u32, value: Rational },
    KappaIntegral { q: u32, value: Rational },
    PsiLambda { h: u32, i: u32, value: Rational },
}

impl HodgeValue {
    pub fn alpha(q: u32) -> Self {
        HodgeValue::Alpha { q, value: alpha(q) }
    }

    pub fn kappa_integral(q: u32) -> Self {
        HodgeValue::KappaIntegral {
            q,
            value: kappa_integral(q),
        }
    }

    pub fn psi_lambda(h: u32, i: u32) -> Self {
        HodgeValue::PsiLambda {
            h,
            i,
            value: psi_lambda_integral(h, i),
        }
    }

    pub fn value(&self) -> &Rational {
        match self {
            HodgeValue::Alpha { value, .. } => value,
            HodgeValue::KappaIntegral { value, .. } => value,
            HodgeValue::PsiLambda { value, .. } => value,
        }
    }
}
