//! Truncated formal power series in `t` with only even powers.
//!
//! Every generating series in this crate lives in `t^2`: entry `h` of a
//! series is the coefficient of `t^{2h}`. A series of order `T` knows its
//! coefficients for `0 <= h <= T`; binary operations truncate to the
//! smaller operand order so that no reported coefficient can be
//! contaminated by unknown higher terms.
//!
//! The base object is the sine-ratio series `S(t) = sin(t/2) / (t/2)`.
//! Integer powers of `S` carry all degenerate contribution series.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::number_theory::factorial;
use crate::rational::Rational;

/// Even formal power series truncated at order `T`: entry `h` holds the
/// coefficient of `t^{2h}`, and exactly `T + 1` coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct EvenSeries {
    coeffs: Vec<Rational>,
}

impl EvenSeries {
    /// Builds a series from the coefficients of `t^0, t^2, t^4, ...`.
    /// The vector length fixes the order; it must be nonempty.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the t^0 coefficient");
        EvenSeries { coeffs }
    }

    pub fn constant(value: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = value;
        EvenSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(Rational::zero(), order)
    }

    /// The sine-ratio series `S(t) = sin(t/2) / (t/2)`: the coefficient
    /// of `t^{2h}` is `(-1)^h / (4^h (2h+1)!)`.
    pub fn sine_ratio(order: usize) -> Self {
        let coeffs = (0..=order as u64)
            .map(|h| {
                let sign = if h % 2 == 0 { 1 } else { -1 };
                let denom = BigInt::from(4).pow(h as u32) * factorial(2 * h + 1);
                Rational::new(sign, denom)
            })
            .collect();
        EvenSeries { coeffs }
    }

    /// Truncation order `T`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^{2h}`. Panics when `h` exceeds the order.
    pub fn coeff(&self, h: usize) -> &Rational {
        assert!(h <= self.order(), "coefficient index {h} beyond order {}", self.order());
        &self.coeffs[h]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Copy truncated to `min(order, self.order())`.
    pub fn truncated(&self, order: usize) -> EvenSeries {
        EvenSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Cauchy product, truncated at the smaller operand order.
    pub fn mul(&self, other: &EvenSeries) -> EvenSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| (0..=n).map(|k| &self.coeffs[k] * &other.coeffs[n - k]).sum())
            .collect();
        EvenSeries { coeffs }
    }

    /// Multiplicative inverse to the truncation order.
    /// Panics with "non-unit series" when the constant term is zero.
    pub fn inverse(&self) -> EvenSeries {
        assert!(!self.coeffs[0].is_zero(), "non-unit series");
        let lead = self.coeffs[0].inverse();
        let mut inv = vec![lead.clone()];
        for n in 1..=self.order() {
            let conv: Rational = (1..=n).map(|k| &self.coeffs[k] * &inv[n - k]).sum();
            inv.push(-(conv * &lead));
        }
        EvenSeries { coeffs: inv }
    }

    /// Integer power by binary powering; `m = 0` yields the constant
    /// series 1, negative `m` goes through [`EvenSeries::inverse`].
    pub fn int_pow(&self, m: i64) -> EvenSeries {
        if m == 0 {
            return EvenSeries::one(self.order());
        }
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let mut result = EvenSeries::one(self.order());
        let mut power = base;
        let mut e = m.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&power);
            }
            e >>= 1;
            if e > 0 {
                power = power.mul(&power);
            }
        }
        result
    }

    /// Formal exponential. Panics with "nonzero constant term" unless
    /// the constant term is zero.
    pub fn exp(&self) -> EvenSeries {
        assert!(self.coeffs[0].is_zero(), "nonzero constant term");
        let mut out = vec![Rational::one()];
        for n in 1..=self.order() {
            let conv: Rational = (1..=n)
                .map(|k| Rational::from_int(k as i64) * &self.coeffs[k] * &out[n - k])
                .sum();
            out.push(conv / Rational::from_int(n as i64));
        }
        EvenSeries { coeffs: out }
    }

    /// Formal logarithm. Panics with "constant term not 1" unless the
    /// constant term is exactly 1.
    pub fn log(&self) -> EvenSeries {
        assert!(self.coeffs[0].is_one(), "constant term not 1");
        let mut out = vec![Rational::zero()];
        for n in 1..=self.order() {
            let conv: Rational = (1..n)
                .map(|k| Rational::from_int(k as i64) * &out[k] * &self.coeffs[n - k])
                .sum();
            out.push(&self.coeffs[n] - conv / Rational::from_int(n as i64));
        }
        EvenSeries { coeffs: out }
    }

    /// Substitution `t -> d t`: the coefficient of `t^{2h}` picks up a
    /// factor `d^{2h}`.
    pub fn scale_variable(&self, d: u64) -> EvenSeries {
        assert!(d >= 1, "scale factor must be positive");
        let square = Rational::from_int(BigInt::from(d) * BigInt::from(d));
        let mut factor = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let scaled = c * &factor;
                factor = &factor * &square;
                scaled
            })
            .collect();
        EvenSeries { coeffs }
    }

    pub fn scalar_mul(&self, c: &Rational) -> EvenSeries {
        EvenSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }
}

impl Add for &EvenSeries {
    type Output = EvenSeries;
    fn add(self, rhs: &EvenSeries) -> EvenSeries {
        let order = self.order().min(rhs.order());
        EvenSeries {
            coeffs: (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect(),
        }
    }
}

impl Sub for &EvenSeries {
    type Output = EvenSeries;
    fn sub(self, rhs: &EvenSeries) -> EvenSeries {
        let order = self.order().min(rhs.order());
        EvenSeries {
            coeffs: (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect(),
        }
    }
}

impl Mul for &EvenSeries {
    type Output = EvenSeries;
    fn mul(self, rhs: &EvenSeries) -> EvenSeries {
        EvenSeries::mul(self, rhs)
    }
}

impl Neg for &EvenSeries {
    type Output = EvenSeries;
    fn neg(self) -> EvenSeries {
        EvenSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for EvenSeries {
    // Compact form: "[1, -1/24, 1/1920] + O(t^6)".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(t^{})", 2 * (self.order() + 1))
    }
}
