//! The universal scalar: an arbitrary-precision rational number.
//!
//! Every quantity in this crate (contributions, Hodge integrals, table
//! entries) is a [`Rational`]. There is no floating-point mode; arithmetic
//! is exact and values are always kept in lowest terms with a positive
//! denominator. The serialization format used across the crate is the
//! decimal string `"p/q"`, shortened to `"p"` when `q = 1`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact rational number backed by arbitrary-precision integers.
///
/// Stored in lowest terms with positive denominator; all arithmetic is
/// exact. Construction from a zero denominator panics.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `numer / denom`, reduced. Panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer.into(), denom))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics with "division by zero" on zero.
    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rational(self.0.recip())
    }

    /// Integer power with the empty-product convention `x^0 = 1`
    /// (including `0^0 = 1`). Panics on `0^m` for negative `m`.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut result = Rational::one();
        let mut power = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &power;
            }
            e >>= 1;
            if e > 0 {
                power = &power * &power;
            }
        }
        result
    }

    /// Decimal approximation with `digits` places after the point,
    /// truncated toward zero. For human reading only; never used in
    /// stored tables.
    pub fn to_decimal(&self, digits: usize) -> String {
        let numer = self.numer().abs();
        let denom = self.denom();
        let int_part = &numer / denom;
        let mut rem = &numer % denom;
        let mut s = String::new();
        if self.numer().is_negative() {
            s.push('-');
        }
        s.push_str(&int_part.to_string());
        if digits > 0 {
            s.push('.');
            for _ in 0..digits {
                rem *= 10;
                let digit = &rem / denom;
                rem = &rem % denom;
                s.push_str(&digit.to_string());
            }
        }
        s
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $imp<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $imp<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl $imp<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Failure to parse a `"p/q"` rational string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("invalid integer literal `{0}`")]
    InvalidInteger(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Parses `"p/q"` or `"p"`. Non-reduced forms are accepted and
    /// re-normalized; a zero denominator is rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (numer_str, denom_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let numer: BigInt = numer_str
            .parse()
            .map_err(|_| ParseRationalError::InvalidInteger(numer_str.to_owned()))?;
        let denom: BigInt = match denom_str {
            Some(d) => d
                .parse()
                .map_err(|_| ParseRationalError::InvalidInteger(d.to_owned()))?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(ParseRationalError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn normalization() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(-2, -4), rat(1, 2));
        assert_eq!(rat(2, -4), rat(-1, 2));
        assert_eq!(rat(-3, 6).to_string(), "-1/2");
        assert_eq!(rat(0, 5), Rational::zero());
    }

    #[test]
    fn display_integer_without_denominator() {
        assert_eq!(rat(6, 3).to_string(), "2");
        assert_eq!(Rational::zero().to_string(), "0");
        assert_eq!(rat(-11, 720).to_string(), "-11/720");
    }

    #[test]
    fn parse_round_trip_and_unreduced_input() {
        let x: Rational = "-11/720".parse().unwrap();
        assert_eq!(x, rat(-11, 720));
        let y: Rational = "4/6".parse().unwrap();
        assert_eq!(y, rat(2, 3));
        let z: Rational = "  7 ".parse().unwrap();
        assert_eq!(z, rat(7, 1));
        let w: Rational = "3/-6".parse().unwrap();
        assert_eq!(w, rat(-1, 2));
    }

    #[test]
    fn parse_rejects_zero_denominator_and_garbage() {
        assert_eq!(
            "1/0".parse::<Rational>(),
            Err(ParseRationalError::ZeroDenominator)
        );
        assert!("a/2".parse::<Rational>().is_err());
        assert!("1/2/3".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
    }

    #[test]
    #[should_panic(expected = "zero denominator")]
    fn new_rejects_zero_denominator() {
        let _ = Rational::new(1, 0);
    }

    #[test]
    fn pow_handles_negative_exponents_and_empty_product() {
        assert_eq!(rat(2, 3).pow(3), rat(8, 27));
        assert_eq!(rat(3, 1).pow(-3), rat(1, 27));
        assert_eq!(rat(-2, 1).pow(2), rat(4, 1));
        assert_eq!(rat(-2, 1).pow(3), rat(-8, 1));
        assert_eq!(Rational::zero().pow(0), Rational::one());
        assert_eq!(rat(5, 7).pow(0), Rational::one());
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn zero_to_negative_power_panics() {
        let _ = Rational::zero().pow(-1);
    }

    #[test]
    fn decimal_rendering_truncates_toward_zero() {
        assert_eq!(rat(1, 3).to_decimal(4), "0.3333");
        assert_eq!(rat(-1, 12).to_decimal(5), "-0.08333");
        assert_eq!(rat(7, 4).to_decimal(2), "1.75");
        assert_eq!(rat(5, 1).to_decimal(0), "5");
    }

    #[test]
    fn serde_uses_rational_strings() {
        let x = rat(-1, 12);
        assert_eq!(serde_json::to_string(&x).unwrap(), "\"-1/12\"");
        let y: Rational = serde_json::from_str("\"4/6\"").unwrap();
        assert_eq!(y, rat(2, 3));
        assert!(serde_json::from_str::<Rational>("\"1/0\"").is_err());
    }

    proptest! {
        #[test]
        fn mul_by_reciprocal_is_one(n in -200i64..200, d in 1i64..60) {
            prop_assume!(n != 0);
            let x = rat(n, d);
            prop_assert_eq!(&x * &x.inverse(), Rational::one());
        }

        #[test]
        fn normalization_is_idempotent(n in -500i64..500, d in 1i64..120) {
            let x = rat(n, d);
            let renorm = Rational::new(x.numer().clone(), x.denom().clone());
            prop_assert_eq!(&renorm, &x);
            let reparsed: Rational = x.to_string().parse().unwrap();
            prop_assert_eq!(reparsed, x);
        }

        #[test]
        fn field_laws_hold(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
            let x = rat(a, b);
            let y = rat(c, d);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x - &y, -(&y - &x));
        }
    }
}
