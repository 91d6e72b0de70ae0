//! Exact rational arithmetic over arbitrary-precision integers.
//!
//! [`Rational`] is the single scalar type used throughout the crate. Every
//! value is kept in canonical reduced form: `gcd(|numerator|, denominator) = 1`,
//! denominator strictly positive, zero stored as `0/1`. There is no floating
//! point anywhere; results of the degree-4 invariants on random inputs easily
//! overflow fixed-width integers, hence the big-integer backing.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors produced by scalar construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    /// Division by an exact zero.
    #[error("division by zero")]
    DivisionByZero,
    /// A rational was constructed with denominator zero.
    #[error("zero denominator")]
    ZeroDenominator,
    /// Text did not match the `p/q` or `p` form.
    #[error("invalid rational literal {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// An exact rational number in canonical reduced form.
///
/// The canonical text form is `p/q`, with `q` omitted when it equals one and
/// the minus sign carried by the numerator only.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// The additive identity, canonically `0/1`.
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    /// The multiplicative identity.
    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `numer/denom`, reducing to canonical form.
    pub fn new(numer: i64, denom: i64) -> Result<Self, ScalarError> {
        if denom == 0 {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom))))
    }

    /// Builds `numer/denom` from big integers, reducing to canonical form.
    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self, ScalarError> {
        if denom.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    /// An integer as a rational.
    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// View of the (sign-carrying) numerator.
    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// View of the (always positive) denominator.
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Whether the value is an integer (denominator one).
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an `i64`, when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        self.0.numer().to_i64()
    }

    /// Exact division; division by zero is an explicit error, never a wrapped
    /// infinity.
    pub fn try_div(&self, rhs: &Rational) -> Result<Rational, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// `self` raised to a small non-negative power.
    pub fn pow(&self, exp: u32) -> Rational {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc *= self;
        }
        acc
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ScalarError;

    /// Parses the canonical text form: an optional minus sign, digits, then
    /// optionally `/` and an unsigned denominator.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ScalarError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (numer_text, denom_text) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let valid_numer = {
            let digits = numer_text.strip_prefix('-').unwrap_or(numer_text);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid_numer {
            return Err(err("numerator must be an optionally negated integer"));
        }
        let numer: BigInt = numer_text.parse().map_err(|_| err("bad numerator"))?;
        let denom: BigInt = match denom_text {
            None => BigInt::one(),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(err("denominator must be an unsigned integer"));
                }
                d.parse().map_err(|_| err("bad denominator"))?
            }
        };
        if denom.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
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

/// Panics on division by zero; use [`Rational::try_div`] where the divisor is
/// not known to be nonzero.
impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self).div(&rhs)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self.try_div(rhs).expect("scalar division by zero")
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        self.0 *= rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Shorthand for integer-valued rationals, used heavily in tests and tables.
pub fn rat(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Shorthand for `n/d`; panics on a zero denominator.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_reduction() {
        assert_eq!(ratio(1, 6) + ratio(1, 6), ratio(1, 3));
        assert_eq!(ratio(-1, 18) * rat(-18), rat(1));
    }

    #[test]
    fn gcd_reduction_matches_long_division() {
        // 324/1296: repeated subtraction-based gcd as an independent check.
        let (mut a, mut b) = (324u64, 1296u64);
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        assert_eq!(a, 324); // gcd(324, 1296)
        let reduced = ratio(324, 1296);
        assert_eq!(reduced, ratio(324 / a as i64, 1296 / a as i64));
        assert_eq!(reduced, ratio(1, 4));
        assert_eq!(reduced.to_string(), "1/4");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(rat(1).try_div(&rat(0)), Err(ScalarError::DivisionByZero));
        assert_eq!(Rational::new(1, 0), Err(ScalarError::ZeroDenominator));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["0", "7", "-7", "2/3", "-2/3", "123456789123456789/2"] {
            let r: Rational = text.parse().unwrap();
            assert_eq!(r.to_string(), text);
        }
        assert_eq!("4/6".parse::<Rational>().unwrap().to_string(), "2/3");
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("--1".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn denominator_always_positive() {
        let r = Rational::new(3, -6).unwrap();
        assert_eq!(r, ratio(-1, 2));
        assert!(r.denominator() > &num_bigint::BigInt::from(0));
    }
}
