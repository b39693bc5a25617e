use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn integer(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom` reduced. Panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar(BigRational::from_integer(n))
    }

    pub fn from_biguint(n: BigUint) -> Self {
        Scalar::from_bigint(BigInt::from(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar(r)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn recip(&self) -> Self {
        Scalar(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Scalar(num_traits::pow(self.0.clone(), exp as usize))
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::integer(n)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::from_bigint(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Strict canonical grammar: `-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?`, in
    /// lowest terms, denominator greater than one, no `-0`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::MalformedScalar {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let (num_text, den_text) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let digits = num_text.strip_prefix('-').unwrap_or(num_text);
        if !is_canonical_digits(digits) {
            return Err(bad(
                "numerator must be an integer without sign prefix '+' or leading zeros",
            ));
        }
        let numer: BigInt = num_text.parse().map_err(|_| bad("unparseable numerator"))?;
        if num_text.starts_with('-') && numer.is_zero() {
            return Err(bad("negative zero"));
        }
        let Some(den_text) = den_text else {
            return Ok(Scalar::from_bigint(numer));
        };
        if !is_canonical_digits(den_text) {
            return Err(bad("denominator must be a positive integer without leading zeros"));
        }
        let denom: BigInt = den_text.parse().map_err(|_| bad("unparseable denominator"))?;
        if denom.is_zero() {
            return Err(bad("zero denominator"));
        }
        if denom.is_one() {
            return Err(bad("integers must be written without a denominator"));
        }
        if !numer.gcd(&denom).is_one() {
            return Err(bad("fraction is not in lowest terms"));
        }
        Ok(Scalar(BigRational::new_raw(numer, denom)))
    }
}

fn is_canonical_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'))
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }

        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}
