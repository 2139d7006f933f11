use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::order::{OrderSpec, Sign};
use crate::fields::Poly;
use crate::linalg::Matrix;
use crate::valuations::{Value, ValuationSpec};

/// Exact rational numbers.
pub type Rational = BigRational;

/// An exact ordered field with order-compatible valuations.
///
/// Arithmetic takes the left operand by value and the right by reference so
/// that generic code only clones where it has to.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: Rational) -> Self;

    /// Sign in the ordered field selected by `ord`.
    fn sign(&self, ord: &OrderSpec) -> Sign;

    fn nu(&self, val: &ValuationSpec) -> Value;

    /// Largest polynomial degree appearing in the element, used by the
    /// blow-up guard. Constants report zero.
    fn degree_size(&self) -> usize {
        0
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self)
        }
    }

    /// Monic characteristic polynomial of a square matrix over this field.
    fn char_poly(m: &Matrix<Self>) -> Poly<Self> {
        crate::spectra::faddeev_leverrier(m)
    }

    /// A nonzero element whose product with each entry is "integral", so
    /// that later arithmetic avoids denominators. One by default.
    fn clearing_factor(_entries: &[Self]) -> Self {
        Self::one()
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn sign(&self, _ord: &OrderSpec) -> Sign {
        Sign::of_rational(self)
    }

    fn nu(&self, _val: &ValuationSpec) -> Value {
        if Zero::is_zero(self) {
            Value::Infinity
        } else {
            Value::Finite(<Rational as num_traits::Zero>::zero())
        }
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// Parses `p` or `p/q` into a rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

