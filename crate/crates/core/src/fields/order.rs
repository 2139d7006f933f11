use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use super::field::{parse_rational, Rational};
use crate::error::Error;

/// One of the non-Archimedean orders on Q(X).
///
/// `AtPlus(a)` makes `f` positive when `f(t) > 0` on some interval `(a, a + eps)`,
/// `AtMinus(a)` uses `(a - eps, a)`, and the two infinite orders look at
/// `t -> +inf` and `t -> -inf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderSpec {
    AtMinus(Rational),
    AtPlus(Rational),
    MinusInfinity,
    PlusInfinity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(q: &Rational) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    /// Ordering of `x` against zero, given the sign of `x`.
    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSpec::AtMinus(a) => write!(f, "aminus:{a}"),
            OrderSpec::AtPlus(a) => write!(f, "aplus:{a}"),
            OrderSpec::MinusInfinity => write!(f, "minusinf"),
            OrderSpec::PlusInfinity => write!(f, "plusinf"),
        }
    }
}

impl FromStr for OrderSpec {
    type Err = Error;

    /// Accepts `aplus:A`, `aminus:A`, `plusinf`, `minusinf`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::Schema(format!("unknown order `{s}`"));
        match s {
            "plusinf" => Ok(OrderSpec::PlusInfinity),
            "minusinf" => Ok(OrderSpec::MinusInfinity),
            _ => {
                let (tag, a) = s.split_once(':').ok_or_else(bad)?;
                let a = parse_rational(a).ok_or_else(bad)?;
                match tag {
                    "aplus" => Ok(OrderSpec::AtPlus(a)),
                    "aminus" => Ok(OrderSpec::AtMinus(a)),
                    _ => Err(bad()),
                }
            }
        }
    }
}
