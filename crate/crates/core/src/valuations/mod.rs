//! Order-compatible discrete valuations on Q(X) and Newton polygons of
//! polynomials over a valued field.

mod newton;

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;


use crate::error::Error;
use crate::fields::{int, parse_rational, Field, OrderSpec, RatFunc, Rational, Sign};

pub use newton::{newton_polygon, NewtonPolygon, RootValuation};

/// A valuation on Q(X) with value group Z.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ValuationSpec {
    /// The (X - a)-adic valuation.
    Adic(Rational),
    /// The degree valuation, `nu(X) = -1`.
    AtInfinity,
}

impl ValuationSpec {
    /// The valuation compatible with `ord`: `Adic(a)` for the orders at
    /// `a+` and `a-`, `AtInfinity` for `+inf`. The order at `-inf` pairs
    /// with the degree valuation as well.
    pub fn compatible_with(ord: &OrderSpec) -> ValuationSpec {
        match ord {
            OrderSpec::AtPlus(a) | OrderSpec::AtMinus(a) => ValuationSpec::Adic(a.clone()),
            OrderSpec::PlusInfinity | OrderSpec::MinusInfinity => ValuationSpec::AtInfinity,
        }
    }
}

impl fmt::Display for ValuationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValuationSpec::Adic(a) => write!(f, "adic:{a}"),
            ValuationSpec::AtInfinity => write!(f, "atinf"),
        }
    }
}

impl FromStr for ValuationSpec {
    type Err = Error;

    /// Accepts `adic:A` and `atinf`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "atinf" {
            return Ok(ValuationSpec::AtInfinity);
        }
        s.strip_prefix("adic:")
            .and_then(parse_rational)
            .map(ValuationSpec::Adic)
            .ok_or_else(|| Error::Schema(format!("unknown valuation `{s}`")))
    }
}

/// Element of `Q ∪ {∞}`; `Infinity` is the valuation of zero only.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Finite(Rational),
    Infinity,
}

impl Value {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Value::Finite(v) => Some(v),
            Value::Infinity => None,
        }
    }

    pub fn from_int(n: i64) -> Value {
        Value::Finite(int(n))
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Infinity, Value::Infinity) => Ordering::Equal,
            (Value::Infinity, _) => Ordering::Greater,
            (_, Value::Infinity) => Ordering::Less,
            (Value::Finite(a), Value::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Value {
    type Output = Value;

    fn add(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a + b),
            _ => Value::Infinity,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(v) => write!(f, "{v}"),
            Value::Infinity => write!(f, "inf"),
        }
    }
}

/// Valuation of an element of Q(X).
pub fn nu(f: &RatFunc, val: &ValuationSpec) -> Value {
    if f.is_zero() {
        return Value::Infinity;
    }
    let v = match val {
        ValuationSpec::Adic(a) => {
            let (kn, _) = f.num().root_multiplicity(a).expect("nonzero");
            let (kd, _) = f.den().root_multiplicity(a).expect("nonzero");
            kn as i64 - kd as i64
        }
        ValuationSpec::AtInfinity => {
            f.den().degree().expect("nonzero") as i64 - f.num().degree().expect("nonzero") as i64
        }
    };
    Value::from_int(v)
}

/// Outcome of [`check_order_compatibility`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport<F> {
    pub pairs_checked: usize,
    /// First pair `(x, y)` with `0 < x <= y` but `nu(x) < nu(y)`.
    pub violation: Option<(F, F)>,
}

impl<F> CompatibilityReport<F> {
    pub fn is_compatible(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `0 < x <= y  =>  nu(x) >= nu(y)` on all ordered pairs of samples.
pub fn check_order_compatibility<F: Field>(
    ord: &OrderSpec,
    val: &ValuationSpec,
    samples: &[F],
) -> CompatibilityReport<F> {
    let positive: Vec<(&F, Value)> = samples
        .iter()
        .filter(|s| s.sign(ord) == Sign::Positive)
        .map(|s| (s, s.nu(val)))
        .collect();
    let mut pairs_checked = 0;
    for (x, vx) in &positive {
        for (y, vy) in &positive {
            if ((*y).clone() - x).sign(ord) == Sign::Negative {
                continue;
            }
            pairs_checked += 1;
            if vx < vy {
                return CompatibilityReport {
                    pairs_checked,
                    violation: Some(((*x).clone(), (*y).clone())),
                };
            }
        }
    }
    CompatibilityReport {
        pairs_checked,
        violation: None,
    }
}

/// The value zero in `Q`.
pub fn zero_value() -> Value {
    Value::Finite(<Rational as num_traits::Zero>::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(nu(&rf("1/X"), &ValuationSpec::Adic(int(0))), Value::from_int(-1));
        assert_eq!(nu(&rf("X"), &ValuationSpec::AtInfinity), Value::from_int(-1));
        assert_eq!(
            nu(&rf("(X-2)^3*(X+1)"), &ValuationSpec::Adic(int(2))),
            Value::from_int(3)
        );
        assert_eq!(nu(&RatFunc::zero(), &ValuationSpec::AtInfinity), Value::Infinity);
    }

    #[test]
    fn canonical_pairing_is_compatible() {
        let samples: Vec<RatFunc> = ["X", "1/X", "X^2", "3", "1/2", "X+1", "X/(X+1)", "5*X^3-X", "1/X^2+X"]
            .iter()
            .map(|s| rf(s))
            .collect();
        let report = check_order_compatibility(&OrderSpec::AtPlus(int(0)), &ValuationSpec::Adic(int(0)), &samples);
        assert!(report.is_compatible());
        assert!(report.pairs_checked > 0);
        let report = check_order_compatibility(&OrderSpec::PlusInfinity, &ValuationSpec::AtInfinity, &samples);
        assert!(report.is_compatible());
    }

    #[test]
    fn mismatched_pairing_is_flagged() {
        let samples = vec![rf("1/X"), rf("X")];
        let report = check_order_compatibility(&OrderSpec::PlusInfinity, &ValuationSpec::Adic(int(0)), &samples);
        assert_eq!(report.violation, Some((rf("1/X"), rf("X"))));
    }

    #[test]
    fn constants_have_valuation_zero() {
        let samples = vec![rf("2"), rf("7/3")];
        let report = check_order_compatibility(&OrderSpec::AtPlus(int(0)), &ValuationSpec::Adic(int(0)), &samples);
        assert!(report.is_compatible());
        for s in &samples {
            assert_eq!(nu(s, &ValuationSpec::Adic(int(0))), zero_value());
        }
    }

    #[test]
    fn spec_strings() {
        assert_eq!("adic:1/2".parse::<ValuationSpec>().unwrap(), ValuationSpec::Adic(crate::fields::rat(1, 2)));
        assert_eq!("atinf".parse::<ValuationSpec>().unwrap(), ValuationSpec::AtInfinity);
        assert!("adic".parse::<ValuationSpec>().is_err());
    }
}
