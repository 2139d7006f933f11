use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::field::{Field, Rational};
use super::order::{OrderSpec, Sign};
use super::poly::Poly;
use crate::error::Error;
use crate::valuations::{self, Value, ValuationSpec};

/// An element of Q(X) in canonical form: `num / den` with `gcd(num, den) = 1`
/// and `den` monic. Equality and hashing are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds `num / den` in canonical form; `None` when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Option<RatFunc> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num, den))
    }

    pub fn from_poly(num: Poly) -> RatFunc {
        RatFunc { num, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    /// The indeterminate `X`.
    pub fn x() -> RatFunc {
        RatFunc::from_poly(Poly::monomial(<Rational as num_traits::One>::one(), 1))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        if Zero::is_zero(&d) {
            None
        } else {
            Some(self.num.eval(t) / d)
        }
    }

    pub fn pow(&self, e: i64) -> Option<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Some(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    fn reduce(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero_value();
        }
        let dd = den.degree().expect("nonzero denominator");
        if dd == 0 {
            let c = den.coeff(0);
            let num = if One::is_one(&c) {
                num
            } else {
                num.scale(&(<Rational as num_traits::One>::one() / c))
            };
            return RatFunc { num, den: Poly::one() };
        }
        let (num, den) = if den.low_order() == Some(dd) {
            // den = c * X^dd
            let k = num.low_order().expect("nonzero").min(dd);
            (num.shift_down(k), den.shift_down(k))
        } else {
            let g = num.gcd_q(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides"),
                    den.div_exact(&g).expect("gcd divides"),
                )
            }
        };
        let lc = den.leading().expect("nonzero").clone();
        if One::is_one(&lc) {
            RatFunc { num, den }
        } else {
            let inv = <Rational as num_traits::One>::one() / lc;
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    /// `num / den` for coprime inputs: only the leading coefficient of the
    /// denominator needs normalizing.
    fn from_coprime(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero_value();
        }
        let lc = den.leading().expect("nonzero denominator").clone();
        if One::is_one(&lc) {
            return RatFunc { num, den };
        }
        let inv = <Rational as num_traits::One>::one() / lc;
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    /// `self + sign * rhs`, reducing only against the common factor of the
    /// denominators.
    fn combine(&self, rhs: &RatFunc, subtract: bool) -> RatFunc {
        let join = |a: &Poly, b: &Poly| if subtract { a - b } else { a + b };
        if self.den == rhs.den {
            let num = join(&self.num, &rhs.num);
            if self.den.is_one() {
                return RatFunc::from_poly(num);
            }
            return RatFunc::reduce(num, self.den.clone());
        }
        if self.den.is_one() || rhs.den.is_one() {
            // a + c/d = (a d + c) / d stays reduced.
            let num = join(&(&self.num * &rhs.den), &(&rhs.num * &self.den));
            return RatFunc::from_coprime(num, &self.den * &rhs.den);
        }
        let g = self.den.gcd_q(&rhs.den);
        if g.is_one() {
            let num = join(&(&self.num * &rhs.den), &(&rhs.num * &self.den));
            return RatFunc::from_coprime(num, &self.den * &rhs.den);
        }
        let b = self.den.div_exact(&g).expect("gcd divides");
        let d = rhs.den.div_exact(&g).expect("gcd divides");
        let num = join(&(&self.num * &d), &(&rhs.num * &b));
        if num.is_zero() {
            return RatFunc::zero_value();
        }
        let den = &b * &rhs.den;
        let h = num.gcd_q(&g);
        if h.is_one() {
            RatFunc::from_coprime(num, den)
        } else {
            RatFunc::from_coprime(
                num.div_exact(&h).expect("gcd divides"),
                den.div_exact(&h).expect("gcd divides"),
            )
        }
    }

    /// Product of reduced fractions `(a/b)(c/d)`, cancelling `gcd(a, d)` and
    /// `gcd(c, b)` before multiplying.
    fn product(a: &Poly, b: &Poly, c: &Poly, d: &Poly) -> RatFunc {
        let cancel = |p: &Poly, q: &Poly| -> (Poly, Poly) {
            if q.is_one() || p.degree() == Some(0) || q.degree() == Some(0) {
                return (p.clone(), q.clone());
            }
            let g = p.gcd_q(q);
            if g.is_one() {
                (p.clone(), q.clone())
            } else {
                (p.div_exact(&g).expect("gcd divides"), q.div_exact(&g).expect("gcd divides"))
            }
        };
        let (a, d) = cancel(a, d);
        let (c, b) = cancel(c, b);
        RatFunc::from_coprime(&a * &c, &b * &d)
    }

    fn zero_value() -> RatFunc {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    /// Canonical display form: the numerator alone when the denominator is 1,
    /// otherwise `(p(X))/(q(X))`.
    pub fn to_expr(&self) -> String {
        if self.den.is_one() {
            self.num.to_expr("X")
        } else {
            format!("({})/({})", self.num.to_expr("X"), self.den.to_expr("X"))
        }
    }
}

/// Sign of a polynomial in the ordered field `(Q(X), ord)`.
pub fn poly_sign(p: &Poly, ord: &OrderSpec) -> Sign {
    let Some(deg) = p.degree() else {
        return Sign::Zero;
    };
    match ord {
        OrderSpec::PlusInfinity => Sign::of_rational(p.leading().expect("nonzero")),
        OrderSpec::MinusInfinity => {
            let s = Sign::of_rational(p.leading().expect("nonzero"));
            if deg % 2 == 1 {
                s.flip()
            } else {
                s
            }
        }
        OrderSpec::AtPlus(a) | OrderSpec::AtMinus(a) => {
            let (k, rest) = p.root_multiplicity(a).expect("nonzero");
            let s = Sign::of_rational(&rest);
            if matches!(ord, OrderSpec::AtMinus(_)) && k % 2 == 1 {
                s.flip()
            } else {
                s
            }
        }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero_value()
    }

    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn from_rational(q: Rational) -> Self {
        RatFunc::constant(q)
    }

    fn sign(&self, ord: &OrderSpec) -> Sign {
        poly_sign(&self.num, ord).times(poly_sign(&self.den, ord))
    }

    fn nu(&self, val: &ValuationSpec) -> Value {
        valuations::nu(self, val)
    }

    fn degree_size(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    fn char_poly(m: &crate::linalg::Matrix<Self>) -> Poly<Self> {
        crate::spectra::char_poly_cleared(m)
    }

    /// Least common multiple of the denominators.
    fn clearing_factor(entries: &[Self]) -> Self {
        let lcm = entries.iter().fold(Poly::one(), |acc, e| {
            if e.den.is_one() {
                return acc;
            }
            let g = acc.gcd_q(&e.den);
            &acc * &e.den.div_exact(&g).expect("gcd divides")
        });
        RatFunc::from_poly(lcm)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        self.combine(rhs, false)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        if rhs.num.is_zero() {
            return self.clone();
        }
        self.combine(rhs, true)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::zero_value();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::product(&self.num, &self.den, &rhs.num, &rhs.den)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn div(self, rhs: &'a RatFunc) -> RatFunc {
        assert!(!rhs.num.is_zero(), "division by zero in Q(X)");
        if self.num.is_zero() {
            return RatFunc::zero_value();
        }
        RatFunc::product(&self.num, &self.den, &rhs.den, &rhs.num)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &'a RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl From<Rational> for RatFunc {
    fn from(q: Rational) -> Self {
        RatFunc::constant(q)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_ratfunc(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::field::{int, rat};

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_cancels_common_factors() {
        let f = rf("(X^2-1)/(X-1)");
        assert_eq!(f, rf("X+1"));
        assert!(f.is_polynomial());
        let g = rf("(2*X+2)/(4*X^2-4)");
        assert_eq!(g.den(), &rf("X-1").num().clone());
        assert_eq!(g.num().coeff(0), rat(1, 2));
    }

    #[test]
    fn laurent_fast_path_agrees_with_general_reduction() {
        let f = rf("-256*X^2+320-16/X^2");
        assert_eq!(f.to_expr(), "(-256*X^4+320*X^2-16)/(X^2)");
        let g = rf("(X^3+X)/(X^2)");
        assert_eq!(g, rf("(X^2+1)/X"));
    }

    #[test]
    fn sign_examples() {
        let big = rf("1/(X-3)");
        assert_eq!(big.sign(&OrderSpec::AtPlus(int(3))), Sign::Positive);
        assert_eq!(big.sign(&OrderSpec::AtMinus(int(3))), Sign::Negative);
        assert_eq!(rf("-X^2+3").sign(&OrderSpec::PlusInfinity), Sign::Negative);
        assert_eq!(rf("X^3").sign(&OrderSpec::MinusInfinity), Sign::Negative);
        assert_eq!(RatFunc::zero().sign(&OrderSpec::PlusInfinity), Sign::Zero);
    }

    #[test]
    fn eval_avoids_poles() {
        let f = rf("1/(X-2)");
        assert_eq!(f.eval(&int(3)), Some(int(1)));
        assert_eq!(f.eval(&int(2)), None);
    }
}
