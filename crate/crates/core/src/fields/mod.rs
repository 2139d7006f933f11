//! Exact arithmetic in Q and Q(X), with sign determination under the
//! non-Archimedean orders of Q(X).

mod field;
mod order;
mod parse;
mod poly;
mod ratfunc;

use std::cmp::Ordering;

pub use field::{int, parse_rational, rat, Field, Rational};
pub use order::{OrderSpec, Sign};
pub use parse::parse_ratfunc;
pub use poly::Poly;
pub use ratfunc::{poly_sign, RatFunc};


/// Sign of `f` in `(K, ord)`.
pub fn sign<F: Field>(f: &F, ord: &OrderSpec) -> Sign {
    f.sign(ord)
}

/// Total order on `K` induced by `ord`.
pub fn compare<F: Field>(f: &F, g: &F, ord: &OrderSpec) -> Ordering {
    (f.clone() - g).sign(ord).to_ordering()
}

/// Absolute value in `(K, ord)`.
pub fn abs<F: Field>(f: &F, ord: &OrderSpec) -> F {
    if f.sign(ord) == Sign::Negative {
        -f.clone()
    } else {
        f.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn compare_examples() {
        let at0 = OrderSpec::AtPlus(int(0));
        assert_eq!(compare(&rf("X"), &rf("X"), &at0), Ordering::Equal);
        let googol = RatFunc::constant(Rational::from_integer(num_bigint::BigInt::from(10).pow(100)));
        assert_eq!(compare(&rf("1/X"), &googol, &at0), Ordering::Greater);
        assert_eq!(compare(&rf("X"), &rf("X^2"), &at0), Ordering::Greater);
    }

    #[test]
    fn one_over_x_minus_a_is_infinitely_large() {
        let a = rat(3, 2);
        let f = RatFunc::x() - &RatFunc::constant(a.clone());
        let big = f.inv().unwrap();
        assert_eq!(sign(&big, &OrderSpec::AtPlus(a.clone())), Sign::Positive);
        for r in [int(0), int(1_000_000), int(i64::MAX)] {
            let c = RatFunc::constant(r);
            assert_eq!(compare(&big, &c, &OrderSpec::AtPlus(a.clone())), Ordering::Greater);
        }
    }
}
