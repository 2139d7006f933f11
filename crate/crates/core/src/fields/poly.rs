use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{Field, Rational};

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<F = Rational> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// `c * T^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The polynomial `T - root`.
    pub fn linear(root: &F) -> Self {
        Poly::new(vec![-root.clone(), F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Number of leading zero coefficients from the constant term upward,
    /// i.e. the multiplicity of the root 0. `None` for the zero polynomial.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Multiplies by `T^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `T^k`, dropping the low terms. Callers make sure they vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        if k >= self.coeffs.len() {
            return Poly::zero();
        }
        Poly::new(self.coeffs[k..].to_vec())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &F::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly<F>) -> (Poly<F>, Poly<F>) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top * &lc_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = q.clone() * d;
                let slot = std::mem::replace(&mut rem[k + j], F::zero());
                rem[k + j] = slot - &t;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient when `divisor` is known to divide `self`.
    pub fn div_exact(&self, divisor: &Poly<F>) -> Option<Poly<F>> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly<F>) -> Poly<F> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, made monic.
    pub fn squarefree_part(&self) -> Poly<F> {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Coefficients of `self(T + a)`, computed by repeated synthetic division
    /// by `T - a`.
    pub fn taylor_shift(&self, a: &F) -> Poly<F> {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n.saturating_sub(1) {
            for j in (i..n - 1).rev() {
                let t = c[j + 1].clone() * a;
                c[j] = c[j].clone() + &t;
            }
        }
        Poly::new(c)
    }

    /// Multiplicity of `a` as a root, and the value at `a` of the cofactor.
    /// `None` for the zero polynomial.
    pub fn root_multiplicity(&self, a: &F) -> Option<(usize, F)> {
        let shifted = self.taylor_shift(a);
        let k = shifted.low_order()?;
        Some((k, shifted.coeffs[k].clone()))
    }

    /// Substitutes `x` for the variable, with `x` a polynomial.
    pub fn compose(&self, x: &Poly<F>) -> Poly<F> {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

/// Integer coefficients of a positive rational multiple of `p` with content 1.
fn primitive_int(p: &Poly<Rational>) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| c.numer() * &(&lcm / c.denom())).collect();
    make_primitive(ints)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b`, made primitive.
fn primitive_prem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    while a.len() > db {
        let top = a.len() - 1;
        let la = a[top].clone();
        for c in &mut a {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            a[top - db + j] -= &la * bj;
        }
        a = make_primitive(a);
    }
    make_primitive(a)
}

impl Poly<Rational> {
    /// Monic gcd over Q by a primitive remainder sequence over Z, which keeps
    /// coefficient growth far below the Euclidean algorithm over Q.
    pub fn gcd_q(&self, other: &Poly<Rational>) -> Poly<Rational> {
        let mut a = primitive_int(self);
        let mut b = primitive_int(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            if b.len() == 1 {
                return Poly::one();
            }
            let r = primitive_prem(a, &b);
            a = b;
            b = r;
        }
        Poly::new(a.into_iter().map(Rational::from_integer).collect()).monic()
    }
}

impl<'a, F: Field> Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;

    fn add(self, rhs: &'a Poly<F>) -> Poly<F> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (slot, c) in coeffs.iter_mut().zip(short.coeffs.iter()) {
            let v = std::mem::replace(slot, F::zero());
            *slot = v + c;
        }
        Poly::new(coeffs)
    }
}

impl<'a, F: Field> Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;

    fn sub(self, rhs: &'a Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, F::zero());
        for (slot, c) in coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            let v = std::mem::replace(slot, F::zero());
            *slot = v - c;
        }
        Poly::new(coeffs)
    }
}

impl<'a, F: Field> Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;

    fn mul(self, rhs: &'a Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let v = std::mem::replace(&mut coeffs[i + j], F::zero());
                coeffs[i + j] = v + &(a.clone() * b);
            }
        }
        Poly::new(coeffs)
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;

    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<F: Field> Poly<F> {
    /// The polynomial in the expression grammar with `var` as the variable,
    /// highest degree first.
    pub fn to_expr(&self, var: &str) -> String {
        use std::fmt::Write;

        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, body) = match text.strip_prefix('-') {
                Some(rest) if is_atomic(rest) => (true, rest.to_string()),
                _ => (false, text),
            };
            let body = if is_atomic(&body) {
                body
            } else {
                format!("({body})")
            };
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if k == 0 {
                out.push_str(&body);
                continue;
            }
            if body != "1" {
                let _ = write!(out, "{body}*");
            }
            if k == 1 {
                out.push_str(var);
            } else {
                let _ = write!(out, "{var}^{k}");
            }
        }
        out
    }
}

/// A coefficient string that can be juxtaposed with `*` without parentheses:
/// an integer or a plain fraction.
fn is_atomic(s: &str) -> bool {
    let mut parts = s.splitn(2, '/');
    let digits = |p: Option<&str>| p.is_some_and(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()));
    let first = parts.next();
    match parts.next() {
        None => digits(first),
        Some(den) => digits(first) && digits(Some(den)),
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr("T"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::field::int;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn integer_gcd_matches_euclid() {
        let a = &p(&[3, -1, 2]) * &p(&[-5, 0, 7, 1]);
        let b = &p(&[3, -1, 2]) * &p(&[2, 9]);
        let half = Poly::new(vec![crate::fields::rat(1, 2), crate::fields::rat(-3, 4)]);
        for (x, y) in [(&a, &b), (&b, &a), (&a, &half), (&(&a * &half), &(&b * &half))] {
            assert_eq!(x.gcd_q(y), x.gcd(y));
        }
        assert!(p(&[1, 1]).gcd_q(&p(&[2])).is_one());
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        // (X-1)(X+2) and (X-1)(X-3)
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[-3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let (q, r) = a.div_rem(&p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, p(&[2, 1]));
    }

    #[test]
    fn taylor_shift_matches_composition() {
        let f = p(&[3, -2, 0, 5, 1]);
        let a = int(2);
        let composed = f.compose(&p(&[2, 1]));
        assert_eq!(f.taylor_shift(&a), composed);
    }

    #[test]
    fn root_multiplicity_counts() {
        // (X-2)^3 (X+1)
        let f = &p(&[-2, 1]).pow(3) * &p(&[1, 1]);
        let (k, rest) = f.root_multiplicity(&int(2)).unwrap();
        assert_eq!(k, 3);
        assert_eq!(rest, int(3));
    }

    #[test]
    fn squarefree_part_drops_repeats() {
        let f = &p(&[-2, 1]).pow(3) * &p(&[1, 1]).pow(2);
        assert_eq!(f.squarefree_part(), &p(&[-2, 1]) * &p(&[1, 1]));
    }
}
