//! Roots in `Q` and in `Q(X)` of polynomials with exact coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::fields::{Field, Poly, RatFunc, Rational};

fn lcm_of_denominators(cs: &[Rational]) -> BigInt {
    cs.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()))
}

fn sign_changes(seq: &[Poly<Rational>], x: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Fraction with the least denominator in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if hi.is_negative() || (hi.is_zero() && lo.is_negative()) {
        return -simplest_between(&-hi.clone(), &-lo.clone());
    }
    let c = lo.ceil();
    if &c <= hi {
        return c;
    }
    let k = lo.floor();
    let inner = simplest_between(&(hi - &k).recip(), &(lo - &k).recip());
    k + inner.recip()
}

/// Distinct rational roots of a nonzero polynomial over `Q`, increasing.
pub fn rational_roots(p: &Poly<Rational>) -> Vec<Rational> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut f = p.squarefree_part();
    if f.coeff(0).is_zero() {
        roots.push(Rational::zero());
        f = f.shift_down(1);
    }
    if f.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let scale = Rational::from_integer(lcm_of_denominators(f.coeffs()));
    let f = f.scale(&scale);
    let lead = f.leading().expect("nonzero").abs();
    let bound = f
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
        + Rational::one();
    let mut sturm = vec![f.clone(), f.derivative()];
    while let Some(last) = sturm.last() {
        if last.degree().unwrap_or(0) == 0 {
            break;
        }
        let (_, r) = sturm[sturm.len() - 2].div_rem(last);
        if r.is_zero() {
            break;
        }
        sturm.push(-r);
    }
    let tol = (&lead * &lead).recip();
    // intervals (lo, hi] with their root counts
    let mut stack = vec![(-bound.clone(), bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&sturm, &lo) - sign_changes(&sturm, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && &hi - &lo < tol {
            let q = simplest_between(&lo, &hi);
            if f.eval(&q).is_zero() {
                roots.push(q);
            } else if f.eval(&hi).is_zero() {
                roots.push(hi);
            }
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Power series in `Y` truncated to `n` terms.
fn series_mul(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn series_inv(a: &[Rational], n: usize) -> Vec<Rational> {
    let inv0 = a[0].recip();
    let mut out = vec![Rational::zero(); n];
    out[0] = inv0.clone();
    for k in 1..n {
        let mut acc = Rational::zero();
        for j in 1..=k.min(a.len() - 1) {
            acc += &a[j] * &out[k - j];
        }
        out[k] = -acc * &inv0;
    }
    out
}

/// Evaluates `sum_i c_i(Y) r(Y)^i` as a truncated series.
fn series_eval(coeffs: &[Poly<Rational>], r: &[Rational], n: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); n];
    for c in coeffs.iter().rev() {
        acc = series_mul(&acc, r, n);
        for (i, v) in c.coeffs().iter().enumerate().take(n) {
            acc[i] += v;
        }
    }
    acc
}

/// Rational function `u/w` with `deg u, deg w <= d` and `u = w s mod Y^n`.
fn pade(s: &[Rational], d: usize) -> Option<(Poly<Rational>, Poly<Rational>)> {
    let n = s.len();
    let mut r0 = Poly::monomial(Rational::one(), n);
    let mut r1 = Poly::new(s.to_vec());
    let mut t0: Poly<Rational> = Poly::zero();
    let mut t1: Poly<Rational> = Poly::one();
    while r1.degree().is_some_and(|k| k > d) {
        let (q, r) = r0.div_rem(&r1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    if t1.degree()? > d || t1.coeff(0).is_zero() {
        return None;
    }
    Some((r1, t1))
}

/// Distinct roots in `Q(X)` of a nonzero polynomial over `Q(X)`.
pub fn ratfunc_roots(p: &Poly<RatFunc>) -> Vec<RatFunc> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut f = p.squarefree_part();
    if f.coeff(0).is_zero() {
        roots.push(RatFunc::zero());
        f = f.shift_down(1);
    }
    let d = f.degree().unwrap_or(0);
    if d == 0 {
        return roots;
    }
    // clear denominators: coefficients in Q[X]
    let den = f.coeffs().iter().fold(Poly::<Rational>::one(), |acc, c| {
        let g = acc.gcd(c.den());
        &acc * &c.den().div_exact(&g).expect("gcd divides")
    });
    let cs: Vec<Poly<Rational>> = f
        .coeffs()
        .iter()
        .map(|c| (c.num() * &den).div_exact(c.den()).expect("common denominator"))
        .collect();
    let deg_x = cs.iter().filter_map(Poly::degree).max().unwrap_or(0);
    let precision = 2 * deg_x + 2;

    let special = (0..400i64)
        .map(|k| if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 })
        .map(|a| Rational::from_integer(a.into()))
        .find(|a| {
            let pa = Poly::new(cs.iter().map(|c| c.eval(a)).collect());
            pa.degree() == Some(d) && pa.gcd(&pa.derivative()).degree() == Some(0)
        });
    let Some(a) = special else {
        return roots;
    };
    let shifted: Vec<Poly<Rational>> = cs.iter().map(|c| c.taylor_shift(&a)).collect();
    let dshifted: Vec<Poly<Rational>> = (1..shifted.len())
        .map(|i| shifted[i].scale(&Rational::from_integer((i as i64).into())))
        .collect();
    let base = Poly::new(shifted.iter().map(|c| c.coeff(0)).collect());
    for r0 in rational_roots(&base) {
        let mut r = vec![Rational::zero(); precision];
        r[0] = r0;
        let mut ok = false;
        for _ in 0..=(usize::BITS - precision.leading_zeros()) as usize + 2 {
            let val = series_eval(&shifted, &r, precision);
            if val.iter().all(Field::is_zero) {
                ok = true;
                break;
            }
            let der = series_eval(&dshifted, &r, precision);
            let step = series_mul(&val, &series_inv(&der, precision), precision);
            for (x, s) in r.iter_mut().zip(step) {
                *x -= s;
            }
        }
        if !ok && !series_eval(&shifted, &r, precision).iter().all(Field::is_zero) {
            continue;
        }
        let Some((u, w)) = pade(&r, deg_x) else {
            continue;
        };
        let back = -a.clone();
        let Some(candidate) = RatFunc::new(u.taylor_shift(&back), w.taylor_shift(&back)) else {
            continue;
        };
        if f.eval(&candidate).is_zero() {
            roots.push(candidate);
        }
    }
    roots
}
