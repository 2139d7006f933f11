use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::fields::{Field, Poly, RatFunc, Rational};
use crate::linalg::Matrix;

/// Monic characteristic polynomial `det(T - g)`. Panics if `g` is not square.
pub fn char_poly<F: Field>(g: &Matrix<F>) -> Poly<F> {
    F::char_poly(g)
}

/// The Faddeev–LeVerrier recursion over an arbitrary field.
pub fn faddeev_leverrier<F: Field>(g: &Matrix<F>) -> Poly<F> {
    assert!(g.is_square(), "characteristic polynomial of a non-square matrix");
    let n = g.rows();
    let mut coeffs = vec![F::zero(); n + 1];
    coeffs[n] = F::one();
    let mut m = Matrix::<F>::zeros(n, n);
    for k in 1..=n {
        // M_k = g M_{k-1} + c_{n-k+1} I
        let mut next = g * &m;
        let c = coeffs[n - k + 1].clone();
        for i in 0..n {
            let v = next.get(i, i).clone() + &c;
            next.set(i, i, v);
        }
        m = next;
        let t = (g * &m).trace();
        coeffs[n - k] = -(t / &F::from_i64(k as i64));
    }
    Poly::new(coeffs)
}

/// Dense integer polynomial, lowest degree first, used inside the cleared
/// recursion where no fraction reduction is needed.
type IntPoly = Vec<BigInt>;

fn ip_trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn ip_add_assign(acc: &mut IntPoly, p: &[BigInt]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigInt::zero());
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += b;
    }
}

fn ip_mul_add(acc: &mut IntPoly, a: &[BigInt], b: &[BigInt]) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    if acc.len() < a.len() + b.len() - 1 {
        acc.resize(a.len() + b.len() - 1, BigInt::zero());
    }
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            acc[i + j] += x * y;
        }
    }
}

fn ip_matmul(a: &[IntPoly], b: &[IntPoly], n: usize) -> Vec<IntPoly> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = IntPoly::new();
            for k in 0..n {
                ip_mul_add(&mut acc, &a[i * n + k], &b[k * n + j]);
            }
            out.push(ip_trim(acc));
        }
    }
    out
}

fn to_poly(p: &[BigInt]) -> Poly<Rational> {
    Poly::new(p.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

/// Characteristic polynomial over `Q(X)` computed on `c·d·g`, which has
/// integer polynomial entries (`d` the common denominator, `c` clearing the
/// rational coefficients). The recursion then runs over `Z[X]` without any
/// fraction reduction.
pub fn char_poly_cleared(g: &Matrix<RatFunc>) -> Poly<RatFunc> {
    assert!(g.is_square(), "characteristic polynomial of a non-square matrix");
    let n = g.rows();
    let d = g.entries().iter().fold(Poly::<Rational>::one(), |acc, e| {
        let common = acc.gcd(e.den());
        &acc * &e.den().div_exact(&common).expect("gcd divides")
    });
    let rational: Vec<Poly<Rational>> = g
        .entries()
        .iter()
        .map(|e| e.num() * &d.div_exact(e.den()).expect("common denominator"))
        .collect();
    let c = rational
        .iter()
        .flat_map(|p| p.coeffs())
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let cq = Rational::from_integer(c.clone());
    let m: Vec<IntPoly> = rational
        .iter()
        .map(|p| p.coeffs().iter().map(|q| (q * &cq).to_integer()).collect())
        .collect();

    let mut coeffs: Vec<IntPoly> = vec![IntPoly::new(); n + 1];
    coeffs[n] = vec![BigInt::one()];
    let mut acc: Vec<IntPoly> = vec![IntPoly::new(); n * n];
    for k in 1..=n {
        let mut next = ip_matmul(&m, &acc, n);
        for i in 0..n {
            ip_add_assign(&mut next[i * n + i], &coeffs[n - k + 1]);
            next[i * n + i] = ip_trim(std::mem::take(&mut next[i * n + i]));
        }
        acc = next;
        let prod = ip_matmul(&m, &acc, n);
        let mut t = IntPoly::new();
        for i in 0..n {
            ip_add_assign(&mut t, &prod[i * n + i]);
        }
        let kk = BigInt::from(k);
        coeffs[n - k] = ip_trim(t.into_iter().map(|v| -(v / &kk)).collect());
    }
    // det(T - M/(c d)) = (c d)^-n det(c d T - M): coefficient k picks up (c d)^(k-n)
    let cd = d.scale(&cq);
    let mut cd_pow = Poly::<Rational>::one();
    let mut out = vec![RatFunc::zero(); n + 1];
    for k in (0..=n).rev() {
        out[k] = RatFunc::new(to_poly(&coeffs[k]), cd_pow.clone()).expect("nonzero denominator");
        cd_pow = &cd_pow * &cd;
    }
    Poly::new(out)
}
