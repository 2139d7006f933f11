use crate::error::{Error, Result};
use crate::fields::{Field, Poly, RatFunc};
use crate::linalg::{Lagrangian, Matrix};
use crate::spectra::{char_poly, ratfunc_roots};
use crate::valuations::{newton_polygon, ValuationSpec, Value};

fn multiplicity(p: &Poly<RatFunc>, root: &RatFunc) -> usize {
    let lin = Poly::linear(root);
    let mut q = p.clone();
    let mut m = 0;
    while let Some(next) = q.div_exact(&lin) {
        q = next;
        m += 1;
    }
    m
}

/// Sum of the generalized eigenspaces of the `n` eigenvalues of least
/// valuation (largest in absolute value for the paired order).
pub fn attracting_lagrangian(g: &Matrix<RatFunc>, val: &ValuationSpec) -> Result<Lagrangian<RatFunc>> {
    if !g.is_square() || !g.rows().is_multiple_of(2) || g.rows() == 0 {
        return Err(Error::Dimension("expected a 2n x 2n matrix".into()));
    }
    let n = g.rows() / 2;
    let p = char_poly(g);
    let np = newton_polygon(&p, val)?;
    if np.zero_roots > 0 {
        return Err(Error::Singular);
    }
    let nus = np.finite_expanded();
    if nus[n - 1] >= nus[n] {
        return Err(Error::SlopeTie(format!(
            "eigenvalue valuations {} and {} do not separate",
            nus[n - 1],
            nus[n]
        )));
    }
    let threshold = Value::Finite(nus[n - 1].clone());
    let dominant: Vec<(RatFunc, usize)> = ratfunc_roots(&p)
        .into_iter()
        .filter(|r| r.nu(val) <= threshold)
        .map(|r| {
            let m = multiplicity(&p, &r);
            (r, m)
        })
        .collect();
    let found: usize = dominant.iter().map(|(_, m)| m).sum();
    if found != n {
        return Err(Error::NonSplit(format!(
            "found {found} of {n} dominant eigenvalues in Q(X)"
        )));
    }
    let id = Matrix::identity(2 * n);
    let m = dominant.iter().fold(id.clone(), |acc, (r, k)| {
        let shifted = g - &id.scale(r);
        &acc * &shifted.pow(*k as u32)
    });
    let kernel = m.kernel();
    if kernel.cols() != n {
        return Err(Error::NonSplit("generalized eigenspace has the wrong dimension".into()));
    }
    Lagrangian::span(&kernel)
}

/// `ker (g - I)^k` for the least `k` at which the kernel reaches dimension
/// `n`; for the unipotent boundary images this is the fixed Lagrangian.
pub fn unipotent_fixed_lagrangian<F: Field>(g: &Matrix<F>) -> Result<Lagrangian<F>> {
    if !g.is_square() || !g.rows().is_multiple_of(2) || g.rows() == 0 {
        return Err(Error::Dimension("expected a 2n x 2n matrix".into()));
    }
    let n = g.rows() / 2;
    let id = Matrix::identity(2 * n);
    let d = g - &id;
    let mut power = d.clone();
    for _ in 0..2 * n {
        let k = power.kernel();
        if k.cols() == n {
            return Lagrangian::span(&k);
        }
        if k.cols() > n {
            break;
        }
        power = &power * &d;
    }
    Err(Error::Precondition("no invariant Lagrangian kernel".into()))
}
