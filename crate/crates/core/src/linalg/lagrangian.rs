use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{Field, OrderSpec, Sign};

use super::{Matrix, SymplecticForm};

/// A Lagrangian subspace of `K^{2n}`, stored as the reduced column echelon
/// form of a `2n x n` basis matrix, so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lagrangian<F> {
    basis: Matrix<F>,
}

impl<F: Field> Lagrangian<F> {
    /// Canonicalizes and validates the column span of `vectors`.
    pub fn span(vectors: &Matrix<F>) -> Result<Self> {
        let rows = vectors.rows();
        if rows == 0 || !rows.is_multiple_of(2) || vectors.cols() != rows / 2 {
            return Err(Error::Dimension(format!(
                "a Lagrangian basis is 2n x n, got {}x{}",
                rows,
                vectors.cols()
            )));
        }
        let n = rows / 2;
        let (r, pivots) = vectors.transpose().rref();
        if pivots.len() != n {
            return Err(Error::RankDeficient {
                rank: pivots.len(),
                expected: n,
            });
        }
        let basis = r.transpose();
        let form = SymplecticForm::new(n);
        if !form.pairing_matrix(&basis, &basis).is_zero() {
            return Err(Error::NotIsotropic);
        }
        Ok(Lagrangian { basis })
    }

    /// `span(e_1, …, e_n)`.
    pub fn horizontal(n: usize) -> Self {
        Lagrangian {
            basis: Matrix::from_fn(2 * n, n, |i, j| if i == j { F::one() } else { F::zero() }),
        }
    }

    /// `span(e_{n+1}, …, e_{2n})`.
    pub fn vertical(n: usize) -> Self {
        Lagrangian {
            basis: Matrix::from_fn(2 * n, n, |i, j| if i == j + n { F::one() } else { F::zero() }),
        }
    }

    /// Column span of `[I; S]` for symmetric `S`.
    pub fn graph(s: &Matrix<F>) -> Result<Self> {
        let n = s.rows();
        if s.cols() != n {
            return Err(Error::Dimension("graph of a non-square matrix".into()));
        }
        let b = Matrix::from_fn(2 * n, n, |i, j| {
            if i < n {
                if i == j {
                    F::one()
                } else {
                    F::zero()
                }
            } else {
                s.get(i - n, j).clone()
            }
        });
        Lagrangian::span(&b)
    }

    pub fn n(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    /// Image under `g`.
    pub fn apply(&self, g: &Matrix<F>) -> Result<Self> {
        Lagrangian::span(&g.try_mul(&self.basis)?)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let col = Matrix::from_columns(v.len(), &[v.to_vec()]);
        match self.basis.hstack(&col) {
            Ok(m) => m.rank() == self.n(),
            Err(_) => false,
        }
    }

    pub fn transverse(&self, other: &Lagrangian<F>) -> bool {
        self.n() == other.n()
            && self
                .basis
                .hstack(&other.basis)
                .map(|m| m.rank() == 2 * self.n())
                .unwrap_or(false)
    }
}

impl<F: Field> fmt::Display for Lagrangian<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = (0..self.n())
            .map(|j| {
                let c: Vec<String> = self.basis.column(j).iter().map(ToString::to_string).collect();
                format!("({})", c.join(", "))
            })
            .collect();
        write!(f, "span{{{}}}", cols.join(", "))
    }
}

pub fn lagrangian_span<F: Field>(vectors: &Matrix<F>) -> Result<Lagrangian<F>> {
    Lagrangian::span(vectors)
}

pub fn transverse<F: Field>(l1: &Lagrangian<F>, l2: &Lagrangian<F>) -> bool {
    l1.transverse(l2)
}

/// Inertia of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Inertia of a symmetric matrix by congruence diagonalization, signs read
/// in the ordered field `(K, ord)`.
pub fn inertia<F: Field>(m: &Matrix<F>, ord: &OrderSpec) -> Result<Inertia> {
    if !m.is_square() || *m != m.transpose() {
        return Err(Error::Precondition("inertia needs a symmetric matrix".into()));
    }
    let mut a = m.to_rows();
    let mut active: Vec<usize> = (0..m.rows()).collect();
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    while !active.is_empty() {
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !a[i][i].is_zero())
            .min_by_key(|&i| a[i][i].degree_size());
        let k = match pivot {
            Some(k) => k,
            None => {
                let pair = active.iter().find_map(|&i| {
                    active
                        .iter()
                        .find(|&&j| j != i && !a[i][j].is_zero())
                        .map(|&j| (i, j))
                });
                let Some((i, j)) = pair else {
                    out.zero += active.len();
                    break;
                };
                // row_i += row_j, col_i += col_j; new a_ii = 2 a_ij since both diagonals vanish
                for &t in &active {
                    let v = a[i][t].clone() + &a[j][t];
                    a[i][t] = v;
                }
                for &t in &active {
                    let v = a[t][i].clone() + &a[t][j];
                    a[t][i] = v;
                }
                i
            }
        };
        let p = a[k][k].clone();
        match p.sign(ord) {
            Sign::Positive => out.positive += 1,
            Sign::Negative => out.negative += 1,
            Sign::Zero => unreachable!("pivot is nonzero"),
        }
        let inv = p.inv().expect("nonzero pivot");
        active.retain(|&i| i != k);
        for &i in &active {
            if a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone() * &inv;
            for &j in &active {
                if a[k][j].is_zero() {
                    continue;
                }
                let v = a[i][j].clone() - &(f.clone() * &a[k][j]);
                a[i][j] = v;
            }
        }
    }
    Ok(out)
}

/// Maslov index together with the radical dimension of the underlying form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaslovIndex {
    pub index: i64,
    pub radical: usize,
}

/// Gram matrix of `q(x1,x2,x3) = <x1,x2> + <x2,x3> + <x3,x1>` on `l1 × l2 × l3`
/// (doubled, which leaves the signature unchanged).
pub fn maslov_gram<F: Field>(l1: &Lagrangian<F>, l2: &Lagrangian<F>, l3: &Lagrangian<F>) -> Result<Matrix<F>> {
    let n = l1.n();
    if l2.n() != n || l3.n() != n {
        return Err(Error::Dimension("Lagrangians of different dimensions".into()));
    }
    let form = SymplecticForm::new(n);
    let m12 = form.pairing_matrix(l1.basis(), l2.basis());
    let m23 = form.pairing_matrix(l2.basis(), l3.basis());
    let m31 = form.pairing_matrix(l3.basis(), l1.basis());
    Ok(Matrix::from_fn(3 * n, 3 * n, |i, j| {
        let (bi, ii, bj, jj) = (i / n, i % n, j / n, j % n);
        match (bi, bj) {
            (0, 1) => m12.get(ii, jj).clone(),
            (1, 0) => m12.get(jj, ii).clone(),
            (1, 2) => m23.get(ii, jj).clone(),
            (2, 1) => m23.get(jj, ii).clone(),
            (2, 0) => m31.get(ii, jj).clone(),
            (0, 2) => m31.get(jj, ii).clone(),
            _ => F::zero(),
        }
    }))
}

pub fn maslov_full<F: Field>(
    l1: &Lagrangian<F>,
    l2: &Lagrangian<F>,
    l3: &Lagrangian<F>,
    ord: &OrderSpec,
) -> Result<MaslovIndex> {
    let inertia = inertia(&maslov_gram(l1, l2, l3)?, ord)?;
    Ok(MaslovIndex {
        index: inertia.signature(),
        radical: inertia.zero,
    })
}

/// Maslov index of a triple of Lagrangians.
pub fn maslov<F: Field>(l1: &Lagrangian<F>, l2: &Lagrangian<F>, l3: &Lagrangian<F>, ord: &OrderSpec) -> Result<i64> {
    maslov_full(l1, l2, l3, ord).map(|m| m.index)
}

pub fn is_maximal_triple<F: Field>(
    l1: &Lagrangian<F>,
    l2: &Lagrangian<F>,
    l3: &Lagrangian<F>,
    ord: &OrderSpec,
) -> Result<bool> {
    Ok(maslov(l1, l2, l3, ord)? == l1.n() as i64)
}

fn cleared_basis<F: Field>(b: &Matrix<F>) -> Matrix<F> {
    let cols: Vec<Vec<F>> = (0..b.cols())
        .map(|j| {
            let c = b.column(j);
            let f = F::clearing_factor(&c);
            c.into_iter().map(|e| e * &f).collect()
        })
        .collect();
    Matrix::from_columns(b.rows(), &cols)
}

/// Determinant by cofactor expansion, which needs no division; used for the
/// small pairing matrices.
fn small_det<F: Field>(m: &Matrix<F>) -> F {
    let n = m.rows();
    match n {
        0 => F::one(),
        1 => m.get(0, 0).clone(),
        2 => m.get(0, 0).clone() * m.get(1, 1) - &(m.get(0, 1).clone() * m.get(1, 0)),
        _ if n > 4 => m.det().expect("square"),
        _ => {
            let mut acc = F::zero();
            for j in 0..n {
                if m.get(0, j).is_zero() {
                    continue;
                }
                let minor = Matrix::from_fn(n - 1, n - 1, |r, c| m.get(r + 1, if c < j { c } else { c + 1 }).clone());
                let t = m.get(0, j).clone() * &small_det(&minor);
                acc = if j % 2 == 0 { acc + &t } else { acc - &t };
            }
            acc
        }
    }
}

/// `det(p_{l1}^{∥l2} ∘ p_{l3}^{∥l4} |_{l1})`, where `p_a^{∥b}` projects onto
/// `a` along `b`. In terms of the pairings `w_ij = ω(l_i, l_j)` of the bases
/// this is `det w23 · det w41 / (det w21 · det w43)`, which avoids solving
/// in dimension `2n`.
pub fn crossratio<F: Field>(
    l1: &Lagrangian<F>,
    l2: &Lagrangian<F>,
    l3: &Lagrangian<F>,
    l4: &Lagrangian<F>,
) -> Result<F> {
    if l1.n() != l2.n() || l1.n() != l3.n() || l1.n() != l4.n() {
        return Err(Error::Dimension("Lagrangians of different dimensions".into()));
    }
    let form = SymplecticForm::new(l1.n());
    // Rescaling basis columns leaves the ratio unchanged, so clear
    // denominators first and keep the determinants division-free.
    let cleared: Vec<Matrix<F>> = [l1, l2, l3, l4].iter().map(|l| cleared_basis(l.basis())).collect();
    let w = |a: usize, b: usize| Ok::<F, Error>(small_det(&form.pairing_matrix(&cleared[a], &cleared[b])));
    let (l1, l2, l3, l4) = (0, 1, 2, 3);
    let w21 = w(l2, l1)?;
    if w21.is_zero() {
        return Err(Error::NotTransverse("first pair".into()));
    }
    let w43 = w(l4, l3)?;
    if w43.is_zero() {
        return Err(Error::NotTransverse("second pair".into()));
    }
    let num = w(l2, l3)? * &w(l4, l1)?;
    Ok(num * &(w21 * &w43).inv().expect("nonzero"))
}
