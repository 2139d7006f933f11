use crate::error::{Error, Result};
use crate::fields::Field;

use super::Matrix;

/// The standard form `<(x1,y1),(x2,y2)> = x1.y2 - x2.y1` on `K^{2n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticForm {
    pub n: usize,
}

impl SymplecticForm {
    pub fn new(n: usize) -> Self {
        SymplecticForm { n }
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// Gram matrix `J = [[0, I], [-I, 0]]`.
    pub fn gram<F: Field>(&self) -> Matrix<F> {
        let n = self.n;
        Matrix::from_fn(2 * n, 2 * n, |i, j| {
            if j == i + n {
                F::one()
            } else if i == j + n {
                -F::one()
            } else {
                F::zero()
            }
        })
    }

    pub fn pair<F: Field>(&self, u: &[F], v: &[F]) -> F {
        let n = self.n;
        let mut acc = F::zero();
        for i in 0..n {
            acc = acc + &(u[i].clone() * &v[i + n]) - &(u[i + n].clone() * &v[i]);
        }
        acc
    }

    /// `ᵗA J B`, computed without forming `J`.
    pub fn pairing_matrix<F: Field>(&self, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        Matrix::from_fn(a.cols(), b.cols(), |i, j| self.pair(&a.column(i), &b.column(j)))
    }

    fn check_square<F: Field>(&self, g: &Matrix<F>) -> Result<()> {
        if g.rows() != self.dim() || g.cols() != self.dim() {
            return Err(Error::Dimension(format!(
                "expected {}x{}, got {}x{}",
                self.dim(),
                self.dim(),
                g.rows(),
                g.cols()
            )));
        }
        Ok(())
    }

    /// `ᵗg J g = J` exactly.
    pub fn is_symplectic<F: Field>(&self, g: &Matrix<F>) -> Result<bool> {
        self.check_square(g)?;
        Ok(self.pairing_matrix(g, g) == self.gram())
    }

    /// `g⁻¹ = -J ᵗg J`, valid for symplectic `g`.
    pub fn inverse<F: Field>(&self, g: &Matrix<F>) -> Result<Matrix<F>> {
        self.check_square(g)?;
        let n = self.n;
        Ok(Matrix::from_fn(2 * n, 2 * n, |i, j| {
            // (-J gᵀ J)_{ij}; J e_j picks a column of gᵀ with a sign
            let (bi, ii) = (i / n, i % n);
            let (bj, jj) = (j / n, j % n);
            match (bi, bj) {
                (0, 0) => g.get(jj + n, ii + n).clone(),
                (0, 1) => -g.get(jj, ii + n).clone(),
                (1, 0) => -g.get(jj + n, ii).clone(),
                _ => g.get(jj, ii).clone(),
            }
        }))
    }

    /// `[[I, S], [0, I]]` for symmetric `S`.
    pub fn upper_shear<F: Field>(&self, s: &Matrix<F>) -> Result<Matrix<F>> {
        self.check_symmetric(s)?;
        let n = self.n;
        Ok(Matrix::from_fn(2 * n, 2 * n, |i, j| {
            if i == j {
                F::one()
            } else if i < n && j >= n {
                s.get(i, j - n).clone()
            } else {
                F::zero()
            }
        }))
    }

    /// `[[I, 0], [S, I]]` for symmetric `S`.
    pub fn lower_shear<F: Field>(&self, s: &Matrix<F>) -> Result<Matrix<F>> {
        self.check_symmetric(s)?;
        let n = self.n;
        Ok(Matrix::from_fn(2 * n, 2 * n, |i, j| {
            if i == j {
                F::one()
            } else if i >= n && j < n {
                s.get(i - n, j).clone()
            } else {
                F::zero()
            }
        }))
    }

    /// `[[A, 0], [0, ᵗA⁻¹]]` for invertible `A`.
    pub fn block_diagonal<F: Field>(&self, a: &Matrix<F>) -> Result<Matrix<F>> {
        let n = self.n;
        if a.rows() != n || a.cols() != n {
            return Err(Error::Dimension("block must be n x n".into()));
        }
        let b = a.inverse()?.transpose();
        Ok(Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => a.get(i, j).clone(),
            (false, false) => b.get(i - n, j - n).clone(),
            _ => F::zero(),
        }))
    }

    /// `diag(d_1, …, d_n, 1/d_1, …, 1/d_n)`.
    pub fn diagonal<F: Field>(&self, d: &[F]) -> Result<Matrix<F>> {
        if d.len() != self.n {
            return Err(Error::Dimension("need n diagonal entries".into()));
        }
        let mut all = d.to_vec();
        for x in d {
            all.push(x.inv().ok_or(Error::Singular)?);
        }
        Ok(Matrix::diagonal(&all))
    }

    fn check_symmetric<F: Field>(&self, s: &Matrix<F>) -> Result<()> {
        if s.rows() != self.n || s.cols() != self.n {
            return Err(Error::Dimension("block must be n x n".into()));
        }
        if *s != s.transpose() {
            return Err(Error::Precondition("block must be symmetric".into()));
        }
        Ok(())
    }
}

/// Square-dimension form for a `2n x 2n` matrix.
pub fn form_for<F: Field>(g: &Matrix<F>) -> Result<SymplecticForm> {
    if !g.is_square() || !g.rows().is_multiple_of(2) || g.rows() == 0 {
        return Err(Error::Dimension(format!(
            "{}x{} is not an even square size",
            g.rows(),
            g.cols()
        )));
    }
    Ok(SymplecticForm::new(g.rows() / 2))
}

pub fn is_symplectic<F: Field>(g: &Matrix<F>, form: &SymplecticForm) -> Result<bool> {
    form.is_symplectic(g)
}
