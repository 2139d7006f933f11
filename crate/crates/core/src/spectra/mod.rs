//! Characteristic polynomials, Jordan projections, translation lengths and
//! building pseudodistances over a valued field.

mod charpoly;
pub mod roots;

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::fields::{Field, Rational};
use crate::linalg::Matrix;
use crate::valuations::{newton_polygon, ValuationSpec};

pub use charpoly::{char_poly, char_poly_cleared, faddeev_leverrier};
pub use roots::{rational_roots, ratfunc_roots};

/// How eigenvalue valuations are aggregated into a length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum NormChoice {
    /// Sum of the nonnegative half of the symmetric slope multiset.
    #[default]
    SymplecticSum,
    /// Largest minus smallest eigenvalue slope.
    SpreadMax,
}

impl fmt::Display for NormChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormChoice::SymplecticSum => "sum",
            NormChoice::SpreadMax => "spread",
        })
    }
}

impl FromStr for NormChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum" => Ok(NormChoice::SymplecticSum),
            "spread" => Ok(NormChoice::SpreadMax),
            other => Err(Error::Schema(format!("unknown norm `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JordanMode {
    /// `2n x 2n` symplectic input, `n` nonnegative entries.
    Symplectic,
    /// All eigenvalue slopes of an `n x n` input.
    Linear,
}

/// Entries `-nu(|lambda_j|)` sorted nonincreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanVector(pub Vec<Rational>);

impl JordanVector {
    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for JordanVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Eigenvalue valuations of `g` with multiplicity, nondecreasing.
pub fn eigenvalue_valuations<F: Field>(g: &Matrix<F>, val: &ValuationSpec) -> Result<Vec<Rational>> {
    if !g.is_square() {
        return Err(Error::Dimension("eigenvalues of a non-square matrix".into()));
    }
    let np = newton_polygon(&char_poly(g), val)?;
    if np.zero_roots > 0 {
        return Err(Error::Singular);
    }
    Ok(np.finite_expanded())
}

fn check_symmetric(slopes: &[Rational]) -> Result<()> {
    let m = slopes.len();
    for i in 0..m / 2 {
        if slopes[i] != -slopes[m - 1 - i].clone() {
            return Err(Error::NotSymplectic(format!(
                "eigenvalue valuations {} and {} are not opposite",
                slopes[i],
                slopes[m - 1 - i]
            )));
        }
    }
    Ok(())
}

pub fn jordan_valuation<F: Field>(g: &Matrix<F>, val: &ValuationSpec, mode: JordanMode) -> Result<JordanVector> {
    let nus = eigenvalue_valuations(g, val)?;
    // -nu in nonincreasing order is nu in nondecreasing order, negated
    let mut neg: Vec<Rational> = nus.iter().map(|v| -v.clone()).collect();
    match mode {
        JordanMode::Linear => Ok(JordanVector(neg)),
        JordanMode::Symplectic => {
            if !g.rows().is_multiple_of(2) {
                return Err(Error::Dimension("symplectic mode needs even dimension".into()));
            }
            check_symmetric(&nus)?;
            neg.truncate(g.rows() / 2);
            Ok(JordanVector(neg))
        }
    }
}

pub fn translation_length<F: Field>(g: &Matrix<F>, val: &ValuationSpec, norm: NormChoice) -> Result<Rational> {
    match norm {
        NormChoice::SymplecticSum => Ok(jordan_valuation(g, val, JordanMode::Symplectic)?.sum()),
        NormChoice::SpreadMax => {
            let nus = eigenvalue_valuations(g, val)?;
            Ok(spread(&nus))
        }
    }
}

fn spread(v: &[Rational]) -> Rational {
    match (v.first(), v.last()) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => Rational::zero(),
    }
}

/// Distance between the orbit points `g1·o` and `g2·o` of the basepoint.
pub fn building_pseudodistance<F: Field>(
    g1: &Matrix<F>,
    g2: &Matrix<F>,
    val: &ValuationSpec,
    norm: NormChoice,
) -> Result<Rational> {
    let h = g1.inverse()?.try_mul(g2)?;
    let m = &h.transpose() * &h;
    let two = Rational::from_integer(2.into());
    let halves: Vec<Rational> = eigenvalue_valuations(&m, val)?.into_iter().map(|v| v / &two).collect();
    match norm {
        NormChoice::SymplecticSum => {
            if h.rows() % 2 != 0 {
                return Err(Error::Dimension("symplectic mode needs even dimension".into()));
            }
            check_symmetric(&halves)?;
            Ok(halves
                .iter()
                .filter(|v| v.is_negative())
                .fold(Rational::zero(), |a, b| a - b))
        }
        NormChoice::SpreadMax => Ok(spread(&halves)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{int, RatFunc};

    fn diag(es: &[&str]) -> Matrix<RatFunc> {
        Matrix::diagonal(&es.iter().map(|s| s.parse().unwrap()).collect::<Vec<_>>())
    }

    #[test]
    fn diagonal_lengths() {
        let v0 = ValuationSpec::Adic(int(0));
        let g = diag(&["X", "1/X"]);
        assert_eq!(jordan_valuation(&g, &v0, JordanMode::Symplectic).unwrap().0, vec![int(1)]);
        assert_eq!(translation_length(&g, &v0, NormChoice::SymplecticSum).unwrap(), int(1));
        assert_eq!(translation_length(&g, &v0, NormChoice::SpreadMax).unwrap(), int(2));
        let g = diag(&["X^2", "X", "1/X^2", "1/X"]);
        assert_eq!(
            translation_length(&g, &ValuationSpec::AtInfinity, NormChoice::SymplecticSum).unwrap(),
            int(3)
        );
    }

    #[test]
    fn unipotent_has_length_zero() {
        let u: Matrix<RatFunc> = Matrix::from_rows(vec![
            vec!["1".parse().unwrap(), "X".parse().unwrap()],
            vec!["0".parse().unwrap(), "1".parse().unwrap()],
        ])
        .unwrap();
        for v in [ValuationSpec::Adic(int(0)), ValuationSpec::AtInfinity] {
            assert_eq!(translation_length(&u, &v, NormChoice::SymplecticSum).unwrap(), int(0));
        }
    }

    #[test]
    fn asymmetric_slopes_flag_non_symplectic_input() {
        let g = diag(&["X", "X"]);
        assert!(matches!(
            jordan_valuation(&g, &ValuationSpec::Adic(int(0)), JordanMode::Symplectic),
            Err(Error::NotSymplectic(_))
        ));
        assert_eq!(
            jordan_valuation(&g, &ValuationSpec::Adic(int(0)), JordanMode::Linear).unwrap().0,
            vec![int(-1), int(-1)]
        );
    }

    #[test]
    fn pseudodistance_of_diagonal_element() {
        let v0 = ValuationSpec::Adic(int(0));
        let id = Matrix::<RatFunc>::identity(2);
        let g = diag(&["X", "1/X"]);
        assert_eq!(building_pseudodistance(&id, &id, &v0, NormChoice::SymplecticSum).unwrap(), int(0));
        assert_eq!(building_pseudodistance(&id, &g, &v0, NormChoice::SymplecticSum).unwrap(), int(1));
        assert_eq!(building_pseudodistance(&g, &id, &v0, NormChoice::SpreadMax).unwrap(), int(2));
    }
}
