use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{abs, compare, Field, OrderSpec, RatFunc, Sign};
use crate::linalg::{Lagrangian, Matrix, SymplecticForm};

use super::framing::FramingTable;

/// A point of `K ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryPoint {
    Finite(RatFunc),
    Infinity,
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Finite(t) => write!(f, "{t}"),
            BoundaryPoint::Infinity => f.write_str("inf"),
        }
    }
}

/// The boundary curve `t -> graph(diag(sgn(t) |t|^k_i))`, `∞ -> span(e_{n+1}, …)`,
/// moved by a fixed symplectic conjugator. The diagonal elements
/// `diag(mu^k_i, mu^-k_i)` act on it by `t -> t / mu^2`.
#[derive(Clone, Debug)]
pub struct DiagonalModel {
    exponents: Vec<u32>,
    conj: Matrix<RatFunc>,
    conj_inv: Matrix<RatFunc>,
    ord: OrderSpec,
}

impl DiagonalModel {
    pub fn new(exponents: Vec<u32>, conj: Matrix<RatFunc>, ord: OrderSpec) -> Result<Self> {
        let form = SymplecticForm::new(exponents.len());
        if exponents.is_empty() || exponents.contains(&0) {
            return Err(Error::Precondition("exponents must be positive".into()));
        }
        if !form.is_symplectic(&conj)? {
            return Err(Error::NotSymplectic("conjugator".into()));
        }
        let conj_inv = form.inverse(&conj)?;
        Ok(DiagonalModel {
            exponents,
            conj,
            conj_inv,
            ord,
        })
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn ord(&self) -> &OrderSpec {
        &self.ord
    }

    pub fn lagrangian(&self, p: &BoundaryPoint) -> Result<Lagrangian<RatFunc>> {
        let base = match p {
            BoundaryPoint::Infinity => Lagrangian::vertical(self.n()),
            BoundaryPoint::Finite(t) => {
                let a = abs(t, &self.ord);
                let negative = t.sign(&self.ord) == Sign::Negative;
                let diag: Vec<RatFunc> = self
                    .exponents
                    .iter()
                    .map(|&k| {
                        let v = a.pow(k as i64).expect("nonnegative power");
                        if negative {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect();
                Lagrangian::graph(&Matrix::diagonal(&diag))?
            }
        };
        base.apply(&self.conj)
    }

    /// `conj · diag(mu^k_1, …, mu^-k_1, …) · conj⁻¹`.
    pub fn hyperbolic(&self, mu: &RatFunc) -> Result<Matrix<RatFunc>> {
        let d: Vec<RatFunc> = self
            .exponents
            .iter()
            .map(|&k| mu.pow(k as i64).ok_or(Error::Singular))
            .collect::<Result<_>>()?;
        let g = SymplecticForm::new(self.n()).diagonal(&d)?;
        Ok(&(&self.conj * &g) * &self.conj_inv)
    }

    pub fn act(&self, mu: &RatFunc, p: &BoundaryPoint) -> BoundaryPoint {
        match p {
            BoundaryPoint::Infinity => BoundaryPoint::Infinity,
            BoundaryPoint::Finite(t) => BoundaryPoint::Finite(t.clone() / &(mu.clone() * mu)),
        }
    }

    /// `(repelling, attracting)` fixed points of the element with parameter `mu`.
    pub fn fixed_points(&self, mu: &RatFunc) -> (BoundaryPoint, BoundaryPoint) {
        let zero = BoundaryPoint::Finite(RatFunc::zero());
        if compare(&abs(mu, &self.ord), &RatFunc::one(), &self.ord) == Ordering::Greater {
            (BoundaryPoint::Infinity, zero)
        } else {
            (zero, BoundaryPoint::Infinity)
        }
    }

    /// Cyclic order on `K ∪ {∞}`: increasing, with `∞` last.
    pub fn compare(&self, p: &BoundaryPoint, q: &BoundaryPoint) -> Ordering {
        match (p, q) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => Ordering::Equal,
            (BoundaryPoint::Infinity, _) => Ordering::Greater,
            (_, BoundaryPoint::Infinity) => Ordering::Less,
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => compare(a, b, &self.ord),
        }
    }

    /// Framing on the given points, sorted into positive cyclic order.
    pub fn framing(&self, points: &[BoundaryPoint]) -> Result<FramingTable<RatFunc>> {
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| self.compare(a, b));
        pts.dedup();
        let images = pts.iter().map(|p| self.lagrangian(p)).collect::<Result<Vec<_>>>()?;
        FramingTable::new(pts.iter().map(ToString::to_string).collect(), images, vec![])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::int;
    use crate::linalg::maslov;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn equivariance_of_the_curve() {
        let form = SymplecticForm::new(2);
        let s = Matrix::from_rows(vec![vec![rf("1"), rf("X")], vec![rf("X"), rf("3")]]).unwrap();
        let conj = form.upper_shear(&s).unwrap();
        let model = DiagonalModel::new(vec![1, 2], conj, OrderSpec::AtPlus(int(0))).unwrap();
        let mu = rf("1/X");
        let g = model.hyperbolic(&mu).unwrap();
        for t in ["2", "-X", "1/X^2"] {
            let p = BoundaryPoint::Finite(rf(t));
            let moved = model.lagrangian(&p).unwrap().apply(&g).unwrap();
            assert_eq!(moved, model.lagrangian(&model.act(&mu, &p)).unwrap());
        }
    }

    #[test]
    fn increasing_points_give_maximal_triples() {
        let model = DiagonalModel::new(vec![1, 3], Matrix::identity(4), OrderSpec::AtPlus(int(0))).unwrap();
        let pts: Vec<_> = ["-1", "X", "1"].iter().map(|s| BoundaryPoint::Finite(rf(s))).collect();
        let ls: Vec<_> = pts.iter().map(|p| model.lagrangian(p).unwrap()).collect();
        assert_eq!(maslov(&ls[0], &ls[1], &ls[2], model.ord()).unwrap(), 2);
        let inf = model.lagrangian(&BoundaryPoint::Infinity).unwrap();
        assert_eq!(maslov(&ls[0], &ls[1], &inf, model.ord()).unwrap(), 2);
    }

    #[test]
    fn attracting_fixed_point() {
        let model = DiagonalModel::new(vec![1], Matrix::identity(2), OrderSpec::AtPlus(int(0))).unwrap();
        let (rep, att) = model.fixed_points(&rf("1/X"));
        assert_eq!(rep, BoundaryPoint::Infinity);
        assert_eq!(att, BoundaryPoint::Finite(RatFunc::zero()));
    }
}
