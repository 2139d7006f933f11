use num_traits::Signed;

use super::{Value, ValuationSpec};
use crate::error::{Error, Result};
use crate::fields::{Field, Poly, Rational};

/// One edge of the Newton polygon read as roots: `multiplicity` roots of
/// valuation `valuation` (minus the slope).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootValuation {
    pub valuation: Rational,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// Hull vertices `(i, nu(c_i))`, increasing in `i`.
    pub vertices: Vec<(usize, Rational)>,
    /// Root valuations in nondecreasing order, merged by value.
    pub roots: Vec<RootValuation>,
    /// Number of zero roots (valuation `+inf`).
    pub zero_roots: usize,
}

impl NewtonPolygon {
    /// All root valuations with multiplicity, nondecreasing, zero roots last.
    pub fn expanded(&self) -> Vec<Value> {
        let mut out = Vec::new();
        for r in &self.roots {
            out.extend(std::iter::repeat_n(Value::Finite(r.valuation.clone()), r.multiplicity));
        }
        out.extend(std::iter::repeat_n(Value::Infinity, self.zero_roots));
        out
    }

    /// Finite root valuations with multiplicity, nondecreasing.
    pub fn finite_expanded(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        for r in &self.roots {
            out.extend(std::iter::repeat_n(r.valuation.clone(), r.multiplicity));
        }
        out
    }
}

fn cross(o: &(usize, Rational), a: &(usize, Rational), b: &(usize, Rational)) -> Rational {
    let ax = Rational::from_integer((a.0 as i64 - o.0 as i64).into());
    let bx = Rational::from_integer((b.0 as i64 - o.0 as i64).into());
    ax * (&b.1 - &o.1) - (&a.1 - &o.1) * bx
}

/// Newton polygon of `p` with respect to `val`.
pub fn newton_polygon<F: Field>(p: &Poly<F>, val: &ValuationSpec) -> Result<NewtonPolygon> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut points = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if let Value::Finite(v) = c.nu(val) {
            points.push((i, v));
        }
    }
    let zero_roots = points[0].0;
    let mut hull: Vec<(usize, Rational)> = Vec::new();
    for pt in points {
        while hull.len() >= 2 && !cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &pt).is_positive() {
            hull.pop();
        }
        hull.push(pt);
    }
    let mut roots = Vec::new();
    for w in hull.windows(2).rev() {
        let width = w[1].0 - w[0].0;
        let slope = (&w[1].1 - &w[0].1) / Rational::from_integer((width as i64).into());
        roots.push(RootValuation {
            valuation: -slope,
            multiplicity: width,
        });
    }
    debug_assert!(roots.windows(2).all(|r| r[0].valuation < r[1].valuation));
    Ok(NewtonPolygon {
        vertices: hull,
        roots,
        zero_roots,
    })
}
