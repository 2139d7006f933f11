use std::collections::HashMap;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::fields::{Field, Rational};
use crate::linalg::crossratio;
use crate::reps::{is_positively_oriented, FramingTable};
use crate::valuations::{ValuationSpec, Value};

/// A nonnegative function on positively oriented quadruples of labels.
pub trait PositiveCrossratio: Sync {
    /// Labels in positive cyclic order.
    fn labels(&self) -> &[String];

    /// Value on a quadruple of label indices; `None` when the quadruple is
    /// not evaluable (for a table: not listed).
    fn value(&self, q: [usize; 4]) -> Result<Option<Rational>>;

    fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }
}

/// Indices of the given labels, failing on the first missing one.
pub fn label_indices<const K: usize>(cr: &dyn PositiveCrossratio, labels: [&str; K]) -> Result<[usize; K]> {
    let mut out = [0; K];
    for (o, l) in out.iter_mut().zip(labels) {
        *o = cr
            .index_of(l)
            .ok_or_else(|| Error::Framing(format!("missing label `{l}`")))?;
    }
    Ok(out)
}

/// Finite table of values.
#[derive(Clone, Debug, Default)]
pub struct CrossratioTable {
    labels: Vec<String>,
    values: HashMap<[usize; 4], Rational>,
}

impl CrossratioTable {
    pub fn new(labels: Vec<String>) -> Self {
        CrossratioTable {
            labels,
            values: HashMap::new(),
        }
    }

    pub fn insert(&mut self, q: [usize; 4], v: Rational) -> Result<()> {
        if q.iter().any(|&i| i >= self.labels.len()) {
            return Err(Error::Framing("unknown label index".into()));
        }
        if !is_positively_oriented(&q) {
            return Err(Error::Precondition("quadruple is not positively oriented".into()));
        }
        if v.is_negative() {
            return Err(Error::Precondition("crossratio values are nonnegative".into()));
        }
        self.values.insert(q, v);
        Ok(())
    }
}

impl PositiveCrossratio for CrossratioTable {
    fn labels(&self) -> &[String] {
        &self.labels
    }

    fn value(&self, q: [usize; 4]) -> Result<Option<Rational>> {
        Ok(self.values.get(&q).cloned())
    }
}

/// `[x1, x2, x3, x4] = -1/2 nu(CR(phi x1, phi x2, phi x4, phi x3))` over a
/// framing.
pub struct FramingCrossratio<'a, F> {
    pub framing: &'a FramingTable<F>,
    pub val: ValuationSpec,
}

impl<'a, F: Field> FramingCrossratio<'a, F> {
    pub fn new(framing: &'a FramingTable<F>, val: ValuationSpec) -> Self {
        FramingCrossratio { framing, val }
    }
}

impl<F: Field> PositiveCrossratio for FramingCrossratio<'_, F> {
    fn labels(&self) -> &[String] {
        self.framing.labels()
    }

    fn value(&self, q: [usize; 4]) -> Result<Option<Rational>> {
        if !is_positively_oriented(&q) {
            return Err(Error::Precondition(format!(
                "({}) is not positively oriented",
                q.map(|i| self.framing.labels()[i].clone()).join(", ")
            )));
        }
        let l = self.framing.images();
        let cr = crossratio(&l[q[0]], &l[q[1]], &l[q[3]], &l[q[2]])?;
        match cr.nu(&self.val) {
            Value::Finite(v) => Ok(Some(-v / Rational::from_integer(2.into()))),
            Value::Infinity => Err(Error::Precondition("degenerate crossratio".into())),
        }
    }
}

/// Crossratio of four labelled boundary points of a framing.
pub fn crossratio_value<F: Field>(framing: &FramingTable<F>, quad: [&str; 4], val: &ValuationSpec) -> Result<Rational> {
    let cr = FramingCrossratio::new(framing, val.clone());
    let q = label_indices(&cr, quad)?;
    Ok(cr.value(q)?.expect("framing crossratios are total"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    Symmetry { quadruple: [String; 4], left: Rational, right: Rational },
    Additivity { quintuple: [String; 5], left: Rational, right: Rational },
    Negative { quadruple: [String; 4], value: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub symmetry_checked: usize,
    pub additivity_checked: usize,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `[x1,x2,x3,x4] = [x3,x4,x1,x2]` and
/// `[x1,x2,x4,x5] = [x1,x2,x3,x5] + [x1,x3,x4,x5]` on positively oriented
/// 5-tuples of label indices, skipping tuples whose values are missing.
pub fn crossratio_axiom_check(cr: &dyn PositiveCrossratio, tuples: &[[usize; 5]]) -> Result<AxiomReport> {
    let names = |q: &[usize]| -> Vec<String> { q.iter().map(|&i| cr.labels()[i].clone()).collect() };
    let mut report = AxiomReport {
        symmetry_checked: 0,
        additivity_checked: 0,
        violation: None,
    };
    for t in tuples {
        if !is_positively_oriented(t) {
            return Err(Error::Precondition(format!(
                "({}) is not positively oriented",
                names(t).join(", ")
            )));
        }
        let [x1, x2, x3, x4, x5] = *t;
        let quads = [[x1, x2, x3, x4], [x3, x4, x1, x2], [x1, x2, x4, x5], [x1, x2, x3, x5], [x1, x3, x4, x5]];
        let vals: Vec<Option<Rational>> = quads.iter().map(|&q| cr.value(q)).collect::<Result<_>>()?;
        for (q, v) in quads.iter().zip(&vals) {
            if let Some(v) = v.as_ref().filter(|v| v.is_negative()) {
                report.violation = Some(AxiomViolation::Negative {
                    quadruple: names(q).try_into().expect("four labels"),
                    value: v.clone(),
                });
                return Ok(report);
            }
        }
        if let (Some(a), Some(b)) = (&vals[0], &vals[1]) {
            report.symmetry_checked += 1;
            if a != b {
                report.violation = Some(AxiomViolation::Symmetry {
                    quadruple: names(&quads[0]).try_into().expect("four labels"),
                    left: a.clone(),
                    right: b.clone(),
                });
                return Ok(report);
            }
        }
        if let (Some(a), Some(b), Some(c)) = (&vals[2], &vals[3], &vals[4]) {
            report.additivity_checked += 1;
            if *a != b + c {
                report.violation = Some(AxiomViolation::Additivity {
                    quintuple: names(t).try_into().expect("five labels"),
                    left: a.clone(),
                    right: b + c,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}
