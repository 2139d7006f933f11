//! Positive crossratios on boundary labels and the computable shadows of
//! the associated geodesic current: periods, rectangle bounds, multicurve
//! certificates and systole sweeps.

mod crossratio;

use std::fmt;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

pub use crossratio::{
    crossratio_axiom_check, crossratio_value, label_indices, AxiomReport, AxiomViolation, CrossratioTable, FramingCrossratio,
    PositiveCrossratio,
};

use crate::error::{Error, Result};
use crate::fields::{Field, OrderSpec, RatFunc, Rational, Sign};
use crate::linalg::Matrix;
use crate::reps::{is_positively_oriented, FramingTable, RepTable, WordBall, Word};
use crate::spectra::{translation_length, NormChoice};
use crate::valuations::{ValuationSpec, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PeriodMethod {
    Framing,
    TranslationLength,
}

impl fmt::Display for PeriodMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PeriodMethod::Framing => "framing",
            PeriodMethod::TranslationLength => "translation_length",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodReport {
    pub word: Word,
    pub period: Rational,
    pub method: PeriodMethod,
}

/// `[g-, x, g x, g+]` for a matrix `g` whose attracting and repelling
/// points carry the labels `plus` and `minus`. The label of `g x` is found
/// by matching images.
pub fn framing_period<F: Field>(
    framing: &FramingTable<F>,
    g: &Matrix<F>,
    minus: &str,
    x: &str,
    plus: &str,
    val: &ValuationSpec,
) -> Result<Rational> {
    let image = |l: &str| framing.image(l).ok_or_else(|| Error::Framing(format!("missing label `{l}`")));
    for l in [minus, plus] {
        if image(l)?.apply(g)? != *image(l)? {
            return Err(Error::Framing(format!("`{l}` is not fixed by the element")));
        }
    }
    let moved = image(x)?.apply(g)?;
    let gx = framing
        .images()
        .iter()
        .position(|l| *l == moved)
        .ok_or_else(|| Error::Framing(format!("the image of `{x}` is not a label")))?;
    let gx = framing.labels()[gx].clone();
    crossratio_value(framing, [minus, x, &gx, plus], val)
}

/// Period of `word` read off the framing. The identity has period 0.
pub fn period<F: Field>(
    framing: &FramingTable<F>,
    word: &Word,
    rep: &RepTable<F>,
    minus: &str,
    x: &str,
    plus: &str,
) -> Result<PeriodReport> {
    let period = if word.is_empty() {
        <Rational as Zero>::zero()
    } else {
        framing_period(framing, &rep.evaluate(word), minus, x, plus, rep.val())?
    };
    Ok(PeriodReport {
        word: word.clone(),
        period,
        method: PeriodMethod::Framing,
    })
}

pub fn period_via_length<F: Field>(rep: &RepTable<F>, word: &Word, norm: NormChoice) -> Result<PeriodReport> {
    Ok(PeriodReport {
        word: word.clone(),
        period: translation_length(&rep.evaluate(word), rep.val(), norm)?,
        method: PeriodMethod::TranslationLength,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleBounds {
    pub lower: Rational,
    pub upper: Rational,
    /// The inner tuple attaining `lower`, if any sample was given.
    pub lower_witness: Option<[String; 4]>,
    pub corners: [String; 4],
}

impl RectangleBounds {
    pub fn is_strict(&self) -> bool {
        self.lower < self.upper
    }
}

/// `x` lies strictly inside the positive arc from `lo` to `hi`.
fn strictly_between(x: usize, lo: usize, hi: usize, len: usize) -> bool {
    let rel = |p: usize| (p + len - lo) % len;
    x != lo && rel(x) < rel(hi)
}

/// Bounds for the rectangle with corners `(a, b, c, d)`: the largest value
/// on sampled tuples `(a', b', c', d')` with `[d',a'] x [b',c']` inside
/// `[d,a] x [b,c]`, and the value on the corners.
pub fn rectangle_bounds(cr: &dyn PositiveCrossratio, corners: [&str; 4], samples: &[[&str; 4]]) -> Result<RectangleBounds> {
    let len = cr.labels().len();
    let [a, b, c, d] = label_indices(cr, corners)?;
    if !is_positively_oriented(&[a, b, c, d]) {
        return Err(Error::Precondition("corners are not positively oriented".into()));
    }
    let upper = cr
        .value([a, b, c, d])?
        .ok_or_else(|| Error::Precondition("no value at the corners".into()))?;
    let mut lower = <Rational as Zero>::zero();
    let mut lower_witness = None;
    let within = |x: usize, lo: usize, hi: usize| x == lo || x == hi || strictly_between(x, lo, hi, len);
    for s in samples {
        let [a2, b2, c2, d2] = label_indices(cr, *s)?;
        let nested = within(d2, d, a) && within(a2, d2, a) && within(b2, b, c) && within(c2, b2, c);
        if !nested || !is_positively_oriented(&[a2, b2, c2, d2]) {
            return Err(Error::Precondition(format!("({}) is not nested in the rectangle", s.join(", "))));
        }
        let v = cr
            .value([a2, b2, c2, d2])?
            .ok_or_else(|| Error::Precondition(format!("no value at ({})", s.join(", "))))?;
        if lower_witness.is_none() || v > lower {
            lower = v;
            lower_witness = Some(s.map(String::from));
        }
    }
    Ok(RectangleBounds {
        lower,
        upper,
        lower_witness,
        corners: corners.map(String::from),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurrentClassification {
    MulticurveCertified(u64),
    DiscretenessUnknown,
}

impl fmt::Display for CurrentClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurrentClassification::MulticurveCertified(k) => write!(f, "MulticurveCertified({k})"),
            CurrentClassification::DiscretenessUnknown => f.write_str("DiscretenessUnknown"),
        }
    }
}

/// Least `K <= k_max` with every value in `(1/K) Z`.
pub fn classify_periods(periods: &[Rational], k_max: u64) -> CurrentClassification {
    let k = periods
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, p| num_integer::Integer::lcm(&acc, p.denom()));
    if k <= num_bigint::BigInt::from(k_max) {
        CurrentClassification::MulticurveCertified(k.try_into().expect("bounded by k_max"))
    } else {
        CurrentClassification::DiscretenessUnknown
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulticurveReport {
    pub classification: CurrentClassification,
    pub periods: Vec<PeriodReport>,
    /// `K * period` for each word when certified.
    pub residues: Vec<Rational>,
}

/// Periods of `words` via translation lengths, classified against `k_max`.
pub fn multicurve_certificate<F: Field>(
    rep: &RepTable<F>,
    words: &[Word],
    k_max: u64,
    norm: NormChoice,
) -> Result<MulticurveReport> {
    let periods: Vec<PeriodReport> = words
        .par_iter()
        .map(|w| period_via_length(rep, w, norm))
        .collect::<Result<_>>()?;
    let values: Vec<Rational> = periods.iter().map(|p| p.period.clone()).collect();
    let classification = classify_periods(&values, k_max);
    let residues = match classification {
        CurrentClassification::MulticurveCertified(k) => {
            values.iter().map(|v| v * Rational::from_integer(k.into())).collect()
        }
        CurrentClassification::DiscretenessUnknown => vec![],
    };
    Ok(MulticurveReport {
        classification,
        periods,
        residues,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystoleReport {
    /// Least translation length over the swept non-peripheral words; `None`
    /// when the sweep contains none.
    pub value: Option<Rational>,
    pub witness: Option<Word>,
    pub words_checked: usize,
    pub radius: usize,
}

/// Minimum translation length over cyclically reduced, non-peripheral
/// words up to `radius`. This bounds the systole from above and says
/// nothing beyond the swept set.
pub fn systole_lower_bound<F: Field>(
    rep: &RepTable<F>,
    radius: usize,
    degree_bound: usize,
    norm: NormChoice,
) -> Result<SystoleReport> {
    if radius == 0 {
        return Err(Error::Precondition("radius must be at least 1".into()));
    }
    let pres = rep.presentation();
    let mut ball = WordBall::new(rep, degree_bound);
    let mut best: Option<(Rational, Word)> = None;
    let mut words_checked = 0;
    for _ in 0..radius {
        let level = ball.next_level()?;
        let hits: Vec<Option<Rational>> = level
            .words
            .par_iter()
            .zip(level.matrices.par_iter())
            .map(|(w, m)| {
                if w.is_cyclically_reduced() && !pres.is_peripheral(w) {
                    translation_length(m, rep.val(), norm).map(Some)
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<_>>()?;
        for (w, l) in level.words.iter().zip(hits) {
            if let Some(l) = l {
                words_checked += 1;
                if best.as_ref().is_none_or(|(b, _)| l < *b) {
                    best = Some((l, w.clone()));
                }
            }
        }
    }
    let (value, witness) = best.map_or((None, None), |(v, w)| (Some(v), Some(w)));
    Ok(SystoleReport {
        value,
        witness,
        words_checked,
        radius,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DichotomyBranch {
    /// `nu(x) = 0`.
    Unit,
    /// `nu(x / (x - 1)) = 0`.
    Shifted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyReport {
    pub branches: Vec<DichotomyBranch>,
    pub violations: Vec<RatFunc>,
}

/// Checks that each `x >= 1` has `nu(x) = 0` or `nu(x/(x-1)) = 0`.
pub fn lamination_dichotomy_check(xs: &[RatFunc], ord: &OrderSpec, val: &ValuationSpec) -> Result<DichotomyReport> {
    let one = RatFunc::one();
    let zero = Value::from_int(0);
    let mut report = DichotomyReport {
        branches: vec![],
        violations: vec![],
    };
    for x in xs {
        let d = x.clone() - &one;
        if d.sign(ord) == Sign::Negative {
            return Err(Error::Precondition(format!("{x} is less than 1")));
        }
        if x.nu(val) == zero {
            report.branches.push(DichotomyBranch::Unit);
        } else if (x.clone() / &d).nu(val) == zero {
            report.branches.push(DichotomyBranch::Shifted);
        } else {
            report.violations.push(x.clone());
        }
    }
    Ok(report)
}

/// True when every period is nonnegative; a sanity check on reports.
pub fn periods_nonnegative(periods: &[PeriodReport]) -> bool {
    periods.iter().all(|p| !p.period.is_negative())
}
