use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fields::Field;
use crate::linalg::{maslov, Lagrangian};

use super::table::RepTable;
use super::word::Word;

/// A listed group element and the labels it moves, as `(from, to)` indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetry {
    pub word: Word,
    pub action: Vec<(usize, usize)>,
}

/// Finitely many boundary labels in positive cyclic order, with their
/// Lagrangians.
#[derive(Clone, Debug)]
pub struct FramingTable<F> {
    labels: Vec<String>,
    images: Vec<Lagrangian<F>>,
    symmetries: Vec<Symmetry>,
    index: HashMap<String, usize>,
}

impl<F: Field> FramingTable<F> {
    /// `labels` must be listed in positive cyclic order.
    pub fn new(labels: Vec<String>, images: Vec<Lagrangian<F>>, symmetries: Vec<Symmetry>) -> Result<Self> {
        if labels.len() != images.len() {
            return Err(Error::Framing("label and image counts differ".into()));
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Framing(format!("duplicate label `{l}`")));
            }
        }
        if let Some(first) = images.first() {
            if images.iter().any(|l| l.n() != first.n()) {
                return Err(Error::Framing("images of different dimensions".into()));
            }
        }
        let m = labels.len();
        if symmetries.iter().flat_map(|s| &s.action).any(|&(a, b)| a >= m || b >= m) {
            return Err(Error::Framing("symmetry refers to an unknown label".into()));
        }
        Ok(FramingTable {
            labels,
            images,
            symmetries,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn images(&self) -> &[Lagrangian<F>] {
        &self.images
    }

    pub fn symmetries(&self) -> &[Symmetry] {
        &self.symmetries
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn image(&self, label: &str) -> Option<&Lagrangian<F>> {
        self.index_of(label).map(|i| &self.images[i])
    }

    pub fn indices(&self, labels: &[&str]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| Error::Framing(format!("missing label `{l}`")))
            })
            .collect()
    }
}

/// Distinct positions read cyclically with exactly one descent.
pub fn is_positively_oriented(positions: &[usize]) -> bool {
    let k = positions.len();
    let mut seen = positions.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != k {
        return false;
    }
    (0..k).filter(|&i| positions[i] > positions[(i + 1) % k]).count() == 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FramingViolation {
    NotMaximal { triple: [String; 3], maslov: i64 },
    NotEquivariant { word: String, from: String, to: String },
    OrderNotPreserved { word: String, triple: [String; 3] },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramingReport {
    pub triples_checked: usize,
    pub symmetry_checks: usize,
    pub violation: Option<FramingViolation>,
}

impl FramingReport {
    pub fn is_maximal(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks maximality of every positively oriented image triple and
/// equivariance on the listed symmetries.
pub fn verify_maximal_framing<F: Field>(rep: &RepTable<F>, framing: &FramingTable<F>) -> Result<FramingReport> {
    let n = rep.n();
    if framing.images.iter().any(|l| l.n() != n) {
        return Err(Error::Framing(format!("images must be Lagrangians in dimension {}", 2 * n)));
    }
    let m = framing.len();
    let name = |i: usize| framing.labels[i].clone();
    let names = |w: &Word| rep.presentation().show(w);

    let mut symmetry_checks = 0;
    for s in &framing.symmetries {
        let g = rep.evaluate(&s.word);
        for &(a, b) in &s.action {
            symmetry_checks += 1;
            if framing.images[a].apply(&g)? != framing.images[b] {
                return Ok(FramingReport {
                    triples_checked: 0,
                    symmetry_checks,
                    violation: Some(FramingViolation::NotEquivariant {
                        word: names(&s.word),
                        from: name(a),
                        to: name(b),
                    }),
                });
            }
        }
        let act = &s.action;
        for x in 0..act.len() {
            for y in x + 1..act.len() {
                for z in y + 1..act.len() {
                    let src = [act[x].0, act[y].0, act[z].0];
                    let dst = [act[x].1, act[y].1, act[z].1];
                    if is_positively_oriented(&src) != is_positively_oriented(&dst) {
                        return Ok(FramingReport {
                            triples_checked: 0,
                            symmetry_checks,
                            violation: Some(FramingViolation::OrderNotPreserved {
                                word: names(&s.word),
                                triple: src.map(name),
                            }),
                        });
                    }
                }
            }
        }
    }

    let ord = rep.ord();
    let first_bad: Vec<Option<([usize; 3], i64)>> = (0..m)
        .into_par_iter()
        .map(|i| -> Result<Option<([usize; 3], i64)>> {
            for j in i + 1..m {
                for k in j + 1..m {
                    let t = maslov(&framing.images[i], &framing.images[j], &framing.images[k], ord)?;
                    if t != n as i64 {
                        return Ok(Some(([i, j, k], t)));
                    }
                }
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    let triples_checked = m * m.saturating_sub(1) * m.saturating_sub(2) / 6;
    let violation = first_bad.into_iter().flatten().next().map(|(t, maslov)| FramingViolation::NotMaximal {
        triple: t.map(name),
        maslov,
    });
    Ok(FramingReport {
        triples_checked,
        symmetry_checks,
        violation,
    })
}
