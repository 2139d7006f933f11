use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fields::{Field, Rational};
use crate::linalg::Matrix;
use crate::spectra::{translation_length, NormChoice};
use crate::valuations::Value;

use super::table::RepTable;
use super::word::{Letter, Word};

pub const DEFAULT_RADIUS: usize = 6;
pub const DEFAULT_DEGREE_BOUND: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub radius: usize,
    pub degree_bound: usize,
    pub norm: NormChoice,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            radius: DEFAULT_RADIUS,
            degree_bound: DEFAULT_DEGREE_BOUND,
            norm: NormChoice::SymplecticSum,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedPointVerdict {
    /// A word of positive translation length, shortest in length-lex order.
    Closed { witness: Word, length: Rational },
    /// Every generator entry lies in the valuation ring; the listed values
    /// are the least entry valuation of each generator image.
    NotClosedIntegral { certificate: Vec<Value> },
    /// No witness up to this radius.
    Unknown { radius: usize },
}

/// Least valuation among the entries of `g`.
pub fn min_entry_valuation<F: Field>(g: &Matrix<F>, rep: &RepTable<F>) -> Value {
    g.entries()
        .iter()
        .map(|e| e.nu(rep.val()))
        .min()
        .unwrap_or(Value::Infinity)
}

fn integral_certificate<F: Field>(rep: &RepTable<F>) -> Option<Vec<Value>> {
    let mins: Vec<Value> = rep.images().iter().map(|g| min_entry_valuation(g, rep)).collect();
    mins.iter().all(|v| *v >= Value::from_int(0)).then_some(mins)
}

/// One level of the word tree: words of a fixed length with their images.
pub struct Level<F> {
    pub words: Vec<Word>,
    pub matrices: Vec<Matrix<F>>,
}

/// Walks the ball of freely reduced words level by level, extending each
/// stored prefix product by one letter.
pub struct WordBall<'a, F> {
    rep: &'a RepTable<F>,
    alphabet: Vec<Letter>,
    current: Level<F>,
    degree_bound: usize,
    words_done: usize,
}

impl<'a, F: Field> WordBall<'a, F> {
    pub fn new(rep: &'a RepTable<F>, degree_bound: usize) -> Self {
        WordBall {
            rep,
            alphabet: Letter::alphabet(rep.presentation().generators.len()),
            current: Level {
                words: vec![Word::empty()],
                matrices: vec![Matrix::identity(2 * rep.n())],
            },
            degree_bound,
            words_done: 0,
        }
    }

    pub fn words_done(&self) -> usize {
        self.words_done
    }

    /// Advances to the next length and returns that level.
    pub fn next_level(&mut self) -> Result<&Level<F>> {
        let alphabet = &self.alphabet;
        let rep = self.rep;
        let pairs: Vec<(Word, Matrix<F>)> = self
            .current
            .words
            .par_iter()
            .zip(self.current.matrices.par_iter())
            .flat_map_iter(|(w, m)| {
                alphabet
                    .iter()
                    .filter_map(move |&l| w.push(l).map(|nw| (nw, m * rep.letter(l))))
            })
            .collect();
        let worst = pairs.par_iter().map(|(_, m)| m.degree_size()).max().unwrap_or(0);
        if worst > self.degree_bound {
            return Err(Error::DegreeBound {
                bound: self.degree_bound,
                degree: worst,
                words_done: self.words_done,
            });
        }
        self.words_done += pairs.len();
        let (words, matrices) = pairs.into_iter().unzip();
        self.current = Level { words, matrices };
        Ok(&self.current)
    }
}

/// Translation length of every cyclically reduced word of one level, in
/// level order; other words get `None`.
pub fn level_lengths<F: Field>(level: &Level<F>, rep: &RepTable<F>, norm: NormChoice) -> Result<Vec<Option<Rational>>> {
    level
        .words
        .par_iter()
        .zip(level.matrices.par_iter())
        .map(|(w, m)| {
            if w.is_cyclically_reduced() {
                translation_length(m, rep.val(), norm).map(Some)
            } else {
                Ok(None)
            }
        })
        .collect()
}

pub fn closed_point_verdict<F: Field>(rep: &RepTable<F>, opts: &SweepOptions) -> Result<ClosedPointVerdict> {
    if opts.radius == 0 {
        return Err(Error::Precondition("radius must be at least 1".into()));
    }
    if let Some(certificate) = integral_certificate(rep) {
        return Ok(ClosedPointVerdict::NotClosedIntegral { certificate });
    }
    sweep_for_witness(rep, opts)
}

/// The witness search alone, without the integrality shortcut.
pub fn sweep_for_witness<F: Field>(rep: &RepTable<F>, opts: &SweepOptions) -> Result<ClosedPointVerdict> {
    let mut ball = WordBall::new(rep, opts.degree_bound);
    for _ in 0..opts.radius {
        let level = ball.next_level()?;
        let lengths = level_lengths(level, rep, opts.norm)?;
        let hit = lengths
            .into_iter()
            .enumerate()
            .find_map(|(i, l)| l.filter(|l| *l > Rational::zero()).map(|l| (i, l)));
        if let Some((i, length)) = hit {
            return Ok(ClosedPointVerdict::Closed {
                witness: level.words[i].clone(),
                length,
            });
        }
    }
    Ok(ClosedPointVerdict::Unknown { radius: opts.radius })
}
