//! The pair-of-pants representation into `Sp(4, Q(X))` and a framing on
//! the cusps of a Fuchsian model of the same group.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{int, Field, OrderSpec, RatFunc, Rational};
use crate::linalg::{Lagrangian, Matrix};
use crate::valuations::ValuationSpec;

use super::framing::{FramingTable, Symmetry};
use super::table::{GroupPresentation, RepTable};
use super::word::{reduced_words, Letter, Word};

const C1: [[&str; 4]; 4] = [
    ["1", "4*X", "0", "0"],
    ["0", "1", "0", "0"],
    ["2", "4*X", "1", "0"],
    ["-4*X", "2", "-4*X", "1"],
];

const C2: [[&str; 4]; 4] = [
    ["1", "1/X", "-2", "-1/X"],
    ["0", "1", "1/X", "-2"],
    ["0", "0", "1", "0"],
    ["0", "0", "-1/X", "1"],
];

fn parse_matrix(rows: &[[&str; 4]; 4]) -> Matrix<RatFunc> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| s.parse().expect("static entry")).collect())
            .collect(),
    )
    .expect("square")
}

/// Images of `c1, c2, c3` with `c3 = (c2 c1)^-1`.
pub fn pants_images() -> [Matrix<RatFunc>; 3] {
    let c1 = parse_matrix(&C1);
    let c2 = parse_matrix(&C2);
    let c3 = (&c2 * &c1).inverse().expect("invertible");
    [c1, c2, c3]
}

pub fn pants_representation(ord: OrderSpec, val: ValuationSpec) -> Result<RepTable<RatFunc>> {
    RepTable::new(GroupPresentation::pants(), pants_images().to_vec(), ord, val)
}

/// A point of `Q ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cusp {
    /// Finite points sort before `Infinity`, giving the positive cyclic order.
    Finite(Rational),
    Infinity,
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cusp::Finite(q) => write!(f, "{q}"),
            Cusp::Infinity => f.write_str("inf"),
        }
    }
}

/// `[[a, b], [c, d]]` acting by `t -> (a t + b) / (c t + d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius(pub [[Rational; 2]; 2]);

impl Mobius {
    fn from_ints(m: [[i64; 2]; 2]) -> Self {
        Mobius(m.map(|r| r.map(int)))
    }

    pub fn mul(&self, o: &Mobius) -> Mobius {
        let (a, b) = (&self.0, &o.0);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Mobius([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn inverse(&self) -> Mobius {
        let m = &self.0;
        Mobius([
            [m[1][1].clone(), -m[0][1].clone()],
            [-m[1][0].clone(), m[0][0].clone()],
        ])
    }

    pub fn act(&self, p: &Cusp) -> Cusp {
        let m = &self.0;
        let (num, den) = match p {
            Cusp::Infinity => (m[0][0].clone(), m[1][0].clone()),
            Cusp::Finite(t) => (&m[0][0] * t + &m[0][1], &m[1][0] * t + &m[1][1]),
        };
        if den.is_zero() {
            Cusp::Infinity
        } else {
            Cusp::Finite(num / den)
        }
    }
}

/// Parabolic generators of the level-two congruence subgroup, satisfying the
/// same relator, fixing `∞`, `0` and `-1` respectively.
pub fn fuchsian_pants() -> [Mobius; 3] {
    let f1 = Mobius::from_ints([[1, 2], [0, 1]]);
    let f2 = Mobius::from_ints([[1, 0], [-2, 1]]);
    let f3 = f2.mul(&f1).inverse();
    [f1, f2, f3]
}

/// Cusps fixed by the three boundary generators, with their Lagrangians:
/// `span(e3, e4)`, `span(e1, e2)` and the graph of `-I`.
pub fn base_cusps() -> [(Cusp, Lagrangian<RatFunc>); 3] {
    let minus_i = Matrix::diagonal(&[-RatFunc::one(), -RatFunc::one()]);
    [
        (Cusp::Infinity, Lagrangian::vertical(2)),
        (Cusp::Finite(int(0)), Lagrangian::horizontal(2)),
        (Cusp::Finite(int(-1)), Lagrangian::graph(&minus_i).expect("symmetric")),
    ]
}

fn fuchsian_word(gens: &[Mobius; 3], w: &Word) -> Mobius {
    let id = Mobius::from_ints([[1, 0], [0, 1]]);
    w.letters().iter().fold(id, |acc, l| {
        let g = if l.inverse {
            gens[l.generator].inverse()
        } else {
            gens[l.generator].clone()
        };
        acc.mul(&g)
    })
}

/// Equivariant framing on the orbit of the three base cusps under all words
/// of length at most `radius`. Labels are the cusps in `Q ∪ {∞}`.
pub fn pants_cusp_framing(rep: &RepTable<RatFunc>, radius: usize) -> Result<FramingTable<RatFunc>> {
    if rep.presentation() != &GroupPresentation::pants() {
        return Err(Error::Framing("cusp framing needs the pants presentation".into()));
    }
    let gens = fuchsian_pants();
    let base = base_cusps();
    let mut points: BTreeMap<Cusp, Lagrangian<RatFunc>> = BTreeMap::new();
    for len in 0..=radius {
        for w in reduced_words(3, len) {
            let f = fuchsian_word(&gens, &w);
            let g = rep.evaluate(&w);
            for (cusp, l) in &base {
                let p = f.act(cusp);
                let image = l.apply(&g)?;
                match points.get(&p) {
                    Some(existing) if *existing != image => {
                        return Err(Error::Framing(format!("inconsistent image at cusp {p}")));
                    }
                    Some(_) => {}
                    None => {
                        points.insert(p, image);
                    }
                }
            }
        }
    }
    let cusps: Vec<Cusp> = points.keys().cloned().collect();
    let position = |c: &Cusp| cusps.iter().position(|d| d == c);
    let mut symmetries = Vec::new();
    for letter in Letter::alphabet(3) {
        let word = Word::new([letter]);
        let f = fuchsian_word(&gens, &word);
        let action: Vec<(usize, usize)> = cusps
            .iter()
            .enumerate()
            .filter_map(|(i, c)| position(&f.act(c)).map(|j| (i, j)))
            .collect();
        symmetries.push(Symmetry { word, action });
    }
    let labels = cusps.iter().map(ToString::to_string).collect();
    FramingTable::new(labels, points.into_values().collect(), symmetries)
}
