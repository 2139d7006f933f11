use crate::error::{Error, Result};
use crate::fields::{Field, OrderSpec, RatFunc};
use crate::linalg::{Matrix, SymplecticForm};
use crate::valuations::{ValuationSpec, Value};

use super::word::{reduced_words, Letter, Word};

/// Generators, relators, and the peripheral (boundary) words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub peripheral: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>, peripheral: Vec<Word>) -> Result<Self> {
        let k = generators.len();
        for w in relators.iter().chain(&peripheral) {
            if w.letters().iter().any(|l| l.generator >= k) {
                return Err(Error::Schema("word uses an undeclared generator".into()));
            }
        }
        if relators.iter().any(Word::is_empty) {
            return Err(Error::Schema("empty relator".into()));
        }
        Ok(GroupPresentation {
            generators,
            relators,
            peripheral,
        })
    }

    /// `<c1, c2, c3 | c3 c2 c1>` with the three boundary loops peripheral.
    pub fn pants() -> Self {
        let generators: Vec<String> = ["c1", "c2", "c3"].iter().map(|s| s.to_string()).collect();
        let relator = Word::parse("c3 c2 c1", &generators).expect("static word");
        let peripheral = (0..3).map(Word::generator).collect();
        GroupPresentation {
            generators,
            relators: vec![relator],
            peripheral,
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        Word::parse(text, &self.generators)
    }

    pub fn show(&self, w: &Word) -> String {
        w.display_with(&self.generators)
    }

    /// Whether `w` is conjugate to a power of a peripheral word. Words are
    /// compared after cyclic reduction, and again after eliminating one
    /// generator that occurs exactly once in a relator (so in the pants
    /// group `c2 c1` is recognized as `c3^-1`).
    pub fn is_peripheral(&self, w: &Word) -> bool {
        if self.peripheral_literal(w, &self.peripheral) {
            return true;
        }
        match self.elimination() {
            Some((g, image)) => {
                let peri: Vec<Word> = self.peripheral.iter().map(|p| substitute(p, g, &image)).collect();
                self.peripheral_literal(&substitute(w, g, &image), &peri)
            }
            None => false,
        }
    }

    /// A generator occurring exactly once in some relator, with the word it
    /// equals in the group.
    fn elimination(&self) -> Option<(usize, Word)> {
        for r in &self.relators {
            let letters = r.letters();
            for g in 0..self.generators.len() {
                let hits: Vec<usize> = (0..letters.len()).filter(|&i| letters[i].generator == g).collect();
                if let [i] = hits[..] {
                    // r = A s B with s = g^±1, so s = A^-1 B^-1.
                    let a = Word::new(letters[..i].iter().copied());
                    let b = Word::new(letters[i + 1..].iter().copied());
                    let s = a.inverse().concat(&b.inverse());
                    let image = if letters[i].inverse { s.inverse() } else { s };
                    return Some((g, image));
                }
            }
        }
        None
    }

    fn peripheral_literal(&self, w: &Word, peripheral: &[Word]) -> bool {
        let c = w.cyclically_reduced();
        if c.is_empty() {
            return true;
        }
        peripheral.iter().any(|p| {
            let p = p.cyclically_reduced();
            if p.is_empty() || !c.len().is_multiple_of(p.len()) {
                return false;
            }
            let k = (c.len() / p.len()) as i64;
            [p.pow(k), p.pow(-k)].iter().any(|q| is_cyclic_rotation(&c, q))
        })
    }
}

fn substitute(w: &Word, g: usize, image: &Word) -> Word {
    let inv = image.inverse();
    Word::new(w.letters().iter().flat_map(|l| {
        if l.generator != g {
            vec![*l]
        } else if l.inverse {
            inv.letters().to_vec()
        } else {
            image.letters().to_vec()
        }
    }))
}

fn is_cyclic_rotation(a: &Word, b: &Word) -> bool {
    let (a, b) = (a.letters(), b.letters());
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|s| a[s..].iter().chain(&a[..s]).eq(b.iter())))
}

/// A validated representation into `Sp(2n, K)`.
#[derive(Clone, Debug)]
pub struct RepTable<F = RatFunc> {
    presentation: GroupPresentation,
    n: usize,
    ord: OrderSpec,
    val: ValuationSpec,
    images: Vec<Matrix<F>>,
    inverses: Vec<Matrix<F>>,
}

impl<F: Field> RepTable<F> {
    /// Checks symplecticity of every image and that relators evaluate to `±I`.
    pub fn new(
        presentation: GroupPresentation,
        images: Vec<Matrix<F>>,
        ord: OrderSpec,
        val: ValuationSpec,
    ) -> Result<Self> {
        if images.len() != presentation.generators.len() {
            return Err(Error::Schema(format!(
                "{} images for {} generators",
                images.len(),
                presentation.generators.len()
            )));
        }
        let first = images.first().ok_or_else(|| Error::Schema("no generators".into()))?;
        if !first.is_square() || first.rows() % 2 != 0 || first.rows() == 0 {
            return Err(Error::Dimension("images must be 2n x 2n".into()));
        }
        let form = SymplecticForm::new(first.rows() / 2);
        let mut inverses = Vec::with_capacity(images.len());
        for (name, g) in presentation.generators.iter().zip(&images) {
            if !form.is_symplectic(g)? {
                return Err(Error::NotSymplectic(format!("image of {name}")));
            }
            inverses.push(form.inverse(g)?);
        }
        let rep = RepTable {
            presentation,
            n: form.n,
            ord,
            val,
            images,
            inverses,
        };
        for r in &rep.presentation.relators {
            let m = rep.evaluate(r);
            let minus = (&m + &Matrix::identity(m.rows())).is_zero();
            if !m.is_identity() && !minus {
                return Err(Error::Relator(rep.presentation.show(r)));
            }
        }
        Ok(rep)
    }

    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ord(&self) -> &OrderSpec {
        &self.ord
    }

    pub fn val(&self) -> &ValuationSpec {
        &self.val
    }

    pub fn form(&self) -> SymplecticForm {
        SymplecticForm::new(self.n)
    }

    pub fn images(&self) -> &[Matrix<F>] {
        &self.images
    }

    /// Same images, different order and valuation.
    pub fn with_order(&self, ord: OrderSpec, val: ValuationSpec) -> Self {
        RepTable {
            ord,
            val,
            ..self.clone()
        }
    }

    pub fn letter(&self, l: Letter) -> &Matrix<F> {
        if l.inverse {
            &self.inverses[l.generator]
        } else {
            &self.images[l.generator]
        }
    }

    pub fn evaluate(&self, w: &Word) -> Matrix<F> {
        w.letters()
            .iter()
            .fold(Matrix::identity(2 * self.n), |acc, &l| &acc * self.letter(l))
    }

    pub fn trace(&self, w: &Word) -> F {
        self.evaluate(w).trace()
    }

    /// `nu(trace)` for every freely reduced word of length `0..=max_len`.
    pub fn trace_valuation_sample(&self, max_len: usize) -> Vec<(Word, Value)> {
        (0..=max_len)
            .flat_map(|l| reduced_words(self.presentation.generators.len(), l))
            .map(|w| {
                let v = self.trace(&w).nu(&self.val);
                (w, v)
            })
            .collect()
    }
}
