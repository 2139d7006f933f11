use std::fmt;

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// All `2k` letters over `k` generators, in enumeration order.
    pub fn alphabet(generators: usize) -> Vec<Letter> {
        (0..generators)
            .flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
            .collect()
    }
}

/// A freely reduced word in the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Reduces the letter sequence freely.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn generator(g: usize) -> Word {
        Word(vec![Letter::new(g, false)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::empty(), |acc, _| acc.concat(&base))
    }

    /// `h w h⁻¹`.
    pub fn conjugate_by(&self, h: &Word) -> Word {
        h.concat(self).concat(&h.inverse())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(a), Some(b)) => self.0.len() < 2 || *a != b.inv(),
            _ => true,
        }
    }

    pub fn cyclically_reduced(&self) -> Word {
        let mut s = 0;
        let mut e = self.0.len();
        while e - s >= 2 && self.0[s] == self.0[e - 1].inv() {
            s += 1;
            e -= 1;
        }
        Word(self.0[s..e].to_vec())
    }

    pub fn push(&self, l: Letter) -> Option<Word> {
        if self.0.last() == Some(&l.inv()) {
            return None;
        }
        let mut v = self.0.clone();
        v.push(l);
        Some(Word(v))
    }

    /// Parses whitespace-separated tokens `name`, `name^k` or `name^-k`.
    /// The empty string and `1` denote the identity.
    pub fn parse(text: &str, generators: &[String]) -> Result<Word> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let position = text[offset..].find(token).map_or(offset, |p| p + offset);
            offset = position + token.len();
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((name, e)) => {
                    let e: i64 = e.parse().map_err(|_| Error::Parse {
                        position,
                        message: format!("bad exponent in `{token}`"),
                    })?;
                    (name, e)
                }
                None => (token, 1),
            };
            let g = generators.iter().position(|n| n == name).ok_or_else(|| Error::Parse {
                position,
                message: format!("unknown generator `{name}`"),
            })?;
            let l = Letter::new(g, exp < 0);
            letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(Word::new(letters))
    }

    pub fn display_with(&self, generators: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|l| {
                let name = &generators[l.generator];
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    /// Uses the default names `g1, g2, …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max = self.0.iter().map(|l| l.generator + 1).max().unwrap_or(0);
        let names: Vec<String> = (1..=max).map(|i| format!("g{i}")).collect();
        f.write_str(&self.display_with(&names))
    }
}

/// Freely reduced words of length exactly `len`, in length-lex order.
pub fn reduced_words(generators: usize, len: usize) -> Vec<Word> {
    let alphabet = Letter::alphabet(generators);
    let mut level = vec![Word::empty()];
    for _ in 0..len {
        level = level
            .iter()
            .flat_map(|w| alphabet.iter().filter_map(move |&l| w.push(l)))
            .collect();
    }
    level
}

/// All freely reduced words of length `1..=max_len`.
pub fn reduced_words_up_to(generators: usize, max_len: usize) -> Vec<Word> {
    (1..=max_len).flat_map(|l| reduced_words(generators, l)).collect()
}
