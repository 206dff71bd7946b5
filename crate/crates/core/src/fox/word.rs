//! Freely reduced words in the free group on `x, y, g1, g2`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Generators: the two group generators and the two relator letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    X,
    Y,
    G1,
    G2,
}

impl Gen {
    pub fn name(self) -> &'static str {
        match self {
            Gen::X => "x",
            Gen::Y => "y",
            Gen::G1 => "g1",
            Gen::G2 => "g2",
        }
    }

    pub fn is_relator(self) -> bool {
        matches!(self, Gen::G1 | Gen::G2)
    }
}

/// Run-length encoded, freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<(Gen, i64)>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn letter(g: Gen, k: i64) -> Word {
        let mut w = Word::empty();
        w.push(g, k);
        w
    }

    pub fn from_letters<I: IntoIterator<Item = (Gen, i64)>>(it: I) -> Word {
        let mut w = Word::empty();
        for (g, k) in it {
            w.push(g, k);
        }
        w
    }

    /// Appends `g^k`, cancelling against the end of the word.
    pub fn push(&mut self, g: Gen, k: i64) {
        if k == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((h, e)) if *h == g => {
                *e += k;
                if *e == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, k)),
        }
    }

    pub fn letters(&self) -> &[(Gen, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables.
    pub fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Total letter count `Σ |k|`.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|(_, k)| k.unsigned_abs()).sum()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, k) in &other.letters {
            w.push(g, k);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|&(g, k)| (g, -k)).collect() }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::empty();
        for _ in 0..k.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `self * g * self^{-1}`.
    pub fn conjugate(&self, g: &Word) -> Word {
        self.mul(g).mul(&self.inverse())
    }

    /// Replaces each generator by a word.
    pub fn substitute<F: Fn(Gen) -> Word>(&self, f: F) -> Word {
        let mut w = Word::empty();
        for &(g, k) in &self.letters {
            w = w.mul(&f(g).pow(k));
        }
        w
    }

    /// Exponent sum of one generator.
    pub fn exponent_sum(&self, g: Gen) -> i64 {
        self.letters.iter().filter(|(h, _)| *h == g).map(|(_, k)| k).sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, k)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *k == 1 {
                write!(f, "{}", g.name())?;
            } else {
                write!(f, "{}^{}", g.name(), k)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Word::empty());
        }
        let mut w = Word::empty();
        for tok in s.split_whitespace() {
            let (name, exp) = tok.split_once('^').unwrap_or((tok, "1"));
            let g = match name {
                "x" => Gen::X,
                "y" => Gen::Y,
                "g1" => Gen::G1,
                "g2" => Gen::G2,
                _ => return Err(Error::Parse(format!("unknown generator {name:?}"))),
            };
            let k: i64 = exp.parse().map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?;
            w.push(g, k);
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        let w: Word = "x^2 y^-3 y^3 x^-1".parse().unwrap();
        assert_eq!(w, Word::letter(Gen::X, 1));
        let u: Word = "x y g1^-1".parse().unwrap();
        assert!(u.mul(&u.inverse()).is_empty());
        assert_eq!(u.to_string(), "x y g1^-1");
        assert_eq!(u.pow(-2), u.inverse().mul(&u.inverse()));
        assert_eq!(Word::empty().to_string(), "1");
    }
}
