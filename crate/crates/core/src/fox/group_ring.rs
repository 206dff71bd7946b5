//! The integral group ring of the free group, and Fox derivatives in it.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::word::{Gen, Word};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty(), 1)
    }

    pub fn word(w: Word, c: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn terms(&self) -> &BTreeMap<Word, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(a.mul(b), c * d);
            }
        }
        out
    }

    pub fn left_mul_word(&self, w: &Word) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            out.add_term(w.mul(b), *c);
        }
        out
    }

    /// Applies a word substitution termwise.
    pub fn substitute<F: Fn(Gen) -> Word>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.substitute(&f), *c);
        }
        out
    }

    /// Sum of the coefficients.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }
}

/// `∂(g^k)/∂g`: `1 + g + ... + g^{k-1}` or `-(g^{-1} + ... + g^{k})`.
pub fn fox_power(g: Gen, k: i64) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    if k > 0 {
        for i in 0..k {
            out.add_term(Word::letter(g, i), 1);
        }
    } else {
        for i in 1..=-k {
            out.add_term(Word::letter(g, -i), -1);
        }
    }
    out
}

/// Fox derivative with the convention `∂(uv) = ∂u + u ∂v`.
pub fn fox_derivative(w: &Word, g: Gen) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::empty();
    for &(h, k) in w.letters() {
        if h == g {
            out = out.add(&fox_power(g, k).left_mul_word(&prefix));
        }
        prefix.push(h, k);
    }
    out
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*[{w}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axioms_on_letters() {
        let x = Word::letter(Gen::X, 1);
        assert_eq!(fox_derivative(&x, Gen::X), GroupRingElement::one());
        assert_eq!(fox_derivative(&x.inverse(), Gen::X), GroupRingElement::word(x.inverse(), -1));
        assert!(fox_derivative(&x, Gen::Y).is_zero());
        let w = Word::from_letters([(Gen::X, 3), (Gen::Y, -2)]);
        let expect = fox_power(Gen::X, 3);
        assert_eq!(fox_derivative(&w, Gen::X), expect);
        assert_eq!(expect.terms().len(), 3);
    }

    #[test]
    fn fundamental_identity() {
        let w = Word::from_letters([(Gen::X, 2), (Gen::Y, -1), (Gen::X, -3), (Gen::Y, 2)]);
        let mut rhs = GroupRingElement::zero();
        for g in [Gen::X, Gen::Y] {
            let gm1 = GroupRingElement::word(Word::letter(g, 1), 1).sub(&GroupRingElement::one());
            rhs = rhs.add(&fox_derivative(&w, g).mul(&gm1));
        }
        assert_eq!(rhs, GroupRingElement::word(w, 1).sub(&GroupRingElement::one()));
    }
}
