//! The two-generator presentation of the torus knot group and its taut
//! identity among relations.

use std::fmt;

use num_integer::Integer;

use super::word::{Gen, Word};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusParams {
    pub m: i64,
    pub n: i64,
    pub r: i64,
    pub s: i64,
}

impl TorusParams {
    /// The unique `(r, s)` with `mr + ns = 1` and `-n < r < 0 < s < m`.
    pub fn new(m: i64, n: i64) -> Result<TorusParams> {
        if m < 2 || n < 2 {
            return Err(Error::InvalidParameters(format!("m and n must be at least 2, got ({m}, {n})")));
        }
        if m.gcd(&n) != 1 {
            return Err(Error::NotCoprime);
        }
        let r = (-n + 1..0).find(|r| (1 - m * r) % n == 0).expect("coprime pair has a solution");
        let s = (1 - m * r) / n;
        debug_assert!(0 < s && s < m);
        Ok(TorusParams { m, n, r, s })
    }

    /// Genus `(m-1)(n-1)/2`.
    pub fn genus(&self) -> i64 {
        (self.m - 1) * (self.n - 1) / 2
    }

    pub fn mn(&self) -> i64 {
        self.m * self.n
    }

    /// The meridian `x^s y^r`.
    pub fn mu(&self) -> Word {
        Word::from_letters([(Gen::X, self.s), (Gen::Y, self.r)])
    }

    /// `γ1 = x^m y^{-n}`, `γ2 = μ^{-mn} y^n`.
    pub fn relator(&self, j: u8) -> Word {
        match j {
            1 => Word::from_letters([(Gen::X, self.m), (Gen::Y, -self.n)]),
            2 => self.mu().pow(-self.mn()).mul(&Word::letter(Gen::Y, self.n)),
            _ => panic!("relator index must be 1 or 2"),
        }
    }

    /// Substitutes the relator letters by their words.
    pub fn psi(&self, w: &Word) -> Word {
        w.substitute(|g| match g {
            Gen::G1 => self.relator(1),
            Gen::G2 => self.relator(2),
            g => Word::letter(g, 1),
        })
    }

    pub fn taut_identity(&self) -> IdentityDecomposition {
        let mn = self.mn();
        IdentityDecomposition {
            factors: vec![
                Factor { omega: Word::letter(Gen::X, self.s), j: 1, eps: -1 },
                Factor { omega: Word::empty(), j: 1, eps: 1 },
                Factor { omega: self.mu().pow(mn), j: 2, eps: 1 },
                Factor { omega: self.mu().pow(mn + 1), j: 2, eps: -1 },
            ],
        }
    }
}

impl fmt::Display for TorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({}, {})", self.m, self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub omega: Word,
    /// Relator index, 1 or 2.
    pub j: u8,
    /// Sign, +1 or -1.
    pub eps: i64,
}

/// A product `Π ω_i g_{j_i}^{ε_i} ω_i^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityDecomposition {
    pub factors: Vec<Factor>,
}

impl IdentityDecomposition {
    /// The product as a word over all four letters.
    pub fn expand(&self) -> Word {
        let mut w = Word::empty();
        for f in &self.factors {
            let g = if f.j == 1 { Gen::G1 } else { Gen::G2 };
            w = w.mul(&f.omega.conjugate(&Word::letter(g, f.eps)));
        }
        w
    }

    /// True iff the product is trivial in the free group on `x, y`.
    pub fn verify(&self, params: &TorusParams) -> bool {
        params.psi(&self.expand()).is_empty()
    }
}
