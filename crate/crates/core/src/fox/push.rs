//! Pushing group ring elements and Fox derivatives through a matrix
//! representation.
//!
//! Group ring elements act on row vectors from the right, so a word `w` is
//! sent to `ρ(w)^{-1}`; this map reverses products.

use super::group_ring::GroupRingElement;
use super::torus::{IdentityDecomposition, TorusParams};
use super::word::{Gen, Word};
use crate::algebra::matrix::{ExactDiv, Matrix};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct Representation<T> {
    pub dim: usize,
    images: [Matrix<T>; 4],
    inverses: [Matrix<T>; 4],
}

fn slot(g: Gen) -> usize {
    match g {
        Gen::X => 0,
        Gen::Y => 1,
        Gen::G1 => 2,
        Gen::G2 => 3,
    }
}

impl<T: ExactDiv> Representation<T> {
    /// Representation of the free group with the given images of `x`, `y`;
    /// relator letters are sent to the images of their words.
    pub fn new(x: Matrix<T>, y: Matrix<T>, params: &TorusParams) -> Result<Self> {
        let dim = x.rows();
        let x_inv = x.inverse()?;
        let y_inv = y.inverse()?;
        let mut rep = Representation {
            dim,
            images: [x.clone(), y.clone(), Matrix::identity(dim), Matrix::identity(dim)],
            inverses: [x_inv, y_inv, Matrix::identity(dim), Matrix::identity(dim)],
        };
        for (j, g) in [(1u8, Gen::G1), (2, Gen::G2)] {
            let w = params.relator(j);
            let img = rep.image(&w);
            let inv = rep.image(&w.inverse());
            rep.images[slot(g)] = img;
            rep.inverses[slot(g)] = inv;
        }
        Ok(rep)
    }

    pub fn generator(&self, g: Gen) -> &Matrix<T> {
        &self.images[slot(g)]
    }

    pub fn generator_inverse(&self, g: Gen) -> &Matrix<T> {
        &self.inverses[slot(g)]
    }

    /// `ρ(g)^k`.
    pub fn letter_power(&self, g: Gen, k: i64) -> Matrix<T> {
        if k >= 0 {
            self.images[slot(g)].pow(k as u64)
        } else {
            self.inverses[slot(g)].pow(k.unsigned_abs())
        }
    }

    /// The homomorphic image `ρ(w)`.
    pub fn image(&self, w: &Word) -> Matrix<T> {
        let mut acc = Matrix::identity(self.dim);
        for &(g, k) in w.letters() {
            acc = acc.mul_m(&self.letter_power(g, k));
        }
        acc
    }

    /// `ρ(w)^{-1}`, the image under the right action.
    pub fn act(&self, w: &Word) -> Matrix<T> {
        self.image(&w.inverse())
    }

    pub fn push(&self, e: &GroupRingElement) -> Matrix<T> {
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (w, c) in e.terms() {
            acc = acc.add_m(&self.act(w).scale(&T::from_int(*c)));
        }
        acc
    }

    /// Image of `∂(g^k)/∂g` given `a = ρ(g)^{-1}`, without expanding words.
    fn pushed_power(&self, g: Gen, k: i64) -> Matrix<T> {
        let a = &self.inverses[slot(g)];
        let a_inv = &self.images[slot(g)];
        let mut acc = Matrix::zeros(self.dim, self.dim);
        if k > 0 {
            let mut p = Matrix::identity(self.dim);
            for _ in 0..k {
                acc = acc.add_m(&p);
                p = p.mul_m(a);
            }
        } else {
            let mut p = a_inv.clone();
            for _ in 0..-k {
                acc = acc.sub_m(&p);
                p = p.mul_m(a_inv);
            }
        }
        acc
    }

    /// Image of the Fox derivative `∂w/∂g`, accumulated letter by letter.
    pub fn pushed_fox(&self, w: &Word, g: Gen) -> Matrix<T> {
        let mut acc = Matrix::zeros(self.dim, self.dim);
        let mut prefix = Matrix::identity(self.dim);
        for &(h, k) in w.letters() {
            if h == g {
                acc = acc.add_m(&self.pushed_power(g, k).mul_m(&prefix));
            }
            prefix = self.letter_power(h, -k).mul_m(&prefix);
        }
        acc
    }
}

/// One term `ε [∂ω/∂x_l] h_l ⊗ [ω] h_j` of the diagonal approximation.
#[derive(Clone, Debug)]
pub struct DiagonalTerm<T> {
    pub left: Gen,
    pub coeff: Matrix<T>,
    pub right: u8,
    pub translate: Matrix<T>,
}

pub fn diagonal_approximation<T: ExactDiv>(
    id: &IdentityDecomposition,
    rep: &Representation<T>,
) -> Vec<DiagonalTerm<T>> {
    let mut out = Vec::new();
    for f in &id.factors {
        let translate = rep.image(&f.omega);
        for g in [Gen::X, Gen::Y] {
            let d = rep.pushed_fox(&f.omega, g);
            let coeff = if f.eps < 0 { d.neg_m() } else { d };
            out.push(DiagonalTerm { left: g, coeff, right: f.j, translate: translate.clone() });
        }
    }
    out
}

/// The duality matrix obtained by capping with the fundamental class:
/// block `(l, j)` collects `coeff * translate` over terms with those indices.
pub fn pd_from_cap<T: ExactDiv>(id: &IdentityDecomposition, rep: &Representation<T>) -> Matrix<T> {
    let d = rep.dim;
    let mut blocks = vec![vec![Matrix::<T>::zeros(d, d), Matrix::zeros(d, d)], vec![Matrix::zeros(d, d), Matrix::zeros(d, d)]];
    for term in diagonal_approximation(id, rep) {
        let l = if term.left == Gen::X { 0 } else { 1 };
        let j = (term.right - 1) as usize;
        blocks[l][j] = blocks[l][j].add_m(&term.coeff.mul_m(&term.translate));
    }
    Matrix::from_blocks(&blocks)
}

#[cfg(test)]
mod tests {
    use super::super::group_ring::fox_derivative;
    use super::*;
    use crate::algebra::laurent::ZPoly;
    use crate::algebra::ring::Ring;
    use num_bigint::BigInt;

    fn classical(p: &TorusParams) -> Representation<ZPoly> {
        let x = Matrix::scalar(1, ZPoly::t_pow(p.n));
        let y = Matrix::scalar(1, ZPoly::t_pow(p.m));
        Representation::new(x, y, p).unwrap()
    }

    #[test]
    fn pushed_fox_matches_termwise_push() {
        let p = TorusParams::new(3, 5).unwrap();
        let rep = classical(&p);
        let w = p.relator(2).mul(&Word::from_letters([(Gen::X, -2), (Gen::Y, 3)]));
        for g in [Gen::X, Gen::Y] {
            assert_eq!(rep.pushed_fox(&w, g), rep.push(&fox_derivative(&w, g)));
        }
        assert_eq!(rep.generator(Gen::G1), &Matrix::identity(1));
        assert_eq!(rep.image(&p.mu()), Matrix::scalar(1, ZPoly::t_pow(1)));
    }

    #[test]
    fn cap_product_for_trefoil() {
        let p = TorusParams::new(2, 3).unwrap();
        let rep = classical(&p);
        let pd = pd_from_cap(&p.taut_identity(), &rep);
        let t = |e: i64, c: i64| ZPoly::monomial(BigInt::from(c), 2 * e);
        let expect = Matrix::from_rows(vec![vec![t(3, -1), t(7, -1)], vec![ZPoly::zero(), t(6, 1)]]);
        assert_eq!(pd, expect);
        let terms = diagonal_approximation(&p.taut_identity(), &rep);
        // the factor with trivial conjugating word contributes nothing
        assert!(terms[2].coeff.is_zero() && terms[3].coeff.is_zero());
    }
}
