//! The abelian and metabelian representations of the torus knot group.

use num_bigint::BigInt;

use crate::algebra::cyclotomic::CycNumber;
use crate::algebra::laurent::{CPoly, ZPoly};
use crate::algebra::matrix::Matrix;
use crate::algebra::ring::Ring;
use crate::error::{Error, Result};
use crate::fox::push::Representation;
use crate::fox::torus::TorusParams;

pub type ZMatrix = Matrix<ZPoly>;
pub type CMatrix = Matrix<CPoly>;

/// `x -> t^n`, `y -> t^m`.
pub fn abelianization_rep(p: &TorusParams) -> Result<Representation<ZPoly>> {
    let x = Matrix::scalar(1, ZPoly::t_pow(p.n));
    let y = Matrix::scalar(1, ZPoly::t_pow(p.m));
    Representation::new(x, y, p)
}

/// Scalar matrix `c t^{k/2} I`.
pub fn scalar_half(dim: usize, doubled: i64) -> CMatrix {
    Matrix::scalar(dim, CPoly::half_pow(doubled))
}

/// Representation attached to a character `b` of `Z/n` on `m` sheets.
#[derive(Clone, Debug)]
pub struct Metabelian {
    pub params: TorusParams,
    pub b: Vec<i64>,
    pub x: CMatrix,
    pub y: CMatrix,
    pub mu: CMatrix,
    pub x_inv: CMatrix,
    pub y_inv: CMatrix,
    pub mu_inv: CMatrix,
    pub rep: Representation<CPoly>,
}

/// Validates a character vector; entries are reduced mod `n`.
pub fn check_character(p: &TorusParams, b: &[i64]) -> Result<Vec<i64>> {
    if b.len() as i64 != p.m {
        return Err(Error::InvalidParameters(format!("expected {} character entries, got {}", p.m, b.len())));
    }
    let b: Vec<i64> = b.iter().map(|v| v.rem_euclid(p.n)).collect();
    if b.iter().sum::<i64>() % p.n != 0 {
        return Err(Error::InvalidCharacter);
    }
    if b.iter().all(|&v| v == 0) {
        return Err(Error::TrivialCharacter);
    }
    Ok(b)
}

impl Metabelian {
    pub fn new(p: &TorusParams, b: &[i64]) -> Result<Metabelian> {
        let b = check_character(p, b)?;
        let m = p.m as usize;
        let order = 2 * p.n as u32;
        let t = CPoly::t_pow(1);
        let c = Matrix::from_fn(m, m, |i, j| {
            if j == i + 1 {
                CPoly::one()
            } else if i == m - 1 && j == 0 {
                t.clone()
            } else {
                CPoly::zero()
            }
        });
        let x = c.pow(p.n as u64);
        let y = Matrix::diag(
            b.iter().map(|&bi| CPoly::monomial(CycNumber::zeta_pow(order, 2 * bi), 2)).collect(),
        );
        let x_inv = x.inverse()?;
        let y_inv = y.inverse()?;
        let mu = x.pow_i(p.s)?.mul_m(&y.pow_i(p.r)?);
        let mu_inv = mu.inverse()?;
        let rep = Representation::new(x.clone(), y.clone(), p)?;
        Ok(Metabelian { params: *p, b, x, y, mu, x_inv, y_inv, mu_inv, rep })
    }

    pub fn dim(&self) -> usize {
        self.params.m as usize
    }

    pub fn n(&self) -> u32 {
        self.params.n as u32
    }

    /// `t^{k/2} I` of the right size.
    pub fn t_half(&self, doubled: i64) -> CMatrix {
        scalar_half(self.dim(), doubled)
    }

    pub fn identity(&self) -> CMatrix {
        Matrix::identity(self.dim())
    }

    pub fn x_pow(&self, k: i64) -> CMatrix {
        if k >= 0 {
            self.x.pow(k as u64)
        } else {
            self.x_inv.pow(k.unsigned_abs())
        }
    }

    pub fn y_pow(&self, k: i64) -> CMatrix {
        if k >= 0 {
            self.y.pow(k as u64)
        } else {
            self.y_inv.pow(k.unsigned_abs())
        }
    }

    pub fn mu_pow(&self, k: i64) -> CMatrix {
        if k >= 0 {
            self.mu.pow(k as u64)
        } else {
            self.mu_inv.pow(k.unsigned_abs())
        }
    }

    /// `M = X^s Y^r` and `M^{mn} = Y^n = X^m = t^n I`.
    pub fn relations_hold(&self) -> bool {
        let p = &self.params;
        let tn = self.t_half(2 * p.n);
        self.mu == self.x_pow(p.s).mul_m(&self.y_pow(p.r))
            && self.mu_pow(p.mn()) == tn
            && self.y_pow(p.n) == tn
            && self.x_pow(p.m) == tn
            && self.rep.generator(crate::fox::word::Gen::G1) == &self.identity()
            && self.rep.generator(crate::fox::word::Gen::G2) == &self.identity()
    }

    /// Unitarity on generators: `ρ(g)^{#T} = ρ(g)^{-1}`.
    pub fn unitary_on_generators(&self) -> bool {
        self.x.sharp_t() == self.x_inv && self.y.sharp_t() == self.y_inv
    }
}

/// Integer Laurent matrices viewed over the cyclotomic field.
pub fn to_cyc_matrix(m: &ZMatrix) -> CMatrix {
    m.map(|p| p.to_cyc())
}

pub fn int_poly(terms: &[(i64, i64)]) -> ZPoly {
    ZPoly::from_terms(terms.iter().map(|&(e, c)| (2 * e, BigInt::from(c))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_metabelian() {
        let p = TorusParams::new(2, 3).unwrap();
        let rep = Metabelian::new(&p, &[1, 2]).unwrap();
        let t = |e| CPoly::t_pow(e);
        let expect_x = Matrix::from_rows(vec![vec![CPoly::zero(), t(1)], vec![t(2), CPoly::zero()]]);
        assert_eq!(rep.x, expect_x);
        assert_eq!(rep.x.pow(2), rep.t_half(6));
        let z3 = CycNumber::zeta_pow(6, 2);
        assert_eq!(rep.y[(0, 0)], CPoly::monomial(z3.clone(), 2));
        assert_eq!(rep.y[(1, 1)], CPoly::monomial(z3.mul_ref(&z3), 2));
        assert!(rep.relations_hold());
        assert!(rep.unitary_on_generators());
    }

    #[test]
    fn character_errors() {
        let p = TorusParams::new(2, 3).unwrap();
        assert_eq!(Metabelian::new(&p, &[1, 1]).unwrap_err(), Error::InvalidCharacter);
        assert_eq!(Metabelian::new(&p, &[0, 0]).unwrap_err(), Error::TrivialCharacter);
        assert_eq!(Metabelian::new(&p, &[0, 3]).unwrap_err(), Error::TrivialCharacter);
    }

    #[test]
    fn abelian_images() {
        let p = TorusParams::new(2, 3).unwrap();
        let rep = abelianization_rep(&p).unwrap();
        assert_eq!(rep.image(&p.mu()), Matrix::scalar(1, ZPoly::t_pow(1)));
        assert_eq!(rep.image(&p.relator(1)), Matrix::identity(1));
    }
}
