//! Poincaré duality matrices, closed form and from the cap product.

use super::representation::{CMatrix, Metabelian};
use crate::algebra::laurent::ZPoly;
use crate::algebra::matrix::{ExactDiv, Matrix};
use crate::fox::push::{pd_from_cap as cap, Representation};
use crate::fox::torus::{IdentityDecomposition, TorusParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdProvenance {
    ClosedForm,
    CapProduct,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PdMap<T> {
    pub matrix: Matrix<T>,
    pub provenance: PdProvenance,
}

fn zgq(base_exp: i64, l: i64) -> ZPoly {
    ZPoly::t_pow(base_exp).geometric_quotient(l).expect("monomial bases are units")
}

pub fn pd_classical(p: &TorusParams) -> PdMap<ZPoly> {
    let (m, n, r, s, mn) = (p.m, p.n, p.r, p.s, p.mn());
    let gx = zgq(n, s);
    let matrix = Matrix::from_rows(vec![
        vec![-(&ZPoly::t_pow(n) * &gx), -(&ZPoly::t_pow(mn + m * r + n) * &gx)],
        vec![ZPoly::new(), -(&ZPoly::t_pow(mn + m) * &zgq(m, r))],
    ]);
    PdMap { matrix, provenance: PdProvenance::ClosedForm }
}

pub fn pd_twisted(rep: &Metabelian) -> PdMap<crate::algebra::laurent::CPoly> {
    let p = &rep.params;
    let gx: CMatrix = rep.x.mul_m(&rep.x.geometric_quotient(p.s).expect("invertible"));
    let tn = rep.t_half(2 * p.n);
    let d = rep.dim();
    let b12 = tn.mul_m(&gx).mul_m(&rep.y_pow(p.r)).neg_m();
    let b22 = tn.mul_m(&rep.y.geometric_quotient(p.r).expect("invertible")).mul_m(&rep.y).neg_m();
    let matrix = Matrix::from_blocks(&[vec![gx.neg_m(), b12], vec![Matrix::zeros(d, d), b22]]);
    PdMap { matrix, provenance: PdProvenance::ClosedForm }
}

pub fn pd_from_cap<T: ExactDiv>(id: &IdentityDecomposition, rep: &Representation<T>) -> PdMap<T> {
    PdMap { matrix: cap(id, rep), provenance: PdProvenance::CapProduct }
}
