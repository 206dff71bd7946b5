//! Cellular chain complexes of the torus knot exterior with twisted
//! coefficients, by closed form and by Fox calculus.

use super::representation::{CMatrix, Metabelian, ZMatrix};
use crate::algebra::laurent::{CPoly, ZPoly};
use crate::algebra::matrix::{fraction_rank, ExactDiv, Matrix};
use crate::algebra::ratfunc::RatFunc;
use crate::algebra::ring::Ring;
use crate::fox::push::Representation;
use crate::fox::torus::TorusParams;
use crate::fox::word::Gen;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    FoxDerived,
}

/// `0 -> C_3 -> C_2 -> C_1 -> C_0` acting on column vectors: `d1` is `l x 2l`,
/// `d2` is `2l x 2l`, `d3` is `2l x l`, so `d1 d2 = 0` and `d2 d3 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex<T> {
    pub dim: usize,
    pub d1: Matrix<T>,
    pub d2: Matrix<T>,
    pub d3: Matrix<T>,
    pub provenance: Provenance,
}

/// Entries that embed in the rational function field over `Q(ζ)`.
pub trait ToFraction {
    fn to_fraction(&self) -> RatFunc;
}

impl ToFraction for ZPoly {
    fn to_fraction(&self) -> RatFunc {
        RatFunc::from_poly(self.to_cyc())
    }
}

impl ToFraction for CPoly {
    fn to_fraction(&self) -> RatFunc {
        RatFunc::from_poly(self.clone())
    }
}

pub fn to_fraction_matrix<T: Ring + ToFraction>(m: &Matrix<T>) -> Matrix<RatFunc> {
    m.map(|e| e.to_fraction())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexReport {
    pub d1d2_zero: bool,
    pub d2d3_zero: bool,
    pub ranks: [usize; 3],
}

impl ComplexReport {
    pub fn ranks_equal(&self, r: usize) -> bool {
        self.ranks.iter().all(|&k| k == r)
    }
}

pub fn verify_complex<T: Ring + ToFraction>(cc: &ChainComplex<T>) -> ComplexReport {
    ComplexReport {
        d1d2_zero: cc.d1.mul_m(&cc.d2).is_zero(),
        d2d3_zero: cc.d2.mul_m(&cc.d3).is_zero(),
        ranks: [
            fraction_rank(&to_fraction_matrix(&cc.d1)),
            fraction_rank(&to_fraction_matrix(&cc.d2)),
            fraction_rank(&to_fraction_matrix(&cc.d3)),
        ],
    }
}

fn zt(e: i64) -> ZPoly {
    ZPoly::t_pow(e)
}

fn zgq(base_exp: i64, l: i64) -> ZPoly {
    zt(base_exp).geometric_quotient(l).expect("monomial bases are units")
}

/// The complex for the abelian coefficients `x -> t^n`, `y -> t^m`.
pub fn classical_closed_form(p: &TorusParams) -> ChainComplex<ZPoly> {
    let (m, n, r, s, mn) = (p.m, p.n, p.r, p.s, p.mn());
    let one = ZPoly::one();
    let d1 = Matrix::from_rows(vec![vec![&one - &zt(-n), &one - &zt(-m)]]);
    let gx = zgq(n, m);
    let gy = zgq(m, n);
    let gt = zgq(1, n * s);
    let d2 = Matrix::from_rows(vec![
        vec![&zt(n - mn) * &gx, -(&(&zt(m * r + n) * &gx) * &gt)],
        vec![-(&zt(m - mn) * &gy), &(&zt(m * r + m) * &gy) * &gt],
    ]);
    let d3 = Matrix::from_rows(vec![vec![&one - &zt(-n * s)], vec![&zt(-mn) - &zt(-mn - 1)]]);
    ChainComplex { dim: 1, d1, d2, d3, provenance: Provenance::ClosedForm }
}

fn gq(a: &CMatrix, l: i64) -> CMatrix {
    a.geometric_quotient(l).expect("matrices here are invertible")
}

/// The complex for the metabelian coefficients.
pub fn twisted_closed_form(rep: &Metabelian) -> ChainComplex<CPoly> {
    let p = &rep.params;
    let (m, n, r, s) = (p.m, p.n, p.r, p.s);
    let id = rep.identity();
    let (x, y, mu) = (&rep.x, &rep.y, &rep.mu);
    let t_n = rep.t_half(-2 * n);
    let d1 = Matrix::hstack(&[&id - &rep.x_inv, &id - &rep.y_inv]);
    let gm = gq(mu, p.mn()).mul_m(mu);
    let b11 = t_n.mul_m(&gq(x, m)).mul_m(x);
    let b12 = rep.x_pow(1 - s).mul_m(&gq(x, s)).mul_m(&gm).neg_m();
    let gyy = gq(y, n).mul_m(y);
    let b21 = t_n.mul_m(&gyy).neg_m();
    let b22 = rep
        .y_pow(1 - r)
        .mul_m(&gq(y, r))
        .mul_m(&rep.x_pow(-s))
        .mul_m(&gm)
        .neg_m()
        .add_m(&gyy);
    let d2 = Matrix::from_blocks(&[vec![b11, b12], vec![b21, b22]]);
    let d3 = Matrix::vstack(&[&id - &rep.x_pow(-s), t_n.mul_m(&(&id - &rep.mu_inv))]);
    ChainComplex { dim: rep.dim(), d1, d2, d3, provenance: Provenance::ClosedForm }
}

/// The complex obtained by pushing Fox derivatives of the presentation and
/// of the taut identity through `rep`.
pub fn complex_from_fox<T: ExactDiv>(rep: &Representation<T>, p: &TorusParams) -> ChainComplex<T> {
    let d = rep.dim;
    let id = Matrix::<T>::identity(d);
    let gens = [Gen::X, Gen::Y];
    let d1 = Matrix::hstack(&[&id - rep.generator_inverse(Gen::X), &id - rep.generator_inverse(Gen::Y)]);
    let relators = [p.relator(1), p.relator(2)];
    let d2 = Matrix::from_blocks(
        &gens.iter().map(|&g| relators.iter().map(|w| rep.pushed_fox(w, g)).collect()).collect::<Vec<_>>(),
    );
    let sigma = p.taut_identity().expand();
    let d3 = Matrix::vstack(&[rep.pushed_fox(&sigma, Gen::G1), rep.pushed_fox(&sigma, Gen::G2)]);
    ChainComplex { dim: d, d1, d2, d3, provenance: Provenance::FoxDerived }
}

/// Entrywise comparison ignoring provenance.
pub fn same_matrices<T: PartialEq>(a: &ChainComplex<T>, b: &ChainComplex<T>) -> bool {
    a.d1 == b.d1 && a.d2 == b.d2 && a.d3 == b.d3
}

/// Classical complex viewed over the cyclotomic ring.
pub fn classical_to_cyc(cc: &ChainComplex<ZPoly>) -> ChainComplex<CPoly> {
    let f = |m: &ZMatrix| m.map(|e| e.to_cyc());
    ChainComplex { dim: cc.dim, d1: f(&cc.d1), d2: f(&cc.d2), d3: f(&cc.d3), provenance: cc.provenance }
}

#[cfg(test)]
mod tests {
    use super::super::representation::{abelianization_rep, int_poly};
    use super::*;

    #[test]
    fn trefoil_classical_entries() {
        let p = TorusParams::new(2, 3).unwrap();
        let cc = classical_closed_form(&p);
        assert_eq!(cc.d1[(0, 0)], int_poly(&[(0, 1), (-3, -1)]));
        assert_eq!(cc.d1[(0, 1)], int_poly(&[(0, 1), (-2, -1)]));
        assert_eq!(cc.d2[(0, 0)], int_poly(&[(-3, 1), (0, 1)]));
        assert_eq!(cc.d3[(0, 0)], int_poly(&[(0, 1), (-3, -1)]));
        assert_eq!(cc.d3[(1, 0)], int_poly(&[(-6, 1), (-7, -1)]));
        let fox = complex_from_fox(&abelianization_rep(&p).unwrap(), &p);
        assert!(same_matrices(&cc, &fox));
    }

    #[test]
    fn twisted_routes_agree_small() {
        for (m, n, b) in [(2, 3, vec![1, 2]), (3, 4, vec![1, 1, 2]), (3, 2, vec![1, 1, 0])] {
            let p = TorusParams::new(m, n).unwrap();
            let rep = Metabelian::new(&p, &b).unwrap();
            let cf = twisted_closed_form(&rep);
            let fox = complex_from_fox(&rep.rep, &p);
            assert!(same_matrices(&cf, &fox), "({m},{n}) {b:?}");
            let rpt = verify_complex(&cf);
            assert!(rpt.d1d2_zero && rpt.d2d3_zero);
            assert!(rpt.ranks_equal(m as usize), "{:?}", rpt.ranks);
        }
    }

    #[test]
    fn perturbed_d2_detected() {
        let p = TorusParams::new(3, 4).unwrap();
        let mut cc = classical_closed_form(&p);
        let bumped = &cc.d2[(0, 1)] + &ZPoly::one();
        cc.d2[(0, 1)] = bumped;
        assert!(!verify_complex(&cc).d1d2_zero);
    }
}
