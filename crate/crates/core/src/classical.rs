//! The Alexander polynomial and the Blanchfield pairing of a torus knot.

use num_bigint::BigInt;

use crate::algebra::laurent::{QPoly, ZPoly};
use crate::algebra::matrix::Matrix;
use crate::algebra::rational::Rat;
use crate::algebra::ring::Ring;
use crate::algebra::snf::invariant_factors;
use crate::complex::chain::{classical_closed_form, complex_from_fox};
use crate::complex::duality::pd_classical;
use crate::complex::representation::abelianization_rep;
use crate::error::{Error, Result};
use crate::fox::torus::TorusParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaRoute {
    ClosedForm,
    FromComplex,
}

pub fn to_rat_poly(p: &ZPoly) -> QPoly {
    p.map_coeffs(Rat::from_bigint)
}

/// `None` if some coefficient is not an integer.
pub fn to_int_poly(p: &QPoly) -> Option<ZPoly> {
    let mut terms = Vec::with_capacity(p.len());
    for (e, c) in p.terms() {
        terms.push((*e, c.to_integer()?));
    }
    Some(ZPoly::from_terms(terms))
}

fn t(e: i64) -> ZPoly {
    ZPoly::t_pow(e)
}

fn one_minus(e: i64) -> ZPoly {
    &ZPoly::one() - &t(e)
}

/// Shifts to a `#`-symmetric exponent window and scales to value `+1` at
/// `t = 1`.
pub fn normalize_symmetric(q: &QPoly) -> Result<ZPoly> {
    let (lo, hi) = (q.low().ok_or(Error::DivisionByZero)?, q.high().unwrap());
    let centered = q.shift(-(lo + hi) / 2);
    let at_one = centered.terms().iter().fold(Rat::ZERO, |acc, (_, c)| acc.add(c));
    let scaled = centered.scale(&at_one.inv()?);
    to_int_poly(&scaled).ok_or_else(|| Error::PipelineInconsistency("order is not integral".into()))
}

pub fn alexander_polynomial(p: &TorusParams, route: DeltaRoute) -> Result<ZPoly> {
    match route {
        DeltaRoute::ClosedForm => {
            let num = &one_minus(1) * &one_minus(p.mn());
            let den = &one_minus(p.m) * &one_minus(p.n);
            Ok(num.exact_div(&den)?.shift(-2 * p.genus()))
        }
        DeltaRoute::FromComplex => {
            // C_1 / Im d2 is H_1 plus a free summand, so the order of H_1 is
            // the product of the nonzero invariant factors of d2.
            let cc = complex_from_fox(&abelianization_rep(p)?, p);
            let d2 = cc.d2.map(to_rat_poly);
            let order = invariant_factors(&d2)?.iter().fold(QPoly::one(), |acc, f| &acc * f);
            normalize_symmetric(&order)
        }
    }
}

/// `t^{-(m+1)(n+1)/2}(1-t^{mr})(1-t^{ns})(t^m-t^n)^2 / ((1-t^m)(1-t^n))`.
pub fn b_function(p: &TorusParams) -> Result<ZPoly> {
    let diff = &t(p.m) - &t(p.n);
    let num = &(&one_minus(p.m * p.r) * &one_minus(p.n * p.s)) * &(&diff * &diff);
    let den = &one_minus(p.m) * &one_minus(p.n);
    let q = num.exact_div(&den).map_err(|_| Error::BNotPolynomial)?;
    Ok(q.shift(-(p.m + 1) * (p.n + 1)))
}

/// Remainder with doubled exponents in `[low(Δ), high(Δ))`.
pub fn canonical_mod(p: &ZPoly, delta: &ZPoly) -> Result<ZPoly> {
    let r = to_rat_poly(p).rem_window(&to_rat_poly(delta), delta.low().ok_or(Error::DivisionByZero)?)?;
    to_int_poly(&r).ok_or_else(|| Error::PipelineInconsistency("non-integral remainder modulo a monic".into()))
}

/// `t^{mn} B(m, n)` reduced modulo `Δ`.
pub fn gram_closed_form(p: &TorusParams) -> Result<ZPoly> {
    let delta = alexander_polynomial(p, DeltaRoute::ClosedForm)?;
    canonical_mod(&b_function(p)?.shift(2 * p.mn()), &delta)
}

/// `(1/Δ) v^{#T} PD d2^{#T} v` with `v = (1-t, 1-t)^T`, before reduction.
pub fn pairing_pipeline(p: &TorusParams, pd: &Matrix<ZPoly>) -> Result<ZPoly> {
    let delta = alexander_polynomial(p, DeltaRoute::ClosedForm)?;
    let d2 = classical_closed_form(p).d2;
    let v = Matrix::from_rows(vec![vec![one_minus(1)], vec![one_minus(1)]]);
    let s = v.sharp_t().mul_m(pd).mul_m(&d2.sharp_t()).mul_m(&v);
    s[(0, 0)]
        .exact_div(&delta)
        .map_err(|_| Error::PipelineInconsistency("pairing numerator not divisible by the Alexander polynomial".into()))
}

/// The pairing value from the chain-level definition, reduced modulo `Δ`.
pub fn blanchfield_from_definition(p: &TorusParams) -> Result<ZPoly> {
    let delta = alexander_polynomial(p, DeltaRoute::ClosedForm)?;
    canonical_mod(&pairing_pipeline(p, &pd_classical(p).matrix)?, &delta)
}

/// `(t^{mn}B)^# - t^{mn}B`, checked against the factored right-hand side.
pub fn hermitian_defect(p: &TorusParams) -> Result<ZPoly> {
    let tb = b_function(p)?.shift(2 * p.mn());
    let lhs = &tb.sharp() - &tb;
    let delta = alexander_polynomial(p, DeltaRoute::ClosedForm)?;
    let diff = &t(p.m) - &t(p.n);
    let num = &(&(&delta * &one_minus(p.r * p.m)) * &one_minus(p.s * p.n)) * &(&diff * &diff);
    let rhs = num.exact_div(&one_minus(1)).map_err(|_| Error::HermitianDefect)?.shift(-2 * (p.m + p.n));
    if lhs != rhs {
        return Err(Error::HermitianDefect);
    }
    Ok(lhs)
}

#[derive(Clone, Debug, PartialEq)]
pub struct InverseWitness {
    pub element: ZPoly,
    pub inverse: QPoly,
    pub integral: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct UnitReport {
    /// `t^n - t^m`, the determinant of the cochain basis.
    pub basis_det: InverseWitness,
    /// The pairing value; invertibility means the form is nonsingular.
    pub gram: InverseWitness,
}

fn witness(e: &ZPoly, delta: &ZPoly) -> Result<InverseWitness> {
    let q = to_rat_poly(e);
    let d = to_rat_poly(delta);
    if !q.is_coprime(&d)? {
        return Err(Error::CoprimalityFailed);
    }
    let inverse = q.inverse_mod(&d)?.ok_or(Error::CoprimalityFailed)?;
    let integral = to_int_poly(&inverse).is_some();
    Ok(InverseWitness { element: e.clone(), inverse, integral })
}

pub fn basis_and_unit_checks(p: &TorusParams) -> Result<UnitReport> {
    let delta = alexander_polynomial(p, DeltaRoute::ClosedForm)?;
    Ok(UnitReport {
        basis_det: witness(&(&t(p.n) - &t(p.m)), &delta)?,
        gram: witness(&gram_closed_form(p)?, &delta)?,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalPresentation {
    pub params: TorusParams,
    pub delta: ZPoly,
    pub gram: ZPoly,
    pub b_poly: ZPoly,
}

pub fn classical_presentation(p: &TorusParams) -> Result<ClassicalPresentation> {
    Ok(ClassicalPresentation {
        params: *p,
        delta: alexander_polynomial(p, DeltaRoute::ClosedForm)?,
        gram: gram_closed_form(p)?,
        b_poly: b_function(p)?,
    })
}

/// `a = ±t^k b` in `Λ/(Δ)` for some `k`; `t^period = 1` there.
pub fn equal_up_to_unit_mod(a: &ZPoly, b: &ZPoly, delta: &ZPoly, period: i64) -> Result<bool> {
    let target = canonical_mod(b, delta)?;
    let neg = target.neg_poly();
    for k in 0..period {
        let c = canonical_mod(&a.shift(2 * k), delta)?;
        if c == target || c == neg {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `Δ` and the pairing for `(m, n)` and `(n, m)` agree up to units.
pub fn swap_symmetry(p: &TorusParams) -> Result<(bool, bool)> {
    let q = TorusParams::new(p.n, p.m)?;
    let (a, b) = (classical_presentation(p)?, classical_presentation(&q)?);
    let delta_ok = a.delta.unit_equivalent(&b.delta);
    let gram_ok = equal_up_to_unit_mod(&a.gram, &b.gram, &a.delta, p.mn())?;
    Ok((delta_ok, gram_ok))
}

pub fn value_at_one(p: &ZPoly) -> BigInt {
    p.terms().iter().map(|(_, c)| c.clone()).sum()
}
