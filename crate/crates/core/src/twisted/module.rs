//! The twisted Alexander module over the local ring: `Θ`, the kernel and
//! image bases, and an independent computation of `H_1` from the complex.

use super::setting::{half_rf, one_minus_ct, rf, RMatrix, Setting};
use crate::algebra::germ::Valuation;
use crate::algebra::laurent::CPoly;
use crate::algebra::matrix::Matrix;
use crate::algebra::ratfunc::RatFunc;
use crate::algebra::ring::Ring;
use crate::algebra::snf::snf_dvr;
use crate::check::Check;
use crate::complex::representation::CMatrix;
use crate::error::{Error, Result};

/// `(I-P) + P (t^{-n} S_X X) P`.
pub fn theta(s: &Setting) -> CMatrix {
    let rep = s.rep();
    let inner = rep.t_half(-2 * s.params().n).mul_m(&s.data.sx).mul_m(&rep.x);
    s.i_minus_p().add_m(&s.p.mul_m(&inner).mul_m(&s.p))
}

/// `t^{n(1-m)}(1-t^n)^{m-1}`.
pub fn det_theta_formula(s: &Setting) -> CPoly {
    let (m, n) = (s.params().m, s.params().n);
    CPoly::t_pow(n * (1 - m)).mul_poly(&CPoly::one().sub_poly(&CPoly::t_pow(n)).pow((m - 1) as u64))
}

#[derive(Clone, Debug)]
pub struct DetReport {
    pub det: CPoly,
    pub literal: bool,
    /// Equality after the sign `(-1)^{n(m-1)}`.
    pub signed: bool,
    pub valuation: Option<i64>,
}

pub fn det_theta(s: &Setting) -> DetReport {
    let det = theta(s).det();
    let f = det_theta_formula(s);
    let (m, n) = (s.params().m, s.params().n);
    let sign = if (n * (m - 1)) % 2 == 0 { f.clone() } else { f.neg_poly() };
    DetReport {
        literal: det == f,
        signed: det == sign,
        valuation: s.center.valuation(&RatFunc::from_poly(det.clone())),
        det,
    }
}

/// The first block column of `d2`.
pub fn image_basis(s: &Setting) -> CMatrix {
    let rep = s.rep();
    let tn = rep.t_half(-2 * s.params().n);
    Matrix::vstack(&[
        tn.mul_m(&s.data.sx).mul_m(&rep.x),
        tn.mul_m(&s.data.sy).mul_m(&rep.y).neg_m(),
    ])
}

/// `J (I-P) + (W; -V(I-X^{-1})W) P`; `with_correction = false` drops the
/// `V` term, for negative controls.
pub fn kernel_basis(s: &Setting, with_correction: bool) -> RMatrix {
    let rep = s.rep();
    let m = s.dim();
    let j = rf(&image_basis(s)).mul_m(&rf(&s.i_minus_p()));
    let lower = if with_correction {
        s.v.mul_m(&rf(&(&rep.identity() - &rep.x_inv))).mul_m(&s.w).neg_m()
    } else {
        RMatrix::zeros(m, m)
    };
    let corr = Matrix::vstack(&[s.w.clone(), lower]).mul_m(&rf(&s.p));
    j.add_m(&corr)
}

pub fn kernel_image_transport(s: &Setting) -> Result<Vec<Check>> {
    transport_with(s, &kernel_basis(s, true))
}

pub fn transport_with(s: &Setting, k: &RMatrix) -> Result<Vec<Check>> {
    let m = s.dim();
    let cc = &s.data.complex;
    let j = image_basis(s);
    let mut out = vec![Check::flag("d1 K = 0", rf(&cc.d1).mul_m(k).is_zero())];
    let first = cc.d2.block(0, 0, 2 * m, m);
    out.push(Check::flag("J = d2 (I; 0)", first == j));
    out.push(Check::flag("K Theta = J", k.mul_m(&rf(&theta(s))) == rf(&j)));
    let snf = snf_dvr(k, &s.center, false)?;
    let full = snf.exponents.len() == m && snf.exponents.iter().all(|e| *e == Valuation::Finite(0));
    out.push(Check::new("K has full rank and primitive columns", full, format!("exponents {:?}", snf.finite())));
    Ok(out)
}

/// Elementary exponents of `Ker d1 / Im d2` computed from the complex alone.
pub fn h1_exponents(s: &Setting) -> Result<Vec<Valuation>> {
    let m = s.dim();
    let cc = &s.data.complex;
    let snf = snf_dvr(&rf(&cc.d1), &s.center, true)?;
    if snf.finite().len() != m {
        return Err(Error::PipelineInconsistency("d1 does not have rank m".into()));
    }
    let v_inv = snf.v_inv.expect("tracked");
    let coords = v_inv.mul_m(&rf(&cc.d2));
    if !coords.block(0, 0, m, 2 * m).is_zero() {
        return Err(Error::PipelineInconsistency("image of d2 leaves the kernel of d1".into()));
    }
    let img = coords.block(m, 0, m, 2 * m);
    Ok(snf_dvr(&img, &s.center, false)?.exponents)
}

/// `δ_m` as a rational function.
pub fn delta_m(m: i64) -> RatFunc {
    if m % 2 == 0 {
        let den = CPoly::half_pow(1).sub_poly(&CPoly::half_pow(-1));
        RatFunc::new(CPoly::one(), &den).expect("nonzero")
    } else {
        RatFunc::from_poly(CPoly::one())
    }
}

/// `t^{n(1-m)/2}(1-t^n)^{m-1} δ_m`.
pub fn delta_rho(s: &Setting) -> RatFunc {
    let (m, n) = (s.params().m, s.params().n);
    let one_tn = CPoly::one().sub_poly(&CPoly::t_pow(n)).pow((m - 1) as u64);
    half_rf(n * (1 - m)).mul_poly(&one_tn).mul_rf(&delta_m(m))
}

/// `(1-t^n)^{m-1} / ((1-t) Π (1 - z^{b_i} t))`.
pub fn ckp_closed_form(s: &Setting) -> Result<RatFunc> {
    let (m, n) = (s.params().m, s.params().n);
    let num = CPoly::one().sub_poly(&CPoly::t_pow(n)).pow((m - 1) as u64);
    let mut den = CPoly::one().sub_poly(&CPoly::t_pow(1));
    for &bi in &s.rep().b {
        den = den.mul_poly(&one_minus_ct(s.center.root(bi)));
    }
    RatFunc::new(num, &den)
}

#[derive(Clone, Debug)]
pub struct TwistedModule {
    pub theta: CMatrix,
    pub exponents: Vec<Valuation>,
    pub oracle_exponents: Vec<Valuation>,
    pub delta_rho: RatFunc,
    pub det: DetReport,
    pub checks: Vec<Check>,
}

pub fn twisted_module(s: &Setting) -> Result<TwistedModule> {
    let th = theta(s);
    let exponents = snf_dvr(&rf(&th), &s.center, false)?.exponents;
    let oracle_exponents = h1_exponents(s)?;
    if exponents != oracle_exponents {
        return Err(Error::ModuleOracleDisagreement);
    }
    let det = det_theta(s);
    let m = s.dim();
    let total: i64 = exponents
        .iter()
        .map(|e| match e {
            Valuation::Finite(v) => *v as i64,
            Valuation::Infinite => i64::MAX,
        })
        .sum();
    let mut checks = vec![Check::new(
        "SNF of Theta matches H1 from the complex",
        true,
        format!("exponents {}", fmt_exps(&exponents)),
    )];
    checks.push(Check::new(
        "exponent sum equals valuation of det Theta",
        det.valuation == Some(total),
        format!("sum {total}, valuation {:?}", det.valuation),
    ));
    let delta = delta_rho(s);
    if s.generic {
        checks.push(Check::new(
            "exponent sum is m-1",
            total == m as i64 - 1,
            format!("sum {total}"),
        ));
        checks.push(Check::new(
            "det Theta = (-1)^{n(m-1)} t^{n(1-m)}(1-t^n)^{m-1}",
            det.signed,
            if det.literal { "exact, sign +1".to_string() } else { "exact up to the sign".to_string() },
        ));
        let ckp = ckp_closed_form(s)?;
        checks.push(Check::flag("Delta^rho unit-equivalent to the CKP form", s.center.unit_equivalent(&delta, &ckp)));
    }
    Ok(TwistedModule { theta: th, exponents, oracle_exponents, delta_rho: delta, det, checks })
}

pub fn fmt_exps(e: &[Valuation]) -> String {
    let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(","))
}
