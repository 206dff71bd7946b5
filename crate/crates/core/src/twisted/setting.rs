//! Metabelian settings localized at `t = z_n^a`, the projection `P` and the
//! auxiliary matrices `V`, `W`.

use std::sync::Arc;

use crate::algebra::cyclotomic::CycNumber;
use crate::algebra::germ::{Center, Valuation};
use crate::algebra::laurent::CPoly;
use crate::algebra::matrix::Matrix;
use crate::algebra::ratfunc::RatFunc;
use crate::algebra::ring::Ring;
use crate::algebra::snf::snf_dvr;
use crate::check::Check;
use crate::complex::chain::{to_fraction_matrix, twisted_closed_form, ChainComplex};
use crate::complex::duality::pd_twisted;
use crate::complex::representation::{CMatrix, Metabelian};
use crate::error::{Error, Result};
use crate::fox::torus::TorusParams;

pub type RMatrix = Matrix<RatFunc>;

pub fn rf(m: &CMatrix) -> RMatrix {
    to_fraction_matrix(m)
}

/// Everything that depends on `(m, n, b)` but not on `a`.
#[derive(Clone, Debug)]
pub struct CharacterData {
    pub rep: Metabelian,
    pub complex: ChainComplex<CPoly>,
    pub pd: CMatrix,
    /// `(I - X^m)/(I - X)` and `(I - Y^n)/(I - Y)`.
    pub sx: CMatrix,
    pub sy: CMatrix,
    pub det_i_minus_mu: CPoly,
    pub i_minus_mu_inv: RMatrix,
    pub i_minus_mu_inv_inv: RMatrix,
}

impl CharacterData {
    pub fn new(p: &TorusParams, b: &[i64]) -> Result<CharacterData> {
        let rep = Metabelian::new(p, b)?;
        let complex = twisted_closed_form(&rep);
        let pd = pd_twisted(&rep).matrix;
        let sx = rep.x.geometric_quotient(p.m)?;
        let sy = rep.y.geometric_quotient(p.n)?;
        let id = rep.identity();
        let i_mu = &id - &rep.mu;
        let det_i_minus_mu = i_mu.det();
        let i_minus_mu_inv = rf(&i_mu).inverse()?;
        let i_minus_mu_inv_inv = rf(&(&id - &rep.mu_inv)).inverse()?;
        Ok(CharacterData { rep, complex, pd, sx, sy, det_i_minus_mu, i_minus_mu_inv, i_minus_mu_inv_inv })
    }
}

#[derive(Clone, Debug)]
pub struct Setting {
    pub data: Arc<CharacterData>,
    pub a: i64,
    pub center: Center,
    /// `a` avoids `-b_1, ..., -b_m`.
    pub generic: bool,
    pub p: CMatrix,
    pub v: RMatrix,
    pub w: RMatrix,
}

pub fn build_setting(m: i64, n: i64, b: &[i64], a: i64) -> Result<Setting> {
    let p = TorusParams::new(m, n)?;
    Setting::new(Arc::new(CharacterData::new(&p, b)?), a)
}

impl Setting {
    pub fn new(data: Arc<CharacterData>, a: i64) -> Result<Setting> {
        let params = data.rep.params;
        let n = params.n;
        let a = a.rem_euclid(n);
        if a == 0 {
            return Err(Error::InvalidParameters("a must be nonzero modulo n".into()));
        }
        let center = Center::new(n as u32, a);
        let flags: Vec<bool> = data.rep.b.iter().map(|bi| (a + bi) % n != 0).collect();
        let generic = flags.iter().all(|&f| f);
        let p = Matrix::diag(flags.iter().map(|&f| if f { CPoly::one() } else { CPoly::zero() }).collect());
        let id = data.rep.identity();
        let v_base = &id - &p.mul_m(&data.rep.y_inv);
        if !center.is_unit(&RatFunc::from_poly(v_base.det())) {
            return Err(Error::NonUnitGerm);
        }
        let v = rf(&v_base).inverse()?;
        let w_base = &id - &(&id - &p).mul_m(&data.rep.x_inv);
        if !center.is_unit(&RatFunc::from_poly(w_base.det())) {
            return Err(Error::NonUnitGerm);
        }
        let w = rf(&w_base).inverse()?;
        Ok(Setting { data, a, center, generic, p, v, w })
    }

    pub fn params(&self) -> &TorusParams {
        &self.data.rep.params
    }

    pub fn rep(&self) -> &Metabelian {
        &self.data.rep
    }

    pub fn dim(&self) -> usize {
        self.data.rep.dim()
    }

    pub fn rank_p(&self) -> usize {
        (0..self.dim()).filter(|&i| self.p[(i, i)].is_one()).count()
    }

    pub fn i_minus_p(&self) -> CMatrix {
        &self.data.rep.identity() - &self.p
    }

    pub fn label(&self) -> String {
        let b: Vec<String> = self.data.rep.b.iter().map(|v| v.to_string()).collect();
        format!("{}, b=({}), a={}", self.params(), b.join(","), self.a)
    }
}

/// Scalar `t^{k/2}` as a rational function.
pub fn half_rf(doubled: i64) -> RatFunc {
    RatFunc::from_poly(CPoly::half_pow(doubled))
}

pub fn scalar_rf(dim: usize, c: RatFunc) -> RMatrix {
    Matrix::scalar(dim, c)
}

/// `1 - c t` for a constant `c`.
pub fn one_minus_ct(c: CycNumber) -> CPoly {
    CPoly::one().sub_poly(&CPoly::monomial(c, 2))
}

fn germ_rank(a: &RMatrix, center: &Center) -> Result<usize> {
    let snf = snf_dvr(a, center, false)?;
    Ok(snf.exponents.iter().filter(|e| matches!(e, Valuation::Finite(_))).count())
}

/// Exact checks of the projection and of the identities satisfied by `V`
/// and `W`, plus the kernel generation statement for `(I-P)(I-X^{-1})`.
pub fn verify_structure_lemmas(s: &Setting) -> Result<Vec<Check>> {
    verify_structure_with(s, &s.w)
}

/// As [`verify_structure_lemmas`] with `W` replaced, for negative controls.
pub fn verify_structure_with(s: &Setting, w: &RMatrix) -> Result<Vec<Check>> {
    let rep = s.rep();
    let m = s.dim();
    let id = rep.identity();
    let rid = RMatrix::identity(m);
    let p = &s.p;
    let ip = s.i_minus_p();
    let (rp, rip) = (rf(p), rf(&ip));
    let mut out = Vec::new();

    let proj = p.mul_m(p) == *p && ip.mul_m(&ip) == ip && p.mul_m(&ip).is_zero() && ip.mul_m(p).is_zero();
    out.push(Check::flag("projection P", proj));

    let diag = [rf(&rep.y), rp.clone(), rf(&s.data.sy), s.v.clone()];
    let commute = diag.iter().all(|a| diag.iter().all(|b| a.mul_m(b) == b.mul_m(a)));
    out.push(Check::flag("Y, P, (I-Y^n)/(I-Y), V commute", commute));

    let det_v = (&id - &p.mul_m(&rep.y_inv)).det();
    let det_w = (&id - &ip.mul_m(&rep.x_inv)).det();
    out.push(Check::flag(
        "det(I-PY^-1), det(I-(I-P)X^-1) unit germs",
        s.center.is_unit(&RatFunc::from_poly(det_v)) && det_w.is_one(),
    ));

    let lhs = (&rid - &rf(&rep.y_inv)).mul_m(&s.v);
    let rhs = &rid - &rip.mul_m(&rf(&rep.y_inv));
    out.push(Check::flag("(I-Y^-1)V = I-(I-P)Y^-1", lhs == rhs));
    out.push(Check::flag("(I-P) = (I-P)V", rip.mul_m(&s.v) == rip));

    let n = s.params().n;
    let root = s.center.root(-s.a);
    let lin = one_minus_ct(root);
    let one_tn = CPoly::one().sub_poly(&CPoly::t_pow(n));
    let quot = RatFunc::new(one_tn.clone(), &lin)?;
    out.push(Check::flag("(1-t^n)/(1-z^-a t) unit germ", s.center.is_unit(&quot) && quot.as_poly().is_some()));
    let f = RatFunc::new(lin, &one_tn)?;
    let lhs = rf(&s.data.sy).mul_m(&rip).scale(&f);
    out.push(Check::flag("(1-z^-a t)/(1-t^n) (I-Y^n)/(I-Y) (I-P) = I-P", lhs == rip));

    let ix = rf(&(&id - &rep.x_inv));
    out.push(Check::flag("(I-P)(I-X^-1)W = I-P", rip.mul_m(&ix).mul_m(w) == rip));
    out.push(Check::flag("PW = P", rp.mul_m(w) == rp));
    let sxxp = rf(&s.data.sx.mul_m(&rep.x).mul_m(p));
    out.push(Check::flag("S_X X P = W P S_X X P", w.mul_m(&rp).mul_m(&sxxp) == sxxp));

    // kernel of (I-P)(I-X^-1) is spanned by the columns of WP
    let a = rip.mul_m(&ix);
    let in_kernel = a.mul_m(w).mul_m(&rp).is_zero();
    let w_unimodular = s.center.is_unit(&w.det());
    let rank = germ_rank(&a, &s.center)?;
    out.push(Check::new(
        "Ker (I-P)(I-X^-1) generated by columns of WP",
        in_kernel && w_unimodular && m - rank == s.rank_p(),
        format!("kernel rank {} vs rank P {}", m - rank, s.rank_p()),
    ));
    Ok(out)
}
