//! The local twisted Blanchfield pairing, assembled from the Bockstein and
//! duality bases, and its Hermitian defect.

use super::module::{delta_m, delta_rho};
use super::setting::{half_rf, rf, RMatrix, Setting};
use crate::algebra::germ::Jet;
use crate::algebra::laurent::CPoly;
use crate::algebra::matrix::Matrix;
use crate::algebra::ratfunc::RatFunc;
use crate::algebra::ring::Ring;
use crate::check::Check;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct TwistedPairing {
    /// `t^n Ψ`.
    pub gram: RMatrix,
    /// Row-major jets of order `m-1`.
    pub gram_jets: Vec<Vec<Jet>>,
    pub checks: Vec<Check>,
}

/// `(I; -t^{-n}(I-M)^{-1}(I-X^s))`.
pub fn h2_basis(s: &Setting) -> RMatrix {
    let rep = s.rep();
    let m = s.dim();
    let n = s.params().n;
    let lower = rf(&(&rep.identity() - &rep.x_pow(s.params().s)))
        .scale(&half_rf(-2 * n))
        .neg_m();
    let lower = s.data.i_minus_mu_inv.mul_m(&lower);
    Matrix::vstack(&[RMatrix::identity(m), lower])
}

/// `t^{n(1-m)/2} δ_m adj(S_X)`.
pub fn bockstein_block(s: &Setting) -> RMatrix {
    let (m, n) = (s.params().m, s.params().n);
    rf(&s.data.sx.adjugate()).scale(&half_rf(n * (1 - m)).mul_rf(&delta_m(m)))
}

/// The duality basis of `Ker d1`.
pub fn twi1_basis(s: &Setting) -> RMatrix {
    let rep = s.rep();
    let p = s.params();
    let id = rep.identity();
    let inv = &s.data.i_minus_mu_inv;
    let gxs = rep.x.mul_m(&rep.x.geometric_quotient(p.s).expect("invertible")).mul_m(&rep.y_pow(p.r));
    let top = rf(&gxs).mul_m(inv).mul_m(&rf(&(&id - &rep.y_pow(-p.r))));
    let gyr = rep.y.mul_m(&rep.y.geometric_quotient(p.r).expect("invertible"));
    let bottom = rf(&gyr).mul_m(inv).mul_m(&rf(&(&id - &rep.x_pow(p.s))));
    Matrix::vstack(&[top, bottom])
}

/// `(I-X^{-s})(I-M^{-1})^{-1}(I-Y^{-r})`.
fn core_product(s: &Setting) -> RMatrix {
    let rep = s.rep();
    let p = s.params();
    let id = rep.identity();
    rf(&(&id - &rep.x_pow(-p.s))).mul_m(&s.data.i_minus_mu_inv_inv).mul_m(&rf(&(&id - &rep.y_pow(-p.r))))
}

/// `t^n Ψ`.
pub fn gram_closed_form(s: &Setting) -> RMatrix {
    let (m, n) = (s.params().m, s.params().n);
    let one_tn = CPoly::one().sub_poly(&CPoly::t_pow(n)).pow((m - 2) as u64);
    let c = half_rf(n * (1 - m) + 2 * n).mul_poly(&one_tn).mul_rf(&delta_m(m));
    core_product(s).scale(&c)
}

fn require_generic(s: &Setting) -> Result<()> {
    if !s.generic {
        return Err(Error::NonGeneric);
    }
    if !s.center.is_unit(&RatFunc::from_poly(s.data.det_i_minus_mu.clone())) {
        return Err(Error::NonUnitGerm);
    }
    Ok(())
}

pub fn pairing_assembly(s: &Setting) -> Result<TwistedPairing> {
    require_generic(s)?;
    let rep = s.rep();
    let p = s.params();
    let m = s.dim();
    let cc = &s.data.complex;
    let mut checks = Vec::new();
    let h2 = h2_basis(s);

    checks.push(Check::flag("step 1: d3^#T (I; -t^-n (I-M)^-1 (I-X^s)) = 0", rf(&cc.d3).sharp_t().mul_m(&h2).is_zero()));

    let gq_s = rep.x.geometric_quotient(p.s)?;
    let one_tn = CPoly::one().sub_poly(&CPoly::t_pow(p.n)).pow((p.m - 2) as u64);
    let adj_lhs = gq_s.mul_m(&s.data.sx.adjugate());
    let adj_rhs = (&rep.identity() - &rep.x_pow(p.s)).scale(&one_tn);
    checks.push(Check::flag("step 2: adjugate identity", adj_lhs == adj_rhs));

    let a = bockstein_block(s);
    let a0 = Matrix::vstack(&[a.clone(), RMatrix::zeros(m, m)]);
    let dr_inv = delta_rho(s).inv()?;
    let bock = rf(&cc.d2).sharp_t().mul_m(&a0).scale(&dr_inv);
    checks.push(Check::flag("step 3: Bockstein identity", bock == h2));

    let b = twi1_basis(s);
    let in_ker = rf(&cc.d1).mul_m(&b).is_zero();
    let pd_maps = rf(&s.data.pd).mul_m(&h2) == b;
    checks.push(Check::flag("step 4: duality basis lies in Ker d1 and is PD of the H2 basis", in_ker && pd_maps));

    let product = a.sharp_t().mul_m(&b.block(0, 0, m, m));
    let gram = gram_closed_form(s);
    checks.push(Check::flag("step 5: product equals t^n Psi", product == gram));

    let d = m - 1;
    let jets: Result<Vec<Jet>> = gram.entries().iter().map(|e| s.center.jet(e, d)).collect();
    let jets = jets.ok();
    checks.push(Check::flag("step 6: entries are germs with jets of order m-1", jets.is_some()));
    let gram_jets = jets.map(|j| j.chunks(m).map(|r| r.to_vec()).collect()).unwrap_or_default();
    Ok(TwistedPairing { gram, gram_jets, checks })
}

pub fn hermitian_defect_twisted(s: &Setting) -> Result<Vec<Check>> {
    require_generic(s)?;
    let rep = s.rep();
    let p = s.params();
    let id = rep.identity();
    let core = core_product(s);
    let other = rf(&(&id - &rep.y_pow(p.r)))
        .mul_m(&s.data.i_minus_mu_inv)
        .mul_m(&rf(&(&id - &rep.x_pow(p.s))))
        .neg_m();
    let mut out = vec![Check::flag("(I-X^-s)(I-M^-1)^-1(I-Y^-r) = -(I-Y^r)(I-M)^-1(I-X^s)", core == other)];
    let gram = gram_closed_form(s);
    let psi = gram.scale(&half_rf(-2 * p.n));
    out.push(Check::flag("(t^n Psi)^#T = Psi", gram.sharp_t() == psi));
    let defect = gram.sharp_t().sub_m(&gram);
    let dr = delta_rho(s);
    out.push(Check::flag("defect = Delta^rho (I-X^-s)(I-M^-1)^-1(I-Y^-r)", defect == core.scale(&dr)));
    let d = s.dim() - 1;
    let mut min_val = i64::MAX;
    let mut jets_zero = true;
    for e in defect.entries() {
        if let Some(v) = s.center.valuation(e) {
            min_val = min_val.min(v);
        }
        jets_zero &= s.center.jet(e, d).map(|j| j.is_zero()).unwrap_or(false);
    }
    out.push(Check::new(
        "defect vanishes modulo Delta^rho",
        min_val >= d as i64 && jets_zero,
        if min_val == i64::MAX { "defect is zero".to_string() } else { format!("minimal valuation {min_val}") },
    ));
    if out.iter().any(|c| !c.pass) {
        return Err(Error::TwistedHermitian);
    }
    Ok(out)
}
