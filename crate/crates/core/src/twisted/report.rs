//! Per-character and per-setting verification bundles.

use super::module::{twisted_module, TwistedModule};
use super::pairing::{hermitian_defect_twisted, pairing_assembly, TwistedPairing};
use super::setting::{rf, verify_structure_lemmas, CharacterData, Setting};
use crate::algebra::germ::Valuation;
use crate::algebra::snf::snf_dvr;
use crate::check::Check;
use crate::complex::chain::{complex_from_fox, same_matrices, verify_complex};
use crate::complex::duality::pd_from_cap;
use crate::error::Result;

/// Checks that do not depend on the center: both routes to the complex,
/// the chain condition, ranks, the defining relations and duality.
pub fn verify_character(data: &CharacterData) -> Vec<Check> {
    let rep = &data.rep;
    let p = &rep.params;
    let m = rep.dim();
    let mut out = vec![
        Check::flag("M = X^s Y^r, M^mn = Y^n = X^m = t^n I", rep.relations_hold()),
        Check::flag("unitarity on generators", rep.unitary_on_generators()),
    ];
    let fox = complex_from_fox(&rep.rep, p);
    out.push(Check::flag("Fox complex equals closed form", same_matrices(&fox, &data.complex)));
    let rpt = verify_complex(&data.complex);
    out.push(Check::flag("d1 d2 = 0", rpt.d1d2_zero));
    out.push(Check::flag("d2 d3 = 0", rpt.d2d3_zero));
    out.push(Check::new("ranks of d1, d2, d3 equal m", rpt.ranks_equal(m), format!("ranks {:?}", rpt.ranks)));
    let cap = pd_from_cap(&p.taut_identity(), &rep.rep);
    out.push(Check::flag("cap product equals closed-form duality matrix", cap.matrix == data.pd));
    out
}

fn from_result(name: &str, r: Result<Vec<Check>>) -> Vec<Check> {
    match r {
        Ok(c) => c,
        Err(e) => vec![Check::new(name, false, e.to_string())],
    }
}

/// `Ker d2 = Im d3` over the local ring.
pub fn exactness_at_c2(s: &Setting) -> Result<Check> {
    let m = s.dim();
    let cc = &s.data.complex;
    let d3 = snf_dvr(&rf(&cc.d3), &s.center, false)?;
    let d2 = snf_dvr(&rf(&cc.d2), &s.center, false)?;
    let primitive = d3.exponents.iter().all(|e| *e == Valuation::Finite(0));
    let rank2 = d2.finite().len();
    Ok(Check::new(
        "Ker d2 = Im d3 over the local ring",
        primitive && rank2 == m && cc.d2.mul_m(&cc.d3).is_zero(),
        format!("rank d2 {rank2}, d3 exponents {:?}", d3.finite()),
    ))
}

#[derive(Clone, Debug)]
pub struct SettingReport {
    pub label: String,
    pub generic: bool,
    pub checks: Vec<Check>,
    pub module: Option<TwistedModule>,
    pub pairing: Option<TwistedPairing>,
}

pub fn verify_setting(s: &Setting) -> SettingReport {
    let mut checks = from_result("structure lemmas", verify_structure_lemmas(s));
    checks.extend(from_result("kernel and image transport", super::module::kernel_image_transport(s)));
    checks.extend(from_result("exactness", exactness_at_c2(s).map(|c| vec![c])));
    let module = match twisted_module(s) {
        Ok(md) => {
            checks.extend(md.checks.iter().cloned());
            Some(md)
        }
        Err(e) => {
            checks.push(Check::new("SNF of Theta matches H1 from the complex", false, e.to_string()));
            None
        }
    };
    let mut pairing = None;
    if s.generic {
        match pairing_assembly(s) {
            Ok(pr) => {
                checks.extend(pr.checks.iter().cloned());
                pairing = Some(pr);
            }
            Err(e) => checks.push(Check::new("pairing assembly", false, e.to_string())),
        }
        checks.extend(from_result("twisted Hermitian identity", hermitian_defect_twisted(s)));
    }
    SettingReport { label: s.label(), generic: s.generic, checks, module, pairing }
}
