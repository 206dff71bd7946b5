//! The three commands: a single torus knot, a single metabelian setting, and
//! the sweep over the acceptance grid.

use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};
use torspair_core::algebra::ring::Ring;
use torspair_core::algebra::text::z_header;
use torspair_core::check::{all_pass, failures};
use torspair_core::classical::*;
use torspair_core::complex::chain::{classical_closed_form, complex_from_fox, same_matrices, verify_complex};
use torspair_core::complex::duality::{pd_classical, pd_from_cap};
use torspair_core::complex::representation::abelianization_rep;
use torspair_core::twisted::module::fmt_exps;
use torspair_core::twisted::report::{verify_character, verify_setting};
use torspair_core::twisted::setting::{CharacterData, Setting};
use torspair_core::twisted::sweep::{character_grid, DEFAULT_CAP, DEFAULT_MS, DEFAULT_NS};
use torspair_core::{Check, Error, TorusParams, ZPoly};

use crate::codec::{jet_json, matrix_json, poly_json, ratfunc_json};
use crate::latex;
use crate::report::{Artifact, RunReport};
use crate::CliError;

/// Deliberate corruption used by negative-control tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Adds one to an entry of the closed-form second boundary map.
    D2,
}

impl std::str::FromStr for Fault {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Fault, CliError> {
        match s {
            "d2" => Ok(Fault::D2),
            other => Err(CliError::Usage(format!("unknown fault {other:?}"))),
        }
    }
}

fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn check_of<T>(name: &str, r: torspair_core::Result<T>, f: impl FnOnce(T) -> (bool, String)) -> Check {
    match r {
        Ok(v) => {
            let (pass, detail) = f(v);
            Check::new(name, pass, detail)
        }
        Err(e) => Check::new(name, false, e.to_string()),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// The classical check suite for one pair.
pub fn classical_checks(p: &TorusParams, fault: Option<Fault>) -> Vec<Check> {
    let mut out = vec![Check::flag("taut identity is trivial in the free group", p.taut_identity().verify(p))];
    let mut cf = classical_closed_form(p);
    if fault == Some(Fault::D2) {
        let bumped = &cf.d2[(0, 1)] + &ZPoly::one();
        cf.d2[(0, 1)] = bumped;
    }
    let rep = abelianization_rep(p).expect("monomial images are invertible");
    out.push(Check::flag("Fox complex equals closed form", same_matrices(&complex_from_fox(&rep, p), &cf)));
    let r = verify_complex(&cf);
    out.push(Check::flag("d1 d2 = 0", r.d1d2_zero));
    out.push(Check::flag("d2 d3 = 0", r.d2d3_zero));

    let closed = alexander_polynomial(p, DeltaRoute::ClosedForm);
    let from_cx = alexander_polynomial(p, DeltaRoute::FromComplex);
    out.push(match (&closed, &from_cx) {
        (Ok(a), Ok(b)) => Check::new(
            "Alexander polynomial: closed form and complex agree up to units",
            a.unit_equivalent(b),
            format!("Delta = {a}"),
        ),
        (Err(e), _) | (_, Err(e)) => Check::new("Alexander polynomial", false, e.to_string()),
    });
    if let Ok(d) = &closed {
        out.push(Check::new(
            "Alexander polynomial symmetric with value 1 at t = 1",
            d.sharp() == *d && value_at_one(d) == 1.into(),
            format!("Delta(1) = {}", value_at_one(d)),
        ));
    }
    let gram = gram_closed_form(p);
    out.push(check_of("pairing from the definition equals t^mn B mod Delta", blanchfield_from_definition(p), |v| {
        match &gram {
            Ok(g) => (v == *g, format!("value {v}")),
            Err(e) => (false, e.to_string()),
        }
    }));
    out.push(check_of("Hermitian defect identity", hermitian_defect(p), |_| (true, "exact equality".into())));
    if let (Ok(g), Ok(d)) = (&gram, &closed) {
        out.push(check_of("pairing is Hermitian mod Delta", canonical_mod(&g.sharp(), d), |s| {
            (s == *g, "gram^# = gram".into())
        }));
    }
    match basis_and_unit_checks(p) {
        Ok(u) => {
            out.push(Check::new(
                "t^n - t^m invertible mod Delta",
                true,
                format!("inverse {}; integral: {}", u.basis_det.inverse, yes_no(u.basis_det.integral)),
            ));
            out.push(Check::new(
                "pairing value invertible mod Delta",
                true,
                format!("inverse {}; integral: {}", u.gram.inverse, yes_no(u.gram.integral)),
            ));
        }
        Err(e) => out.push(Check::new("units modulo Delta", false, e.to_string())),
    }
    out.push(cap_check(p));
    out.push(check_of("swap symmetry (m, n) <-> (n, m)", swap_symmetry(p), |(d, g)| {
        (d && g, format!("Delta: {}, pairing: {}", yes_no(d), yes_no(g)))
    }));
    out
}

/// Entrywise comparison, falling back to equality of the induced pairing.
fn cap_check(p: &TorusParams) -> Check {
    let name = "cap-product duality matrix";
    let rep = abelianization_rep(p).expect("monomial images are invertible");
    let cap = pd_from_cap(&p.taut_identity(), &rep).matrix;
    if cap == pd_classical(p).matrix {
        return Check::new(name, true, "equals the closed form entrywise");
    }
    let via_cap = pairing_pipeline(p, &cap).and_then(|v| {
        let d = alexander_polynomial(p, DeltaRoute::ClosedForm)?;
        canonical_mod(&v, &d)
    });
    match (via_cap, gram_closed_form(p)) {
        (Ok(a), Ok(b)) => Check::new(name, a == b, "entrywise mismatch; induced pairings compared"),
        (Err(e), _) | (_, Err(e)) => Check::new(name, false, e.to_string()),
    }
}

pub fn run_classical(m: i64, n: i64, fault: Option<Fault>) -> Result<RunReport, CliError> {
    let p = TorusParams::new(m, n).map_err(usage)?;
    let mut rep = RunReport::new("classical");
    rep.param("m", json!(m));
    rep.param("n", json!(n));
    rep.param("r", json!(p.r));
    rep.param("s", json!(p.s));
    let pres = classical_presentation(&p)?;
    let g2 = p.genus();
    let mn = p.mn();
    rep.artifacts.push(
        Artifact::new("delta", poly_json(&pres.delta), pres.delta.to_string()).with_latex(format!(
            "t^{{{}}}\\frac{{(1-t)(1-t^{{{mn}}})}}{{(1-t^{{{m}}})(1-t^{{{n}}})}} = {}",
            -g2,
            latex::poly(&pres.delta)
        )),
    );
    let ball = (m + 1) * (n + 1);
    let bexp = if ball % 2 == 0 { format!("{}", -ball / 2) } else { format!("-{ball}/2") };
    rep.artifacts.push(
        Artifact::new("bPoly", poly_json(&pres.b_poly), pres.b_poly.to_string()).with_latex(format!(
            "t^{{{bexp}}}\\left(1-t^{{{}}}\\right)\\left(1-t^{{{}}}\\right)\\frac{{(t^{{{m}}}-t^{{{n}}})^2}}{{(1-t^{{{m}}})(1-t^{{{n}}})}} = {}",
            m * p.r,
            n * p.s,
            latex::poly(&pres.b_poly)
        )),
    );
    let tb = pres.b_poly.shift(2 * mn);
    rep.artifacts.push(Artifact::new("tmnB", poly_json(&tb), tb.to_string()).with_latex(latex::poly(&tb)));
    rep.artifacts
        .push(Artifact::new("gram", poly_json(&pres.gram), pres.gram.to_string()).with_latex(latex::poly(&pres.gram)));
    let pd = pd_classical(&p).matrix;
    rep.artifacts.push(
        Artifact::new("pd", matrix_json(&pd, poly_json), format!("{pd}")).with_latex(latex::matrix(&pd, latex::poly)),
    );
    rep.checks = classical_checks(&p, fault);
    Ok(rep)
}

fn settings_for(data: &Arc<CharacterData>) -> Vec<Setting> {
    let n = data.rep.params.n;
    (1..n).filter_map(|a| Setting::new(data.clone(), a).ok()).collect()
}

pub fn run_twisted(m: i64, n: i64, b: &[i64], a: i64) -> Result<RunReport, CliError> {
    let p = TorusParams::new(m, n).map_err(usage)?;
    let data = CharacterData::new(&p, b).map_err(usage)?;
    let s = Setting::new(Arc::new(data), a).map_err(usage)?;
    let mut rep = RunReport::new("twisted");
    rep.param("m", json!(m));
    rep.param("n", json!(n));
    rep.param("b", json!(s.rep().b));
    rep.param("a", json!(s.a));
    rep.param("generic", json!(s.generic));
    rep.z_definition = Some(z_header(n as u32).trim_start_matches("z := ").to_string());
    let mrep = s.rep();
    let cpoly = |c: &torspair_core::CPoly| poly_json(c);
    rep.artifacts.push(
        Artifact::new("X", matrix_json(&mrep.x, cpoly), format!("{}", mrep.x)).with_latex(latex::matrix(&mrep.x, latex::poly)),
    );
    rep.artifacts.push(
        Artifact::new("Y", matrix_json(&mrep.y, cpoly), format!("{}", mrep.y)).with_latex(latex::matrix(&mrep.y, latex::poly)),
    );
    let mut checks = verify_character(&s.data);
    let r = verify_setting(&s);
    checks.extend(r.checks);
    if let Some(md) = &r.module {
        rep.artifacts.push(
            Artifact::new("theta", matrix_json(&md.theta, cpoly), format!("{}", md.theta))
                .with_latex(latex::matrix(&md.theta, latex::poly)),
        );
        let exps: Vec<Value> = md.exponents.iter().map(|e| json!(e.to_string())).collect();
        rep.artifacts.push(Artifact::new("snfExponents", Value::Array(exps), fmt_exps(&md.exponents)));
        rep.artifacts.push(
            Artifact::new("detTheta", poly_json(&md.det.det), md.det.det.to_string()).with_latex(latex::poly(&md.det.det)),
        );
        rep.artifacts.push(
            Artifact::new("deltaRho", ratfunc_json(&md.delta_rho), md.delta_rho.to_string())
                .with_latex(latex::ratfunc(&md.delta_rho)),
        );
    }
    match &r.pairing {
        Some(pr) => {
            rep.artifacts.push(
                Artifact::new("gram", matrix_json(&pr.gram, ratfunc_json), format!("{}", pr.gram))
                    .with_latex(latex::matrix(&pr.gram, latex::ratfunc)),
            );
            let jets: Vec<Value> =
                pr.gram_jets.iter().map(|row| Value::Array(row.iter().map(jet_json).collect())).collect();
            let text: Vec<String> =
                pr.gram_jets.iter().map(|row| row.iter().map(|j| j.to_string()).collect::<Vec<_>>().join("; ")).collect();
            rep.artifacts.push(Artifact::new("gramJets", Value::Array(jets), format!("[{}]", text.join(" | "))));
        }
        None => {
            let reason = if s.generic { "pairing assembly failed" } else { "skipped: non-generic a" };
            rep.artifacts.push(Artifact::new("pairing", json!(reason), reason));
        }
    }
    rep.checks = checks;
    Ok(rep)
}

fn summarize(name: String, checks: &[Check], count: &str) -> Check {
    if all_pass(checks) {
        Check::new(name, true, format!("{} checks passed{count}", checks.len()))
    } else {
        let mut f: Vec<&str> = failures(checks);
        f.dedup();
        Check::new(name, false, format!("failed: {}", f.join("; ")))
    }
}

/// Classical suite for coprime `2 <= m, n <= max`; the twisted grid
/// restricted to `m, n <= max`.
pub fn run_sweep(max: i64, fault: Option<Fault>) -> Result<RunReport, CliError> {
    if max < 2 {
        return Err(CliError::Usage("--max must be at least 2".into()));
    }
    let mut rep = RunReport::new("verify");
    rep.param("max", json!(max));
    let pairs: Vec<TorusParams> =
        (2..=max).flat_map(|m| (2..=max).filter_map(move |n| TorusParams::new(m, n).ok())).collect();
    let classical: Vec<Check> = pairs
        .par_iter()
        .map(|p| summarize(format!("classical {p}"), &classical_checks(p, fault), ""))
        .collect();
    let ms: Vec<i64> = DEFAULT_MS.iter().copied().filter(|&m| m <= max).collect();
    let ns: Vec<i64> = DEFAULT_NS.iter().copied().filter(|&n| n <= max).collect();
    let grid = character_grid(&ms, &ns, DEFAULT_CAP);
    let per_char: Vec<(i64, i64, Vec<Check>, usize, usize)> = grid
        .par_iter()
        .map(|(m, n, b)| {
            let p = TorusParams::new(*m, *n).expect("grid pairs are coprime");
            let label = format!("{p} b={b:?}");
            let mut checks = Vec::new();
            let (mut settings, mut generic) = (0, 0);
            match CharacterData::new(&p, b) {
                Ok(data) => {
                    let data = Arc::new(data);
                    checks.extend(verify_character(&data).into_iter().map(|c| tag(c, &label)));
                    for s in settings_for(&data) {
                        let r = verify_setting(&s);
                        settings += 1;
                        generic += usize::from(r.generic);
                        checks.extend(r.checks.into_iter().map(|c| tag(c, &r.label)));
                    }
                }
                Err(e) => checks.push(Check::new(label, false, e.to_string())),
            }
            (*m, *n, checks, settings, generic)
        })
        .collect();
    let mut twisted = Vec::new();
    let (mut total_settings, mut total_generic) = (0, 0);
    for &m in &ms {
        for &n in &ns {
            let fam: Vec<_> = per_char.iter().filter(|(a, b, ..)| (*a, *b) == (m, n)).collect();
            if fam.is_empty() {
                continue;
            }
            let checks: Vec<Check> = fam.iter().flat_map(|f| f.2.iter().cloned()).collect();
            let settings: usize = fam.iter().map(|f| f.3).sum();
            let generic: usize = fam.iter().map(|f| f.4).sum();
            total_settings += settings;
            total_generic += generic;
            let count = format!(" over {} characters, {settings} settings ({generic} generic)", fam.len());
            twisted.push(summarize(format!("twisted T({m}, {n})"), &checks, &count));
        }
    }
    rep.checks = classical.into_iter().chain(twisted).collect();
    rep.artifacts.push(Artifact::new("classicalPairs", json!(pairs.len()), pairs.len().to_string()));
    rep.artifacts.push(Artifact::new("characters", json!(grid.len()), grid.len().to_string()));
    rep.artifacts.push(Artifact::new("settings", json!(total_settings), total_settings.to_string()));
    rep.artifacts.push(Artifact::new("genericSettings", json!(total_generic), total_generic.to_string()));
    Ok(rep)
}

fn tag(mut c: Check, label: &str) -> Check {
    c.name = format!("{label}: {}", c.name);
    c
}
