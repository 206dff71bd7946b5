//! End-to-end acceptance run: one line per criterion, nonzero exit on any
//! failure.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use torspair_core::algebra::germ::Valuation;
use torspair_core::algebra::ring::Ring;
use torspair_core::check::Check;
use torspair_core::classical::*;
use torspair_core::complex::chain::{classical_closed_form, complex_from_fox, same_matrices, verify_complex};
use torspair_core::complex::duality::{pd_classical, pd_from_cap};
use torspair_core::complex::representation::{abelianization_rep, int_poly};
use torspair_core::twisted::report::{verify_character, verify_setting, SettingReport};
use torspair_core::twisted::setting::{CharacterData, Setting};
use torspair_core::twisted::sweep::default_grid;
use torspair_core::TorusParams;

fn pairs(max: i64) -> Vec<TorusParams> {
    (2..=max).flat_map(|m| (2..=max).filter_map(move |n| TorusParams::new(m, n).ok())).collect()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome { pass: true, detail: detail.into() }
}

fn bad(detail: impl Into<String>) -> Outcome {
    Outcome { pass: false, detail: detail.into() }
}

fn from_failures(fails: Vec<String>, summary: String) -> Outcome {
    if fails.is_empty() {
        ok(summary)
    } else {
        let n = fails.len();
        let shown: Vec<_> = fails.into_iter().take(3).collect();
        bad(format!("{n} failures, e.g. {}", shown.join("; ")))
    }
}

fn c1() -> Outcome {
    let mut fails = Vec::new();
    let mut slowest = Duration::ZERO;
    let ps = pairs(9);
    for p in &ps {
        let t = Instant::now();
        let good = p.taut_identity().verify(p);
        let dt = t.elapsed();
        slowest = slowest.max(dt);
        if !good {
            fails.push(format!("{p}"));
        }
        if dt >= Duration::from_secs(1) {
            fails.push(format!("{p} took {dt:?}"));
        }
    }
    from_failures(fails, format!("{} pairs, slowest {slowest:?}", ps.len()))
}

/// One pass over the twisted grid; criteria 2, 3 and 8 to 11 read from it.
struct Grid {
    characters: Vec<(TorusParams, Vec<i64>, Vec<Check>)>,
    settings: Vec<(TorusParams, SettingReport)>,
    elapsed: Duration,
}

fn run_grid() -> Grid {
    let start = Instant::now();
    let mut characters = Vec::new();
    let mut settings = Vec::new();
    for (m, n, b) in default_grid() {
        let p = TorusParams::new(m, n).expect("grid pairs are coprime");
        let data = Arc::new(CharacterData::new(&p, &b).expect("grid characters are valid"));
        characters.push((p, b.clone(), verify_character(&data)));
        for a in 1..n {
            let s = Setting::new(data.clone(), a).expect("nonzero a");
            settings.push((p, verify_setting(&s)));
        }
    }
    Grid { characters, settings, elapsed: start.elapsed() }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Group {
    Route,
    Chain,
    Lemmas,
    Module,
    Order,
    Pairing,
}

fn group_of(name: &str) -> Group {
    match name {
        "Fox complex equals closed form" => Group::Route,
        "d1 d2 = 0" | "d2 d3 = 0" | "ranks of d1, d2, d3 equal m" => Group::Chain,
        "SNF of Theta matches H1 from the complex"
        | "exponent sum equals valuation of det Theta"
        | "exponent sum is m-1" => Group::Module,
        "Delta^rho unit-equivalent to the CKP form" => Group::Order,
        n if n.starts_with("step 5")
            || n.starts_with("step 6")
            || n.starts_with("(I-X^-s)")
            || n.starts_with("(t^n Psi)")
            || n.starts_with("defect")
            || n == "twisted Hermitian identity"
            || n == "pairing assembly" =>
        {
            Group::Pairing
        }
        _ => Group::Lemmas,
    }
}

fn grid_failures(g: &Grid, group: Group) -> (Vec<String>, usize) {
    let mut fails = Vec::new();
    let mut count = 0;
    for (p, b, cs) in &g.characters {
        for c in cs.iter().filter(|c| group_of(&c.name) == group) {
            count += 1;
            if !c.pass {
                fails.push(format!("{p} b={b:?}: {}", c.name));
            }
        }
    }
    for (_, r) in &g.settings {
        for c in r.checks.iter().filter(|c| group_of(&c.name) == group) {
            count += 1;
            if !c.pass {
                fails.push(format!("{}: {}", r.label, c.name));
            }
        }
    }
    (fails, count)
}

fn c2(g: &Grid) -> Outcome {
    let start = Instant::now();
    let mut fails = Vec::new();
    for p in pairs(7) {
        let rep = abelianization_rep(&p).expect("monomial images");
        if !same_matrices(&complex_from_fox(&rep, &p), &classical_closed_form(&p)) {
            fails.push(format!("classical {p}"));
        }
    }
    let (tf, count) = grid_failures(g, Group::Route);
    fails.extend(tf);
    let total = start.elapsed() + g.elapsed;
    if total >= Duration::from_secs(120) {
        fails.push(format!("took {total:?}"));
    }
    from_failures(fails, format!("{} classical pairs, {count} twisted characters", pairs(7).len()))
}

fn c3(g: &Grid) -> Outcome {
    let mut fails = Vec::new();
    for p in pairs(7) {
        let r = verify_complex(&classical_closed_form(&p));
        let rep = abelianization_rep(&p).expect("monomial images");
        let f = verify_complex(&complex_from_fox(&rep, &p));
        if !(r.d1d2_zero && r.d2d3_zero && f.d1d2_zero && f.d2d3_zero) {
            fails.push(format!("classical {p}"));
        }
    }
    let (tf, count) = grid_failures(g, Group::Chain);
    fails.extend(tf);
    from_failures(fails, format!("{} classical pairs, {count} twisted checks", pairs(7).len()))
}

fn c4() -> Outcome {
    let mut fails = Vec::new();
    for p in pairs(7) {
        match (alexander_polynomial(&p, DeltaRoute::ClosedForm), alexander_polynomial(&p, DeltaRoute::FromComplex)) {
            (Ok(a), Ok(b)) if a.unit_equivalent(&b) => {}
            _ => fails.push(format!("{p}")),
        }
    }
    let spots = [
        ((2, 3), int_poly(&[(1, 1), (0, -1), (-1, 1)])),
        ((2, 5), int_poly(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)])),
    ];
    for ((m, n), want) in spots {
        let p = TorusParams::new(m, n).unwrap();
        if alexander_polynomial(&p, DeltaRoute::FromComplex).ok() != Some(want) {
            fails.push(format!("spot value {p}"));
        }
    }
    from_failures(fails, format!("{} pairs and 2 spot values", pairs(7).len()))
}

fn c5() -> Outcome {
    let mut fails = Vec::new();
    for p in pairs(7) {
        // the pipeline errors out if the division by Delta is not exact
        match (blanchfield_from_definition(&p), gram_closed_form(&p)) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(_), Ok(_)) => fails.push(format!("{p}: values differ")),
            (Err(e), _) | (_, Err(e)) => fails.push(format!("{p}: {e}")),
        }
    }
    from_failures(fails, format!("{} pairs", pairs(7).len()))
}

fn c6() -> Outcome {
    let mut fails = Vec::new();
    for p in pairs(7) {
        let herm = hermitian_defect(&p).is_ok();
        let sym = match (gram_closed_form(&p), alexander_polynomial(&p, DeltaRoute::ClosedForm)) {
            (Ok(g), Ok(d)) => canonical_mod(&g.sharp(), &d).ok() == Some(g),
            _ => false,
        };
        if !(herm && sym) {
            fails.push(format!("{p}"));
        }
    }
    from_failures(fails, format!("{} pairs", pairs(7).len()))
}

fn c7() -> Outcome {
    let mut fails = Vec::new();
    for p in pairs(7) {
        let good = (|| {
            let delta = to_rat_poly(&alexander_polynomial(&p, DeltaRoute::ClosedForm).ok()?);
            let w = basis_and_unit_checks(&p).ok()?.basis_det;
            let prod = &to_rat_poly(&w.element) * &w.inverse;
            Some(prod.rem_window(&delta, delta.low()?).ok()?.is_one())
        })();
        if good != Some(true) {
            fails.push(format!("{p}"));
        }
    }
    from_failures(fails, format!("{} pairs, explicit inverses", pairs(7).len()))
}

fn c8(g: &Grid) -> Outcome {
    let (mut fails, count) = grid_failures(g, Group::Lemmas);
    if g.elapsed >= Duration::from_secs(600) {
        fails.push(format!("grid took {:?}", g.elapsed));
    }
    from_failures(fails, format!("{count} checks over {} settings in {:?}", g.settings.len(), g.elapsed))
}

fn c9(g: &Grid) -> Outcome {
    let (mut fails, count) = grid_failures(g, Group::Module);
    for (p, r) in &g.settings {
        match &r.module {
            Some(md) => {
                if md.exponents != md.oracle_exponents {
                    fails.push(format!("{}: exponents differ", r.label));
                }
                if r.generic {
                    let sum: Option<u32> = md
                        .exponents
                        .iter()
                        .map(|e| match e {
                            Valuation::Finite(v) => Some(*v),
                            Valuation::Infinite => None,
                        })
                        .sum();
                    if sum != Some((p.m - 1) as u32) {
                        fails.push(format!("{}: exponent sum {sum:?}", r.label));
                    }
                }
            }
            None => fails.push(format!("{}: no module", r.label)),
        }
    }
    let nongeneric = g.settings.iter().filter(|(_, r)| !r.generic).count();
    from_failures(fails, format!("{count} checks, {} settings ({nongeneric} non-generic)", g.settings.len()))
}

fn c10(g: &Grid) -> Outcome {
    let (mut fails, count) = grid_failures(g, Group::Order);
    let generic = g.settings.iter().filter(|(_, r)| r.generic).count();
    if count != generic {
        fails.push(format!("{count} checks for {generic} generic settings"));
    }
    from_failures(fails, format!("{count} generic settings"))
}

fn c11(g: &Grid) -> Outcome {
    let (mut fails, count) = grid_failures(g, Group::Pairing);
    let mut even = 0;
    for (p, r) in &g.settings {
        if r.generic {
            if r.pairing.is_none() {
                fails.push(format!("{}: no pairing", r.label));
            }
            if p.m % 2 == 0 && r.pairing.is_some() {
                even += 1;
            }
        }
    }
    if even == 0 {
        fails.push("no even-m generic setting".into());
    }
    from_failures(fails, format!("{count} checks, {even} even-m generic settings"))
}

fn c12() -> Outcome {
    let mut notes = Vec::new();
    let mut fails = Vec::new();
    for (m, n) in [(2, 3), (3, 4)] {
        let p = TorusParams::new(m, n).unwrap();
        let rep = abelianization_rep(&p).expect("monomial images");
        let cap = pd_from_cap(&p.taut_identity(), &rep).matrix;
        if cap == pd_classical(&p).matrix {
            notes.push(format!("{p} entrywise"));
            continue;
        }
        let via_cap = alexander_polynomial(&p, DeltaRoute::ClosedForm)
            .and_then(|d| canonical_mod(&pairing_pipeline(&p, &cap)?, &d));
        match (via_cap, gram_closed_form(&p)) {
            (Ok(a), Ok(b)) if a == b => notes.push(format!("{p} entrywise mismatch, pairing reproduced")),
            _ => fails.push(format!("{p}")),
        }
    }
    from_failures(fails, notes.join(", "))
}

fn c13() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_torspair");
    let run = |threads: Option<&str>| {
        let mut cmd = Command::new(bin);
        cmd.args(["verify", "--max", "5", "--format", "json"]);
        if let Some(t) = threads {
            cmd.env("RAYON_NUM_THREADS", t);
        }
        cmd.output()
    };
    let outs: Vec<_> = [None, None, Some("1"), Some("4")].into_iter().map(run).collect();
    let mut bodies = Vec::new();
    for o in outs {
        match o {
            Ok(o) if o.status.code() == Some(0) => bodies.push(o.stdout),
            Ok(o) => return bad(format!("exit status {:?}", o.status.code())),
            Err(e) => return bad(e.to_string()),
        }
    }
    if bodies.windows(2).all(|w| w[0] == w[1]) {
        ok(format!("4 runs, {} bytes each, thread counts default/1/4", bodies[0].len()))
    } else {
        bad("outputs differ")
    }
}

fn main() -> ExitCode {
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    results.push((1, "taut identity", c1()));
    let grid = run_grid();
    results.push((2, "dual-route complex equality", c2(&grid)));
    results.push((3, "chain condition and ranks", c3(&grid)));
    results.push((4, "Alexander polynomial", c4()));
    results.push((5, "classical pairing from the definition", c5()));
    results.push((6, "classical Hermitian defect", c6()));
    results.push((7, "t^n - t^m invertible mod Delta", c7()));
    results.push((8, "twisted lemma suite", c8(&grid)));
    results.push((9, "SNF of Theta against H1 oracle", c9(&grid)));
    results.push((10, "Delta^rho against the CKP form", c10(&grid)));
    results.push((11, "twisted product and Hermitian defect", c11(&grid)));
    results.push((12, "cap-product duality cross-check", c12()));
    results.push((13, "determinism of verify --max 5", c13()));
    let mut failed = 0;
    for (i, name, o) in &results {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {i:>2} {tag} {name}: {}", o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{}/{} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
