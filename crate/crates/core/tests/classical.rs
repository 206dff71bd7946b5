use num_traits::ToPrimitive;
use torspair_core::algebra::laurent::ZPoly;
use torspair_core::algebra::ring::Ring;
use torspair_core::classical::*;
use torspair_core::complex::duality::pd_from_cap;
use torspair_core::complex::representation::abelianization_rep;
use torspair_core::fox::torus::TorusParams;

fn pairs() -> Vec<TorusParams> {
    let mut out = Vec::new();
    for m in 2..=7 {
        for n in 2..=7 {
            if let Ok(p) = TorusParams::new(m, n) {
                out.push(p);
            }
        }
    }
    out
}

/// Evaluates at `exp(2πi k / N)` in floating point; integer exponents only.
fn eval(p: &ZPoly, k: i64, big_n: i64) -> (f64, f64) {
    let mut re = 0.0;
    let mut im = 0.0;
    for (e, c) in p.terms() {
        assert_eq!(e % 2, 0);
        let theta = 2.0 * std::f64::consts::PI * ((e / 2) * k) as f64 / big_n as f64;
        let c = c.to_f64().unwrap();
        re += c * theta.cos();
        im += c * theta.sin();
    }
    (re, im)
}

/// Roots of `Δ`: primitive `d`-th roots of unity with `d | mn`, `d ∤ m`, `d ∤ n`.
fn delta_roots(p: &TorusParams) -> Vec<i64> {
    let mn = p.mn();
    (1..mn).filter(|k| (k * p.m) % mn != 0 && (k * p.n) % mn != 0).collect()
}

fn congruent_mod_delta(a: &ZPoly, b: &ZPoly, p: &TorusParams) -> bool {
    delta_roots(p).into_iter().all(|k| {
        let (x, y) = (eval(a, k, p.mn()), eval(b, k, p.mn()));
        (x.0 - y.0).abs() < 1e-7 && (x.1 - y.1).abs() < 1e-7
    })
}

#[test]
fn alexander_routes_and_spot_values() {
    for p in pairs() {
        let a = alexander_polynomial(&p, DeltaRoute::ClosedForm).unwrap();
        let b = alexander_polynomial(&p, DeltaRoute::FromComplex).unwrap();
        assert!(a.unit_equivalent(&b), "{p}");
        assert_eq!(a.sharp(), a);
        assert_eq!(value_at_one(&a), 1.into());
        // degree of the symmetric representative is the genus
        assert_eq!(a.high().unwrap(), 2 * p.genus());
        // Δ vanishes exactly at the expected roots of unity
        for k in delta_roots(&p) {
            let v = eval(&a, k, p.mn());
            assert!(v.0.abs() < 1e-7 && v.1.abs() < 1e-7);
        }
    }
}

#[test]
fn pairing_matches_closed_form() {
    for p in pairs() {
        let lhs = blanchfield_from_definition(&p).unwrap();
        let rhs = gram_closed_form(&p).unwrap();
        assert_eq!(lhs, rhs, "{p}");
        let tb = b_function(&p).unwrap().shift(2 * p.mn());
        assert!(congruent_mod_delta(&lhs, &tb, &p), "{p}");
        // B is #-dual to t^{mn} B
        assert_eq!(tb.sharp(), b_function(&p).unwrap());
    }
}

#[test]
fn trefoil_gram_is_minus_one() {
    // t^6 B = -t^2 + 2t^3 - t^4, and t^2 = t - 1, t^3 = -1 modulo Δ
    let p = TorusParams::new(2, 3).unwrap();
    assert_eq!(gram_closed_form(&p).unwrap(), ZPoly::constant((-1).into()));
}

#[test]
fn hermitian_defect_and_units() {
    for p in pairs() {
        let d = hermitian_defect(&p).unwrap();
        let delta = alexander_polynomial(&p, DeltaRoute::ClosedForm).unwrap();
        assert!(delta.divides(&d), "{p}");
        let g = gram_closed_form(&p).unwrap();
        assert_eq!(canonical_mod(&g.sharp(), &delta).unwrap(), g);
        let u = basis_and_unit_checks(&p).unwrap();
        let dq = to_rat_poly(&delta);
        for w in [&u.basis_det, &u.gram] {
            let prod = &to_rat_poly(&w.element) * &w.inverse;
            assert!(prod.rem_window(&dq, dq.low().unwrap()).unwrap().is_one(), "{p}");
        }
    }
}

#[test]
fn six_seven_defect() {
    hermitian_defect(&TorusParams::new(6, 7).unwrap()).unwrap();
}

#[test]
fn swap_invariance() {
    for p in pairs() {
        let (d, g) = swap_symmetry(&p).unwrap();
        assert!(d && g, "{p}");
    }
}

#[test]
fn cap_product_pipeline() {
    for (m, n) in [(2, 3), (3, 4)] {
        let p = TorusParams::new(m, n).unwrap();
        let capped = pd_from_cap(&p.taut_identity(), &abelianization_rep(&p).unwrap());
        assert_eq!(capped.matrix, torspair_core::complex::duality::pd_classical(&p).matrix);
        let delta = alexander_polynomial(&p, DeltaRoute::ClosedForm).unwrap();
        let v = canonical_mod(&pairing_pipeline(&p, &capped.matrix).unwrap(), &delta).unwrap();
        assert_eq!(v, gram_closed_form(&p).unwrap());
    }
}
