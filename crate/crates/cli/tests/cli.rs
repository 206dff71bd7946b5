use std::process::{Command, Output};

use num_bigint::BigInt;
use proptest::prelude::*;
use serde_json::Value;
use torspair_cli::codec::*;
use torspair_core::algebra::cyclotomic::CycNumber;
use torspair_core::algebra::rational::Rat;
use torspair_core::algebra::ring::Ring;
use torspair_core::{CPoly, Matrix, RatFunc, ZPoly};

fn torspair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torspair")).args(args).output().expect("binary runs")
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn classical_trefoil_text() {
    let o = torspair(&["classical", "2", "3", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.contains("delta = 1*t^-1 - 1 + 1*t^1"));
    assert!(!s.contains("[FAIL]"));
}

#[test]
fn classical_rejects_common_factor() {
    let o = torspair(&["classical", "4", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not coprime"));
}

#[test]
fn classical_json_delta() {
    // (1-t)(1-t^15)/((1-t^3)(1-t^5)) times t^-4, expanded by hand
    let o = torspair(&["classical", "3", "5", "--format", "json"]);
    let v = json_of(&o);
    let want: Value =
        serde_json::from_str(r#"[[-8,"1"],[-6,"-1"],[-2,"1"],[0,"-1"],[2,"1"],[6,"-1"],[8,"1"]]"#).unwrap();
    assert_eq!(v["artifacts"]["delta"], want);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["command", "params", "checks", "artifacts"]);
    assert_eq!(v["artifacts"]["gram"], serde_json::from_str::<Value>(
        r#"[[-6,"-2"],[-4,"1"],[-2,"1"],[0,"-3"],[2,"1"],[4,"1"],[6,"-2"]]"#).unwrap());
}

#[test]
fn twisted_trefoil_and_skip() {
    for a in ["1", "2"] {
        let o = torspair(&["twisted", "2", "3", "--b", "1,2", "--a", a, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let v = json_of(&o);
        assert_eq!(v["zDefinition"], "primitive 2n-th root of unity, n = 3");
        assert_eq!(v["artifacts"]["pairing"], "skipped: non-generic a");
        assert_eq!(v["artifacts"]["snfExponents"], serde_json::json!(["0", "0"]));
    }
}

#[test]
fn twisted_generic_has_gram() {
    let o = torspair(&["twisted", "3", "4", "--b", "1,1,2", "--a", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["params"]["generic"], true);
    assert_eq!(v["artifacts"]["gram"].as_array().unwrap().len(), 3);
    assert_eq!(v["artifacts"]["gramJets"][0][0].as_array().unwrap().len(), 2);
}

#[test]
fn twisted_constraint_errors() {
    let o = torspair(&["twisted", "2", "3", "--b", "0,0", "--a", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("trivial character rejected"));
    assert_eq!(torspair(&["twisted", "2", "3", "--b", "1,1", "--a", "1"]).status.code(), Some(2));
    assert_eq!(torspair(&["twisted", "2", "3", "--b", "1,2", "--a", "0"]).status.code(), Some(2));
    assert_eq!(torspair(&["twisted", "2", "3", "--b", "1,2,0", "--a", "1"]).status.code(), Some(2));
    assert_eq!(torspair(&["verify", "--max", "1"]).status.code(), Some(2));
    assert_eq!(torspair(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn fault_injection_fails_named_checks() {
    let o = torspair(&["classical", "3", "4", "--inject-fault", "d2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json_of(&o);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"d1 d2 = 0"));
    assert!(failed.contains(&"Fox complex equals closed form"));

    let o = torspair(&["verify", "--max", "3", "--inject-fault", "d2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("[FAIL] classical T(2, 3): failed: Fox complex"));
}

#[test]
fn verify_counts() {
    let o = torspair(&["verify", "--max", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    // (2,3), (3,2); characters of Z/3 on 2 sheets with zero sum: (1,2), (2,1)
    assert_eq!(v["artifacts"]["classicalPairs"], 2);
    assert_eq!(v["artifacts"]["characters"], 2);
    assert_eq!(v["artifacts"]["settings"], 4);
    assert_eq!(v["artifacts"]["genericSettings"], 0);
}

#[test]
fn latex_uses_fraction_display() {
    let o = torspair(&["classical", "2", "5", "--format", "latex"]);
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.contains(r"\frac{(1-t)(1-t^{10})}{(1-t^{2})(1-t^{5})}"));
}

fn zpoly() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec((-9i64..9, -50i64..50), 0..7)
        .prop_map(|ts| ZPoly::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn cpoly() -> impl Strategy<Value = CPoly> {
    prop::collection::vec((-9i64..9, -7i64..7, 1i64..5, 0i64..10), 0..5).prop_map(|ts| {
        CPoly::from_terms(ts.into_iter().map(|(e, p, q, k)| (e, CycNumber::zeta_pow(10, k).scale(&Rat::new(p, q)))))
    })
}

proptest! {
    #[test]
    fn integer_poly_round_trip(p in zpoly()) {
        let v = poly_json(&p);
        let text = serde_json::to_string(&v).unwrap();
        let back: ZPoly = poly_from_json(&serde_json::from_str(&text).unwrap(), 1).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn cyclotomic_matrix_round_trip(es in prop::collection::vec(cpoly(), 4)) {
        let m = Matrix::from_rows(vec![es[..2].to_vec(), es[2..].to_vec()]);
        let v = matrix_json(&m, poly_json);
        let back = matrix_from_json(&v, |e| poly_from_json::<CycNumber>(e, 10)).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn ratfunc_round_trip(num in cpoly(), e in 1i64..4, k in 0i64..10) {
        let den = &CPoly::one() - &CPoly::monomial(CycNumber::zeta_pow(10, k), 2 * e);
        let f = RatFunc::new(num, &den).unwrap();
        let back = ratfunc_from_json(&ratfunc_json(&f), 10).unwrap();
        prop_assert_eq!(back.reduced(), f.reduced());
    }
}
