//! LaTeX rendering in display style.

use torspair_core::algebra::ring::{Coeff, Ring};
use torspair_core::{LaurentPoly, Matrix, RatFunc};

fn exponent(doubled: i64) -> String {
    if doubled % 2 == 0 {
        format!("{}", doubled / 2)
    } else {
        format!("{}/2", doubled)
    }
}

pub fn poly<C: Coeff>(p: &LaurentPoly<C>) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().iter().enumerate() {
        let (neg, body) = match c.real_parts() {
            Some((neg, abs)) => (neg, abs.to_string()),
            None => (false, format!("\\left({}\\right)", c.to_string().replace('*', ""))),
        };
        out.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let body = if body.contains('/') && !body.starts_with("\\left") {
            let (a, b) = body.split_once('/').unwrap();
            format!("\\frac{{{a}}}{{{b}}}")
        } else {
            body
        };
        match (*e, body.as_str()) {
            (0, _) => out.push_str(&body),
            (_, "1") => out.push_str(&format!("t^{{{}}}", exponent(*e))),
            _ => out.push_str(&format!("{body}\\,t^{{{}}}", exponent(*e))),
        }
    }
    out
}

pub fn ratfunc(f: &RatFunc) -> String {
    let (num, den) = f.reduced();
    if den.is_one() {
        poly(&num)
    } else {
        format!("\\frac{{{}}}{{{}}}", poly(&num), poly(&den))
    }
}

pub fn matrix<T: Ring, F: Fn(&T) -> String>(m: &Matrix<T>, f: F) -> String {
    let rows: Vec<String> =
        (0..m.rows()).map(|i| m.row(i).iter().map(&f).collect::<Vec<_>>().join(" & ")).collect();
    format!("\\begin{{pmatrix}} {} \\end{{pmatrix}}", rows.join(" \\\\ "))
}

/// `(1-t^k)/(1-t^j)`.
pub fn gq(k: i64, j: i64) -> String {
    format!("\\frac{{1-t^{{{k}}}}}{{1-t^{{{j}}}}}")
}
