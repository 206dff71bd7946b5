//! JSON encoding of polynomials, rational functions, matrices and jets.
//!
//! A polynomial is a list of `[doubledExponent, "coefficient"]` pairs sorted
//! by exponent; cyclotomic coefficients use `z`-notation.

use serde_json::{json, Value};
use torspair_core::algebra::ring::Coeff;
use torspair_core::{Jet, LaurentPoly, Matrix, RatFunc};

use crate::CliError;

pub fn poly_json<C: Coeff>(p: &LaurentPoly<C>) -> Value {
    Value::Array(p.terms().iter().map(|(e, c)| json!([e, c.to_string()])).collect())
}

fn bad(what: &str) -> CliError {
    CliError::Decode(format!("malformed {what}"))
}

pub fn poly_from_json<C: Coeff>(v: &Value, order: u32) -> Result<LaurentPoly<C>, CliError> {
    let arr = v.as_array().ok_or_else(|| bad("polynomial"))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("term"))?;
        let e = pair[0].as_i64().ok_or_else(|| bad("exponent"))?;
        let c = pair[1].as_str().ok_or_else(|| bad("coefficient"))?;
        terms.push((e, C::parse_coeff(c, order)?));
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn matrix_json<T, F: Fn(&T) -> Value>(m: &Matrix<T>, f: F) -> Value
where
    T: torspair_core::algebra::ring::Ring,
{
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(&f).collect())).collect())
}

pub fn matrix_from_json<T, F>(v: &Value, f: F) -> Result<Matrix<T>, CliError>
where
    T: torspair_core::algebra::ring::Ring,
    F: Fn(&Value) -> Result<T, CliError>,
{
    let rows = v.as_array().ok_or_else(|| bad("matrix"))?;
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        let r = r.as_array().ok_or_else(|| bad("matrix row"))?;
        out.push(r.iter().map(&f).collect::<Result<Vec<T>, CliError>>()?);
    }
    let cols = out.first().map_or(0, |r| r.len());
    if out.iter().any(|r| r.len() != cols) {
        return Err(bad("matrix shape"));
    }
    Ok(Matrix::from_rows(out))
}

/// `{"num": poly, "den": poly}` in gcd-reduced form.
pub fn ratfunc_json(f: &RatFunc) -> Value {
    let (num, den) = f.reduced();
    json!({"num": poly_json(&num), "den": poly_json(&den)})
}

pub fn ratfunc_from_json(v: &Value, order: u32) -> Result<RatFunc, CliError> {
    let num = poly_from_json(v.get("num").ok_or_else(|| bad("numerator"))?, order)?;
    let den = poly_from_json(v.get("den").ok_or_else(|| bad("denominator"))?, order)?;
    Ok(RatFunc::new(num, &den)?)
}

/// Coefficients of `(t - zeta)^k`, `k = 0..d-1`.
pub fn jet_json(j: &Jet) -> Value {
    Value::Array(j.coeffs.iter().map(|c| Value::String(c.to_string())).collect())
}
