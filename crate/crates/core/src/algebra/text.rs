//! Text form of Laurent polynomials: `-1*t^-4 + 2*t^-3 - 1*t^-2`,
//! half powers as `t^(k/2)`, cyclotomic coefficients in parentheses in the
//! variable `z`, optionally declared by a header line (see [`z_header`]).

use super::cyclotomic::split_signed_terms;
use super::laurent::LaurentPoly;
use super::ring::Coeff;
use crate::error::{Error, Result};

const HEADER_PREFIX: &str = "z := primitive 2n-th root of unity, n = ";

pub fn z_header(n: u32) -> String {
    format!("{HEADER_PREFIX}{n}")
}

/// Polynomial text preceded by the `z` header line.
pub fn with_header<C: Coeff>(p: &LaurentPoly<C>, n: u32) -> String {
    format!("{}\n{}", z_header(n), p)
}

fn parse_exponent(s: &str) -> Result<i64> {
    let bad = || Error::Parse(format!("bad exponent {s:?}"));
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
        let (k, two) = inner.split_once('/').ok_or_else(bad)?;
        if two.trim() != "2" {
            return Err(bad());
        }
        return k.trim().parse().map_err(|_| bad());
    }
    s.parse::<i64>().map(|e| 2 * e).map_err(|_| bad())
}

/// Position of the variable `t` outside parentheses.
fn find_t(term: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in term.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            't' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// Parses polynomial text; a leading header line fixes the cyclotomic order.
pub fn parse_poly<C: Coeff>(s: &str) -> Result<LaurentPoly<C>> {
    let mut order = 1;
    let mut body = s.trim();
    if let Some((first, rest)) = body.split_once('\n') {
        let n: u32 = first
            .trim()
            .strip_prefix(HEADER_PREFIX)
            .ok_or_else(|| Error::Parse(format!("bad header {first:?}")))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad header {first:?}")))?;
        order = 2 * n;
        body = rest.trim();
    }
    if body == "0" {
        return Ok(LaurentPoly::new());
    }
    let terms = split_signed_terms(body).ok_or_else(|| Error::Parse(format!("bad polynomial {body:?}")))?;
    let mut out = Vec::with_capacity(terms.len());
    for (sign, term) in terms {
        let (coef_str, exp) = match find_t(term) {
            None => (term, 0),
            Some(pos) => {
                let head = term[..pos].trim();
                let head = head.strip_suffix('*').unwrap_or(head).trim();
                let tail = term[pos + 1..].trim();
                let exp = if tail.is_empty() {
                    2
                } else {
                    parse_exponent(tail.strip_prefix('^').ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?)?
                };
                (head, exp)
            }
        };
        let coef_str = coef_str.trim();
        let coef_str = coef_str.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(coef_str);
        let c = if coef_str.is_empty() { C::one() } else { C::parse_coeff(coef_str, order)? };
        out.push((exp, if sign < 0 { c.neg_ref() } else { c }));
    }
    Ok(LaurentPoly::from_terms(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclotomic::CycNumber;
    use crate::algebra::laurent::{CPoly, QPoly, ZPoly};
    use crate::algebra::ring::Ring;
    use crate::algebra::rational::Rat;

    #[test]
    fn round_trips() {
        let b: ZPoly = parse_poly("-1*t^-4 + 2*t^-3 - 1*t^-2").unwrap();
        assert_eq!(b.to_string(), "-1*t^-4 + 2*t^-3 - 1*t^-2");
        let h: QPoly = parse_poly("1/2*t^(-3/2) - t + 3").unwrap();
        assert_eq!(h.coeff(-3), Rat::new(1, 2));
        assert_eq!(h.coeff(2), Rat::int(-1));
        assert_eq!(parse_poly::<Rat>("0").unwrap(), QPoly::zero());
        let z = CycNumber::zeta_pow(10, 1);
        let p = CPoly::monomial(z.clone(), 6).add_poly(&CPoly::monomial(z.neg(), -1));
        let text = with_header(&p, 5);
        assert_eq!(parse_poly::<CycNumber>(&text).unwrap(), p);
    }
}
