//! Exact arithmetic in cyclotomic fields `Q(z)`, `z` a primitive `N`-th root
//! of unity, in the power basis modulo the `N`-th cyclotomic polynomial.
//!
//! Every element whose non-constant coordinates vanish is stored in the
//! order-1 field (plain `Q`), so rationals mix freely with any `Q(z_N)` and
//! equality stays structural.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use super::rational::Rat;
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct CycField {
    order: u32,
    degree: usize,
    /// Coefficients of the cyclotomic polynomial, lowest degree first; monic.
    phi: Vec<i64>,
    /// `x^(degree + k) mod phi` for `k` in `0..degree - 1`.
    reduce: Vec<Vec<i64>>,
    /// `x^j mod phi` for `j` in `0..order`.
    powers: Vec<Vec<i64>>,
}

impl CycField {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cyclotomic_polynomial(&self) -> &[i64] {
        &self.phi
    }

    fn build(order: u32) -> CycField {
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let step = |v: &[i64]| -> Vec<i64> {
            // multiply by x and reduce once
            let mut out = vec![0i64; degree];
            let top = v[degree - 1];
            for i in (1..degree).rev() {
                out[i] = v[i - 1];
            }
            if top != 0 {
                for (i, o) in out.iter_mut().enumerate() {
                    *o -= top * phi[i];
                }
            }
            out
        };
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        if degree == 1 {
            // Q(z_1) = Q(z_2) = Q; z = -phi[0]
            let z = -phi[0];
            let mut v = 1i64;
            for _ in 0..order {
                powers.push(vec![v]);
                v *= z;
            }
        } else {
            for _ in 0..order {
                powers.push(cur.clone());
                cur = step(&cur);
            }
        }
        let mut reduce = Vec::new();
        if degree > 1 {
            let mut v = powers[degree - 1].clone();
            for _ in 0..degree.saturating_sub(1) {
                v = step(&v);
                reduce.push(v.clone());
            }
        }
        CycField { order, degree, phi, reduce, powers }
    }
}

fn poly_exact_div_int(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

/// The `n`-th cyclotomic polynomial, computed by dividing `x^n - 1` by the
/// cyclotomic polynomials of the proper divisors of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_exact_div_int(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

static FIELDS: OnceLock<Mutex<HashMap<u32, &'static CycField>>> = OnceLock::new();
static RATIONALS: OnceLock<&'static CycField> = OnceLock::new();

/// The shared field data for `Q(z_order)`.
pub fn field(order: u32) -> &'static CycField {
    assert!(order >= 1, "cyclotomic order must be positive");
    if order == 1 {
        return rationals();
    }
    let map = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().unwrap();
    guard
        .entry(order)
        .or_insert_with(|| Box::leak(Box::new(CycField::build(order))))
}

fn rationals() -> &'static CycField {
    RATIONALS.get_or_init(|| Box::leak(Box::new(CycField::build(1))))
}

#[derive(Clone)]
pub struct CycNumber {
    field: &'static CycField,
    coeffs: Vec<Rat>,
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycNumber {}

impl std::hash::Hash for CycNumber {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc[{}]({})", self.field.order, self)
    }
}

impl CycNumber {
    pub fn zero() -> CycNumber {
        CycNumber::rational(Rat::ZERO)
    }

    pub fn one() -> CycNumber {
        CycNumber::rational(Rat::ONE)
    }

    pub fn rational(q: Rat) -> CycNumber {
        CycNumber { field: rationals(), coeffs: vec![q] }
    }

    pub fn int(n: i64) -> CycNumber {
        CycNumber::rational(Rat::int(n))
    }

    /// `z_order^k` for any integer `k`.
    pub fn zeta_pow(order: u32, k: i64) -> CycNumber {
        let f = field(order);
        let j = k.rem_euclid(order as i64) as usize;
        let coeffs = f.powers[j].iter().map(|&c| Rat::int(c)).collect();
        CycNumber { field: f, coeffs }.canonical()
    }

    /// Builds an element from power-basis coordinates (reduced if longer).
    pub fn from_coords(order: u32, coords: &[Rat]) -> CycNumber {
        let f = field(order);
        let mut acc = CycNumber::zero();
        for (j, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = CycNumber::zeta_pow(order, j as i64);
            acc = acc.checked_add(&z.scale(c)).expect("same field");
        }
        let _ = f;
        acc
    }

    /// Order of the field the element is stored in (1 for rationals).
    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.field.order == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.field.order == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        (self.field.order == 1).then(|| &self.coeffs[0])
    }

    fn canonical(mut self) -> CycNumber {
        if self.field.order != 1 && self.coeffs[1..].iter().all(Rat::is_zero) {
            let c = std::mem::replace(&mut self.coeffs[0], Rat::ZERO);
            return CycNumber::rational(c);
        }
        self
    }

    fn common_field(&self, other: &CycNumber) -> Result<&'static CycField> {
        match (self.field.order, other.field.order) {
            (a, b) if a == b => Ok(self.field),
            (1, _) => Ok(other.field),
            (_, 1) => Ok(self.field),
            _ => Err(Error::RingMismatch),
        }
    }

    pub fn scale(&self, q: &Rat) -> CycNumber {
        if q.is_zero() {
            return CycNumber::zero();
        }
        CycNumber { field: self.field, coeffs: self.coeffs.iter().map(|c| c.mul(q)).collect() }
    }

    pub fn checked_add(&self, other: &CycNumber) -> Result<CycNumber> {
        let f = self.common_field(other)?;
        if self.field.order == other.field.order {
            let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect();
            return Ok(CycNumber { field: f, coeffs }.canonical());
        }
        let (big, small) = if self.field.order == 1 { (other, self) } else { (self, other) };
        let mut coeffs = big.coeffs.clone();
        coeffs[0] = coeffs[0].add(&small.coeffs[0]);
        Ok(CycNumber { field: f, coeffs })
    }

    pub fn checked_sub(&self, other: &CycNumber) -> Result<CycNumber> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> CycNumber {
        CycNumber { field: self.field, coeffs: self.coeffs.iter().map(Rat::neg).collect() }
    }

    pub fn checked_mul(&self, other: &CycNumber) -> Result<CycNumber> {
        let f = self.common_field(other)?;
        if self.field.order == 1 {
            return Ok(other.scale(&self.coeffs[0]));
        }
        if other.field.order == 1 {
            return Ok(self.scale(&other.coeffs[0]));
        }
        let d = f.degree;
        let mut buf = vec![Rat::ZERO; 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                buf[i + j] = buf[i + j].add(&a.mul(b));
            }
        }
        let (low, high) = buf.split_at_mut(d);
        for (k, h) in high.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            for (l, &r) in low.iter_mut().zip(&f.reduce[k]) {
                if r != 0 {
                    *l = l.add(&h.mul(&Rat::int(r)));
                }
            }
        }
        buf.truncate(d);
        Ok(CycNumber { field: f, coeffs: buf }.canonical())
    }

    /// Complex conjugation `z -> z^{-1}`.
    pub fn conj(&self) -> CycNumber {
        let f = self.field;
        if f.order == 1 {
            return self.clone();
        }
        let n = f.order as usize;
        let mut out = vec![Rat::ZERO; f.degree];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img = &f.powers[(n - k) % n];
            for (o, &v) in out.iter_mut().zip(img) {
                if v != 0 {
                    *o = o.add(&c.mul(&Rat::int(v)));
                }
            }
        }
        CycNumber { field: f, coeffs: out }.canonical()
    }

    /// Multiplicative inverse, by solving `self * s = 1` in the power basis.
    pub fn inv(&self) -> Result<CycNumber> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = self.field;
        if f.order == 1 {
            return Ok(CycNumber::rational(self.coeffs[0].inv()?));
        }
        let d = f.degree;
        // columns: self * z^j
        let cols: Vec<CycNumber> = (0..d)
            .map(|j| self.checked_mul(&CycNumber::zeta_pow(f.order, j as i64)).unwrap())
            .collect();
        let mut a: Vec<Vec<Rat>> = (0..d)
            .map(|i| {
                let mut row: Vec<Rat> = cols.iter().map(|c| c.coord(i, d)).collect();
                row.push(if i == 0 { Rat::ONE } else { Rat::ZERO });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !a[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
            a.swap(col, piv);
            let inv = a[col][col].inv()?;
            for v in a[col].iter_mut() {
                *v = v.mul(&inv);
            }
            for r in 0..d {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    let pivot_row = a[col].clone();
                    for (x, y) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                        *x = x.sub(&y.mul(&factor));
                    }
                }
            }
        }
        let coeffs = a.into_iter().map(|row| row[d].clone()).collect();
        Ok(CycNumber { field: f, coeffs }.canonical())
    }

    fn coord(&self, i: usize, d: usize) -> Rat {
        if self.field.order == 1 {
            if i == 0 {
                self.coeffs[0].clone()
            } else {
                Rat::ZERO
            }
        } else {
            debug_assert_eq!(self.coeffs.len(), d);
            self.coeffs[i].clone()
        }
    }

    pub fn pow(&self, k: i64) -> Result<CycNumber> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = CycNumber::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.checked_mul(&base)?;
        }
        Ok(acc)
    }

    /// Parses z-notation, e.g. `1/2 - z + 3*z^2`, in `Q(z_order)`.
    pub fn parse(s: &str, order: u32) -> Result<CycNumber> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad cyclotomic number {s:?}"));
        if s.is_empty() {
            return Err(bad());
        }
        let mut acc = CycNumber::zero();
        for (sign, term) in split_signed_terms(s).ok_or_else(bad)? {
            let (coef, power) = match term.find('z') {
                None => (term.parse::<Rat>()?, 0i64),
                Some(pos) => {
                    let head = term[..pos].trim().trim_end_matches('*').trim();
                    let tail = term[pos + 1..].trim();
                    let coef = if head.is_empty() { Rat::ONE } else { head.parse::<Rat>()? };
                    let power = if tail.is_empty() {
                        1
                    } else {
                        let t = tail.strip_prefix('^').ok_or_else(bad)?.trim();
                        let t = t.trim_start_matches('(').trim_end_matches(')');
                        t.parse::<i64>().map_err(|_| bad())?
                    };
                    (coef, power)
                }
            };
            let coef = if sign < 0 { coef.neg() } else { coef };
            let term = if power == 0 {
                CycNumber::rational(coef)
            } else {
                if order == 1 {
                    return Err(bad());
                }
                CycNumber::zeta_pow(order, power).scale(&coef)
            };
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }
}

/// Splits `a + b - c` into signed terms, ignoring signs inside exponents.
pub(crate) fn split_signed_terms(s: &str) -> Option<Vec<(i32, &str)>> {
    let bytes = s.as_bytes();
    let mut terms = Vec::new();
    let mut sign = 1;
    let mut start = 0;
    let mut i = 0;
    let mut depth = 0i32;
    // leading sign
    while i < bytes.len() && (bytes[i] == b' ' || bytes[i] == b'+' || bytes[i] == b'-') {
        if bytes[i] == b'-' {
            sign = -sign;
        }
        i += 1;
        start = i;
    }
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                // a sign directly after '^' or '/' belongs to the number
                let prev = s[..i].trim_end().as_bytes().last().copied();
                if !matches!(prev, Some(b'^') | Some(b'/') | Some(b'*')) {
                    let term = s[start..i].trim();
                    if term.is_empty() {
                        return None;
                    }
                    terms.push((sign, term));
                    sign = if c == b'-' { -1 } else { 1 };
                    start = i + 1;
                }
            }
            _ => {}
        }
        i += 1;
    }
    let term = s[start..].trim();
    if term.is_empty() {
        return None;
    }
    terms.push((sign, term));
    Some(terms)
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let abs = if neg { c.neg() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(10), vec![1, -1, 1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(field(14).degree(), 6);
        assert_eq!(field(8).degree(), 4);
    }

    #[test]
    fn zeta_relations() {
        for n in [6u32, 8, 10, 14, 18] {
            let z = CycNumber::zeta_pow(n, 1);
            assert_eq!(z.pow(n as i64).unwrap(), CycNumber::one());
            assert_eq!(z.checked_mul(&z.conj()).unwrap(), CycNumber::one());
            assert_eq!(CycNumber::zeta_pow(n, n as i64 / 2), CycNumber::int(-1));
            let zi = z.inv().unwrap();
            assert_eq!(zi, CycNumber::zeta_pow(n, -1));
        }
    }

    #[test]
    fn inverse_of_general_element() {
        let x = CycNumber::parse("2 - z + 1/3*z^3", 14).unwrap();
        let y = x.inv().unwrap();
        assert_eq!(x.checked_mul(&y).unwrap(), CycNumber::one());
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = CycNumber::zeta_pow(6, 1);
        let b = CycNumber::zeta_pow(10, 1);
        assert_eq!(a.checked_add(&b), Err(Error::RingMismatch));
        assert!(a.checked_add(&CycNumber::int(3)).is_ok());
    }

    #[test]
    fn display_parse() {
        let x = CycNumber::parse("1/2 - z + 3*z^3", 10).unwrap();
        assert_eq!(x.to_string(), "1/2 - z + 3*z^3");
        assert_eq!(CycNumber::parse(&x.to_string(), 10).unwrap(), x);
        assert_eq!(CycNumber::parse("z^5", 10).unwrap(), CycNumber::int(-1));
        assert_eq!(CycNumber::parse("z^-1", 10).unwrap(), CycNumber::zeta_pow(10, 9));
    }
}
