//! Sparse Laurent polynomials in `t^{1/2}`.
//!
//! Exponents are stored doubled: the key `k` stands for `t^{k/2}`. All
//! Euclidean operations work in the variable `u = t^{1/2}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::cyclotomic::CycNumber;
use super::rational::Rat;
use super::ring::{Coeff, Field, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    /// `(doubled exponent, coefficient)`, strictly increasing, no zeros.
    terms: Vec<(i64, C)>,
}

pub type ZPoly = LaurentPoly<BigInt>;
pub type QPoly = LaurentPoly<Rat>;
pub type CPoly = LaurentPoly<CycNumber>;

impl<C: Coeff> LaurentPoly<C> {
    pub fn new() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    /// Collects arbitrary `(doubled exponent, coefficient)` pairs.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(it: I) -> Self {
        let mut v: Vec<(i64, C)> = it.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, C)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = lc.add_ref(&c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: out }
    }

    /// Builds from already sorted, zero-free terms.
    fn from_sorted(terms: Vec<(i64, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        LaurentPoly { terms }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^{k/2}`.
    pub fn monomial(c: C, doubled: i64) -> Self {
        if c.is_zero() {
            Self::new()
        } else {
            LaurentPoly { terms: vec![(doubled, c)] }
        }
    }

    /// `t^e`.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(C::one(), 2 * e)
    }

    /// `t^{k/2}`.
    pub fn half_pow(k: i64) -> Self {
        Self::monomial(C::one(), k)
    }

    /// Dense coefficients `c_0 + c_1 t + ...` in integer powers of `t`.
    pub fn from_t_coeffs(cs: &[C]) -> Self {
        Self::from_terms(cs.iter().enumerate().map(|(i, c)| (2 * i as i64, c.clone())))
    }

    pub fn terms(&self) -> &[(i64, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(i64, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t^{k/2}`.
    pub fn coeff(&self, doubled: i64) -> C {
        match self.terms.binary_search_by_key(&doubled, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// Lowest doubled exponent.
    pub fn low(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    /// Highest doubled exponent.
    pub fn high(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn leading(&self) -> Option<&C> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn trailing(&self) -> Option<&C> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Width `high - low` in the variable `u = t^{1/2}`; zero has none.
    pub fn span(&self) -> Option<i64> {
        Some(self.high()? - self.low()?)
    }

    pub fn as_monomial(&self) -> Option<(i64, &C)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, c)),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Units of `R[t^{±1/2}]`: monomials with unit coefficient.
    pub fn is_unit(&self) -> bool {
        matches!(self.as_monomial(), Some((_, c)) if c.is_unit())
    }

    /// True when every exponent is an integer power of `t`.
    pub fn has_integral_exponents(&self) -> bool {
        self.terms.iter().all(|(e, _)| e % 2 == 0)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a.mul_ref(c))))
    }

    /// Multiplication by `t^{k/2}`.
    pub fn shift(&self, doubled: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + doubled, c.clone())).collect() }
    }

    /// `f^#`: conjugate the coefficients and send `t` to `t^{-1}`.
    pub fn sharp(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().rev().map(|(e, c)| (-e, c.conj())).collect() }
    }

    /// Substitution `t -> t^k` for `k != 0`.
    pub fn subs_pow(&self, k: i64) -> Self {
        assert!(k != 0);
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn to_cyc(&self) -> CPoly {
        LaurentPoly::from_sorted(self.terms.iter().map(|(e, c)| (*e, c.to_cyc())).collect())
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1.add_ref(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentPoly { terms: out }
    }

    pub fn neg_poly(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.neg_ref())).collect() }
    }

    pub fn sub_poly(&self, other: &Self) -> Self {
        self.add_poly(&other.neg_poly())
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        if self.is_empty() || other.is_empty() {
            return Self::new();
        }
        if let Some((e, c)) = self.as_monomial() {
            return other.mul_monomial(e, c);
        }
        if let Some((e, c)) = other.as_monomial() {
            return self.mul_monomial(e, c);
        }
        let lo = self.low().unwrap() + other.low().unwrap();
        let hi = self.high().unwrap() + other.high().unwrap();
        let width = (hi - lo) as usize + 1;
        if width <= 4 * (self.len() * other.len()) + 64 {
            let mut dense: Vec<Option<C>> = vec![None; width];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    let slot = &mut dense[(ea + eb - lo) as usize];
                    let prod = ca.mul_ref(cb);
                    *slot = Some(match slot.take() {
                        Some(s) => s.add_ref(&prod),
                        None => prod,
                    });
                }
            }
            let terms = dense
                .into_iter()
                .enumerate()
                .filter_map(|(i, c)| c.filter(|c| !c.is_zero()).map(|c| (i as i64 + lo, c)))
                .collect();
            LaurentPoly { terms }
        } else {
            let mut pairs = Vec::with_capacity(self.len() * other.len());
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    pairs.push((ea + eb, ca.mul_ref(cb)));
                }
            }
            Self::from_terms(pairs)
        }
    }

    fn mul_monomial(&self, e: i64, c: &C) -> Self {
        if c.is_one() {
            return self.shift(e);
        }
        Self::from_terms(self.terms.iter().map(|(ea, ca)| (ea + e, ca.mul_ref(c))))
    }

    pub fn pow(&self, k: u64) -> Self {
        super::ring::pow(self, k)
    }

    /// Integer power; negative powers only for units.
    pub fn pow_i(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            return Ok(self.pow(k as u64));
        }
        Ok(self.try_inverse()?.pow(k.unsigned_abs()))
    }

    /// Inverse of a unit monomial.
    pub fn try_inverse(&self) -> Result<Self> {
        match self.as_monomial() {
            Some((e, c)) if c.is_unit() => {
                let inv = C::one().try_div(c).ok_or(Error::NonUnitBase)?;
                Ok(Self::monomial(inv, -e))
            }
            _ => Err(Error::NonUnitBase),
        }
    }

    /// Exact quotient `self / q` in `R[t^{±1/2}]`.
    pub fn exact_div(&self, q: &Self) -> Result<Self> {
        if q.is_empty() {
            return Err(Error::DivisionByZero);
        }
        if self.is_empty() {
            return Ok(Self::new());
        }
        if let Some((e, c)) = q.as_monomial() {
            let terms: Option<Vec<(i64, C)>> =
                self.terms.iter().map(|(ea, ca)| ca.try_div(c).map(|v| (ea - e, v))).collect();
            return terms.map(Self::from_sorted).ok_or(Error::InexactDivision);
        }
        let (qh, qc) = (q.high().unwrap(), q.leading().unwrap().clone());
        let min_exp = self.low().unwrap() - q.low().unwrap();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(rh) = rem.high() {
            let e = rh - qh;
            if e < min_exp {
                return Err(Error::InexactDivision);
            }
            let c = rem.leading().unwrap().try_div(&qc).ok_or(Error::InexactDivision)?;
            rem = rem.sub_poly(&q.mul_monomial(e, &c));
            quot.push((e, c));
        }
        quot.reverse();
        Ok(Self::from_sorted(quot))
    }

    pub fn divides(&self, p: &Self) -> bool {
        p.exact_div(self).is_ok()
    }

    /// `Σ_{i<ℓ} u^i` for `ℓ > 0`, `-Σ_{1<=i<=-ℓ} u^{-i}` otherwise.
    pub fn geometric_quotient(&self, l: i64) -> Result<Self> {
        if l == 0 {
            return Err(Error::UndefinedExponent);
        }
        if !self.is_unit() {
            return Err(Error::NonUnitBase);
        }
        let mut acc = Self::new();
        if l > 0 {
            let mut p = Self::one();
            for _ in 0..l {
                acc = acc.add_poly(&p);
                p = p.mul_poly(self);
            }
        } else {
            let inv = self.try_inverse()?;
            let mut p = inv.clone();
            for _ in 0..-l {
                acc = acc.sub_poly(&p);
                p = p.mul_poly(&inv);
            }
        }
        Ok(acc)
    }

    /// Value at `t^{1/2} = s`.
    pub fn eval_half(&self, s: &CycNumber) -> Result<CycNumber> {
        let mut acc = CycNumber::zero();
        for (e, c) in &self.terms {
            acc = acc.checked_add(&c.to_cyc().checked_mul(&s.pow(*e)?)?)?;
        }
        Ok(acc)
    }

    /// Value at an integral-exponent point `t = v`; fails on half powers.
    pub fn eval_at(&self, v: &CycNumber) -> Result<CycNumber> {
        if !self.has_integral_exponents() {
            return Err(Error::UndefinedExponent);
        }
        let mut acc = CycNumber::zero();
        for (e, c) in &self.terms {
            acc = acc.checked_add(&c.to_cyc().checked_mul(&v.pow(e / 2)?)?)?;
        }
        Ok(acc)
    }

    /// `u`-coefficients of `u^{-low} * self`, lowest first.
    pub fn dense_u(&self) -> Vec<C> {
        let Some(lo) = self.low() else { return Vec::new() };
        let mut out = vec![C::zero(); (self.high().unwrap() - lo) as usize + 1];
        for (e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        out
    }

    pub fn from_dense_u(cs: Vec<C>, low: i64) -> Self {
        let terms = cs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (low + i as i64, c))
            .collect();
        LaurentPoly { terms }
    }

    /// Equality up to a unit `c * t^{k/2}` of `R[t^{±1/2}]`.
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        match (self.is_empty(), other.is_empty()) {
            (true, true) => return true,
            (true, false) | (false, true) => return false,
            _ => {}
        }
        if self.len() != other.len() {
            return false;
        }
        let shift = other.low().unwrap() - self.low().unwrap();
        let (c0, d0) = (self.trailing().unwrap(), other.trailing().unwrap());
        let Some(ratio) = d0.try_div(c0) else { return false };
        if !ratio.is_unit() {
            return false;
        }
        self.mul_monomial(shift, &ratio) == *other
    }
}

fn trim<C: Ring>(v: &mut Vec<C>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Dense polynomial division over a field: `a = q*b + r`, `deg r < deg b`.
fn dense_div_rem<C: Coeff + Field>(a: &[C], b: &[C]) -> Result<(Vec<C>, Vec<C>)> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    if b.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let db = b.len() - 1;
    let lead_inv = b[db].try_inv()?;
    if r.len() < b.len() {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![C::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].mul_ref(&lead_inv);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                r[i + j] = r[i + j].sub_ref(&c.mul_ref(bj));
            }
        }
        q[i] = c;
    }
    trim(&mut r);
    trim(&mut q);
    Ok((q, r))
}

fn dense_mul<C: Ring>(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
            }
        }
    }
    trim(&mut out);
    out
}

fn dense_sub<C: Ring>(a: &[C], b: &[C]) -> Vec<C> {
    let n = a.len().max(b.len());
    let mut out: Vec<C> = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.sub_ref(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.neg_ref(),
            (None, None) => C::zero(),
        })
        .collect();
    trim(&mut out);
    out
}

impl<C: Coeff + Field> LaurentPoly<C> {
    /// Normalized associate: monic, lowest exponent 0.
    pub fn normalized(&self) -> Self {
        match (self.low(), self.leading()) {
            (Some(lo), Some(lead)) => {
                let inv = lead.try_inv().expect("nonzero leading coefficient");
                self.shift(-lo).scale(&inv)
            }
            _ => Self::new(),
        }
    }

    /// Division with remainder in `u`: `self = q*d + r` with `span(r) < span(d)`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_empty() {
            return Err(Error::DivisionByZero);
        }
        if self.is_empty() {
            return Ok((Self::new(), Self::new()));
        }
        let (lp, ld) = (self.low().unwrap(), d.low().unwrap());
        let (q, r) = dense_div_rem(&self.dense_u(), &d.dense_u())?;
        Ok((Self::from_dense_u(q, lp - ld), Self::from_dense_u(r, lp)))
    }

    /// The unique `r = self mod m` with doubled exponents in
    /// `[low, low + span(m))`.
    pub fn rem_window(&self, m: &Self, low: i64) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::DivisionByZero);
        }
        let mm = m.shift(-m.low().unwrap());
        let c0_inv = mm.trailing().unwrap().try_inv()?;
        let mut p = self.shift(-low);
        // clear exponents below the window using the unit constant term
        while let Some(lo) = p.low() {
            if lo >= 0 {
                break;
            }
            let c = p.trailing().unwrap().mul_ref(&c0_inv);
            p = p.sub_poly(&mm.mul_monomial(lo, &c));
        }
        let (_, r) = dense_div_rem(&p.dense_full(), &mm.dense_u())?;
        Ok(Self::from_dense_u(r, low))
    }

    /// Dense `u`-coefficients from exponent 0; requires `low >= 0`.
    fn dense_full(&self) -> Vec<C> {
        let Some(hi) = self.high() else { return Vec::new() };
        let mut out = vec![C::zero(); hi as usize + 1];
        for (e, c) in &self.terms {
            out[*e as usize] = c.clone();
        }
        out
    }

    /// Monic gcd with lowest exponent 0.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_empty() && other.is_empty() {
            return Err(Error::GcdUndefined);
        }
        let mut a = self.dense_u();
        let mut b = other.dense_u();
        while !b.is_empty() {
            let (_, r) = dense_div_rem(&a, &b)?;
            a = b;
            b = r;
        }
        Ok(Self::from_dense_u(a, 0).normalized())
    }

    /// `(g, x, y)` with `x*self + y*other = g`, `g` the normalized gcd.
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        if self.is_empty() && other.is_empty() {
            return Err(Error::GcdUndefined);
        }
        let (la, lb) = (self.low().unwrap_or(0), other.low().unwrap_or(0));
        let (mut r0, mut r1) = (self.dense_u(), other.dense_u());
        let (mut s0, mut s1) = (vec![C::one()], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![C::one()]);
        while !r1.is_empty() {
            let (q, r) = dense_div_rem(&r0, &r1)?;
            let s2 = dense_sub(&s0, &dense_mul(&q, &s1));
            let t2 = dense_sub(&t0, &dense_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        // s0 * (u^{-la} self) + t0 * (u^{-lb} other) = r0
        let g = Self::from_dense_u(r0, 0);
        let lead_inv = g.leading().unwrap().try_inv()?;
        let x = Self::from_dense_u(s0, -la).scale(&lead_inv);
        let y = Self::from_dense_u(t0, -lb).scale(&lead_inv);
        Ok((g.scale(&lead_inv), x, y))
    }

    /// Inverse of `self` modulo `m`, if they are coprime.
    pub fn inverse_mod(&self, m: &Self) -> Result<Option<Self>> {
        let (g, x, _) = self.ext_gcd(m)?;
        if g != Self::one() {
            return Ok(None);
        }
        Ok(Some(x.rem_window(m, m.low().unwrap())?))
    }

    pub fn is_coprime(&self, other: &Self) -> Result<bool> {
        Ok(self.gcd(other)? == Self::one())
    }
}

impl<C: Coeff> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coeff> Ring for LaurentPoly<C> {
    fn zero() -> Self {
        Self::new()
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(0, c)] if c.is_one())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add_poly(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub_poly(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_poly(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg_poly()
    }
    fn from_int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<C: Coeff> $tr<&LaurentPoly<C>> for &LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                self.$f(rhs)
            }
        }
        impl<C: Coeff> $tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                self.$f(&rhs)
            }
        }
        impl<C: Coeff> $tr<&LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                self.$f(rhs)
            }
        }
        impl<C: Coeff> $tr<LaurentPoly<C>> for &LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                self.$f(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, add_poly);
poly_binop!(Sub, sub, sub_poly);
poly_binop!(Mul, mul, mul_poly);

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        self.neg_poly()
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        self.neg_poly()
    }
}

pub(crate) fn fmt_exponent(doubled: i64) -> String {
    if doubled % 2 == 0 {
        format!("{}", doubled / 2)
    } else {
        format!("({doubled}/2)")
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let (neg, body) = match c.real_parts() {
                Some((neg, abs)) => (neg, abs.to_string()),
                None => (false, format!("({c})")),
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *e == 0 {
                write!(f, "{body}")?;
            } else {
                write!(f, "{body}*t^{}", fmt_exponent(*e))?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(cs: &[(i64, i64)]) -> QPoly {
        QPoly::from_terms(cs.iter().map(|&(e, c)| (2 * e, Rat::int(c))))
    }

    #[test]
    fn arithmetic_basics() {
        assert_eq!(q(&[(0, 1), (1, -1)]) * q(&[(0, 1), (1, 1)]), q(&[(0, 1), (2, -1)]));
        assert_eq!(
            q(&[(0, 1), (6, -1)]).exact_div(&q(&[(0, 1), (2, -1)])).unwrap(),
            q(&[(0, 1), (2, 1), (4, 1)])
        );
        let num = q(&[(0, 1), (1, -1)]) * q(&[(0, 1), (6, -1)]);
        let den = q(&[(0, 1), (2, -1)]) * q(&[(0, 1), (3, -1)]);
        assert_eq!(num.exact_div(&den).unwrap(), q(&[(0, 1), (1, -1), (2, 1)]));
        assert_eq!(q(&[(0, 1), (3, 1)]).exact_div(&q(&[(0, 1), (1, 1), (2, 1)])), Err(Error::InexactDivision));
    }

    #[test]
    fn integer_exact_division_respects_integrality() {
        let a = ZPoly::from_terms([(0, BigInt::from(1)), (2, BigInt::from(1))]);
        let two = ZPoly::constant(BigInt::from(2));
        assert_eq!(a.exact_div(&two), Err(Error::InexactDivision));
        assert_eq!(a.scale(&BigInt::from(2)).exact_div(&two).unwrap(), a);
    }

    #[test]
    fn gcd_and_inverse() {
        let g = q(&[(0, 1), (2, -1)]).gcd(&q(&[(0, 1), (3, -1)])).unwrap();
        assert_eq!(g, q(&[(0, -1), (1, 1)]));
        assert_eq!(q(&[(2, 1), (3, -1)]).gcd(&QPoly::zero()).unwrap(), q(&[(0, -1), (1, 1)]));
        assert_eq!(QPoly::zero().gcd(&QPoly::zero()), Err(Error::GcdUndefined));
        let delta = q(&[(0, 1), (1, -1), (2, 1)]);
        let p = q(&[(2, -1), (3, 1)]);
        assert!(p.is_coprime(&delta).unwrap());
        let inv = p.inverse_mod(&delta).unwrap().unwrap();
        assert_eq!((p * inv).rem_window(&delta, 0).unwrap(), QPoly::one());
        let r = q(&[(-3, 1), (5, 2)]).rem_window(&delta, -2).unwrap();
        assert!(r.low().unwrap() >= -2 && r.high().unwrap() < 2);
        assert!(delta.divides(&(q(&[(-3, 1), (5, 2)]) - r)));
    }

    #[test]
    fn geometric_quotients() {
        let t = QPoly::t_pow(1);
        assert_eq!(t.geometric_quotient(3).unwrap(), q(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(t.geometric_quotient(-2).unwrap(), q(&[(-1, -1), (-2, -1)]));
        assert_eq!(t.geometric_quotient(0), Err(Error::UndefinedExponent));
        assert_eq!(q(&[(0, 1), (1, 1)]).geometric_quotient(2), Err(Error::NonUnitBase));
    }

    #[test]
    fn sharp_and_units() {
        let z = CycNumber::zeta_pow(6, 1);
        let p = CPoly::monomial(z.clone(), 4);
        assert_eq!(p.sharp(), CPoly::monomial(z.conj(), -4));
        let a = q(&[(-1, 1), (0, -1), (1, 1)]);
        let b = q(&[(0, 1), (1, -1), (2, 1)]);
        assert!(a.unit_equivalent(&b));
        assert!(!b.unit_equivalent(&q(&[(0, 1), (1, 1), (2, 1)])));
    }

    #[test]
    fn display() {
        let b = q(&[(-4, -1), (-3, 2), (-2, -1)]);
        assert_eq!(b.to_string(), "-1*t^-4 + 2*t^-3 - 1*t^-2");
        assert_eq!(QPoly::half_pow(-3).to_string(), "1*t^(-3/2)");
        let z = CycNumber::parse("1 - z^2", 6).unwrap();
        assert_eq!(CPoly::monomial(z, 6).to_string(), "(2 - z)*t^3");
    }
}
