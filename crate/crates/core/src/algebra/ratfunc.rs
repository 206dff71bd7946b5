//! Rational functions over a cyclotomic field in the variable `u = t^{1/2}`.
//!
//! The denominator is kept as a list of monic factors with lowest exponent
//! zero; arithmetic merges factor lists and cancels by trial division, so no
//! gcd is needed on hot paths. [`RatFunc::reduced`] gives the gcd-reduced form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclotomic::CycNumber;
use super::laurent::CPoly;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct RatFunc {
    num: CPoly,
    /// Normalized factors (monic, lowest exponent 0, positive span) with
    /// multiplicities.
    den: Vec<(CPoly, u32)>,
}

fn den_product(den: &[(CPoly, u32)]) -> CPoly {
    let mut acc = CPoly::one();
    for (f, k) in den {
        acc = acc.mul_poly(&f.pow(*k as u64));
    }
    acc
}

/// `u`-adic valuation of a nonzero polynomial at `u = u0`.
pub fn poly_valuation(p: &CPoly, u0: &CycNumber) -> Option<u32> {
    if p.is_empty() {
        return None;
    }
    let mut c = p.dense_u();
    let mut v = 0;
    loop {
        // synthetic division by (u - u0)
        let d = c.len() - 1;
        if d == 0 {
            return Some(v);
        }
        let mut q = vec![CycNumber::zero(); d];
        q[d - 1] = c[d].clone();
        for i in (1..d).rev() {
            q[i - 1] = c[i].add_ref(&u0.mul_ref(&q[i]));
        }
        let rem = c[0].add_ref(&u0.mul_ref(&q[0]));
        if !rem.is_zero() {
            return Some(v);
        }
        v += 1;
        c = q;
    }
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc { num: CPoly::new(), den: Vec::new() }
    }

    pub fn from_poly(p: CPoly) -> RatFunc {
        RatFunc { num: p, den: Vec::new() }
    }

    pub fn constant(c: CycNumber) -> RatFunc {
        RatFunc::from_poly(CPoly::constant(c))
    }

    /// `num / den`; fails on a zero denominator.
    pub fn new(num: CPoly, den: &CPoly) -> Result<RatFunc> {
        if den.is_empty() {
            return Err(Error::DivisionByZero);
        }
        let (unit, factor) = split_unit(den);
        let num = num.mul_poly(&unit);
        let den = factor.map(|f| vec![(f, 1)]).unwrap_or_default();
        Ok(RatFunc { num, den }.reduce())
    }

    pub fn numerator(&self) -> &CPoly {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[(CPoly, u32)] {
        &self.den
    }

    pub fn denominator(&self) -> CPoly {
        den_product(&self.den)
    }

    /// The value as a Laurent polynomial, when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&CPoly> {
        self.den.is_empty().then_some(&self.num)
    }

    /// Laurent polynomial value after full reduction.
    pub fn to_poly(&self) -> Option<CPoly> {
        if self.den.is_empty() {
            return Some(self.num.clone());
        }
        self.num.exact_div(&self.denominator()).ok()
    }

    fn reduce(mut self) -> RatFunc {
        if self.num.is_empty() {
            self.den.clear();
            return self;
        }
        let mut den = std::mem::take(&mut self.den);
        for (f, k) in den.iter_mut() {
            while *k > 0 {
                match self.num.exact_div(f) {
                    Ok(q) => {
                        self.num = q;
                        *k -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        den.retain(|(_, k)| *k > 0);
        self.den = den;
        self
    }

    fn merged(a: &[(CPoly, u32)], b: &[(CPoly, u32)]) -> Vec<(CPoly, u32)> {
        let mut out = a.to_vec();
        for (f, k) in b {
            match out.iter_mut().find(|(g, _)| g == f) {
                Some((_, j)) => *j += k,
                None => out.push((f.clone(), *k)),
            }
        }
        out
    }

    pub fn add_rf(&self, other: &RatFunc) -> RatFunc {
        if self.num.is_empty() {
            return other.clone();
        }
        if other.num.is_empty() {
            return self.clone();
        }
        if self.den == other.den {
            return RatFunc { num: self.num.add_poly(&other.num), den: self.den.clone() }.reduce();
        }
        // common multiple of the two factor lists
        let mut lcm = self.den.clone();
        for (f, k) in &other.den {
            match lcm.iter_mut().find(|(g, _)| g == f) {
                Some((_, j)) => *j = (*j).max(*k),
                None => lcm.push((f.clone(), *k)),
            }
        }
        let cofactor = |den: &[(CPoly, u32)]| -> CPoly {
            let mut acc = CPoly::one();
            for (f, k) in &lcm {
                let have = den.iter().find(|(g, _)| g == f).map_or(0, |(_, j)| *j);
                if *k > have {
                    acc = acc.mul_poly(&f.pow((*k - have) as u64));
                }
            }
            acc
        };
        let num = self.num.mul_poly(&cofactor(&self.den)).add_poly(&other.num.mul_poly(&cofactor(&other.den)));
        RatFunc { num, den: lcm }.reduce()
    }

    pub fn neg_rf(&self) -> RatFunc {
        RatFunc { num: self.num.neg_poly(), den: self.den.clone() }
    }

    pub fn sub_rf(&self, other: &RatFunc) -> RatFunc {
        self.add_rf(&other.neg_rf())
    }

    pub fn mul_rf(&self, other: &RatFunc) -> RatFunc {
        if self.num.is_empty() || other.num.is_empty() {
            return RatFunc::zero();
        }
        let num = self.num.mul_poly(&other.num);
        if other.den.is_empty() {
            return RatFunc { num, den: self.den.clone() }.reduce_if(!self.den.is_empty());
        }
        if self.den.is_empty() {
            return RatFunc { num, den: other.den.clone() }.reduce();
        }
        RatFunc { num, den: RatFunc::merged(&self.den, &other.den) }.reduce()
    }

    fn reduce_if(self, cond: bool) -> RatFunc {
        if cond {
            self.reduce()
        } else {
            self
        }
    }

    pub fn scale(&self, c: &CycNumber) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &CPoly) -> RatFunc {
        self.mul_rf(&RatFunc::from_poly(p.clone()))
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.num.is_empty() {
            return Err(Error::DivisionByZero);
        }
        let (unit, factor) = split_unit(&self.num);
        let num = den_product(&self.den).mul_poly(&unit);
        let den = factor.map(|f| vec![(f, 1)]).unwrap_or_default();
        Ok(RatFunc { num, den }.reduce())
    }

    pub fn div_rf(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul_rf(&other.inv()?))
    }

    pub fn pow_i(&self, k: i64) -> Result<RatFunc> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        Ok(super::ring::pow(&base, k.unsigned_abs()))
    }

    /// `f^#`: conjugate coefficients and invert `t`.
    pub fn sharp(&self) -> RatFunc {
        let mut num = self.num.sharp();
        let mut den = Vec::with_capacity(self.den.len());
        for (f, k) in &self.den {
            let (unit, g) = split_unit(&f.sharp());
            // 1/f#^k = unit^k / g^k
            num = num.mul_poly(&unit.pow(*k as u64));
            den.push((g.expect("positive span is preserved"), *k));
        }
        RatFunc { num, den }
    }

    /// Order of vanishing at `u = u0` (negative for poles); `None` for zero.
    pub fn valuation_at(&self, u0: &CycNumber) -> Option<i64> {
        let mut v = poly_valuation(&self.num, u0)? as i64;
        for (f, k) in &self.den {
            v -= (*k as i64) * poly_valuation(f, u0).expect("nonzero factor") as i64;
        }
        Some(v)
    }

    /// Numerator and denominator with their true gcd removed; the
    /// denominator is normalized (monic, lowest exponent 0).
    pub fn reduced(&self) -> (CPoly, CPoly) {
        let den = den_product(&self.den);
        if self.num.is_empty() {
            return (CPoly::new(), CPoly::one());
        }
        let g = self.num.gcd(&den).expect("nonzero numerator");
        let num = self.num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let (unit, factor) = split_unit(&den);
        (num.mul_poly(&unit), factor.unwrap_or_else(CPoly::one))
    }

    /// Largest cyclotomic order among the coefficients.
    pub fn field_order(&self) -> u32 {
        let mut o = 1;
        let mut see = |p: &CPoly| {
            for (_, c) in p.terms() {
                o = o.max(c.order());
            }
        };
        see(&self.num);
        for (f, _) in &self.den {
            see(f);
        }
        o
    }
}

/// Writes `p = c * u^k * f` and returns `(1/(c u^k), f)` with `f` normalized,
/// or `None` for `f` when `p` is a monomial.
fn split_unit(p: &CPoly) -> (CPoly, Option<CPoly>) {
    let lo = p.low().expect("nonzero");
    let lead = p.leading().unwrap();
    let unit = CPoly::monomial(lead.inv().expect("nonzero"), -lo);
    if p.len() == 1 {
        return (unit, None);
    }
    let f = p.shift(-lo).scale(&lead.inv().unwrap());
    (unit, Some(f))
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &RatFunc) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        if self.num.is_empty() || other.num.is_empty() {
            return self.num.is_empty() && other.num.is_empty();
        }
        self.num.mul_poly(&other.denominator()) == other.num.mul_poly(&self.denominator())
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::from_poly(CPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
    fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add_rf(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub_rf(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_rf(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg_rf()
    }
    fn from_int(n: i64) -> Self {
        RatFunc::constant(CycNumber::int(n))
    }
}

impl Field for RatFunc {
    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
}

impl From<CPoly> for RatFunc {
    fn from(p: CPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }
}

macro_rules! rf_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                self.$f(rhs)
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$f(&rhs)
            }
        }
    };
}

rf_binop!(Add, add, add_rf);
rf_binop!(Sub, sub, sub_rf);
rf_binop!(Mul, mul, mul_rf);

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_rf()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.reduced();
        if den.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({den})")
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
