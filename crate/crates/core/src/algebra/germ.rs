//! Germs of rational functions at `t = z_n^a` and their truncated expansions.
//!
//! The half power `t^{1/2}` takes the value `z_{2n}^a` at the center, so all
//! constants live in `Q(z_{2n})`.

use std::fmt;

use super::cyclotomic::CycNumber;
use super::laurent::CPoly;
use super::rational::Rat;
use super::ratfunc::RatFunc;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Center {
    pub n: u32,
    pub a: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "infinity"),
        }
    }
}

impl Center {
    pub fn new(n: u32, a: i64) -> Center {
        Center { n, a: a.rem_euclid(n as i64) }
    }

    /// Cyclotomic order of the constant field.
    pub fn order(&self) -> u32 {
        2 * self.n
    }

    /// Value of `t^{1/2}` at the center.
    pub fn sqrt_value(&self) -> CycNumber {
        CycNumber::zeta_pow(self.order(), self.a)
    }

    /// Value of `t` at the center.
    pub fn value(&self) -> CycNumber {
        CycNumber::zeta_pow(self.order(), 2 * self.a)
    }

    /// `z_n^k` in the constant field of this center.
    pub fn root(&self, k: i64) -> CycNumber {
        CycNumber::zeta_pow(self.order(), 2 * k)
    }

    /// Valuation of a rational function; negative for poles.
    pub fn valuation(&self, f: &RatFunc) -> Option<i64> {
        f.valuation_at(&self.sqrt_value())
    }

    pub fn germ_valuation(&self, f: &RatFunc) -> Result<Valuation> {
        match self.valuation(f) {
            None => Ok(Valuation::Infinite),
            Some(v) if v < 0 => Err(Error::NotAGerm),
            Some(v) => Ok(Valuation::Finite(v as u32)),
        }
    }

    pub fn is_unit(&self, f: &RatFunc) -> bool {
        self.valuation(f) == Some(0)
    }

    /// `p = u q` for a unit germ `u`.
    pub fn unit_equivalent(&self, p: &RatFunc, q: &RatFunc) -> bool {
        match (self.valuation(p), self.valuation(q)) {
            (None, None) => true,
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// First `d` coefficients of the expansion of `f` in powers of `t - t0`.
    pub fn jet(&self, f: &RatFunc, d: usize) -> Result<Jet> {
        if f.is_zero() {
            return Ok(Jet { center: *self, coeffs: vec![CycNumber::zero(); d] });
        }
        let v_den: usize = f
            .denominator_factors()
            .iter()
            .map(|(g, k)| {
                *k as usize * super::ratfunc::poly_valuation(g, &self.sqrt_value()).unwrap() as usize
            })
            .sum();
        let len = d + v_den;
        let num = self.series(f.numerator(), len);
        let mut den = vec![CycNumber::zero(); len];
        den[0] = CycNumber::one();
        for (g, k) in f.denominator_factors() {
            let s = self.series(g, len);
            for _ in 0..*k {
                den = series_mul(&den, &s, len);
            }
        }
        if num[..v_den].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotAGerm);
        }
        let num = &num[v_den..];
        let den = &den[v_den..];
        Ok(Jet { center: *self, coeffs: series_div(num, den, d)? })
    }

    /// Taylor coefficients of a Laurent polynomial in `u` about the center,
    /// in powers of `h = t - t0`, using `u^k = u0^k (1 + h/t0)^{k/2}`.
    fn series(&self, p: &CPoly, len: usize) -> Vec<CycNumber> {
        let u0 = self.sqrt_value();
        let t0_inv = self.value().inv().unwrap();
        let mut out = vec![CycNumber::zero(); len];
        for (k, c) in p.terms() {
            let lead = c.mul_ref(&u0.pow(*k).unwrap());
            // binom(k/2, j) t0^{-j}
            let mut binom = Rat::ONE;
            let mut tpow = CycNumber::one();
            for (j, slot) in out.iter_mut().enumerate() {
                if binom.is_zero() {
                    break;
                }
                *slot = slot.add_ref(&lead.mul_ref(&tpow).scale(&binom));
                let top = Rat::new(*k, 2).sub(&Rat::int(j as i64));
                binom = binom.mul(&top).div(&Rat::int(j as i64 + 1)).unwrap();
                tpow = tpow.mul_ref(&t0_inv);
            }
        }
        out
    }
}

fn series_mul(a: &[CycNumber], b: &[CycNumber], len: usize) -> Vec<CycNumber> {
    let mut out = vec![CycNumber::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
            }
        }
    }
    out
}

fn series_div(num: &[CycNumber], den: &[CycNumber], len: usize) -> Result<Vec<CycNumber>> {
    let inv0 = den[0].inv().map_err(|_| Error::NonUnitGerm)?;
    let mut out: Vec<CycNumber> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = num.get(k).cloned().unwrap_or_else(CycNumber::zero);
        for j in 1..=k {
            if let Some(d) = den.get(j) {
                if !d.is_zero() {
                    acc = acc.sub_ref(&d.mul_ref(&out[k - j]));
                }
            }
        }
        out.push(acc.mul_ref(&inv0));
    }
    Ok(out)
}

/// An element of the local ring at a center.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalGerm {
    center: Center,
    value: RatFunc,
}

impl RationalGerm {
    pub fn new(center: Center, value: RatFunc) -> Result<RationalGerm> {
        center.germ_valuation(&value)?;
        Ok(RationalGerm { center, value })
    }

    pub fn center(&self) -> Center {
        self.center
    }

    pub fn value(&self) -> &RatFunc {
        &self.value
    }

    pub fn valuation(&self) -> Valuation {
        self.center.germ_valuation(&self.value).expect("checked on construction")
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Valuation::Finite(0)
    }

    pub fn invert(&self) -> Result<RationalGerm> {
        if !self.is_unit() {
            return Err(Error::NonUnitGerm);
        }
        Ok(RationalGerm { center: self.center, value: self.value.inv()? })
    }

    pub fn mul(&self, other: &RationalGerm) -> Result<RationalGerm> {
        self.same_center(other)?;
        Ok(RationalGerm { center: self.center, value: self.value.mul_rf(&other.value) })
    }

    pub fn add(&self, other: &RationalGerm) -> Result<RationalGerm> {
        self.same_center(other)?;
        Ok(RationalGerm { center: self.center, value: self.value.add_rf(&other.value) })
    }

    fn same_center(&self, other: &RationalGerm) -> Result<()> {
        if self.center == other.center {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn jet(&self, d: usize) -> Result<Jet> {
        if d == 0 {
            return Err(Error::InvalidParameters("jet order must be positive".into()));
        }
        self.center.jet(&self.value, d)
    }

    pub fn unit_equivalent(&self, other: &RationalGerm) -> bool {
        self.center == other.center && self.center.unit_equivalent(&self.value, &other.value)
    }
}

/// A class modulo `(t - t0)^d`, as its first `d` expansion coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet {
    pub center: Center,
    pub coeffs: Vec<CycNumber>,
}

impl Jet {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycNumber::is_zero)
    }

    pub fn mul(&self, other: &Jet) -> Result<Jet> {
        if self.center != other.center || self.order() != other.order() {
            return Err(Error::RingMismatch);
        }
        Ok(Jet { center: self.center, coeffs: series_mul(&self.coeffs, &other.coeffs, self.order()) })
    }

    pub fn add(&self, other: &Jet) -> Result<Jet> {
        if self.center != other.center || self.order() != other.order() {
            return Err(Error::RingMismatch);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_ref(b)).collect();
        Ok(Jet { center: self.center, coeffs })
    }

    pub fn sub(&self, other: &Jet) -> Result<Jet> {
        let neg = Jet { center: other.center, coeffs: other.coeffs.iter().map(CycNumber::neg).collect() };
        self.add(&neg)
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.order();
        if self.is_zero() {
            return write!(f, "0 (mod (t-zeta)^{d})");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*(t-zeta)")?,
                _ => write!(f, "({c})*(t-zeta)^{k}")?,
            }
        }
        write!(f, " (mod (t-zeta)^{d})")
    }
}
