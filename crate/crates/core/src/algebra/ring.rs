//! Minimal algebraic traits shared by coefficients, polynomials, rational
//! functions and matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::CycNumber;
use super::rational::Rat;
use crate::error::{Error, Result};

/// A commutative ring with identity.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_int(n: i64) -> Self;
}

/// A ring in which nonzero elements can be inverted.
pub trait Field: Ring {
    fn try_inv(&self) -> Result<Self>;
}

/// Coefficient rings of Laurent polynomials.
pub trait Coeff: Ring + fmt::Display {
    /// Complex conjugation (identity on real coefficients).
    fn conj(&self) -> Self;
    /// The quotient `self / other` when it exists in this ring.
    fn try_div(&self, other: &Self) -> Option<Self>;
    fn is_unit(&self) -> bool;
    /// Image in a cyclotomic field (rationals embed in every one).
    fn to_cyc(&self) -> CycNumber;
    /// `Some((negative, |c|))` for real rational coefficients, `None` for
    /// genuinely cyclotomic ones (printed in parentheses).
    fn real_parts(&self) -> Option<(bool, Self)>;
    /// Parses one coefficient; `order` is the cyclotomic order in scope.
    fn parse_coeff(s: &str, order: u32) -> Result<Self>;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Coeff for BigInt {
    fn conj(&self) -> Self {
        self.clone()
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
    fn is_unit(&self) -> bool {
        One::is_one(&self.abs())
    }
    fn to_cyc(&self) -> CycNumber {
        CycNumber::rational(Rat::from_bigint(self))
    }
    fn real_parts(&self) -> Option<(bool, Self)> {
        Some((self.is_negative(), self.abs()))
    }
    fn parse_coeff(s: &str, _order: u32) -> Result<Self> {
        s.trim().parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat::ZERO
    }
    fn one() -> Self {
        Rat::ONE
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rat::is_one(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn from_int(n: i64) -> Self {
        Rat::int(n)
    }
}

impl Field for Rat {
    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
}

impl Coeff for Rat {
    fn conj(&self) -> Self {
        self.clone()
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        self.div(other).ok()
    }
    fn is_unit(&self) -> bool {
        !Rat::is_zero(self)
    }
    fn to_cyc(&self) -> CycNumber {
        CycNumber::rational(self.clone())
    }
    fn real_parts(&self) -> Option<(bool, Self)> {
        let neg = self.signum() < 0;
        Some((neg, if neg { self.neg() } else { self.clone() }))
    }
    fn parse_coeff(s: &str, _order: u32) -> Result<Self> {
        s.parse()
    }
}

impl Ring for CycNumber {
    fn zero() -> Self {
        CycNumber::zero()
    }
    fn one() -> Self {
        CycNumber::one()
    }
    fn is_zero(&self) -> bool {
        CycNumber::is_zero(self)
    }
    fn is_one(&self) -> bool {
        CycNumber::is_one(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.checked_add(other).expect("ring mismatch")
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("ring mismatch")
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("ring mismatch")
    }
    fn neg_ref(&self) -> Self {
        CycNumber::neg(self)
    }
    fn from_int(n: i64) -> Self {
        CycNumber::rational(Rat::int(n))
    }
}

impl Field for CycNumber {
    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
}

impl Coeff for CycNumber {
    fn conj(&self) -> Self {
        CycNumber::conj(self)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        let inv = other.inv().ok()?;
        self.checked_mul(&inv).ok()
    }
    fn is_unit(&self) -> bool {
        !CycNumber::is_zero(self)
    }
    fn to_cyc(&self) -> CycNumber {
        self.clone()
    }
    fn real_parts(&self) -> Option<(bool, Self)> {
        let q = self.as_rational()?;
        let neg = q.signum() < 0;
        Some((neg, CycNumber::rational(if neg { q.neg() } else { q.clone() })))
    }
    fn parse_coeff(s: &str, order: u32) -> Result<Self> {
        CycNumber::parse(s, order)
    }
}

/// `base^exp` by repeated squaring, `exp >= 0`.
pub fn pow<R: Ring>(base: &R, mut exp: u64) -> R {
    let mut acc = R::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc.mul_ref(&sq);
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.mul_ref(&sq);
        }
    }
    acc
}
