//! Dense matrices over a commutative ring.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::cyclotomic::CycNumber;
use super::laurent::LaurentPoly;
use super::rational::Rat;
use super::ratfunc::RatFunc;
use super::ring::{Coeff, Ring};
use crate::error::{Error, Result};

/// Rings with a partial exact division.
pub trait ExactDiv: Ring {
    fn exact_quotient(&self, d: &Self) -> Option<Self>;
}

/// The involution `f -> f^#`.
pub trait Sharp {
    fn sharp(&self) -> Self;
}

impl<C: Coeff> ExactDiv for LaurentPoly<C> {
    fn exact_quotient(&self, d: &Self) -> Option<Self> {
        self.exact_div(d).ok()
    }
}

impl ExactDiv for RatFunc {
    fn exact_quotient(&self, d: &Self) -> Option<Self> {
        self.div_rf(d).ok()
    }
}

impl ExactDiv for Rat {
    fn exact_quotient(&self, d: &Self) -> Option<Self> {
        self.div(d).ok()
    }
}

impl ExactDiv for CycNumber {
    fn exact_quotient(&self, d: &Self) -> Option<Self> {
        Coeff::try_div(self, d)
    }
}

impl ExactDiv for BigInt {
    fn exact_quotient(&self, d: &Self) -> Option<Self> {
        Coeff::try_div(self, d)
    }
}

impl<C: Coeff> Sharp for LaurentPoly<C> {
    fn sharp(&self) -> Self {
        LaurentPoly::sharp(self)
    }
}

impl Sharp for RatFunc {
    fn sharp(&self) -> Self {
        RatFunc::sharp(self)
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> T>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diag(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn scalar(n: usize, c: T) -> Self {
        Self::diag(vec![c; n])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn map<U: Ring, F: Fn(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// The `r x c` block starting at `(i0, j0)`.
    pub fn block(&self, i0: usize, j0: usize, r: usize, c: usize) -> Self {
        assert!(i0 + r <= self.rows && j0 + c <= self.cols, "block out of range");
        Self::from_fn(r, c, |i, j| self[(i0 + i, j0 + j)].clone())
    }

    /// Assembles a matrix from a grid of blocks with matching sizes.
    pub fn from_blocks(grid: &[Vec<Matrix<T>>]) -> Self {
        let heights: Vec<usize> = grid.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = grid[0].iter().map(|b| b.cols).collect();
        for row in grid {
            assert_eq!(row.len(), widths.len(), "block grid is ragged");
            for (b, w) in row.iter().zip(&widths) {
                assert_eq!(b.cols, *w, "block width mismatch");
            }
        }
        for (row, h) in grid.iter().zip(&heights) {
            for b in row {
                assert_eq!(b.rows, *h, "block height mismatch");
            }
        }
        let rows = heights.iter().sum();
        let cols = widths.iter().sum();
        let mut out = Self::zeros(rows, cols);
        let mut i0 = 0;
        for (row, h) in grid.iter().zip(&heights) {
            let mut j0 = 0;
            for (b, w) in row.iter().zip(&widths) {
                for i in 0..*h {
                    for j in 0..*w {
                        out[(i0 + i, j0 + j)] = b[(i, j)].clone();
                    }
                }
                j0 += w;
            }
            i0 += h;
        }
        out
    }

    pub fn hstack(parts: &[Matrix<T>]) -> Self {
        Self::from_blocks(&[parts.to_vec()])
    }

    pub fn vstack(parts: &[Matrix<T>]) -> Self {
        let grid: Vec<Vec<Matrix<T>>> = parts.iter().map(|p| vec![p.clone()]).collect();
        Self::from_blocks(&grid)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn add_m(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub_m(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub_ref(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg_m(&self) -> Self {
        self.map(Ring::neg_ref)
    }

    pub fn mul_m(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = if a.is_one() { b.clone() } else if b.is_one() { a.clone() } else { a.mul_ref(b) };
                    let slot = &mut out.data[i * other.cols + j];
                    *slot = if slot.is_zero() { prod } else { slot.add_ref(&prod) };
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u64) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut sq = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_m(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_m(&sq);
            }
        }
        acc
    }

    /// Determinant by dynamic programming over column subsets; division free.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut dp: Vec<Option<T>> = vec![None; 1 << n];
        dp[0] = Some(T::one());
        for mask in 0usize..(1 << n) {
            let Some(val) = dp[mask].take() else { continue };
            let row = mask.count_ones() as usize;
            if row == n {
                dp[mask] = Some(val);
                continue;
            }
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let a = &self[(row, j)];
                if a.is_zero() {
                    continue;
                }
                let above = (mask >> (j + 1)).count_ones();
                let mut term = val.mul_ref(a);
                if above % 2 == 1 {
                    term = term.neg_ref();
                }
                let slot = &mut dp[mask | (1 << j)];
                *slot = Some(match slot.take() {
                    Some(s) => s.add_ref(&term),
                    None => term,
                });
            }
            // keep the value alive only for the full mask
        }
        dp[(1 << n) - 1].take().unwrap_or_else(T::zero)
    }

    pub fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != skip_row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != skip_col).collect();
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Classical adjugate, `adj(A) A = det(A) I`.
    pub fn adjugate(&self) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        if n == 1 {
            return Self::identity(1);
        }
        Self::from_fn(n, n, |i, j| {
            let d = self.minor(j, i).det();
            if (i + j) % 2 == 1 {
                d.neg_ref()
            } else {
                d
            }
        })
    }
}

impl<T: ExactDiv> Matrix<T> {
    /// Inverse over `T`: fails with `Singular` on a zero determinant and with
    /// `NonUnitBase` when `adj/det` leaves `T`.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::Singular);
        }
        let adj = self.adjugate();
        let data: Option<Vec<T>> = adj.data.iter().map(|x| x.exact_quotient(&d)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data: data.ok_or(Error::NonUnitBase)? })
    }

    pub fn pow_i(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u64))
        } else {
            Ok(self.inverse()?.pow(k.unsigned_abs()))
        }
    }

    /// `Σ_{i<ℓ} A^i` for `ℓ > 0`, `-Σ_{1<=i<=-ℓ} A^{-i}` otherwise.
    pub fn geometric_quotient(&self, l: i64) -> Result<Self> {
        if l == 0 {
            return Err(Error::UndefinedExponent);
        }
        let n = self.rows;
        let (base, count, sign) = if l > 0 {
            if self.det().is_zero() {
                return Err(Error::NonUnitBase);
            }
            (self.clone(), l as u64, false)
        } else {
            let inv = self.inverse().map_err(|_| Error::NonUnitBase)?;
            (inv, l.unsigned_abs(), true)
        };
        let mut acc = Self::zeros(n, n);
        let mut p = if sign { base.clone() } else { Self::identity(n) };
        for _ in 0..count {
            acc = acc.add_m(&p);
            p = p.mul_m(&base);
        }
        Ok(if sign { acc.neg_m() } else { acc })
    }
}

impl<T: Ring + Sharp> Matrix<T> {
    /// Entrywise `#` followed by transposition.
    pub fn sharp_t(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].sharp())
    }

    pub fn sharp(&self) -> Self {
        self.map(Sharp::sharp)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

macro_rules! mat_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<T: Ring> $tr<&Matrix<T>> for &Matrix<T> {
            type Output = Matrix<T>;
            fn $m(self, rhs: &Matrix<T>) -> Matrix<T> {
                self.$f(rhs)
            }
        }
        impl<T: Ring> $tr<Matrix<T>> for Matrix<T> {
            type Output = Matrix<T>;
            fn $m(self, rhs: Matrix<T>) -> Matrix<T> {
                self.$f(&rhs)
            }
        }
        impl<T: Ring> $tr<&Matrix<T>> for Matrix<T> {
            type Output = Matrix<T>;
            fn $m(self, rhs: &Matrix<T>) -> Matrix<T> {
                self.$f(rhs)
            }
        }
        impl<T: Ring> $tr<Matrix<T>> for &Matrix<T> {
            type Output = Matrix<T>;
            fn $m(self, rhs: Matrix<T>) -> Matrix<T> {
                self.$f(&rhs)
            }
        }
    };
}

mat_binop!(Add, add, add_m);
mat_binop!(Sub, sub, sub_m);
mat_binop!(Mul, mul, mul_m);

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.neg_m()
    }
}

impl<T: Ring> Neg for Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.neg_m()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

/// Rank over the field of fractions by Gaussian elimination; the pivot is the
/// entry of lowest total degree, ties broken row-major.
pub fn fraction_rank(m: &Matrix<RatFunc>) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut used_rows = vec![false; rows];
    let mut used_cols = vec![false; cols];
    let mut rank = 0;
    let size = |x: &RatFunc| -> i64 {
        let den: i64 = x.denominator_factors().iter().map(|(f, k)| f.span().unwrap() * *k as i64).sum();
        x.numerator().span().unwrap_or(0) + den
    };
    loop {
        let mut best: Option<(i64, usize, usize)> = None;
        for i in (0..rows).filter(|&i| !used_rows[i]) {
            for j in (0..cols).filter(|&j| !used_cols[j]) {
                let x = &a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let s = size(x);
                if best.is_none_or(|(b, _, _)| s < b) {
                    best = Some((s, i, j));
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        used_rows[pi] = true;
        used_cols[pj] = true;
        rank += 1;
        let pinv = a[(pi, pj)].inv().expect("nonzero pivot");
        for i in (0..rows).filter(|&i| !used_rows[i]) {
            if a[(i, pj)].is_zero() {
                continue;
            }
            let factor = a[(i, pj)].mul_rf(&pinv);
            for j in (0..cols).filter(|&j| !used_cols[j]) {
                if a[(pi, j)].is_zero() {
                    continue;
                }
                let v = a[(i, j)].sub_rf(&factor.mul_rf(&a[(pi, j)]));
                a[(i, j)] = v;
            }
            a[(i, pj)] = RatFunc::zero();
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::QPoly;

    fn qm(rows: Vec<Vec<i64>>) -> Matrix<Rat> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(Rat::int).collect()).collect())
    }

    #[test]
    fn determinant_and_adjugate() {
        let a = qm(vec![vec![2, 1, 0], vec![1, 3, 4], vec![0, 5, 6]]);
        assert_eq!(a.det(), Rat::int(2 * (18 - 20) - (6)));
        let adj = a.adjugate();
        assert_eq!(&adj * &a, Matrix::scalar(3, a.det()));
        let inv = a.inverse().unwrap();
        assert_eq!(&inv * &a, Matrix::identity(3));
        let sing = qm(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(sing.inverse(), Err(Error::Singular));
    }

    #[test]
    fn blocks() {
        let i2 = Matrix::<Rat>::identity(2);
        let z = Matrix::<Rat>::zeros(2, 1);
        let m = Matrix::from_blocks(&[vec![i2.clone(), z.clone()]]);
        assert_eq!(m.cols(), 3);
        assert_eq!(m.block(0, 0, 2, 2), i2);
        assert_eq!(Matrix::vstack(&[i2.clone(), i2.clone()]).rows(), 4);
    }

    #[test]
    fn laurent_matrix_geometric_quotient() {
        // companion-type matrix with unit determinant
        let t = QPoly::t_pow(1);
        let c = Matrix::from_rows(vec![vec![QPoly::zero(), QPoly::one()], vec![t.clone(), QPoly::zero()]]);
        for l in [-4i64, -1, 1, 3, 5] {
            let g = c.geometric_quotient(l).unwrap();
            let lhs = (Matrix::identity(2) - &c) * g;
            let rhs = Matrix::identity(2) - c.pow_i(l).unwrap();
            assert_eq!(lhs, rhs, "l = {l}");
        }
        assert_eq!(c.geometric_quotient(1).unwrap(), Matrix::identity(2));
        assert_eq!(c.geometric_quotient(0), Err(Error::UndefinedExponent));
    }
}
