//! Smith normal forms over the local ring at a center and over `Q[t^{±1/2}]`.

use super::germ::{Center, Valuation};
use super::laurent::QPoly;
use super::matrix::Matrix;
use super::ratfunc::RatFunc;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Result of a local Smith normal form: `u * a * v = diagonal`.
#[derive(Clone, Debug)]
pub struct DvrSnf {
    pub exponents: Vec<Valuation>,
    pub diagonal: Matrix<RatFunc>,
    pub u: Option<Matrix<RatFunc>>,
    pub v: Option<Matrix<RatFunc>>,
    pub v_inv: Option<Matrix<RatFunc>>,
}

impl DvrSnf {
    /// Finite exponents only.
    pub fn finite(&self) -> Vec<u32> {
        self.exponents
            .iter()
            .filter_map(|e| match e {
                Valuation::Finite(v) => Some(*v),
                Valuation::Infinite => None,
            })
            .collect()
    }

    /// Finite exponents that are positive; the torsion part of the cokernel.
    pub fn torsion(&self) -> Vec<u32> {
        self.finite().into_iter().filter(|&v| v > 0).collect()
    }
}

fn swap_rows(m: &mut Matrix<RatFunc>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let tmp = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = tmp;
    }
}

fn swap_cols(m: &mut Matrix<RatFunc>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let tmp = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = tmp;
    }
}

/// Elementary divisors over the local ring at `center`. The pivot is an entry
/// of minimal valuation, ties broken row-major. Entries with poles are
/// rejected. With `track`, the transforms `u`, `v` and `v^{-1}` are returned.
pub fn snf_dvr(a: &Matrix<RatFunc>, center: &Center, track: bool) -> Result<DvrSnf> {
    let (r, c) = (a.rows(), a.cols());
    let mut m = a.clone();
    let mut u = track.then(|| Matrix::<RatFunc>::identity(r));
    let mut v = track.then(|| Matrix::<RatFunc>::identity(c));
    let mut v_inv = track.then(|| Matrix::<RatFunc>::identity(c));
    let mut exps = Vec::new();
    let mut vals: Vec<Option<i64>> = m.entries().iter().map(|x| center.valuation(x)).collect();
    if vals.iter().any(|v| v.is_some_and(|v| v < 0)) {
        return Err(Error::NotAGerm);
    }
    for k in 0..r.min(c) {
        let mut best: Option<(i64, usize, usize)> = None;
        for i in k..r {
            for j in k..c {
                if let Some(val) = vals[i * c + j] {
                    if best.is_none_or(|(b, _, _)| val < b) {
                        best = Some((val, i, j));
                    }
                }
            }
        }
        let Some((val, pi, pj)) = best else {
            exps.extend((k..r.min(c)).map(|_| Valuation::Infinite));
            break;
        };
        exps.push(Valuation::Finite(val as u32));
        swap_rows(&mut m, k, pi);
        swap_cols(&mut m, k, pj);
        for j in 0..c {
            vals.swap(k * c + j, pi * c + j);
        }
        for i in 0..r {
            vals.swap(i * c + k, i * c + pj);
        }
        if let Some(u) = u.as_mut() {
            swap_rows(u, k, pi);
        }
        if let Some(v) = v.as_mut() {
            swap_cols(v, k, pj);
        }
        if let Some(vi) = v_inv.as_mut() {
            swap_rows(vi, k, pj);
        }
        let pinv = m[(k, k)].inv()?;
        for i in k + 1..r {
            if m[(i, k)].is_zero() {
                continue;
            }
            let f = m[(i, k)].mul_rf(&pinv);
            for j in k + 1..c {
                if !m[(k, j)].is_zero() {
                    m[(i, j)] = m[(i, j)].sub_rf(&f.mul_rf(&m[(k, j)]));
                    vals[i * c + j] = center.valuation(&m[(i, j)]);
                }
            }
            m[(i, k)] = RatFunc::zero();
            vals[i * c + k] = None;
            if let Some(u) = u.as_mut() {
                for j in 0..r {
                    if !u[(k, j)].is_zero() {
                        u[(i, j)] = u[(i, j)].sub_rf(&f.mul_rf(&u[(k, j)]));
                    }
                }
            }
        }
        for j in k + 1..c {
            if m[(k, j)].is_zero() {
                continue;
            }
            let g = m[(k, j)].mul_rf(&pinv);
            m[(k, j)] = RatFunc::zero();
            vals[k * c + j] = None;
            if let Some(v) = v.as_mut() {
                for i in 0..c {
                    if !v[(i, k)].is_zero() {
                        v[(i, j)] = v[(i, j)].sub_rf(&g.mul_rf(&v[(i, k)]));
                    }
                }
            }
            if let Some(vi) = v_inv.as_mut() {
                for l in 0..c {
                    if !vi[(j, l)].is_zero() {
                        vi[(k, l)] = vi[(k, l)].add_rf(&g.mul_rf(&vi[(j, l)]));
                    }
                }
            }
        }
    }
    exps.sort();
    Ok(DvrSnf { exponents: exps, diagonal: m, u, v, v_inv })
}

/// Invariant factors over `Q[t^{±1/2}]`, normalized monic with lowest
/// exponent zero; zero factors are omitted.
pub fn invariant_factors(a: &Matrix<QPoly>) -> Result<Vec<QPoly>> {
    let (r, c) = (a.rows(), a.cols());
    let mut m = a.clone();
    let mut out = Vec::new();
    let swap_r = |m: &mut Matrix<QPoly>, x: usize, y: usize| {
        for j in 0..c {
            let t = m[(x, j)].clone();
            m[(x, j)] = m[(y, j)].clone();
            m[(y, j)] = t;
        }
    };
    let swap_c = |m: &mut Matrix<QPoly>, x: usize, y: usize| {
        for i in 0..r {
            let t = m[(i, x)].clone();
            m[(i, x)] = m[(i, y)].clone();
            m[(i, y)] = t;
        }
    };
    for k in 0..r.min(c) {
        loop {
            let mut best: Option<(i64, usize, usize)> = None;
            for i in k..r {
                for j in k..c {
                    if let Some(s) = m[(i, j)].span() {
                        if best.is_none_or(|(b, _, _)| s < b) {
                            best = Some((s, i, j));
                        }
                    }
                }
            }
            let Some((_, pi, pj)) = best else { return Ok(out) };
            swap_r(&mut m, k, pi);
            swap_c(&mut m, k, pj);
            let p = m[(k, k)].clone();
            let mut clean = true;
            for i in k + 1..r {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let (q, rem) = m[(i, k)].div_rem(&p)?;
                for j in k..c {
                    let v = m[(i, j)].sub_poly(&q.mul_poly(&m[(k, j)]));
                    m[(i, j)] = v;
                }
                clean &= rem.is_zero();
            }
            for j in k + 1..c {
                if m[(k, j)].is_zero() {
                    continue;
                }
                let (q, rem) = m[(k, j)].div_rem(&p)?;
                for i in k..r {
                    let v = m[(i, j)].sub_poly(&q.mul_poly(&m[(i, k)]));
                    m[(i, j)] = v;
                }
                clean &= rem.is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest of the matrix
            let bad = (k + 1..r).flat_map(|i| (k + 1..c).map(move |j| (i, j))).find(|&(i, j)| !p.divides(&m[(i, j)]));
            match bad {
                Some((i, _)) => {
                    for j in k..c {
                        let v = m[(k, j)].add_poly(&m[(i, j)]);
                        m[(k, j)] = v;
                    }
                }
                None => break,
            }
        }
        out.push(m[(k, k)].normalized());
    }
    Ok(out)
}
