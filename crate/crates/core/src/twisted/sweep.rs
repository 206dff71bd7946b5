//! The default grid of metabelian settings.

use num_integer::Integer;

/// `(m, n, b)` with `m ∈ {2,3,4}`, `n ∈ {3,4,5,7}` coprime, `b ∈ Z_n^m`
/// with `Σb = 0`, `b ≠ 0`, at most `cap` vectors per pair in lexicographic
/// order.
pub fn character_grid(ms: &[i64], ns: &[i64], cap: usize) -> Vec<(i64, i64, Vec<i64>)> {
    let mut out = Vec::new();
    for &m in ms {
        for &n in ns {
            if m.gcd(&n) != 1 {
                continue;
            }
            for b in characters(m, n).into_iter().take(cap) {
                out.push((m, n, b));
            }
        }
    }
    out
}

/// All nonzero `b ∈ {0..n-1}^m` with `Σb ≡ 0 (mod n)`, lexicographic.
pub fn characters(m: i64, n: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut b = vec![0i64; m as usize];
    loop {
        if b.iter().sum::<i64>() % n == 0 && b.iter().any(|&v| v != 0) {
            out.push(b.clone());
        }
        let mut i = m as usize;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            b[i] += 1;
            if b[i] < n {
                break;
            }
            b[i] = 0;
        }
    }
}

pub const DEFAULT_MS: [i64; 3] = [2, 3, 4];
pub const DEFAULT_NS: [i64; 4] = [3, 4, 5, 7];
pub const DEFAULT_CAP: usize = 200;

pub fn default_grid() -> Vec<(i64, i64, Vec<i64>)> {
    character_grid(&DEFAULT_MS, &DEFAULT_NS, DEFAULT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(characters(2, 3), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(characters(4, 7).len(), 342);
        let grid = default_grid();
        let settings: i64 = grid.iter().map(|(_, n, _)| n - 1).sum();
        assert_eq!(settings, 2233);
    }
}
