//! Exact rank computation for small integer matrices: fraction-free
//! (Bareiss) elimination over the integers for the rank over the rationals,
//! and modular elimination for the rank over a prime field.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A dense integer matrix in row-major order. Boundary matrices only ever
/// hold entries in {-1, 0, 1}, but products of boundaries are also built
/// here, so entries are i64.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.data[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Matrix product; dimensions must agree.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other.get(k, c);
                }
            }
        }
        out
    }

    /// Rank over the rationals via fraction-free Gaussian elimination
    /// (Bareiss). All arithmetic is exact.
    pub fn rank_rational(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| BigInt::from(self.get(r, c))).collect())
            .collect();
        let mut rank = 0;
        let mut prev_pivot = BigInt::from(1);
        let mut row = 0;
        for col in 0..self.cols {
            // find a pivot in this column at or below `row`
            let Some(pivot_row) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, pivot_row);
            for r in row + 1..self.rows {
                for c in col + 1..self.cols {
                    let num = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                    m[r][c] = &num / &prev_pivot;
                }
                m[r][col] = BigInt::zero();
            }
            prev_pivot = m[row][col].abs();
            rank += 1;
            row += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }

    /// Rank over GF(p) via modular Gaussian elimination.
    pub fn rank_mod_p(&self, p: u64) -> usize {
        let p_i = p as i64;
        let mut m: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.get(r, c).rem_euclid(p_i) as u64)
                    .collect()
            })
            .collect();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pivot_row) = (row..self.rows).find(|&r| m[r][col] % p != 0) else {
                continue;
            };
            m.swap(row, pivot_row);
            let inv = mod_inverse(m[row][col], p);
            for c in col..self.cols {
                m[row][c] = m[row][c] * inv % p;
            }
            for r in 0..self.rows {
                if r != row && m[r][col] != 0 {
                    let factor = m[r][col];
                    for c in col..self.cols {
                        let sub = factor * m[row][c] % p;
                        m[r][c] = (m[r][c] + p - sub) % p;
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }
}

/// Inverse of `a` modulo the prime `p`, by Fermat's little theorem.
fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let modulus = p as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    acc as u64
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
