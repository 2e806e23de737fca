//! Exact rank and pivot computations for small integer matrices, over the
//! rationals (fraction-free, arbitrary precision) or a prime field. No
//! floating point anywhere.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::ScalarField;

/// Row indices that become pivots under left-to-right column elimination,
/// choosing for each column the first remaining row with a nonzero entry.
/// `rank == pivots.len()`. Deterministic in the given row order.
pub fn pivot_rows(matrix: &[Vec<i64>], field: ScalarField) -> Vec<usize> {
    match field {
        ScalarField::Rational => pivot_rows_rational(matrix),
        ScalarField::Prime(p) => pivot_rows_mod_p(matrix, p),
    }
}

pub fn rank(matrix: &[Vec<i64>], field: ScalarField) -> usize {
    pivot_rows(matrix, field).len()
}

fn pivot_rows_rational(matrix: &[Vec<i64>]) -> Vec<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = matrix[0].len();
    let mut work: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut used = vec![false; rows];
    for col in 0..cols {
        let Some(p) = (0..rows).find(|&r| !used[r] && !work[r][col].is_zero()) else {
            continue;
        };
        used[p] = true;
        pivots.push(p);
        let pivot_val = work[p][col].clone();
        let pivot_row: Vec<BigInt> = work[p][col..].to_vec();
        for r in 0..rows {
            if used[r] || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            for (dst, pv) in work[r][col..].iter_mut().zip(&pivot_row) {
                *dst = &pivot_val * &*dst - &factor * pv;
            }
            // Keep entries small; the gcd strip preserves the row space.
            let g = work[r][col..]
                .iter()
                .fold(BigInt::zero(), |acc, v| gcd_big(acc, v.abs()));
            if g > BigInt::from(1) {
                for v in work[r][col..].iter_mut() {
                    *v = &*v / &g;
                }
            }
        }
    }
    pivots.sort_unstable();
    pivots
}

fn gcd_big(a: BigInt, b: BigInt) -> BigInt {
    if b.is_zero() {
        a
    } else {
        let r = &a % &b;
        gcd_big(b, r.abs())
    }
}

fn pivot_rows_mod_p(matrix: &[Vec<i64>], p: u64) -> Vec<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = matrix[0].len();
    let reduce = |x: i64| -> u64 { (x % p as i64 + p as i64) as u64 % p };
    let mut work: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| reduce(x)).collect())
        .collect();
    let mulmod = |a: u64, b: u64| -> u64 { ((a as u128 * b as u128) % p as u128) as u64 };
    let mut pivots = Vec::new();
    let mut used = vec![false; rows];
    for col in 0..cols {
        let Some(piv) = (0..rows).find(|&r| !used[r] && work[r][col] != 0) else {
            continue;
        };
        used[piv] = true;
        pivots.push(piv);
        let pivot_val = work[piv][col];
        let pivot_row: Vec<u64> = work[piv][col..].to_vec();
        for r in 0..rows {
            if used[r] || work[r][col] == 0 {
                continue;
            }
            let factor = work[r][col];
            for (dst, &pv) in work[r][col..].iter_mut().zip(&pivot_row) {
                let a = mulmod(pivot_val, *dst);
                let b = mulmod(factor, pv);
                *dst = (a + p - b) % p;
            }
        }
    }
    pivots.sort_unstable();
    pivots
}
