//! Small helpers for dense integer matrices stored as `Vec<Vec<i64>>`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub(crate) type IntMatrix = Vec<Vec<i64>>;

pub(crate) fn check_square(m: &[Vec<i64>]) -> Result<()> {
    let rows = m.len();
    match m.iter().position(|r| r.len() != rows) {
        Some(row) => Err(Error::NotSquare { rows, row, cols: m[row].len() }),
        None => Ok(()),
    }
}

pub(crate) fn transpose(m: &[Vec<i64>]) -> IntMatrix {
    let n = m.len();
    (0..n).map(|j| (0..n).map(|i| m[i][j]).collect()).collect()
}

pub(crate) fn block_diag(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMatrix {
    let (na, nb) = (a.len(), b.len());
    let mut out = vec![vec![0; na + nb]; na + nb];
    for i in 0..na {
        out[i][..na].copy_from_slice(&a[i]);
    }
    for i in 0..nb {
        out[na + i][na..].copy_from_slice(&b[i]);
    }
    out
}

/// Integer determinant by fraction-free elimination. The empty matrix has
/// determinant 1.
pub(crate) fn det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    if negate {
        -d
    } else {
        d
    }
}
