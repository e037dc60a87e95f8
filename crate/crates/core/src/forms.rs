//! Integer symmetric bilinear forms.
//!
//! Signatures are computed exactly by congruence diagonalisation over the
//! rationals: simultaneous row and column operations reduce the form to
//! blocks of size one (a pivot whose sign is counted) or two (a hyperbolic
//! pair `[[0, b], [b, 0]]`, which contributes one positive and one negative
//! direction).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{self, IntMatrix};

/// Orientation of a definite lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Definite {
    Positive,
    Negative,
}

/// A symmetric integer matrix viewed as a bilinear form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymForm {
    entries: IntMatrix,
}

/// Congruence invariants of a form. `rank` is the rank of the matrix, so
/// `|signature| <= rank <= size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormInvariants {
    pub rank: usize,
    pub signature: i64,
    pub determinant: BigInt,
    pub even: bool,
}

impl fmt::Display for FormInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank={} sig={} det={} even={}",
            self.rank,
            self.signature,
            self.determinant,
            if self.even { "yes" } else { "no" }
        )
    }
}

impl SymForm {
    /// Validates squareness and symmetry.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        matrix::check_square(&entries)?;
        let n = entries.len();
        for i in 0..n {
            for j in i + 1..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &SymForm) -> SymForm {
        SymForm { entries: matrix::block_diag(&self.entries, &other.entries) }
    }

    /// `k` copies of `self` summed.
    pub fn multiple(&self, k: usize) -> SymForm {
        (0..k).fold(SymForm::empty(), |acc, _| acc.direct_sum(self))
    }

    pub fn negate(&self) -> SymForm {
        SymForm { entries: self.entries.iter().map(|r| r.iter().map(|x| -x).collect()).collect() }
    }

    /// `Uᵀ F U`. `u` must be square of the same size.
    pub fn congruent(&self, u: &[Vec<i64>]) -> Result<SymForm> {
        matrix::check_square(u)?;
        let n = self.size();
        if u.len() != n {
            return Err(Error::DimensionMismatch { left: n as u32, right: u.len() as u32 });
        }
        let mut fu = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                fu[i][j] = (0..n).map(|k| self.entries[i][k] * u[k][j]).sum();
            }
        }
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[i][j] = (0..n).map(|k| u[k][i] * fu[k][j]).sum();
            }
        }
        Ok(SymForm { entries: out })
    }

    pub fn determinant(&self) -> BigInt {
        matrix::det(&self.entries)
    }

    pub fn is_even(&self) -> bool {
        (0..self.size()).all(|i| self.entries[i][i] % 2 == 0)
    }

    pub fn signature(&self) -> i64 {
        let (pos, neg) = self.inertia();
        pos as i64 - neg as i64
    }

    pub fn rank(&self) -> usize {
        let (pos, neg) = self.inertia();
        pos + neg
    }

    pub fn invariants(&self) -> FormInvariants {
        let (pos, neg) = self.inertia();
        FormInvariants {
            rank: pos + neg,
            signature: pos as i64 - neg as i64,
            determinant: self.determinant(),
            even: self.is_even(),
        }
    }

    /// Numbers of positive and negative directions.
    pub fn inertia(&self) -> (usize, usize) {
        let n = self.size();
        let mut a: Vec<Vec<BigRational>> =
            self.entries.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
        let (mut pos, mut neg) = (0usize, 0usize);
        let mut k = 0;
        while k < n {
            if a[k][k].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                    swap_sym(&mut a, k, j);
                }
            }
            if !a[k][k].is_zero() {
                if a[k][k].is_positive() {
                    pos += 1;
                } else {
                    neg += 1;
                }
                for i in k + 1..n {
                    if a[i][k].is_zero() {
                        continue;
                    }
                    let f = &a[i][k] / &a[k][k];
                    add_multiple_sym(&mut a, i, k, &-f);
                }
                k += 1;
                continue;
            }
            // Every remaining diagonal entry is zero.
            let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) else {
                k += 1;
                continue;
            };
            swap_sym(&mut a, k + 1, j);
            let b = a[k][k + 1].clone();
            // Clear rows below against the hyperbolic block [[0, b], [b, 0]].
            for i in k + 2..n {
                let x = &a[i][k + 1] / &b;
                let y = &a[i][k] / &b;
                if !x.is_zero() {
                    add_multiple_sym(&mut a, i, k, &-x);
                }
                if !y.is_zero() {
                    add_multiple_sym(&mut a, i, k + 1, &-y);
                }
            }
            pos += 1;
            neg += 1;
            k += 2;
        }
        (pos, neg)
    }
}

/// Swaps index `i` and `j` in rows and columns.
fn swap_sym(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Row `i += f · row j`, then column `i += f · column j`.
fn add_multiple_sym(a: &mut [Vec<BigRational>], i: usize, j: usize, f: &BigRational) {
    let n = a.len();
    for c in 0..n {
        let v = &a[j][c] * f;
        a[i][c] += v;
    }
    for r in 0..n {
        let v = &a[r][j] * f;
        a[r][i] += v;
    }
}

impl fmt::Display for SymForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// The hyperbolic plane `[[0, 1], [1, 0]]`.
pub fn hyperbolic() -> SymForm {
    SymForm { entries: vec![vec![0, 1], vec![1, 0]] }
}

/// Edges of the E8 Dynkin diagram, 0-based: a chain 0..=6 with node 7
/// attached to node 4.
const E8_EDGES: [(usize, usize); 7] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];

/// The E8 lattice: `±2` on the diagonal and `∓1` on Dynkin edges.
pub fn e8(sign: Definite) -> SymForm {
    let s = match sign {
        Definite::Positive => 1,
        Definite::Negative => -1,
    };
    let mut m = vec![vec![0i64; 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2 * s;
    }
    for &(i, j) in &E8_EDGES {
        m[i][j] = -s;
        m[j][i] = -s;
    }
    SymForm { entries: m }
}

/// Intersection form of the punctured Kummer surface: three hyperbolic
/// planes followed by two negative-definite E8 blocks (rank 22).
pub fn kummer_form() -> SymForm {
    hyperbolic().multiple(3).direct_sum(&e8(Definite::Negative).multiple(2))
}
