//! Laurent polynomials in one variable `t` with arbitrary-precision integer
//! coefficients, and exact determinants of square matrices over that ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial `Σ c_e t^e` with `e ∈ Z`.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty
/// map and structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, exp: i64) -> Self {
        Self::from_terms([(exp, c.into())])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `coeffs[i]` is the coefficient of `t^(lowest + i)`.
    pub fn from_coeffs(lowest: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (lowest + i as i64, c)))
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^s`.
    pub fn shift(&self, s: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + s, c.clone())).collect() }
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn invert_variable(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    /// Exact value at `t = a`. Negative exponents produce denominators.
    pub fn eval(&self, a: &BigInt) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::EvalAtZero);
        }
        let base = BigRational::from_integer(a.clone());
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            let pow = if e >= 0 {
                num_traits::pow(base.clone(), e as usize)
            } else {
                num_traits::pow(base.recip(), e.unsigned_abs() as usize)
            };
            acc += pow * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    pub fn eval_i64(&self, a: i64) -> Result<BigRational> {
        self.eval(&BigInt::from(a))
    }

    /// Canonical representative of the class `{±t^s · p}`: the lowest
    /// exponent is moved to 0 and the constant coefficient made positive.
    pub fn normalize(&self) -> Self {
        let Some(low) = self.min_exp() else {
            return Self::zero();
        };
        let shifted = self.shift(-low);
        if shifted.coeff(0).is_negative() {
            -shifted
        } else {
            shifted
        }
    }

    /// `self ≐ other`, equality up to multiplication by a unit `±t^s`.
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let d_top = d.max_exp().expect("nonzero");
        let d_low = d.min_exp().expect("nonzero");
        let d_lead = &d.terms[&d_top];
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            let low = rem.min_exp().expect("nonzero");
            if top - low < d_top - d_low {
                return None;
            }
            let (q, r) = rem.terms[&top].div_rem(d_lead);
            if !r.is_zero() {
                return None;
            }
            let step = Self::monomial(q, top - d_top);
            rem = &rem - &(&step * d);
            quot += step;
        }
        Some(quot)
    }
}

impl fmt::Display for LaurentPoly {
    /// Increasing exponent order, e.g. `1 - t + t^2` or `t^-1 + t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs.clone();
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

/// A square matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    size: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(size: usize) -> Self {
        Self { size, entries: vec![LaurentPoly::zero(); size * size] }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != size {
                return Err(Error::NotSquare { rows: size, row, cols: r.len() });
            }
            entries.extend(r);
        }
        Ok(Self { size, entries })
    }

    /// `t·A + c·B` for integer matrices `A`, `B` of equal size.
    pub fn pencil(a: &[Vec<i64>], c: i64, b: &[Vec<i64>]) -> Self {
        let n = a.len();
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = LaurentPoly::from_terms([(1, a[i][j]), (0, c * b[i][j])]);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        let n = self.size + other.size;
        let mut m = Self::zeros(n);
        for i in 0..self.size {
            for j in 0..self.size {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.size {
            for j in 0..other.size {
                m[(self.size + i, self.size + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Exact determinant. Each row is shifted into `Z[t]`, eliminated
    /// fraction-free, and the total shift divided back out at the end.
    pub fn det(&self) -> LaurentPoly {
        let n = self.size;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut total_shift = 0i64;
        let mut rows: Vec<Vec<DensePoly>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let low = row.iter().filter_map(LaurentPoly::min_exp).min().unwrap_or(0);
            total_shift += low;
            rows.push(row.iter().map(|p| DensePoly::from_shifted(p, -low)).collect());
        }
        let det = bareiss(rows);
        det.into_laurent(total_shift)
    }
}

impl std::ops::Index<(usize, usize)> for LaurentMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.entries[i * self.size + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for LaurentMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.entries[i * self.size + j]
    }
}

/// Dense polynomial in `Z[t]`, `coeffs[i]` multiplies `t^i`, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
struct DensePoly {
    coeffs: Vec<BigInt>,
}

impl DensePoly {
    fn from_shifted(p: &LaurentPoly, s: i64) -> Self {
        let mut coeffs = Vec::new();
        for (e, c) in p.terms() {
            let idx = usize::try_from(e + s).expect("row shift makes exponents non-negative");
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, BigInt::zero());
            }
            coeffs[idx] = c.clone();
        }
        Self { coeffs }
    }

    fn one() -> Self {
        Self { coeffs: vec![BigInt::one()] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self { coeffs: Vec::new() };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }.trim()
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = self.coeffs.clone();
        out.resize(n, BigInt::zero());
        for (i, b) in o.coeffs.iter().enumerate() {
            out[i] -= b;
        }
        Self { coeffs: out }.trim()
    }

    /// Exact division; panics if `d` does not divide `self`, which cannot
    /// happen for the Bareiss recurrence.
    fn div_exact(&self, d: &Self) -> Self {
        if d.coeffs.len() == 1 && d.coeffs[0].is_one() {
            return self.clone();
        }
        let mut rem = self.coeffs.clone();
        let dl = d.coeffs.len();
        let lead = &d.coeffs[dl - 1];
        if rem.len() < dl {
            assert!(rem.iter().all(Zero::is_zero), "inexact Bareiss division");
            return Self { coeffs: Vec::new() };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dl + 1];
        for qi in (0..quot.len()).rev() {
            let top = &rem[qi + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            assert!(r.is_zero(), "inexact Bareiss division");
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[qi + j] -= &q * dc;
            }
            quot[qi] = q;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact Bareiss division");
        Self { coeffs: quot }.trim()
    }

    fn into_laurent(self, shift: i64) -> LaurentPoly {
        LaurentPoly::from_terms(self.coeffs.into_iter().enumerate().map(|(i, c)| (i as i64 + shift, c)))
    }
}

fn bareiss(mut m: Vec<Vec<DensePoly>>) -> DensePoly {
    let n = m.len();
    let mut negate = false;
    let mut prev = DensePoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return DensePoly { coeffs: Vec::new() },
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        DensePoly { coeffs: det.coeffs.into_iter().map(|c| -c).collect() }
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c)
    }

    #[test]
    fn add_cancels() {
        assert_eq!(p(0, &[1, 1]) + p(0, &[-1, 1]), LaurentPoly::monomial(2, 1));
        assert_eq!(p(-1, &[1, 0, 1]), LaurentPoly::monomial(1, -1) + LaurentPoly::t());
        let q = p(-2, &[3, 0, -1]);
        assert_eq!(&q + &LaurentPoly::zero(), q);
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(0, &[1, -1]) * p(0, &[1, 1]), p(0, &[1, 0, -1]));
        assert_eq!(p(-1, &[1, 1]) * LaurentPoly::t(), p(0, &[1, 1]));
        let q = p(-3, &[2, 5, -7]);
        assert_eq!(&q * &LaurentPoly::one(), q);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(0, &[1, -1, 1]).eval_i64(1).unwrap(), BigRational::one());
        assert_eq!(p(-1, &[1, 0, 1]).eval_i64(2).unwrap(), BigRational::new(5.into(), 2.into()));
        assert!(LaurentPoly::zero().eval_i64(7).unwrap().is_zero());
        assert_eq!(LaurentPoly::one().eval_i64(0), Err(Error::EvalAtZero));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(p(2, &[-1, 1]).normalize(), p(0, &[1, -1]));
        assert_eq!(LaurentPoly::one().normalize(), LaurentPoly::one());
        assert_eq!(p(-1, &[1, -1, 1]).normalize(), p(0, &[1, -1, 1]));
        assert!(LaurentPoly::zero().normalize().is_zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(0, &[1, -1, 1]).to_string(), "1 - t + t^2");
        assert_eq!(p(-1, &[1, 0, 1]).to_string(), "t^-1 + t");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(0, &[-2, 0, 3]).to_string(), "-2 + 3t^2");
        assert_eq!(p(1, &[-1]).to_string(), "-t");
    }

    #[test]
    fn det_small() {
        let m = LaurentMatrix::from_rows(vec![vec![LaurentPoly::t()]]).unwrap();
        assert_eq!(m.det(), LaurentPoly::t());
        let m = LaurentMatrix::from_rows(vec![
            vec![LaurentPoly::one(), LaurentPoly::t()],
            vec![LaurentPoly::t(), LaurentPoly::one()],
        ])
        .unwrap();
        assert_eq!(m.det(), p(0, &[1, 0, -1]));
        assert_eq!(LaurentMatrix::zeros(0).det(), LaurentPoly::one());
        assert!(LaurentMatrix::zeros(3).det().is_zero());
    }

    #[test]
    fn det_needs_pivot_swap() {
        // [[0, t^-1], [t, 0]] has determinant -1.
        let m = LaurentMatrix::from_rows(vec![
            vec![LaurentPoly::zero(), LaurentPoly::monomial(1, -1)],
            vec![LaurentPoly::t(), LaurentPoly::zero()],
        ])
        .unwrap();
        assert_eq!(m.det(), LaurentPoly::constant(-1));
    }

    #[test]
    fn non_square_rejected() {
        let err = LaurentMatrix::from_rows(vec![vec![LaurentPoly::one()], vec![]]).unwrap_err();
        assert!(matches!(err, Error::NotSquare { row: 0, cols: 1, .. }));
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = p(-2, &[1, 3, -2]);
        let b = p(1, &[4, 0, -1, 5]);
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!(p(0, &[1, 0, 1]).div_exact(&p(0, &[1, 1])), None);
    }
}
