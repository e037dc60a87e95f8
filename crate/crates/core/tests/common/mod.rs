//! Independent oracles and random generators shared by the integration
//! tests. Nothing here calls the crate's determinant or signature code.
#![allow(dead_code, clippy::needless_range_loop)]

use hdknot::laurent::LaurentPoly;
use hdknot::seifert::SeifertMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut perms = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            (p, if inversions % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// Leibniz expansion over Laurent polynomials.
pub fn laurent_det_oracle(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    let mut acc = LaurentPoly::zero();
    for (p, sign) in permutations(n) {
        let mut term = LaurentPoly::constant(sign);
        for (i, &j) in p.iter().enumerate() {
            term = &term * &m[i][j];
            if term.is_zero() {
                break;
            }
        }
        acc += term;
    }
    acc
}

/// Cofactor expansion along the first row, integer entries.
pub fn int_det_oracle(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
        let term = BigInt::from(m[0][j]) * int_det_oracle(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Rational Gaussian elimination with partial pivoting on nonzero entries.
pub fn rational_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k].clone();
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let v = &a[k][j] * &f;
                a[i][j] -= v;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier;
/// `c[i]` is the coefficient of `x^i`.
pub fn charpoly(a: &[Vec<i64>]) -> Vec<BigInt> {
    let n = a.len();
    let am: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut mk: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for l in 0..n {
                    s += &am[i][l] * &mk[l][j];
                }
                next[i][j] = s;
            }
            next[i][i] += &c[n - k + 1];
        }
        mk = next;
        // c_{n-k} = -tr(A·M_k)/k
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &am[i][l] * &mk[l][i];
            }
        }
        c[n - k] = -tr / BigInt::from(k as i64);
    }
    c
}

fn sign_changes(coeffs: impl Iterator<Item = BigInt>) -> usize {
    let signs: Vec<bool> = coeffs.filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// (positive, negative) eigenvalue counts of a symmetric matrix. The
/// characteristic polynomial is real-rooted, so Descartes' rule is exact.
pub fn eigen_sign_counts(a: &[Vec<i64>]) -> (usize, usize) {
    let c = charpoly(a);
    let zero_mult = c.iter().position(|x| !x.is_zero()).unwrap_or(0);
    let stripped: Vec<BigInt> = c[zero_mult..].to_vec();
    let pos = sign_changes(stripped.iter().cloned());
    let neg = sign_changes(stripped.iter().enumerate().map(|(i, x)| if i % 2 == 0 { x.clone() } else { -x.clone() }));
    (pos, neg)
}

pub fn random_laurent(rng: &mut impl Rng, exp: (i64, i64), coeff: i64, max_terms: usize) -> LaurentPoly {
    let terms = rng.gen_range(0..=max_terms);
    LaurentPoly::from_terms((0..terms).map(|_| (rng.gen_range(exp.0..=exp.1), rng.gen_range(-coeff..=coeff))))
}

pub fn random_symmetric(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-bound..=bound);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    m
}

/// Random unimodular matrix as a product of elementary operations.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> Vec<Vec<i64>> {
    let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    if n < 2 {
        return u;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        match rng.gen_range(0..3) {
            0 => {
                let f = if rng.gen::<bool>() { 1 } else { -1 };
                for r in u.iter_mut() {
                    r[i] += f * r[j];
                }
            }
            1 => {
                for r in u.iter_mut() {
                    r.swap(i, j);
                }
            }
            _ => {
                for r in u.iter_mut() {
                    r[i] = -r[i];
                }
            }
        }
    }
    u
}

/// `det(A − εAᵀ)` computed with the cofactor oracle.
pub fn unimodularity_oracle(k: u32, a: &[Vec<i64>]) -> BigInt {
    let eps = if k.is_multiple_of(2) { 1 } else { -1 };
    let n = a.len();
    let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a[i][j] - eps * a[j][i]).collect()).collect();
    int_det_oracle(&m)
}

/// Random valid Seifert matrix of even size in {2, 4}, entries in [-2, 2],
/// found by rejection sampling.
pub fn random_valid_seifert(rng: &mut impl Rng, k: u32) -> SeifertMatrix {
    loop {
        let n = if rng.gen::<bool>() { 2 } else { 4 };
        let a: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        if unimodularity_oracle(k, &a).abs().is_one() {
            return SeifertMatrix::new(k, a).unwrap();
        }
    }
}

/// `t·A + c·B` as a matrix of Laurent polynomials.
pub fn pencil(a: &[Vec<i64>], c: i64, b: &[Vec<i64>]) -> Vec<Vec<LaurentPoly>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| LaurentPoly::from_terms([(1, a[i][j]), (0, c * b[i][j])])).collect()).collect()
}

pub fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|j| (0..n).map(|i| a[i][j]).collect()).collect()
}

/// Cofactor expansion along the first row over Laurent polynomials.
pub fn laurent_cofactor_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut acc = LaurentPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * &laurent_cofactor_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}
