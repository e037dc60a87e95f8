//! Seifert matrices of `(2k+1)`-knots and the knot models derived from them.
//!
//! The Alexander polynomial of a Seifert matrix `A` with parity index `k` is
//! `Δ(t) = det(t·A − (−1)^k·Aᵀ)`, taken up to units `±t^s`. A matrix is a
//! valid Seifert matrix of a knot when `A − (−1)^k·Aᵀ` is unimodular, i.e.
//! `|Δ(1)| = 1`.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::forms::{self, SymForm};
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::matrix::{self, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    k: u32,
    a: IntMatrix,
}

impl SeifertMatrix {
    pub fn new(k: u32, a: Vec<Vec<i64>>) -> Result<Self> {
        matrix::check_square(&a)?;
        Ok(Self { k, a })
    }

    /// The empty matrix, the unknot in dimension `2k+1`.
    pub fn unknot(k: u32) -> Self {
        Self { k, a: Vec::new() }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> usize {
        self.a.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Dimension `2k+1` of the knotted sphere.
    pub fn knot_dimension(&self) -> u32 {
        2 * self.k + 1
    }

    /// `(−1)^k`.
    fn parity_sign(&self) -> i64 {
        if self.k.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `det(A − (−1)^k·Aᵀ)`.
    pub fn unimodularity_det(&self) -> BigInt {
        let s = self.parity_sign();
        let at = matrix::transpose(&self.a);
        let m: IntMatrix =
            self.a.iter().zip(&at).map(|(r, rt)| r.iter().zip(rt).map(|(x, y)| x - s * y).collect()).collect();
        matrix::det(&m)
    }

    pub fn is_valid(&self) -> bool {
        self.unimodularity_det().abs().is_one()
    }

    /// The unnormalised determinant `det(t·A − (−1)^k·Aᵀ)`.
    pub fn alexander_determinant(&self) -> LaurentPoly {
        let at = matrix::transpose(&self.a);
        LaurentMatrix::pencil(&self.a, -self.parity_sign(), &at).det()
    }

    /// Alexander polynomial in canonical form, see [`canonical_delta`].
    pub fn alexander(&self) -> LaurentPoly {
        canonical_delta(&self.alexander_determinant())
    }

    /// `A + Aᵀ`, the intersection form of the Seifert hypersurface when `k`
    /// is odd.
    pub fn symmetrized(&self) -> SymForm {
        let n = self.a.len();
        let m = (0..n).map(|i| (0..n).map(|j| self.a[i][j] + self.a[j][i]).collect()).collect();
        SymForm::new(m).expect("A + Aᵀ is symmetric")
    }

    /// Signature of `A + Aᵀ`. Only odd `k` is supported.
    pub fn signature(&self) -> Result<i64> {
        if self.k.is_multiple_of(2) {
            return Err(Error::UnsupportedParity { k: self.k });
        }
        Ok(self.symmetrized().signature())
    }

    /// Block sum `A₁ ⊕ A₂`, a Seifert matrix of the connected sum.
    pub fn connected_sum(&self, other: &SeifertMatrix) -> Result<SeifertMatrix> {
        if self.k != other.k {
            return Err(Error::ParityMismatch { left: self.k, right: other.k });
        }
        Ok(Self { k: self.k, a: matrix::block_diag(&self.a, &other.a) })
    }

    /// `−Aᵀ`, a Seifert matrix of the reversed mirror image `−K*`.
    pub fn mirror_reverse(&self) -> SeifertMatrix {
        let a = matrix::transpose(&self.a).into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect();
        Self { k: self.k, a }
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SEIFERT k={} dim={}", self.k, self.a.len())?;
        for row in &self.a {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Canonical representative of an Alexander polynomial: lowest exponent 0,
/// and sign fixed so that `Δ(1) = 1` whenever `Δ(1) = ±1`. Otherwise the
/// constant coefficient is made positive.
pub fn canonical_delta(p: &LaurentPoly) -> LaurentPoly {
    let q = p.normalize();
    let at_one: BigInt = q.terms().map(|(_, c)| c.clone()).sum();
    if at_one == BigInt::from(-1) {
        -q
    } else {
        q
    }
}

/// Seifert matrix whose symmetrisation is the Kummer form: the strict upper
/// triangle of the form plus half its (even) diagonal, with `k = 1`.
pub fn kummer_seifert() -> SeifertMatrix {
    let form = forms::kummer_form();
    let n = form.size();
    let a = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Less => form.get(i, j),
                    std::cmp::Ordering::Equal => form.get(i, i) / 2,
                    std::cmp::Ordering::Greater => 0,
                })
                .collect()
        })
        .collect();
    SeifertMatrix { k: 1, a }
}

/// Signatures of 3-knots are exactly the multiples of 16.
pub fn realizable_3knot_signature(s: i64) -> bool {
    s % 16 == 0
}

/// How a knot model was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    Seifert(String),
    Sum(Box<Origin>, Box<Origin>),
    Mirror(Box<Origin>),
    Spin(Box<Origin>),
}

impl Origin {
    /// Number of outermost spin steps.
    pub fn spin_depth(&self) -> u32 {
        match self {
            Origin::Spin(inner) => 1 + inner.spin_depth(),
            _ => 0,
        }
    }
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Seifert(label) => f.write_str(label),
            Origin::Sum(a, b) => write!(f, "sum({a},{b})"),
            Origin::Mirror(a) => write!(f, "mirror({a})"),
            Origin::Spin(a) => write!(f, "spin({a})"),
        }
    }
}

/// A knot together with the invariants this crate can certify for it.
///
/// `seifert` is present only for models built from a Seifert matrix (and
/// sums and mirrors of those); spinning drops it. `sigma` is present only
/// in dimensions `n ≡ 3 (mod 4)` with a Seifert matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotModel {
    pub(crate) n: u32,
    pub(crate) seifert: Option<SeifertMatrix>,
    pub(crate) delta: LaurentPoly,
    pub(crate) sigma: Option<i64>,
    pub(crate) simple: bool,
    pub(crate) origin: Origin,
}

impl KnotModel {
    /// `simple` asserts that the knot bounds a simply connected Seifert
    /// hypersurface with this Seifert matrix.
    pub fn from_seifert(s: SeifertMatrix, simple: bool, label: impl Into<String>) -> Self {
        let delta = s.alexander();
        let sigma = if s.k % 2 == 1 { Some(s.symmetrized().signature()) } else { None };
        Self { n: s.knot_dimension(), seifert: Some(s), delta, sigma, simple, origin: Origin::Seifert(label.into()) }
    }

    /// The unknotted `(2k+1)`-sphere, modelled by the empty Seifert matrix.
    pub fn unknot(k: u32) -> Self {
        Self::from_seifert(SeifertMatrix::unknot(k), true, "unknot")
    }

    /// The 3-knot bounding the punctured Kummer surface.
    pub fn kummer() -> Self {
        static KUMMER: OnceLock<KnotModel> = OnceLock::new();
        KUMMER.get_or_init(|| Self::from_seifert(kummer_seifert(), true, "kummer")).clone()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn seifert(&self) -> Option<&SeifertMatrix> {
        self.seifert.as_ref()
    }

    pub fn delta(&self) -> &LaurentPoly {
        &self.delta
    }

    pub fn sigma(&self) -> Option<i64> {
        self.sigma
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    /// Connected sum. The Alexander polynomial is the product of the
    /// summands' and the signature is additive.
    pub fn connected_sum(&self, other: &KnotModel) -> Result<KnotModel> {
        if self.n != other.n {
            return Err(Error::KnotDimensionMismatch { left: self.n, right: other.n });
        }
        let seifert = match (&self.seifert, &other.seifert) {
            (Some(a), Some(b)) => Some(a.connected_sum(b)?),
            _ => None,
        };
        let sigma = match (self.sigma, other.sigma) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        Ok(KnotModel {
            n: self.n,
            seifert,
            delta: canonical_delta(&(&self.delta * &other.delta)),
            sigma,
            simple: self.simple && other.simple,
            origin: Origin::Sum(Box::new(self.origin.clone()), Box::new(other.origin.clone())),
        })
    }

    /// The reversed mirror image `−K*`.
    pub fn mirror(&self) -> KnotModel {
        KnotModel {
            n: self.n,
            seifert: self.seifert.as_ref().map(SeifertMatrix::mirror_reverse),
            delta: canonical_delta(&self.delta.invert_variable()),
            sigma: self.sigma.map(|s| -s),
            simple: self.simple,
            origin: Origin::Mirror(Box::new(self.origin.clone())),
        }
    }

    /// For a simple `(2k+1)`-knot with `k ≥ 1`, unknottedness is equivalent
    /// to a trivial Alexander polynomial.
    pub fn is_unknotted_simple(&self) -> Result<bool> {
        if !self.simple {
            return Err(Error::Precondition(
                "unknotting criterion needs a simply connected Seifert hypersurface".into(),
            ));
        }
        if self.n < 3 || self.n.is_multiple_of(2) {
            return Err(Error::Precondition(format!(
                "unknotting criterion applies to (2k+1)-knots with k >= 1, got n={}",
                self.n
            )));
        }
        Ok(self.delta.is_one())
    }
}

impl fmt::Display for KnotModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "delta={}", self.delta)?;
        match self.sigma {
            Some(s) => writeln!(f, "sigma={s}")?,
            None => writeln!(f, "sigma=-")?,
        }
        writeln!(f, "simple={}", if self.simple { "yes" } else { "no" })?;
        write!(f, "origin={}", self.origin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::new(0, vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    #[test]
    fn empty_matrix_is_unknot() {
        for k in 0..4 {
            assert!(SeifertMatrix::unknot(k).alexander().is_one());
            assert!(SeifertMatrix::unknot(k).is_valid());
        }
        let u = KnotModel::unknot(1);
        assert_eq!(u.n(), 3);
        assert_eq!(u.sigma(), Some(0));
        assert_eq!(u.is_unknotted_simple(), Ok(true));
    }

    #[test]
    fn trefoil_alexander() {
        let t = trefoil();
        assert!(t.is_valid());
        assert_eq!(t.alexander(), LaurentPoly::from_coeffs(0, &[1, -1, 1]));
        assert_eq!(t.alexander().to_string(), "1 - t + t^2");
        assert_eq!(t.mirror_reverse().alexander().to_string(), "1 - t + t^2");
        assert_eq!(t.signature(), Err(Error::UnsupportedParity { k: 0 }));
    }

    #[test]
    fn invalid_one_by_one() {
        let s = SeifertMatrix::new(0, vec![vec![2]]).unwrap();
        assert!(!s.is_valid());
        assert_eq!(s.unimodularity_det(), BigInt::from(0));
    }

    #[test]
    fn kummer_matrix() {
        let s = kummer_seifert();
        assert_eq!(s.symmetrized(), forms::kummer_form());
        assert_eq!(s.unimodularity_det(), BigInt::from(-1));
        assert!(s.is_valid());
        assert_eq!(s.signature(), Ok(-16));
        // Unnormalised value at 1 is det(A + Aᵀ) = -1.
        let raw = s.alexander_determinant();
        let at_one: BigInt = raw.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(at_one, BigInt::from(-1));
        assert!(!s.alexander().is_one());
        assert_eq!(s.alexander().eval_i64(1).unwrap(), num_rational::BigRational::one());
    }

    #[test]
    fn kummer_sums_and_mirrors() {
        let s = kummer_seifert();
        let ss = s.connected_sum(&s).unwrap();
        assert_eq!(ss.size(), 44);
        assert_eq!(ss.signature(), Ok(-32));
        assert_eq!(s.mirror_reverse().signature(), Ok(16));
        assert_eq!(s.mirror_reverse().mirror_reverse(), s);
        assert!(matches!(s.connected_sum(&trefoil()), Err(Error::ParityMismatch { left: 1, right: 0 })));
        assert_eq!(s.connected_sum(&SeifertMatrix::unknot(1)).unwrap(), s);
    }

    #[test]
    fn kummer_model_is_knotted() {
        let k = KnotModel::kummer();
        assert_eq!(k.n(), 3);
        assert_eq!(k.sigma(), Some(-16));
        assert_eq!(k.is_unknotted_simple(), Ok(false));
        let kk = k.connected_sum(&k).unwrap();
        assert_eq!(kk.is_unknotted_simple(), Ok(false));
        assert_eq!(kk.sigma(), Some(-32));
        let zero = k.connected_sum(&k.mirror()).unwrap();
        assert_eq!(zero.sigma(), Some(0));
        assert_eq!(zero.is_unknotted_simple(), Ok(false));
    }

    #[test]
    fn unknotting_preconditions() {
        let t = KnotModel::from_seifert(trefoil(), false, "trefoil");
        assert!(matches!(t.is_unknotted_simple(), Err(Error::Precondition(_))));
        let t = KnotModel::from_seifert(trefoil(), true, "trefoil");
        // n = 1 is outside the criterion.
        assert!(matches!(t.is_unknotted_simple(), Err(Error::Precondition(_))));
    }

    #[test]
    fn realizable_signatures() {
        assert!(realizable_3knot_signature(0));
        assert!(realizable_3knot_signature(-16));
        assert!(!realizable_3knot_signature(8));
    }
}
