//! Compositional models of knot projections built from the Kummer-surface
//! projection, their lifts, and the classification of lifts by over/under
//! assignments at the double-point components.
//!
//! Also hosts the inference rules deciding, where possible, whether an
//! immersed sphere is the projection of some knot.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::seifert::KnotModel;
use crate::spin;

/// Number of double-point components of the base projection when its disk
/// system is the minimal one: one double point per disk with target `−1`.
pub const DEFAULT_MU: usize = 21;

/// Sizes above this are sampled rather than enumerated.
pub const EXHAUSTIVE_LIMIT: usize = 20;

pub const DEFAULT_SAMPLE: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KummerTemplate {
    Kummer,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjectionExpr {
    /// The immersed 3-sphere bounding the immersed punctured Kummer surface.
    Base { template: KummerTemplate, mu: usize },
    /// Parallel copies stacked side by side; lifts are connected sums.
    Stack(Vec<ProjectionExpr>),
    /// A copy of the projection next to a copy of its reversed mirror.
    Double(Box<ProjectionExpr>),
    /// Orientation reversal.
    Mirror(Box<ProjectionExpr>),
    /// The spun projection, one dimension higher.
    Spin(Box<ProjectionExpr>),
}

impl ProjectionExpr {
    pub fn base() -> Self {
        Self::base_with_mu(DEFAULT_MU)
    }

    pub fn base_with_mu(mu: usize) -> Self {
        ProjectionExpr::Base { template: KummerTemplate::Kummer, mu }
    }

    pub fn stack(parts: Vec<ProjectionExpr>) -> Result<Self> {
        let e = ProjectionExpr::Stack(parts);
        e.dimension()?;
        Ok(e)
    }

    pub fn double(inner: ProjectionExpr) -> Self {
        ProjectionExpr::Double(Box::new(inner))
    }

    pub fn mirror(inner: ProjectionExpr) -> Self {
        ProjectionExpr::Mirror(Box::new(inner))
    }

    pub fn spin(inner: ProjectionExpr) -> Self {
        ProjectionExpr::Spin(Box::new(inner))
    }

    /// Dimension of the immersed sphere. Fails on an empty stack, a stack
    /// whose parts disagree, or a base with `mu = 0`.
    pub fn dimension(&self) -> Result<u32> {
        match self {
            ProjectionExpr::Base { mu, .. } => {
                if *mu == 0 {
                    Err(Error::Precondition("base projection needs mu >= 1".into()))
                } else {
                    Ok(3)
                }
            }
            ProjectionExpr::Stack(parts) => {
                let mut dims = parts.iter().map(ProjectionExpr::dimension);
                let first =
                    dims.next().ok_or_else(|| Error::Precondition("stack needs at least one part".into()))??;
                for d in dims {
                    let d = d?;
                    if d != first {
                        return Err(Error::DimensionMismatch { left: first, right: d });
                    }
                }
                Ok(first)
            }
            ProjectionExpr::Double(inner) | ProjectionExpr::Mirror(inner) => inner.dimension(),
            ProjectionExpr::Spin(inner) => Ok(inner.dimension()? + 1),
        }
    }

    /// Number of double-point components.
    pub fn mu(&self) -> usize {
        match self {
            ProjectionExpr::Base { mu, .. } => *mu,
            ProjectionExpr::Stack(parts) => parts.iter().map(ProjectionExpr::mu).sum(),
            ProjectionExpr::Double(inner) => 2 * inner.mu(),
            ProjectionExpr::Mirror(inner) | ProjectionExpr::Spin(inner) => inner.mu(),
        }
    }

    /// Replaces every base's `mu` with `mu`.
    pub fn with_base_mu(&self, mu: usize) -> Self {
        match self {
            ProjectionExpr::Base { template, .. } => ProjectionExpr::Base { template: *template, mu },
            ProjectionExpr::Stack(parts) => ProjectionExpr::Stack(parts.iter().map(|p| p.with_base_mu(mu)).collect()),
            ProjectionExpr::Double(i) => ProjectionExpr::double(i.with_base_mu(mu)),
            ProjectionExpr::Mirror(i) => ProjectionExpr::mirror(i.with_base_mu(mu)),
            ProjectionExpr::Spin(i) => ProjectionExpr::spin(i.with_base_mu(mu)),
        }
    }

    /// Signature shared by all lifts: each base contributes −16, mirrors
    /// negate and doubles contribute nothing.
    pub fn predicted_signature(&self) -> i64 {
        -16 * self.signed_base_count()
    }

    /// Base count weighted by orientation; `Double` contributes nothing.
    pub fn signed_base_count(&self) -> i64 {
        match self {
            ProjectionExpr::Base { .. } => 1,
            ProjectionExpr::Stack(parts) => parts.iter().map(ProjectionExpr::signed_base_count).sum(),
            ProjectionExpr::Double(_) => 0,
            ProjectionExpr::Mirror(inner) => -inner.signed_base_count(),
            ProjectionExpr::Spin(inner) => inner.signed_base_count(),
        }
    }

    pub fn singular_components(&self) -> Vec<SingularComponent> {
        let mut out = Vec::with_capacity(self.mu());
        self.collect_components(0, &mut out);
        out
    }

    fn collect_components(&self, depth: u32, out: &mut Vec<SingularComponent>) {
        match self {
            ProjectionExpr::Base { mu, .. } => {
                for _ in 0..*mu {
                    out.push(SingularComponent { id: out.len(), spin_depth: depth, double_points_only: true });
                }
            }
            ProjectionExpr::Stack(parts) => {
                for p in parts {
                    p.collect_components(depth, out);
                }
            }
            ProjectionExpr::Double(inner) => {
                inner.collect_components(depth, out);
                inner.collect_components(depth, out);
            }
            ProjectionExpr::Mirror(inner) => inner.collect_components(depth, out),
            ProjectionExpr::Spin(inner) => inner.collect_components(depth + 1, out),
        }
    }

    /// The knot lifting this projection with the given over/under choices.
    ///
    /// Every lift of the base projection bounds a copy of the punctured
    /// Kummer surface, so its invariants do not depend on `rho`; the
    /// assignment only selects which lift is meant.
    pub fn lift(&self, rho: &LiftAssignment) -> Result<KnotModel> {
        self.dimension()?;
        if rho.len() != self.mu() {
            return Err(Error::LiftLength { expected: self.mu(), got: rho.len() });
        }
        self.lift_unchecked(rho.signs())
    }

    fn lift_unchecked(&self, rho: &[Sign]) -> Result<KnotModel> {
        match self {
            ProjectionExpr::Base { .. } => Ok(KnotModel::kummer()),
            ProjectionExpr::Stack(parts) => {
                let mut offset = 0;
                let mut acc: Option<KnotModel> = None;
                for p in parts {
                    let m = p.mu();
                    let k = p.lift_unchecked(&rho[offset..offset + m])?;
                    offset += m;
                    acc = Some(match acc {
                        None => k,
                        Some(a) => a.connected_sum(&k)?,
                    });
                }
                Ok(acc.expect("stack is nonempty"))
            }
            ProjectionExpr::Double(inner) => {
                let half = inner.mu();
                let first = inner.lift_unchecked(&rho[..half])?;
                let second = inner.lift_unchecked(&rho[half..])?;
                first.connected_sum(&second.mirror())
            }
            ProjectionExpr::Mirror(inner) => Ok(inner.lift_unchecked(rho)?.mirror()),
            ProjectionExpr::Spin(inner) => spin::spin_knot(&inner.lift_unchecked(rho)?),
        }
    }

    /// Enumerates (for `mu <= 20`) or samples the over/under assignments and
    /// annotates each with the invariants of its lift.
    pub fn classify_lifts(&self, sample: Option<usize>, seed: u64) -> Result<ClassificationReport> {
        self.dimension()?;
        let mu = self.mu();
        let exhaustive = mu <= EXHAUSTIVE_LIMIT;
        let assignments: Vec<LiftAssignment> = if exhaustive {
            (0..1u64 << mu).map(|i| LiftAssignment::from_index(i, mu)).collect()
        } else {
            LiftAssignment::sample(mu, sample.unwrap_or(DEFAULT_SAMPLE), seed)
        };
        let classes = assignments
            .into_par_iter()
            .map(|rho| {
                let knot = self.lift(&rho)?;
                Ok(LiftClass { invariants: LiftInvariants::of(&knot), rho })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassificationReport { mu, exhaustive, classes })
    }
}

impl fmt::Display for ProjectionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectionExpr::Base { mu, .. } if *mu == DEFAULT_MU => f.write_str("base(kummer)"),
            ProjectionExpr::Base { mu, .. } => write!(f, "base(kummer,mu={mu})"),
            ProjectionExpr::Stack(parts) => {
                f.write_str("stack(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            ProjectionExpr::Double(i) => write!(f, "double({i})"),
            ProjectionExpr::Mirror(i) => write!(f, "mirror({i})"),
            ProjectionExpr::Spin(i) => write!(f, "spin({i})"),
        }
    }
}

/// A projection whose every lift has signature `16·r`, is knotted, and has
/// only double points: `|r|` stacked bases for `r < 0`, their mirror for
/// `r > 0`, and a base doubled with its reversed mirror for `r = 0`.
pub fn realize_signature(r: i64) -> ProjectionExpr {
    realize_signature_with_mu(r, DEFAULT_MU)
}

pub fn realize_signature_with_mu(r: i64, mu: usize) -> ProjectionExpr {
    let base = ProjectionExpr::base_with_mu(mu);
    let stacked = |n: u64| {
        if n == 1 {
            base.clone()
        } else {
            ProjectionExpr::Stack(vec![base.clone(); n as usize])
        }
    };
    match r.signum() {
        -1 => stacked(r.unsigned_abs()),
        1 => ProjectionExpr::mirror(stacked(r.unsigned_abs())),
        _ => ProjectionExpr::double(base),
    }
}

/// A connected component of the singular set: a torus, times one circle for
/// each spin applied around it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SingularComponent {
    pub id: usize,
    pub spin_depth: u32,
    pub double_points_only: bool,
}

impl fmt::Display for SingularComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("T^2")?;
        for _ in 0..self.spin_depth {
            f.write_str(" x S^1")?;
        }
        Ok(())
    }
}

/// Which sheet is on top at a double-point component, measured along the
/// extra coordinate. Ordered `Plus < Minus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// An element of `{±1}^mu`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiftAssignment(Vec<Sign>);

impl LiftAssignment {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self(signs)
    }

    pub fn all_plus(mu: usize) -> Self {
        Self(vec![Sign::Plus; mu])
    }

    /// The `index`-th assignment in lexicographic order.
    pub fn from_index(index: u64, mu: usize) -> Self {
        Self((0..mu).map(|j| if (index >> (mu - 1 - j)) & 1 == 0 { Sign::Plus } else { Sign::Minus }).collect())
    }

    /// `count` distinct uniformly random assignments, sorted.
    pub fn sample(mu: usize, count: usize, seed: u64) -> Vec<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cap = if mu < 63 { count.min(1usize << mu) } else { count };
        let mut seen = BTreeSet::new();
        while seen.len() < cap {
            let signs = (0..mu).map(|_| if rng.gen::<bool>() { Sign::Minus } else { Sign::Plus });
            seen.insert(Self(signs.collect()));
        }
        seen.into_iter().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }
}

impl fmt::Display for LiftAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Invariants of one lift, as reported in a classification table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftInvariants {
    pub n: u32,
    pub sigma: Option<i64>,
    pub delta: LaurentPoly,
    /// `None` when no rule decides knottedness.
    pub knotted: Option<bool>,
}

impl LiftInvariants {
    pub fn of(k: &KnotModel) -> Self {
        Self { n: k.n(), sigma: k.sigma(), delta: k.delta().clone(), knotted: knottedness(k) }
    }
}

impl fmt::Display for LiftInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} sigma=", self.n)?;
        match self.sigma {
            Some(s) => write!(f, "{s}")?,
            None => f.write_str("-")?,
        }
        let knotted = match self.knotted {
            Some(true) => "yes",
            Some(false) => "no",
            None => "unknown",
        };
        write!(f, " knotted={knotted} delta={}", self.delta)
    }
}

/// Knottedness when some rule decides it. A nontrivial Alexander polynomial
/// always certifies knottedness; a trivial one proves unknottedness only for
/// simple odd-dimensional knots.
pub fn knottedness(k: &KnotModel) -> Option<bool> {
    if k.origin().spin_depth() == 0 {
        if let Ok(unknotted) = k.is_unknotted_simple() {
            return Some(!unknotted);
        }
    } else if let Ok(knotted) = spin::is_knotted_tower(k) {
        return Some(knotted);
    }
    if k.delta().is_one() {
        None
    } else {
        Some(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftClass {
    pub rho: LiftAssignment,
    pub invariants: LiftInvariants,
}

/// Lifts grouped by assignment. Equal assignments give equivalent lifts;
/// distinct assignments are not claimed to give inequivalent ones, so the
/// class count is only an upper bound on the number of distinct lifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub mu: usize,
    pub exhaustive: bool,
    pub classes: Vec<LiftClass>,
}

impl ClassificationReport {
    pub fn all_invariants_identical(&self) -> bool {
        self.classes.windows(2).all(|w| w[0].invariants == w[1].invariants)
    }
}

/// Immersed spheres whose liftability the inference rules can reason about.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ImmersedSphereExpr {
    /// Giller's immersed 2-sphere in 3-space, which has no lift.
    Giller,
    /// An embedded `n`-sphere.
    Embedded(u32),
    /// The spun immersed sphere.
    SpinI(Box<ImmersedSphereExpr>),
    ConnSum(Box<ImmersedSphereExpr>, Box<ImmersedSphereExpr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Liftability {
    Liftable,
    NonLiftable,
    Unknown,
}

impl fmt::Display for Liftability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Liftability::Liftable => "Liftable",
            Liftability::NonLiftable => "NonLiftable",
            Liftability::Unknown => "Unknown",
        })
    }
}

/// Verdict plus the rules applied, innermost first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftVerdict {
    pub status: Liftability,
    pub rules: Vec<String>,
}

impl ImmersedSphereExpr {
    pub fn spin(inner: ImmersedSphereExpr) -> Self {
        ImmersedSphereExpr::SpinI(Box::new(inner))
    }

    pub fn conn_sum(a: ImmersedSphereExpr, b: ImmersedSphereExpr) -> Result<Self> {
        let e = ImmersedSphereExpr::ConnSum(Box::new(a), Box::new(b));
        e.dimension()?;
        Ok(e)
    }

    /// `k`-fold spin of `self`.
    pub fn spun(self, k: u32) -> Self {
        (0..k).fold(self, |e, _| ImmersedSphereExpr::spin(e))
    }

    pub fn dimension(&self) -> Result<u32> {
        match self {
            ImmersedSphereExpr::Giller => Ok(2),
            ImmersedSphereExpr::Embedded(n) => Ok(*n),
            ImmersedSphereExpr::SpinI(inner) => Ok(inner.dimension()? + 1),
            ImmersedSphereExpr::ConnSum(a, b) => {
                let (da, db) = (a.dimension()?, b.dimension()?);
                if da != db {
                    return Err(Error::DimensionMismatch { left: da, right: db });
                }
                Ok(da)
            }
        }
    }

    pub fn liftable(&self) -> Result<LiftVerdict> {
        self.dimension()?;
        let mut rules = Vec::new();
        let status = self.infer(&mut rules);
        Ok(LiftVerdict { status, rules })
    }

    fn infer(&self, rules: &mut Vec<String>) -> Liftability {
        use Liftability::*;
        let (status, rule) = match self {
            ImmersedSphereExpr::Giller => (NonLiftable, "Giller's immersed 2-sphere has no lift".to_string()),
            ImmersedSphereExpr::Embedded(n) => (Liftable, format!("an embedded {n}-sphere is its own lift")),
            ImmersedSphereExpr::SpinI(inner) => {
                let s = inner.infer(rules);
                (s, "spinning preserves and reflects liftability".to_string())
            }
            ImmersedSphereExpr::ConnSum(a, b) => {
                let (sa, sb) = (a.infer(rules), b.infer(rules));
                if sa == NonLiftable || sb == NonLiftable {
                    (NonLiftable, "a lift of a connected sum yields a lift of each summand".to_string())
                } else {
                    (Unknown, "no rule concludes liftability of a connected sum".to_string())
                }
            }
        };
        rules.push(format!("{self}: {rule} => {status}"));
        status
    }
}

impl fmt::Display for ImmersedSphereExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImmersedSphereExpr::Giller => f.write_str("giller"),
            ImmersedSphereExpr::Embedded(n) => write!(f, "embedded({n})"),
            ImmersedSphereExpr::SpinI(i) => write!(f, "spin({i})"),
            ImmersedSphereExpr::ConnSum(a, b) => write!(f, "connsum({a},{b})"),
        }
    }
}
