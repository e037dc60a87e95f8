//! Immersed disks with signed double points, the framings they induce on
//! the attaching circles of 2-handles, and intersection forms of framed-link
//! handlebodies.
//!
//! A disk's framing is twice the sum of the signs of its double points.
//! Connected sum with a small immersed 2-sphere carrying a single double
//! point of sign `ε` changes that sum by exactly `ε`; [`adjust_to_targets`]
//! finds the shortest sequence of such moves reaching prescribed sums.

use std::fmt;

use crate::error::{Error, Result};
use crate::forms::SymForm;
use crate::matrix;
use crate::projection::Sign;

pub fn framing_of(disk: &[Sign]) -> i64 {
    2 * sign_sum(disk)
}

pub fn sign_sum(disk: &[Sign]) -> i64 {
    disk.iter().map(|s| s.value()).sum()
}

/// Per-disk double-point signs and the sign sums they should reach.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskSystem {
    disks: Vec<Vec<Sign>>,
    targets: Vec<i64>,
}

impl DiskSystem {
    pub fn new(disks: Vec<Vec<Sign>>, targets: Vec<i64>) -> Result<Self> {
        if disks.len() != targets.len() {
            return Err(Error::DiskTargets { disks: disks.len(), targets: targets.len() });
        }
        Ok(Self { disks, targets })
    }

    /// Disks without double points, aiming at `targets`.
    pub fn unperturbed(targets: Vec<i64>) -> Self {
        Self { disks: vec![Vec::new(); targets.len()], targets }
    }

    pub fn disks(&self) -> &[Vec<Sign>] {
        &self.disks
    }

    pub fn targets(&self) -> &[i64] {
        &self.targets
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn sums(&self) -> Vec<i64> {
        self.disks.iter().map(|d| sign_sum(d)).collect()
    }

    pub fn framings(&self) -> Vec<i64> {
        self.disks.iter().map(|d| framing_of(d)).collect()
    }

    pub fn at_targets(&self) -> bool {
        self.sums() == self.targets
    }

    /// Appends each move's double point to its disk.
    pub fn apply(&self, moves: &[Move]) -> Result<DiskSystem> {
        let mut out = self.clone();
        for m in moves {
            let len = out.disks.len();
            out.disks.get_mut(m.disk).ok_or(Error::DiskIndex { index: m.disk, len })?.push(m.epsilon);
        }
        Ok(out)
    }
}

/// Connected sum of disk `disk` (0-based) with a sphere whose one double
/// point has sign `epsilon`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub disk: usize,
    pub epsilon: Sign,
}

impl fmt::Display for Move {
    /// Disks are printed 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "disk {}: {}1", self.disk + 1, self.epsilon)
    }
}

/// Shortest move sequence bringing every sign sum to its target. Moves for
/// a disk are contiguous, share the sign of the deficit, and disks appear
/// in ascending order.
pub fn adjust_to_targets(ds: &DiskSystem) -> Vec<Move> {
    let mut moves = Vec::new();
    for (disk, (d, &target)) in ds.disks.iter().zip(&ds.targets).enumerate() {
        let deficit = target - sign_sum(d);
        let epsilon = if deficit > 0 { Sign::Plus } else { Sign::Minus };
        moves.extend((0..deficit.unsigned_abs()).map(|_| Move { disk, epsilon }));
    }
    moves
}

/// Target sign sums for the framed link of the punctured Kummer surface:
/// 0 on the first component and −1 on the other 21, giving framings 0 and −2.
pub fn kirby_disk_targets() -> Vec<i64> {
    let mut t = vec![-1; 22];
    t[0] = 0;
    t
}

/// A framed link recorded by its linking numbers and framings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedLink {
    linking: Vec<Vec<i64>>,
    framings: Vec<i64>,
}

impl FramedLink {
    /// `linking` must be symmetric with zero diagonal.
    pub fn new(linking: Vec<Vec<i64>>, framings: Vec<i64>) -> Result<Self> {
        matrix::check_square(&linking)?;
        let n = linking.len();
        if framings.len() != n {
            return Err(Error::InvalidFramedLink(format!("{} framings for {n} components", framings.len())));
        }
        for i in 0..n {
            if linking[i][i] != 0 {
                return Err(Error::InvalidFramedLink(format!(
                    "linking matrix has nonzero diagonal entry at component {}",
                    i + 1
                )));
            }
            for j in i + 1..n {
                if linking[i][j] != linking[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(Self { linking, framings })
    }

    /// Splits a form into linking numbers (off-diagonal) and framings.
    pub fn from_form(form: &SymForm) -> Self {
        let n = form.size();
        let mut linking = form.entries().to_vec();
        let mut framings = Vec::with_capacity(n);
        for (i, row) in linking.iter_mut().enumerate() {
            framings.push(row[i]);
            row[i] = 0;
        }
        Self { linking, framings }
    }

    pub fn size(&self) -> usize {
        self.framings.len()
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn linking(&self) -> &[Vec<i64>] {
        &self.linking
    }

    /// Intersection form of the 4-manifold obtained by attaching 2-handles
    /// to the 4-ball along the link.
    pub fn intersection_form(&self) -> SymForm {
        let mut m = self.linking.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = self.framings[i];
        }
        SymForm::new(m).expect("linking matrix is symmetric")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerCheck {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

/// Checks the invariants a form must share with the Kummer form: rank 22,
/// signature −16, determinant −1 and evenness. Congruence over `Z` is not
/// decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerReport {
    pub invariants: crate::forms::FormInvariants,
    pub checks: Vec<KummerCheck>,
}

impl KummerReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for KummerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.invariants)?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<9} expected {:<4} got {:<4} {}",
                c.name,
                c.expected,
                c.actual,
                if c.passed { "ok" } else { "FAIL" }
            )?;
        }
        write!(f, "kummer invariants: {}", if self.passed() { "match" } else { "mismatch" })
    }
}

pub fn verify_kummer(form: &SymForm) -> KummerReport {
    let inv = form.invariants();
    let check =
        |name, expected: String, actual: String| KummerCheck { name, passed: expected == actual, expected, actual };
    let yes_no = |b: bool| if b { "yes" } else { "no" }.to_string();
    let checks = vec![
        check("rank", "22".into(), inv.rank.to_string()),
        check("signature", "-16".into(), inv.signature.to_string()),
        check("det", "-1".into(), inv.determinant.to_string()),
        check("even", "yes".into(), yes_no(inv.even)),
    ];
    KummerReport { invariants: inv, checks }
}
