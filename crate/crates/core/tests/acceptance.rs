//! Acceptance gate: one line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hdknot::forms::{self, SymForm};
use hdknot::handles::{self, DiskSystem};
use hdknot::laurent::{LaurentMatrix, LaurentPoly};
use hdknot::projection::{self, ImmersedSphereExpr as Imm, LiftAssignment, Liftability, DEFAULT_MU};
use hdknot::seifert::{self, KnotModel, SeifertMatrix};
use hdknot::spin;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Check, Option<Duration>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn kummer_form() -> Check {
    let inv = forms::kummer_form().invariants();
    ensure!(inv.rank == 22, "rank {}", inv.rank);
    ensure!(inv.signature == -16, "signature {}", inv.signature);
    ensure!(inv.determinant == BigInt::from(-1), "det {}", inv.determinant);
    ensure!(inv.even, "form is odd");
    Ok(inv.to_string())
}

fn check_lift(r: i64, k: &KnotModel) -> Result<(), String> {
    ensure!(k.sigma() == Some(16 * r), "r={r}: sigma {:?}", k.sigma());
    ensure!(k.is_unknotted_simple() == Ok(false), "r={r}: lift not certified knotted");
    Ok(())
}

fn realize() -> Check {
    let mut lifts = 0;
    for r in -3..=3 {
        let small = projection::realize_signature_with_mu(r, 2);
        let report = small.classify_lifts(None, 0).map_err(|e| e.to_string())?;
        ensure!(report.exhaustive && report.classes.len() == 1 << small.mu(), "r={r}: not exhaustive");
        for c in &report.classes {
            check_lift(r, &small.lift(&c.rho).map_err(|e| e.to_string())?)?;
            lifts += 1;
        }
        let full = projection::realize_signature(r);
        ensure!(full.mu() >= DEFAULT_MU, "r={r}: mu {}", full.mu());
        ensure!(full.singular_components().iter().all(|c| c.double_points_only), "r={r}: triple points");
        let rhos = LiftAssignment::sample(full.mu(), 100, 0x5eed_u64.wrapping_add_signed(r));
        ensure!(rhos.len() == 100, "r={r}: {} samples", rhos.len());
        for rho in &rhos {
            check_lift(r, &full.lift(rho).map_err(|e| e.to_string())?)?;
            lifts += 1;
        }
    }
    Ok(format!("{lifts} lifts over r in -3..3, sigma = 16r and knotted"))
}

fn unknotting_predicate() -> Check {
    ensure!(KnotModel::kummer().is_unknotted_simple() == Ok(false), "Kummer 3-knot not knotted");
    let empty = KnotModel::from_seifert(SeifertMatrix::unknot(1), true, "empty");
    ensure!(empty.is_unknotted_simple() == Ok(true), "empty Seifert matrix not unknotted");
    Ok("Kummer knotted, empty unknotted".into())
}

fn multiplicativity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa1e);
    for i in 0..200 {
        let k = if i % 2 == 0 { rng.gen_range(0..3) * 2 } else { rng.gen_range(0..3) * 2 + 1 };
        let a = common::random_valid_seifert(&mut rng, k);
        let b = common::random_valid_seifert(&mut rng, k);
        let sum = a.connected_sum(&b).map_err(|e| e.to_string())?;
        let product = (&a.alexander() * &b.alexander()).normalize();
        ensure!(sum.alexander().normalize() == product, "case {i}: {} vs {product}", sum.alexander());
    }
    Ok("200 pairs, k of both parities".into())
}

fn spin_tower() -> Check {
    let base = KnotModel::kummer();
    for m in 0..=5 {
        let k = spin::spin_times(&base, m).map_err(|e| e.to_string())?;
        ensure!(k.delta() == base.delta(), "m={m}: delta changed");
        ensure!(k.n() == 3 + m, "m={m}: n={}", k.n());
        ensure!(spin::is_knotted_tower(&k) == Ok(true), "m={m}: not knotted");
    }
    Ok("m = 0..5".into())
}

fn liftability() -> Check {
    for k in 1..=10 {
        let g = Imm::Giller.spun(k).liftable().map_err(|e| e.to_string())?;
        ensure!(g.status == Liftability::NonLiftable, "SpinI^{k}(Giller): {}", g.status);
        let e = Imm::Embedded(2).spun(k).liftable().map_err(|e| e.to_string())?;
        ensure!(e.status == Liftability::Liftable, "SpinI^{k}(Embedded(2)): {}", e.status);
        let sum = Imm::conn_sum(Imm::Giller.spun(k), Imm::Embedded(2).spun(k)).map_err(|e| e.to_string())?;
        let s = sum.liftable().map_err(|e| e.to_string())?;
        ensure!(s.status == Liftability::NonLiftable, "{sum}: {}", s.status);
    }
    let g = Imm::conn_sum(Imm::Embedded(2), Imm::Giller).map_err(|e| e.to_string())?;
    ensure!(g.liftable().map_err(|e| e.to_string())?.status == Liftability::NonLiftable, "{g}");
    Ok("k = 1..10".into())
}

fn framing() -> Check {
    let ds = DiskSystem::unperturbed(vec![0; 22]);
    let ds = DiskSystem::new(ds.disks().to_vec(), handles::kirby_disk_targets()).map_err(|e| e.to_string())?;
    let moves = handles::adjust_to_targets(&ds);
    ensure!(moves.len() == 21, "{} moves", moves.len());
    let framings = ds.apply(&moves).map_err(|e| e.to_string())?.framings();
    let mut want = vec![-2; 22];
    want[0] = 0;
    ensure!(framings == want, "framings {framings:?}");
    Ok("21 moves, framings (0, -2 x 21)".into())
}

fn oracles() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c1e);
    for i in 0..200 {
        let n = rng.gen_range(0..=6);
        let m = common::random_symmetric(&mut rng, n, 5);
        let (pos, neg) = common::eigen_sign_counts(&m);
        let f = SymForm::new(m).map_err(|e| e.to_string())?;
        ensure!(f.signature() == pos as i64 - neg as i64, "form {i}: {} vs {pos}-{neg}", f.signature());
        ensure!(f.rank() == pos + neg, "form {i}: rank {}", f.rank());
    }
    for i in 0..100 {
        let n = rng.gen_range(0..=5);
        let rows: Vec<Vec<LaurentPoly>> =
            (0..n).map(|_| (0..n).map(|_| common::random_laurent(&mut rng, (-2, 2), 3, 3)).collect()).collect();
        let ours = LaurentMatrix::from_rows(rows.clone()).map_err(|e| e.to_string())?.det();
        let oracle = common::laurent_cofactor_det(&rows);
        ensure!(ours == oracle, "matrix {i}: {ours} vs {oracle}");
    }
    Ok("200 signatures, 100 Laurent determinants".into())
}

fn trefoil() -> Check {
    let t = SeifertMatrix::new(0, vec![vec![-1, 1], vec![0, -1]]).map_err(|e| e.to_string())?;
    let s = t.alexander().to_string();
    ensure!(s == "1 - t + t^2", "rendered `{s}`");
    Ok(s)
}

fn realizability() -> Check {
    for s in -64..=64 {
        ensure!(seifert::realizable_3knot_signature(s) == (s % 16 == 0), "s={s}");
    }
    let hits = (-64..=64).filter(|&s| seifert::realizable_3knot_signature(s)).count();
    Ok(format!("{hits} realizable values in [-64, 64]"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "Kummer form invariants", kummer_form, Some(Duration::from_secs(1))),
        (2, "signature realization", realize, Some(Duration::from_secs(10))),
        (3, "unknotting predicate", unknotting_predicate, None),
        (4, "Alexander multiplicativity", multiplicativity, Some(Duration::from_secs(10))),
        (5, "spin tower", spin_tower, None),
        (6, "liftability calculus", liftability, None),
        (7, "disk adjustment and framings", framing, None),
        (8, "oracle agreement", oracles, Some(Duration::from_secs(30))),
        (9, "trefoil smoke test", trefoil, None),
        (10, "realizability predicate", realizability, None),
    ];
    let mut failed = 0;
    for (n, name, check, bound) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, bound) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, bound {b:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("[PASS] criterion {n}: {name} ({detail}) [{elapsed:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {n}: {name}: {why} [{elapsed:.2?}]");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
