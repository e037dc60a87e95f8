//! Projections whose every lift has signature 16r, for small r.
//!
//! Run with `cargo run --example realize_signature`.

use hdknot::projection::{self, LiftAssignment};

fn main() -> hdknot::Result<()> {
    for r in -3..=3 {
        let p = projection::realize_signature(r);
        let rhos = LiftAssignment::sample(p.mu(), 100, 1);
        let mut sigmas = Vec::new();
        let mut knotted = true;
        for rho in &rhos {
            let k = p.lift(rho)?;
            sigmas.push(k.sigma());
            knotted &= k.is_unknotted_simple() == Ok(false);
        }
        sigmas.dedup();
        println!("r={r:>2}  {p}\n      mu={} lifts={} sigma={:?} knotted={}", p.mu(), rhos.len(), sigmas, knotted);
    }
    Ok(())
}
