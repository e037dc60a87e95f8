//! Spinning the Kummer 3-knot: the Alexander polynomial and knottedness
//! persist up the tower while the dimension grows.
//!
//! Run with `cargo run --example spin_tower`.

use hdknot::projection::{self, LiftAssignment, ProjectionExpr};
use hdknot::seifert::KnotModel;
use hdknot::spin;

fn main() -> hdknot::Result<()> {
    let base = KnotModel::kummer();
    for m in 0..=5 {
        let k = spin::spin_times(&base, m)?;
        println!(
            "m={m} n={} same delta={} knotted={} origin={}",
            k.n(),
            k.delta() == base.delta(),
            spin::is_knotted_tower(&k)?,
            k.origin()
        );
    }

    // Spun projections: the double-point tori pick up circle factors.
    let mut p = ProjectionExpr::base_with_mu(3);
    for _ in 0..2 {
        p = ProjectionExpr::spin(p);
    }
    let k = p.lift(&LiftAssignment::all_plus(p.mu()))?;
    println!("\n{p}: dimension {}", p.dimension()?);
    println!("singular components: {}", p.singular_components()[0]);
    println!("lift knotted: {:?}", projection::knottedness(&k));
    Ok(())
}
