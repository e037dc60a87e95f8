//! Enumerating over/under assignments of a projection and the invariants of
//! the lifts they select.
//!
//! Run with `cargo run --example lift_classification`.

use hdknot::projection::ProjectionExpr;

fn main() -> hdknot::Result<()> {
    let p = ProjectionExpr::double(ProjectionExpr::base_with_mu(2));
    let report = p.classify_lifts(None, 0)?;
    println!("{p}: mu={} exhaustive={}", report.mu, report.exhaustive);
    for c in &report.classes {
        println!("  rho={} n={} sigma={:?}", c.rho, c.invariants.n, c.invariants.sigma);
    }
    println!("invariants identical: {}", report.all_invariants_identical());

    // Full-size base: too many assignments to enumerate, so sample.
    let big = ProjectionExpr::base();
    let sampled = big.classify_lifts(Some(8), 42)?;
    println!("\n{big}: mu={} exhaustive={}", sampled.mu, sampled.exhaustive);
    for c in &sampled.classes {
        println!("  rho={} {}", c.rho, c.invariants);
    }
    Ok(())
}
