//! Inference rules for liftability of immersed spheres.
//!
//! Run with `cargo run --example liftability`.

use hdknot::projection::ImmersedSphereExpr as Imm;

fn show(e: &Imm) -> hdknot::Result<()> {
    let v = e.liftable()?;
    println!("{e} => {}", v.status);
    for r in &v.rules {
        println!("    {r}");
    }
    Ok(())
}

fn main() -> hdknot::Result<()> {
    show(&Imm::Giller)?;
    show(&Imm::Giller.spun(3))?;
    show(&Imm::Embedded(2).spun(2))?;
    show(&Imm::conn_sum(Imm::spin(Imm::Giller), Imm::Embedded(3))?)?;
    show(&Imm::conn_sum(Imm::Embedded(4), Imm::Embedded(4))?)?;
    if let Err(e) = Imm::conn_sum(Imm::Giller, Imm::Embedded(5)) {
        println!("rejected: {e}");
    }
    Ok(())
}
