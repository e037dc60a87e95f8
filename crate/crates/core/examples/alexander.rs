//! Alexander polynomials and signatures from Seifert matrices.
//!
//! Run with `cargo run --example alexander`.

use hdknot::seifert::{self, SeifertMatrix};

fn main() -> hdknot::Result<()> {
    let trefoil = SeifertMatrix::new(0, vec![vec![-1, 1], vec![0, -1]])?;
    println!("trefoil (k=0): valid={} delta={}", trefoil.is_valid(), trefoil.alexander());

    let kummer = seifert::kummer_seifert();
    println!("kummer 3-knot: size={} valid={} sigma={}", kummer.size(), kummer.is_valid(), kummer.signature()?);
    println!("  delta = {}", kummer.alexander());

    let twice = kummer.connected_sum(&kummer)?;
    println!("kummer # kummer: sigma={} delta={}", twice.signature()?, twice.alexander());

    let mirrored = kummer.mirror_reverse();
    println!("-kummer*: sigma={}", mirrored.signature()?);
    let zero = kummer.connected_sum(&mirrored)?;
    println!("kummer # -kummer*: sigma={} delta={}", zero.signature()?, zero.alexander());

    for s in [-32, -16, 0, 8, 24, 48] {
        println!("signature {s:>3} realizable by a 3-knot: {}", seifert::realizable_3knot_signature(s));
    }
    Ok(())
}
