//! Adjusting double-point signs of immersed disks so the induced framings
//! match the Kummer framed link.
//!
//! Run with `cargo run --example disk_framings`.

use hdknot::handles::{self, DiskSystem};
use hdknot::Sign;

fn main() -> hdknot::Result<()> {
    let ds = DiskSystem::unperturbed(handles::kirby_disk_targets());
    let moves = handles::adjust_to_targets(&ds);
    println!("moves={}", moves.len());
    for m in moves.iter().take(3) {
        println!("  {m}");
    }
    println!("  ...");
    let done = ds.apply(&moves)?;
    println!("framings: {:?}", done.framings());

    // Disks that already carry double points.
    let messy = DiskSystem::new(vec![vec![Sign::Plus, Sign::Plus], vec![Sign::Minus]], vec![0, -3])?;
    let moves = handles::adjust_to_targets(&messy);
    println!("\nsums {:?} -> targets {:?}", messy.sums(), messy.targets());
    for m in &moves {
        println!("  {m}");
    }
    println!("framings after: {:?}", messy.apply(&moves)?.framings());
    Ok(())
}
