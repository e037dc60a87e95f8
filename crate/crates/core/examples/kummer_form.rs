//! The intersection form of the punctured Kummer surface and its invariants.
//!
//! Run with `cargo run --example kummer_form`.

use hdknot::forms::{self, Definite};
use hdknot::handles::{self, FramedLink};

fn main() {
    let h = forms::hyperbolic();
    let e8 = forms::e8(Definite::Negative);
    println!("H:  {}", h.invariants());
    println!("E8: {}", e8.invariants());

    let kummer = forms::kummer_form();
    println!("3H + 2E8: {}", kummer.invariants());

    // Read the form as a framed link: framings on the diagonal.
    let link = FramedLink::from_form(&kummer);
    println!("framings: {:?}", link.framings());
    println!("{}", handles::verify_kummer(&link.intersection_form()));

    let flipped = h.multiple(3).direct_sum(&forms::e8(Definite::Positive).multiple(2));
    println!("\nwith positive E8 blocks:");
    println!("{}", handles::verify_kummer(&flipped));
}
