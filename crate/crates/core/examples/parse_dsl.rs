//! Reading and writing the text formats and expression languages.
//!
//! Run with `cargo run --example parse_dsl`.

use hdknot::io;

fn main() {
    let seifert = "# trefoil\nSEIFERT k=0 dim=2\n-1 1\n 0 -1\n";
    match io::parse_seifert(seifert) {
        Ok(s) => print!("parsed:\n{}", io::render_seifert(&s)),
        Err(e) => println!("error: {e}"),
    }

    let disks = "DISKS n=2\n0 : + -\n-1 :\n";
    if let Ok(ds) = io::parse_disks(disks) {
        print!("disks:\n{}", io::render_disks(&ds));
    }

    for text in [
        "stack(base(kummer), mirror(base(kummer, mu=4)))",
        "spin(double(base(kummer)))",
        "stack(base(kummer), spin(base(kummer)))",
        "mirror(bass(kummer))",
    ] {
        match io::parse_proj(text) {
            Ok(p) => println!("PROJ {text:?} -> {p} (mu={})", p.mu()),
            Err(e) => println!("PROJ {text:?} -> error at {e}"),
        }
    }
    for text in ["connsum(spin(giller), embedded(3))", "connsum(giller, embedded(3))", "spin(giller"] {
        match io::parse_imm(text) {
            Ok(e) => println!("IMM {text:?} -> {e}"),
            Err(e) => println!("IMM {text:?} -> error at {e}"),
        }
    }

    let bad = "FORM dim=2\n0 1\n2 0\n";
    if let Err(e) = io::parse_form(bad) {
        println!("FORM error: {e}");
    }
}
