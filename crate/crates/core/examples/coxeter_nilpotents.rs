//! Jordan type of `N_d` (ones on the d-th subdiagonal) against the minimal
//! class at slope `d/n` in GL_n.
//!
//! `cargo run --example coxeter_nilpotents`

use braidcount::coxeter::{coprime_residues, coxeter_check};

fn main() -> braidcount::Result<()> {
    for n in 2..=7 {
        for d in coprime_residues(n) {
            let c = coxeter_check(n, d)?;
            println!(
                "GL{n} d={d}: N_d {:<14} minimal {:<14} {}",
                c.jordan_type,
                c.minimal_class.as_deref().unwrap_or("-"),
                if c.agrees { "ok" } else { "DIFFER" }
            );
        }
    }
    Ok(())
}
