//! Slope 2/3 in G2: the full count table, the interval of classes with a
//! nonempty stack, and the count at its bottom.
//!
//! `cargo run --example g2_worked_example`

use braidcount::braid::BraidWord;
use braidcount::count::{BraidSpec, Context};

fn main() -> braidcount::Result<()> {
    let g2 = Context::new("G2", None)?;
    // (s1 s2 s1 s2)^2, the square of a 3rd root of the full twist
    let beta = BraidSpec::Word {
        word: BraidWord::from_one_based(&[1, 2, 1, 2])?,
        power: 2,
    };

    print!("{}", g2.count_table(&beta)?.to_text());
    let verdict = g2.minimal_class(&beta)?;
    println!("interval: {verdict}");
    println!(
        "count at the bottom: {}",
        g2.count_at_minimal(&beta)?.factored()
    );
    Ok(())
}
