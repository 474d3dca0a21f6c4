//! A positive braid in F4 whose support is not an interval. The word is
//! not a power of a root element, so traces come from the bundled Hecke
//! character table.
//!
//! `cargo run --release --example non_nice_braid`

use braidcount::braid::BraidWord;
use braidcount::count::{BraidSpec, Context};

fn main() -> braidcount::Result<()> {
    let f4 = Context::new("F4", None)?;
    let beta = BraidSpec::Word {
        word: BraidWord::from_one_based(&[2, 3, 2, 4, 3, 2, 3])?,
        power: 1,
    };
    print!("{}", f4.count_table(&beta)?.to_text());
    println!("{}", f4.minimal_class(&beta)?);
    Ok(())
}
