//! Loads the G2 and F4 data files (or those in a given directory) and runs
//! every consistency check against the character table. Also prints the
//! closure order and class sizes.
//!
//! `cargo run --release --example validate_data [DATA_DIR]`

use std::path::PathBuf;

use braidcount::chars::char_table;
use braidcount::rootweyl::RootSystem;
use braidcount::unipotent;

fn main() -> braidcount::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from);
    for label in ["G2", "F4"] {
        let rs = RootSystem::from_label(label)?;
        let table = char_table(&rs)?;
        let data = unipotent::load(&rs, &table, dir.as_deref())?;
        for (i, c) in data.classes.iter().enumerate() {
            let above: Vec<String> = data
                .hasse
                .iter()
                .filter(|(lo, _)| *lo == i)
                .map(|&(_, hi)| data.classes[hi].display_label())
                .collect();
            println!(
                "{:<8} dim {:>2}  |C| = {}  < {}",
                c.display_label(),
                c.dim,
                c.size,
                above.join(", ")
            );
        }
        println!("{}\n", unipotent::validate(&rs, &table, &data));
    }
    Ok(())
}
