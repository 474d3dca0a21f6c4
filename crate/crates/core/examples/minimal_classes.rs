//! Minimal unipotent class for every slope `d/m < 1` with `m` regular, in
//! G2 and F4, flagging elliptic slopes whose bottom count is 1.
//!
//! `cargo run --release --example minimal_classes [TYPE...]`

use braidcount::braid::{regular_numbers, springer_element, Slope};
use braidcount::count::{BraidSpec, Context};
use num_integer::Integer;

fn main() -> braidcount::Result<()> {
    let mut labels: Vec<String> = std::env::args().skip(1).collect();
    if labels.is_empty() {
        labels = vec!["G2".into(), "F4".into()];
    }
    for label in &labels {
        let ctx = Context::new(label, None)?;
        println!("{}", ctx.group_label());
        for m in regular_numbers(&ctx.rs)?
            .into_iter()
            .rev()
            .filter(|&m| m > 1)
        {
            let elliptic = ctx.rs.is_elliptic(&springer_element(&ctx.rs, m)?);
            for d in (1..m).filter(|d| d.gcd(&m) == 1) {
                let slope = Slope::new(d, m)?;
                let v = ctx.minimal_class(&BraidSpec::Slope(slope))?;
                let class = v.minimal_class.clone().unwrap_or_else(|| "-".into());
                let rigid = if elliptic && ctx.is_rigid(slope)? {
                    "  rigid"
                } else {
                    ""
                };
                let blue = if elliptic { "" } else { "  (non-elliptic)" };
                println!("  {slope:>5}  {class}{rigid}{blue}");
            }
        }
    }
    Ok(())
}
