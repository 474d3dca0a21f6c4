//! Counts the braid stack of a word in GL_n(F_q) by enumerating flags and
//! compares with the character formula.
//!
//! `cargo run --release --example oracle_check -- 3 2 1,2,1,1,2`

use braidcount::cli::parse_word;
use braidcount::count::{BraidSpec, Context};
use braidcount::oracle::{stack_count_from_matrix, FlagSpace};
use braidcount::partition::Partition;

fn main() -> braidcount::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(3);
    let q: u32 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let word = parse_word(args.get(2).map(String::as_str).unwrap_or("1,2,1,1,2"))?;

    let ctx = Context::gl(n)?;
    let table = ctx.count_table(&BraidSpec::Word {
        word: word.clone(),
        power: 1,
    })?;
    let space = FlagSpace::new(n, q)?;
    println!("GL{n}(F_{q}), {} flags, word {word}", space.len());
    let m = space.word_matrix(word.gens())?;
    for mu in Partition::all(n) {
        let formula = table
            .value(&mu.to_string())
            .expect("every partition is a class");
        let brute = stack_count_from_matrix(&space, &m, &mu);
        let at_q = formula.eval_int(q as i64).expect("no pole at q");
        let mark = if at_q == brute { "" } else { "  <-- mismatch" };
        println!(
            "{:<10} {:<16} = {at_q:<8} brute force {brute}{mark}",
            mu.to_string(),
            formula.factored().to_string()
        );
    }
    Ok(())
}
