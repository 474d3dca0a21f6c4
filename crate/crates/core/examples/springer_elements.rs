//! Roots of the full twist: for each regular number `m`, the canonical
//! root element, its Garside normal form check and the lengths of its
//! powers. Ends with the two 4th roots in S4 that the chamber check
//! tells apart.
//!
//! `cargo run --release --example springer_elements [TYPE]`

use braidcount::braid::{
    braid_equal, find_root_elements, full_twist, regular_numbers, rs_word, springer_chamber_check,
    springer_element,
};
use braidcount::rootweyl::RootSystem;

fn main() -> braidcount::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "F4".into());
    let rs = RootSystem::from_label(&label)?;
    let twist = full_twist(&rs);
    println!(
        "{label}: |W| = {}, {} roots, degrees {:?}",
        rs.order(),
        rs.num_roots(),
        rs.degrees()
    );
    for m in regular_numbers(&rs)?.into_iter().filter(|&m| m > 1) {
        let w = springer_element(&rs, m)?;
        let roots = find_root_elements(&rs, m)?.len();
        let ok = braid_equal(&rs, &rs_word(&rs, &w).power(m), &twist)?;
        let lengths: Vec<usize> = (1..m)
            .map(|d| w.pow(d).length())
            .take_while(|&l| l > 0)
            .collect();
        println!(
            "m={m:<3} {:<24} {roots:>4} roots  w^m = twist: {ok}  lengths {lengths:?}{}",
            rs.word_string(&w),
            if rs.is_elliptic(&w) {
                ""
            } else {
                "  non-elliptic"
            }
        );
    }

    let a3 = RootSystem::from_label("A3")?;
    for word in [[0, 2, 1], [0, 1, 2]] {
        let w = a3.element_from_word(&word);
        println!(
            "A3 {}: chamber check {}",
            a3.word_string(&w),
            springer_chamber_check(&a3, &w, 4)?
        );
    }
    Ok(())
}
