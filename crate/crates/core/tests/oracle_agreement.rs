use braidcount::braid::{regular_numbers, springer_braid, BraidWord, Slope};
use braidcount::count::{BraidSpec, Context};
use braidcount::oracle::{stack_count_from_matrix, FlagSpace};
use braidcount::partition::Partition;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn compare(ctx: &Context, space: &FlagSpace, spec: &BraidSpec, word: &BraidWord) {
    let table = ctx.count_table(spec).unwrap();
    let m = space.word_matrix(word.gens()).unwrap();
    for mu in Partition::all(space.n) {
        let want = stack_count_from_matrix(space, &m, &mu);
        let got = table
            .value(&mu.to_string())
            .unwrap()
            .eval_int(space.q as i64)
            .unwrap();
        assert_eq!(got, want, "GL{} q={} {spec} class {mu}", space.n, space.q);
    }
}

#[test]
fn springer_slopes_match_brute_force() {
    for n in 2..=4 {
        let ctx = Context::gl(n).unwrap();
        let regular = regular_numbers(&ctx.rs).unwrap();
        for q in [2, 3] {
            let space = FlagSpace::new(n, q).unwrap();
            for m in [n, n - 1] {
                assert!(regular.contains(&m));
                for d in (1..2 * m).filter(|d| d.gcd(&m) == 1) {
                    let slope = Slope::new(d, m).unwrap();
                    let word = springer_braid(&ctx.rs, slope).unwrap();
                    compare(&ctx, &space, &BraidSpec::Slope(slope), &word);
                }
            }
        }
    }
}

#[test]
fn random_words_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=4 {
        let ctx = Context::gl(n).unwrap();
        let spaces: Vec<FlagSpace> = [2, 3]
            .iter()
            .map(|&q| FlagSpace::new(n, q).unwrap())
            .collect();
        for _ in 0..20 {
            let len = rng.gen_range(0..=8);
            let word = BraidWord::new((0..len).map(|_| rng.gen_range(0..n - 1)).collect());
            let spec = BraidSpec::Word {
                word: word.clone(),
                power: 1,
            };
            for space in &spaces {
                compare(&ctx, space, &spec, &word);
            }
        }
    }
}
