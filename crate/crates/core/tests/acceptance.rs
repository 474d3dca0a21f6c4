//! End-to-end acceptance run. One line per criterion:
//! `PASS`, `FAIL` or `SKIP`, with the time taken.
//!
//! `cargo test -p braidcount --test acceptance`

use std::time::{Duration, Instant};

use braidcount::braid::{
    braid_equal, find_root_elements, full_twist, normal_form, regular_numbers, rs_word,
    springer_chamber_check, springer_element, BraidWord, Slope,
};
use braidcount::chars::char_table;
use braidcount::count::{BraidSpec, Context};
use braidcount::coxeter::{coprime_residues, coxeter_check};
use braidcount::oracle::{stack_count_from_matrix, FlagSpace};
use braidcount::partition::Partition;
use braidcount::poly::{Poly, RatFunc};
use braidcount::rootweyl::RootSystem;
use braidcount::unipotent;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn q(k: i64) -> RatFunc {
    RatFunc::q_pow(k)
}

fn poly(c: &[i64]) -> RatFunc {
    RatFunc::from_poly(Poly::from_ints(c))
}

fn phi1() -> RatFunc {
    poly(&[-1, 1])
}

fn zero() -> RatFunc {
    poly(&[])
}

fn slope_spec(d: usize, m: usize) -> Result<BraidSpec, String> {
    Ok(BraidSpec::Slope(Slope::new(d, m).map_err(err)?))
}

fn minimal(ctx: &Context, d: usize, m: usize) -> Result<String, String> {
    let v = ctx.minimal_class(&slope_spec(d, m)?).map_err(err)?;
    v.minimal_class
        .ok_or_else(|| format!("{d}/{m} not nice: {}", v.witness.unwrap_or_default()))
}

fn check_minimal_table(label: &str, rows: &[(usize, usize, &str)]) -> Outcome {
    let ctx = Context::new(label, None).map_err(err)?;
    for &(d, m, want) in rows {
        let got = minimal(&ctx, d, m)?;
        ensure!(got == want, "{label} {d}/{m}: got {got}, expected {want}");
    }
    Ok(format!("{} slopes", rows.len()))
}

fn check_table(ctx: &Context, spec: &BraidSpec, want: &[(&str, RatFunc)]) -> Outcome {
    let t = ctx.count_table(spec).map_err(err)?;
    let labels: Vec<&str> = t.rows.iter().map(|r| r.class.as_str()).collect();
    let want_labels: Vec<&str> = want.iter().map(|w| w.0).collect();
    ensure!(labels == want_labels, "row order {labels:?}");
    for (row, (c, v)) in t.rows.iter().zip(want) {
        ensure!(
            &row.value == v,
            "{c}: got {}, expected {}",
            row.value.factored(),
            v.factored()
        );
    }
    Ok(format!("{} rows", want.len()))
}

fn g2_worked_example() -> Outcome {
    let ctx = Context::new("G2", None).map_err(err)?;
    let spec = BraidSpec::Word {
        word: BraidWord::from_one_based(&[1, 2, 1, 2]).map_err(err)?,
        power: 2,
    };
    let want = [
        ("1", zero()),
        ("A1", q(0)),
        ("Ã1", q(2)),
        ("G2(a1)", q(4)),
        ("G2", q(6)),
    ];
    check_table(&ctx, &spec, &want)
}

fn g2_minimal() -> Outcome {
    check_minimal_table(
        "G2",
        &[
            (1, 6, "G2"),
            (1, 3, "G2(a1)"),
            (1, 2, "Ã1"),
            (2, 3, "A1"),
            (5, 6, "A1"),
        ],
    )
}

fn f4_minimal() -> Outcome {
    check_minimal_table(
        "F4",
        &[
            (1, 12, "F4"),
            (5, 12, "A2+Ã1"),
            (7, 12, "A1+Ã1"),
            (11, 12, "A1"),
            (1, 8, "F4(a1)"),
            (3, 8, "A2+Ã1"),
            (5, 8, "Ã1"),
            (7, 8, "A1"),
            (1, 6, "F4(a2)"),
            (5, 6, "A1"),
            (1, 4, "F4(a3)"),
            (3, 4, "A1"),
            (1, 3, "Ã2+A1"),
            (2, 3, "Ã1"),
            (1, 2, "A1+Ã1"),
        ],
    )
}

fn rigidity() -> Outcome {
    let cases = [
        ("G2", 2, 3, "A1"),
        ("F4", 3, 8, "A2+Ã1"),
        ("F4", 5, 8, "Ã1"),
        ("F4", 3, 4, "A1"),
    ];
    for (label, d, m, class) in cases {
        let ctx = Context::new(label, None).map_err(err)?;
        let got = minimal(&ctx, d, m)?;
        ensure!(got == class, "{label} {d}/{m}: minimal class {got}");
        let n = ctx.count_at_minimal(&slope_spec(d, m)?).map_err(err)?;
        ensure!(n.is_one(), "{label} {d}/{m}: count {}", n.factored());
        ensure!(
            ctx.is_rigid(Slope::new(d, m).map_err(err)?).map_err(err)?,
            "{label} {d}/{m}: not elliptic"
        );
    }
    Ok(format!("{} cases", cases.len()))
}

fn full_twist_shortcut() -> Outcome {
    let mut cases: Vec<(Context, usize, usize)> = Vec::new();
    for n in 2..=7 {
        cases.push((Context::gl(n).map_err(err)?, n + 1, n));
    }
    cases.push((Context::new("G2", None).map_err(err)?, 7, 6));
    cases.push((Context::new("F4", None).map_err(err)?, 13, 12));
    for (ctx, d, m) in &cases {
        let spec = slope_spec(*d, *m)?;
        let v = ctx.minimal_class(&spec).map_err(err)?;
        let trivial = ctx.data.classes[ctx.data.trivial_class()].display_label();
        ensure!(
            v.full_twist_shortcut,
            "{} {d}/{m}: shortcut not taken",
            ctx.group_label()
        );
        ensure!(
            v.minimal_class.as_deref() == Some(trivial.as_str()),
            "{} {d}/{m}: {v}",
            ctx.group_label()
        );
        let t = ctx.count_table(&spec).map_err(err)?;
        ensure!(
            t.rows.iter().all(|r| !r.value.is_zero()),
            "{} {d}/{m}: formula has a zero",
            ctx.group_label()
        );
    }
    Ok(format!("{} groups", cases.len()))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut compared = 0;
    for n in 2..=4 {
        let ctx = Context::gl(n).map_err(err)?;
        let spaces: Vec<FlagSpace> = [2, 3]
            .iter()
            .map(|&q| FlagSpace::new(n, q))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        let mut cases: Vec<(BraidSpec, BraidWord)> = Vec::new();
        for m in [n, n - 1] {
            for d in (1..2 * m).filter(|d| d.gcd(&m) == 1) {
                let slope = Slope::new(d, m).map_err(err)?;
                let word = braidcount::braid::springer_braid(&ctx.rs, slope).map_err(err)?;
                cases.push((BraidSpec::Slope(slope), word));
            }
        }
        for _ in 0..20 {
            let len = rng.gen_range(0..=8);
            let word = BraidWord::new((0..len).map(|_| rng.gen_range(0..n - 1)).collect());
            cases.push((
                BraidSpec::Word {
                    word: word.clone(),
                    power: 1,
                },
                word,
            ));
        }
        for (spec, word) in &cases {
            let table = ctx.count_table(spec).map_err(err)?;
            for space in &spaces {
                let m = space.word_matrix(word.gens()).map_err(err)?;
                for mu in Partition::all(n) {
                    let brute = stack_count_from_matrix(space, &m, &mu);
                    let formula = table
                        .value(&mu.to_string())
                        .and_then(|v| v.eval_int(space.q as i64))
                        .ok_or_else(|| format!("GL{n} {spec} {mu}: no value at q={}", space.q))?;
                    ensure!(
                        formula == brute,
                        "GL{n} q={} {spec} {mu}: formula {formula}, brute force {brute}",
                        space.q
                    );
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("{compared} values"))
}

const TYPES: [&str; 9] = ["A1", "A2", "A3", "A4", "A5", "A6", "G2", "F4", "E6"];

fn springer_theorem() -> Outcome {
    let mut checked = 0;
    for label in TYPES {
        let rs = RootSystem::from_label(label).map_err(err)?;
        let twist = full_twist(&rs);
        for m in regular_numbers(&rs)
            .map_err(err)?
            .into_iter()
            .filter(|&m| m > 1)
        {
            for w in find_root_elements(&rs, m).map_err(err)? {
                let b = rs_word(&rs, &w);
                ensure!(
                    braid_equal(&rs, &b.power(m), &twist).map_err(err)?,
                    "{label} m={m}: power is not the full twist"
                );
                ensure!(
                    normal_form(&rs, &b.power(m)).map_err(err)?
                        == normal_form(&rs, &twist).map_err(err)?,
                    "{label} m={m}: normal forms differ"
                );
                checked += 1;
            }
            // lengths add up only for the canonical choice
            let w = springer_element(&rs, m).map_err(err)?;
            for d in (1..m).filter(|d| 2 * d < m) {
                let l = w.pow(d).length();
                ensure!(
                    l * m == d * rs.num_roots(),
                    "{label} m={m}: length of w^{d} is {l}"
                );
            }
        }
    }
    Ok(format!("{checked} root elements"))
}

fn s4_distinction() -> Outcome {
    let rs = RootSystem::from_label("A3").map_err(err)?;
    let twist = full_twist(&rs);
    let good = rs.element_from_word(&[0, 2, 1]);
    let bad = rs.element_from_word(&[0, 1, 2]);
    for w in [&good, &bad] {
        ensure!(
            braid_equal(&rs, &rs_word(&rs, w).power(4), &twist).map_err(err)?,
            "{} is not a 4th root",
            rs.word_string(w)
        );
    }
    ensure!(
        springer_chamber_check(&rs, &good, 4).map_err(err)?,
        "s1s3s2 rejected"
    );
    ensure!(
        !springer_chamber_check(&rs, &bad, 4).map_err(err)?,
        "s1s2s3 accepted"
    );
    Ok("s1s3s2 accepted, s1s2s3 rejected".into())
}

#[cfg(feature = "tier2")]
fn non_nice_f4() -> Outcome {
    let ctx = Context::new("F4", None).map_err(err)?;
    let spec = BraidSpec::Word {
        word: BraidWord::from_one_based(&[2, 3, 2, 4, 3, 2, 3]).map_err(err)?,
        power: 1,
    };
    let inv_phi1 = &q(0) / &phi1();
    let want = [
        ("1", zero()),
        ("A1", zero()),
        ("Ã1", zero()),
        ("A1+Ã1", zero()),
        ("Ã2", &q(-7) * &inv_phi1),
        ("A2", zero()),
        ("A2+Ã1", zero()),
        ("Ã2+A1", &q(-7) * &poly(&[1, 1, 1])),
        ("B2", &q(-4) * &inv_phi1),
        ("C3(a1)", &poly(&[1, 3, 1]) * &q(-5)),
        ("F4(a3)", &(&q(-5) * &phi1()) * &poly(&[1, 2, 1])),
        ("C3", &(&poly(&[-2, 1, 1, 1]) * &q(-2)) * &inv_phi1),
        ("B3", &q(-2) * &poly(&[1, 1])),
        // the printed entry (q^3+q^-2+q-2)q^-2 is not consistent with the
        // rest of the table; we compare with (q^3+q^2+q-2)q^-2
        ("F4(a2)", &poly(&[-2, 1, 1, 1]) * &q(-2)),
        ("F4(a1)", &poly(&[-1, 0, 1, 1]) * &q(-1)),
        ("F4", q(3)),
    ];
    let rows = check_table(&ctx, &spec, &want)?;
    let v = ctx.minimal_class(&spec).map_err(err)?;
    ensure!(!v.nice, "reported nice: {v}");
    let witness = v.witness.clone().unwrap_or_default();
    ensure!(
        witness.contains("Ã2") && witness.contains("B2") && witness.contains("A1+Ã1"),
        "witness {witness}"
    );
    Ok(format!("{rows}; {v}"))
}

fn coxeter() -> Outcome {
    let mut n_checks = 0;
    for n in 2..=6 {
        for d in coprime_residues(n) {
            let c = coxeter_check(n, d).map_err(err)?;
            ensure!(
                c.agrees,
                "GL{n} d={d}: N_d {} vs minimal {:?}",
                c.jordan_type,
                c.minimal_class
            );
            n_checks += 1;
        }
    }
    Ok(format!("{n_checks} (n, d) pairs"))
}

fn coxeter_matrix(rs: &RootSystem) -> Vec<Vec<usize>> {
    let c = rs.cartan();
    (0..rs.rank())
        .map(|i| {
            (0..rs.rank())
                .map(|j| match (i == j, c[i][j] * c[j][i]) {
                    (true, _) => 1,
                    (_, 0) => 2,
                    (_, 1) => 3,
                    (_, 2) => 4,
                    _ => 6,
                })
                .collect()
        })
        .collect()
}

/// Applies one braid relation at a random position, if one fits.
fn rewrite(m: &[Vec<usize>], word: &mut [usize], rng: &mut ChaCha8Rng) -> bool {
    if word.len() < 2 {
        return false;
    }
    let start = rng.gen_range(0..word.len() - 1);
    let (s, t) = (word[start], word[start + 1]);
    if s == t {
        return false;
    }
    let k = m[s][t];
    if start + k > word.len() || (0..k).any(|i| word[start + i] != if i % 2 == 0 { s } else { t }) {
        return false;
    }
    for i in 0..k {
        word[start + i] = if i % 2 == 0 { t } else { s };
    }
    true
}

fn property_suites() -> Outcome {
    let mut notes = Vec::new();
    for label in ["A1", "A2", "A3", "A4", "A5", "A6", "G2", "F4"] {
        let rs = RootSystem::from_label(label).map_err(err)?;
        let t = char_table(&rs).map_err(err)?;
        for e in 0..t.len() {
            for f in 0..t.len() {
                let s: i64 = (0..t.class_sizes.len())
                    .map(|c| t.class_sizes[c] as i64 * t.values[e][c] * t.values[f][c])
                    .sum();
                ensure!(
                    s == if e == f { t.group_order as i64 } else { 0 },
                    "{label}: rows {e}, {f} not orthogonal"
                );
            }
        }
        let mut counts = vec![0i64; rs.num_positive() + 1];
        for w in rs.elements().map_err(err)? {
            counts[w.length()] += 1;
        }
        let product = rs
            .degrees()
            .iter()
            .fold(Poly::one(), |acc, &d| acc * Poly::from_ints(&vec![1; d]));
        ensure!(
            Poly::from_ints(&counts) == rs.poincare_polynomial(),
            "{label}: length generating function"
        );
        ensure!(
            product == rs.poincare_polynomial(),
            "{label}: product of q-integers"
        );
        let fake = (0..t.len()).fold(Poly::zero(), |acc, e| {
            acc + t.fake_degrees[e].scale(&braidcount::poly::q_int(t.dim(e)))
        });
        ensure!(fake == rs.poincare_polynomial(), "{label}: fake degree sum");
    }
    notes.push("orthogonality, Poincaré and fake degrees on 8 types".to_string());

    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut applied = 0;
    let types: Vec<RootSystem> = ["A3", "A4", "G2", "F4"]
        .iter()
        .map(|l| RootSystem::from_label(l))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let mats: Vec<Vec<Vec<usize>>> = types.iter().map(coxeter_matrix).collect();
    while applied < 1000 {
        let k = rng.gen_range(0..types.len());
        let rs = &types[k];
        let len = rng.gen_range(4..30);
        let mut word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..rs.rank())).collect();
        let nf = normal_form(rs, &BraidWord::new(word.clone())).map_err(err)?;
        ensure!(
            normal_form(rs, &nf.flatten(rs)).map_err(err)? == nf,
            "{}: normal form not idempotent",
            rs.label()
        );
        for _ in 0..50 {
            if rewrite(&mats[k], &mut word, &mut rng) {
                applied += 1;
                let again = normal_form(rs, &BraidWord::new(word.clone())).map_err(err)?;
                ensure!(
                    again == nf,
                    "{}: rewrite changed the normal form",
                    rs.label()
                );
            }
        }
    }
    notes.push(format!("{applied} braid rewrites"));

    let mut traces = 0;
    let mut contexts: Vec<Context> = (2..=7)
        .map(Context::gl)
        .collect::<Result<_, _>>()
        .map_err(err)?;
    contexts.push(Context::new("G2", None).map_err(err)?);
    contexts.push(Context::new("F4", None).map_err(err)?);
    for ctx in &contexts {
        for m in regular_numbers(&ctx.rs).map_err(err)? {
            for d in (1..2 * m).filter(|d| d.gcd(&m) == 1) {
                ctx.traces(&slope_spec(d, m)?)
                    .map_err(|e| format!("{} {d}/{m}: {e}", ctx.group_label()))?;
                traces += 1;
            }
        }
    }
    notes.push(format!("integral exponents at {traces} slopes"));

    for label in ["G2", "F4"] {
        let rs = RootSystem::from_label(label).map_err(err)?;
        let t = char_table(&rs).map_err(err)?;
        let data = unipotent::load(&rs, &t, None).map_err(err)?;
        let report = unipotent::validate(&rs, &t, &data);
        ensure!(report.passed(), "{report}");
    }
    notes.push("G2 and F4 data valid".into());
    Ok(notes.join("; "))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: Option<fn() -> Outcome>,
    skip_reason: &'static str,
}

fn main() {
    let secs = Duration::from_secs;
    #[cfg(feature = "tier2")]
    let nine: Option<fn() -> Outcome> = Some(non_nice_f4);
    #[cfg(not(feature = "tier2"))]
    let nine: Option<fn() -> Outcome> = None;
    let criteria = [
        Criterion {
            id: 1,
            name: "G2 worked count",
            budget: secs(1),
            run: Some(g2_worked_example),
            skip_reason: "",
        },
        Criterion {
            id: 2,
            name: "G2 minimal classes",
            budget: secs(10),
            run: Some(g2_minimal),
            skip_reason: "",
        },
        Criterion {
            id: 3,
            name: "F4 minimal classes",
            budget: secs(600),
            run: Some(f4_minimal),
            skip_reason: "",
        },
        Criterion {
            id: 4,
            name: "rigidity",
            budget: secs(600),
            run: Some(rigidity),
            skip_reason: "",
        },
        Criterion {
            id: 5,
            name: "full twist shortcut",
            budget: secs(60),
            run: Some(full_twist_shortcut),
            skip_reason: "",
        },
        Criterion {
            id: 6,
            name: "brute-force oracle",
            budget: secs(1800),
            run: Some(oracle_equivalence),
            skip_reason: "",
        },
        Criterion {
            id: 7,
            name: "root elements",
            budget: secs(300),
            run: Some(springer_theorem),
            skip_reason: "",
        },
        Criterion {
            id: 8,
            name: "S4 chamber check",
            budget: secs(60),
            run: Some(s4_distinction),
            skip_reason: "",
        },
        Criterion {
            id: 9,
            name: "non-nice F4 braid",
            budget: secs(600),
            run: nine,
            skip_reason: "built without the tier2 feature",
        },
        Criterion {
            id: 10,
            name: "Coxeter nilpotents",
            budget: secs(300),
            run: Some(coxeter),
            skip_reason: "",
        },
        Criterion {
            id: 11,
            name: "property suites",
            budget: secs(600),
            run: Some(property_suites),
            skip_reason: "",
        },
        Criterion {
            id: 12,
            name: "E6 minimal classes",
            budget: secs(7200),
            run: None,
            skip_reason: "no E6 data file is bundled",
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let Some(run) = c.run else {
            println!("SKIP  {:>2} {}: {}", c.id, c.name, c.skip_reason);
            continue;
        };
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > c.budget => Err(format!("took {took:.1?}, budget {:?}", c.budget)),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  {:>2} {} ({took:.2?}): {detail}", c.id, c.name),
            Err(e) => {
                failed += 1;
                println!("FAIL  {:>2} {} ({took:.2?}): {e}", c.id, c.name);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
