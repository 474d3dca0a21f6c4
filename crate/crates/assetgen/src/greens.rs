//! Green functions by the Lusztig–Shoji algorithm.
//!
//! With `Ω_{E,E'} = |G^F| |W|^{-1} Σ_w χ_E(w) χ_E'(w) / |T_w^F|`, solve
//! `Ω = P Λ Pᵀ` where rows of `P` are indexed by irreducibles, columns by
//! Springer pairs, `P` is block triangular for the closure order with
//! diagonal blocks `q^{d_C}`, and `Λ` is block diagonal.

use braidcount::chars::CharacterTable;
use braidcount::poly::{Poly, RatFunc};

pub struct GreenInput<'a> {
    pub table: &'a CharacterTable,
    pub group_order: Poly,
    /// `|T_w^F|` per conjugacy class of `W`.
    pub torus: Vec<Poly>,
    /// Number of positive roots.
    pub n_pos: usize,
    /// Unipotent class dimensions.
    pub class_dims: Vec<usize>,
    /// Springer pair of each irreducible: class index and local system
    /// index, 0 being trivial.
    pub springer: Vec<(usize, usize)>,
}

pub struct Greens {
    /// Irreducible × irreducible (column = Springer pair of that irreducible).
    pub p: Vec<Vec<RatFunc>>,
    /// `Σ_{u ∈ C^F} Q_E(u)`, irreducible × class.
    pub class_sums: Vec<Vec<Poly>>,
    /// `|C^F|`.
    pub sizes: Vec<Poly>,
}

fn as_poly(x: &RatFunc, what: &str) -> Result<Poly, String> {
    x.as_poly().cloned().ok_or_else(|| format!("{what} is not a polynomial: {x}"))
}

fn invert(m: &[Vec<RatFunc>]) -> Result<Vec<Vec<RatFunc>>, String> {
    let n = m.len();
    let mut a: Vec<Vec<RatFunc>> = m.to_vec();
    let mut inv: Vec<Vec<RatFunc>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or("singular block")?;
        a.swap(c, p);
        inv.swap(c, p);
        let f = a[c][c].inv();
        for j in 0..n {
            a[c][j] = &a[c][j] * &f;
            inv[c][j] = &inv[c][j] * &f;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let g = a[r][c].clone();
                for j in 0..n {
                    a[r][j] = &a[r][j] - &(&g * &a[c][j]);
                    inv[r][j] = &inv[r][j] - &(&g * &inv[c][j]);
                }
            }
        }
    }
    Ok(inv)
}

pub fn omega(input: &GreenInput) -> Vec<Vec<RatFunc>> {
    let t = input.table;
    let n = t.len();
    let g = RatFunc::from_poly(input.group_order.clone());
    let w = RatFunc::from_poly(Poly::from_ints(&[t.group_order as i64]));
    let weights: Vec<RatFunc> = input
        .torus
        .iter()
        .zip(&t.class_sizes)
        .map(|(tw, &s)| &(&RatFunc::new(Poly::from_ints(&[s as i64]), tw.clone()) * &g) / &w)
        .collect();
    (0..n)
        .map(|e| {
            (0..n)
                .map(|f| {
                    weights.iter().enumerate().fold(RatFunc::zero(), |acc, (c, wt)| {
                        let x = t.values[e][c] * t.values[f][c];
                        if x == 0 {
                            acc
                        } else {
                            acc + &(wt * &RatFunc::from_poly(Poly::from_ints(&[x])))
                        }
                    })
                })
                .collect()
        })
        .collect()
}

pub fn solve(input: &GreenInput) -> Result<Greens, String> {
    let n = input.table.len();
    let om = omega(input);
    let d_of = |e: usize| {
        let dim = input.class_dims[input.springer[e].0];
        input.n_pos - dim / 2
    };
    // blocks of irreducibles with equal class dimension, ascending
    let mut dims: Vec<usize> = input.springer.iter().map(|s| input.class_dims[s.0]).collect();
    dims.sort_unstable();
    dims.dedup();
    let blocks: Vec<Vec<usize>> = dims
        .iter()
        .map(|&d| (0..n).filter(|&e| input.class_dims[input.springer[e].0] == d).collect())
        .collect();
    let mut p = vec![vec![RatFunc::zero(); n]; n];
    let mut lambda = vec![vec![RatFunc::zero(); n]; n];
    let mut done: Vec<usize> = Vec::new();
    for (bi, block) in blocks.iter().enumerate() {
        let d = d_of(block[0]) as i64;
        let later: Vec<usize> = blocks[bi..].iter().flatten().copied().collect();
        // M = Ω - P Λ Pᵀ over finished columns
        let m = |r: usize, s: usize| -> RatFunc {
            let mut acc = om[r][s].clone();
            for &k in &done {
                if p[r][k].is_zero() {
                    continue;
                }
                for &l in &done {
                    if lambda[k][l].is_zero() || p[s][l].is_zero() {
                        continue;
                    }
                    acc = acc - &(&(&p[r][k] * &lambda[k][l]) * &p[s][l]);
                }
            }
            acc
        };
        let scale = RatFunc::q_pow(-2 * d);
        let lb: Vec<Vec<RatFunc>> = block.iter().map(|&r| block.iter().map(|&s| &m(r, s) * &scale).collect()).collect();
        for (i, &r) in block.iter().enumerate() {
            for (j, &s) in block.iter().enumerate() {
                if input.springer[r].0 != input.springer[s].0 && !lb[i][j].is_zero() {
                    return Err(format!("classes of equal dimension interact at rows {r}, {s}"));
                }
            }
        }
        let linv = invert(&lb)?;
        let qd = RatFunc::q_pow(-d);
        let mrows: Vec<Vec<RatFunc>> = later
            .iter()
            .filter(|r| !block.contains(r))
            .map(|&r| block.iter().map(|&s| m(r, s)).collect())
            .collect();
        for (i, &r) in block.iter().enumerate() {
            p[r][r] = RatFunc::q_pow(d);
            for (j, &s) in block.iter().enumerate() {
                lambda[r][s] = lb[i][j].clone();
            }
        }
        for (row, &r) in later.iter().filter(|r| !block.contains(r)).enumerate() {
            for (j, &s) in block.iter().enumerate() {
                let mut acc = RatFunc::zero();
                for (k, _) in block.iter().enumerate() {
                    acc = acc + &(&mrows[row][k] * &linv[k][j]);
                }
                p[r][s] = &acc * &qd;
            }
        }
        done.extend(block);
    }
    // closure: P_{E,F} must vanish unless the class of F lies below E's
    let nclasses = input.class_dims.len();
    let base: Vec<usize> = (0..nclasses)
        .map(|c| (0..n).find(|&e| input.springer[e] == (c, 0)).expect("every class carries the trivial system"))
        .collect();
    let sizes = base
        .iter()
        .map(|&f| as_poly(&lambda[f][f], "class size"))
        .collect::<Result<Vec<_>, _>>()?;
    let mut class_sums = vec![vec![Poly::zero(); nclasses]; n];
    for e in 0..n {
        for f in 0..n {
            as_poly(&p[e][f], "Green function entry")?;
        }
        for c in 0..nclasses {
            let mut acc = RatFunc::zero();
            for f in (0..n).filter(|&f| input.springer[f].0 == c) {
                acc = acc + &(&p[e][f] * &lambda[f][base[c]]);
            }
            class_sums[e][c] = as_poly(&acc, "class sum")?;
        }
    }
    Ok(Greens { p, class_sums, sizes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidcount::chars::char_table;
    use braidcount::rootweyl::RootSystem;
    use braidcount::unipotent::{gl_order_poly, type_a_data};

    #[test]
    fn reproduces_type_a() {
        for n in 2..=5 {
            let rs = RootSystem::from_label(&format!("A{}", n - 1)).unwrap();
            let table = char_table(&rs).unwrap();
            let data = type_a_data(&rs, &table).unwrap();
            let classes = rs.conjugacy_classes().unwrap();
            let parts = table.partitions.clone().unwrap();
            let torus = classes
                .reps
                .iter()
                .map(|w| {
                    let ct = braidcount::chars::cycle_type(&rs, w);
                    (0..ct.len()).fold(Poly::one(), |acc, i| acc * (Poly::q_pow(ct.part(i)) - Poly::one()))
                })
                .collect();
            let springer = parts
                .iter()
                .map(|l| (data.classes.iter().position(|c| c.label == l.to_string()).unwrap(), 0))
                .collect();
            let input = GreenInput {
                table: &table,
                group_order: gl_order_poly(n),
                torus,
                n_pos: n * (n - 1) / 2,
                class_dims: data.classes.iter().map(|c| c.dim).collect(),
                springer,
            };
            let g = solve(&input).unwrap();
            let align = data.align(&table).unwrap();
            for e in 0..table.len() {
                assert_eq!(g.class_sums[e], data.values[align[e]], "n={n} row {}", table.labels[e]);
            }
            for (c, cl) in data.classes.iter().enumerate() {
                assert_eq!(g.sizes[c], cl.size);
            }
        }
    }
}
