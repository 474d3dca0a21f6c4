//! Assembles a data file from first principles: Hecke table, Green
//! functions, closure order, generic degrees, families and the Fourier
//! transform.

use std::collections::BTreeMap;
use std::str::FromStr;

use braidcount::chars::{char_table, CharacterTable, ClassPolynomials, HeckeCharTable};
use braidcount::partition::Partition;
use braidcount::poly::{q_frac, Poly, RatFunc, Q};
use braidcount::rootweyl::RootSystem;
use braidcount::unipotent::{
    group_order_poly, validate, AssetClass, AssetFile, AssetHecke, AssetIrrep, SCHEMA_VERSION,
};
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::data::TypeSpec;
use crate::fourier::{FourierGroup, Pair};
use crate::greens::{self, GreenInput};
use crate::hecke;
use crate::kl::KlData;
use crate::modp;

pub struct Generated {
    pub asset: AssetFile,
    pub log: Vec<String>,
}

fn local_index(k: usize, local: &str) -> Result<usize, String> {
    let p = Partition::from_str(local).map_err(|e| e.to_string())?;
    let mut parts = Partition::all(k);
    parts.sort_by(|a, b| b.cmp(a));
    parts.iter().position(|x| *x == p).ok_or_else(|| format!("{local} is not a partition of {k}"))
}

/// `⟨Res χ, 1⟩` over the parabolic subgroup on `gens`.
fn parabolic_invariants(rs: &RootSystem, table: &CharacterTable, e: usize, gens: &[usize]) -> Result<i64, String> {
    let mut elems = vec![rs.identity()];
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head].clone();
        head += 1;
        for &g in gens {
            let y = x.compose(rs.simple(g));
            if !elems.contains(&y) {
                elems.push(y);
            }
        }
    }
    let mut total = 0;
    for w in &elems {
        total += table.values[e][rs.class_of(w).map_err(|e| e.to_string())?];
    }
    Ok(total / elems.len() as i64)
}

fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn eval(r: &RatFunc, q: i64) -> f64 {
    r.eval_int(q).map(|x| to_f64(&x)).unwrap_or(f64::NAN)
}

fn coeffs(p: &Poly, what: &str) -> Result<Vec<i64>, String> {
    p.to_i64s().ok_or_else(|| format!("{what} is not an integer polynomial: {p}"))
}

pub fn generate(spec: &TypeSpec) -> Result<Generated, String> {
    let err = |e: braidcount::Error| e.to_string();
    let mut log = Vec::new();
    let rs = RootSystem::from_label(spec.label).map_err(err)?;
    let table = char_table(&rs).map_err(err)?;
    let classes = rs.conjugacy_classes().map_err(err)?;
    let n = table.len();
    let nc = spec.classes.len();

    // Springer correspondence
    let mut springer = vec![None; n];
    for s in &spec.springer {
        let e = table.index_of(s.irrep).ok_or_else(|| format!("unknown irreducible {}", s.irrep))?;
        let c = spec.classes.iter().position(|c| c.label == s.class).ok_or_else(|| format!("unknown class {}", s.class))?;
        if springer[e].replace((c, local_index(spec.classes[c].k, s.local)?)).is_some() {
            return Err(format!("{} assigned twice", s.irrep));
        }
    }
    let springer: Vec<(usize, usize)> =
        springer.into_iter().enumerate().map(|(e, s)| s.ok_or(format!("{} unassigned", table.labels[e]))).collect::<Result<_, _>>()?;
    let mut bad = Vec::new();
    for (e, &(c, l)) in springer.iter().enumerate() {
        let cl = &spec.classes[c];
        if table.b(e) != rs.num_positive() - cl.dim / 2 && l == 0 {
            bad.push(format!("b of {} differs from the Springer fibre dimension of {}", table.labels[e], cl.label));
        }
        if let (0, Some(levi)) = (l, cl.levi) {
            if parabolic_invariants(&rs, &table, e, levi)? == 0 {
                bad.push(format!("{} does not occur in the induced trivial character of the Levi of {}", table.labels[e], cl.label));
            }
        }
    }
    if !bad.is_empty() {
        return Err(bad.join("; "));
    }
    log.push("Springer correspondence passes the induction and fibre-dimension checks".into());

    // Green functions
    let input = GreenInput {
        table: &table,
        group_order: group_order_poly(&rs),
        torus: classes.reps.iter().map(|w| rs.char_poly(w)).collect(),
        n_pos: rs.num_positive(),
        class_dims: spec.classes.iter().map(|c| c.dim).collect(),
        springer: springer.clone(),
    };
    let g = greens::solve(&input)?;
    log.push("Green functions solved with polynomial entries".into());

    // closure order from the support of Green functions
    let base: Vec<usize> = (0..nc).map(|c| springer.iter().position(|&s| s == (c, 0)).unwrap()).collect();
    let leq = |lo: usize, hi: usize| !g.p[base[hi]][base[lo]].is_zero();
    for a in 0..nc {
        for b in 0..nc {
            if a != b && leq(a, b) && spec.classes[a].dim >= spec.classes[b].dim {
                return Err(format!("closure order not compatible with dimensions at {} < {}", spec.classes[a].label, spec.classes[b].label));
            }
            for c in 0..nc {
                if leq(a, b) && leq(b, c) && !leq(a, c) {
                    return Err("closure order is not transitive".into());
                }
            }
        }
    }
    let mut hasse = Vec::new();
    for a in 0..nc {
        for b in 0..nc {
            if a != b && leq(a, b) && !(0..nc).any(|m| m != a && m != b && leq(a, m) && leq(m, b)) {
                hasse.push([spec.classes[a].label.to_string(), spec.classes[b].label.to_string()]);
            }
        }
    }
    log.push(format!("Hasse diagram: {}", hasse.iter().map(|[a, b]| format!("{a}<{b}")).collect::<Vec<_>>().join(" ")));

    // Hecke table and generic degrees from Schur elements
    let kl = KlData::new(&rs).map_err(err)?;
    let hk = hecke::hecke_table(&rs, &table, &kl)?;
    let schur = generic_degrees(&rs, &table, &hk)?;
    let mut ab = Vec::new();
    for (e, d) in schur.iter().enumerate() {
        let p = d.as_poly().ok_or_else(|| format!("generic degree of {} is not a polynomial", table.labels[e]))?;
        ab.push((p.valuation().unwrap(), p.degree().unwrap()));
    }
    let deg_r = almost_degrees(&rs, &table, &input);

    // families from two-sided cells
    let cells = kl.left_cells();
    let mu = kl.mu_table();
    let mut cell_irreps = Vec::new();
    for cell in &cells {
        let gens = hecke::cell_matrices(&kl, &mu, cell, 1);
        let chi: Vec<i64> =
            classes.rep_words.iter().map(|w| modp::lift(modp::trace(&hecke::word_matrix(&gens, w)))).collect();
        let dec = table.decompose(&chi).map_err(err)?;
        cell_irreps.push((0..n).filter(|&e| dec[e] != 0).collect::<Vec<_>>());
    }
    let mut families: Vec<Vec<usize>> = Vec::new();
    for two in kl.two_sided_cells(&cells) {
        let mut f: Vec<usize> = two.iter().flat_map(|&c| cell_irreps[c].clone()).collect();
        f.sort_unstable();
        f.dedup();
        families.push(f);
    }
    let mut values = g.class_sums.clone();
    for fam in &families {
        let k = match fam.len() {
            1 => continue,
            3 => 2,
            4 => 3,
            11 => 4,
            m => return Err(format!("no Fourier data for a family of size {m}")),
        };
        let t = fourier_family(&table, fam, k, &springer, &schur, &deg_r, &g.class_sums, &ab, &mut log)?;
        for (i, &e) in fam.iter().enumerate() {
            values[e] = t[i].clone();
        }
    }
    for e in 0..n {
        let id = values[e][0].clone();
        if RatFunc::from_poly(id) != schur[e] {
            return Err(format!("{}: value on the trivial class is not the generic degree", table.labels[e]));
        }
    }
    log.push("unipotent support values agree with generic degrees on the trivial class".into());

    let denominator = values
        .iter()
        .flatten()
        .flat_map(|p| p.coeffs().iter().map(|c| c.denom().to_i64().unwrap_or(0)))
        .fold(1i64, |acc, d| acc.lcm(&d));
    let asset = AssetFile {
        type_label: rs.label(),
        schema_version: SCHEMA_VERSION,
        irreps: (0..n)
            .map(|e| AssetIrrep { label: table.labels[e].clone(), dim: table.dim(e), b: table.b(e), a: ab[e].0, big_a: ab[e].1 })
            .collect(),
        classes: spec
            .classes
            .iter()
            .zip(&g.sizes)
            .map(|(c, s)| Ok(AssetClass { label: c.label.to_string(), dim: c.dim, size: coeffs(s, "class size")? }))
            .collect::<Result<_, String>>()?,
        hasse,
        denominator,
        values: (0..n)
            .map(|e| {
                let row = values[e].iter().map(|p| coeffs(&p.scale(&Q::from_integer(denominator.into())), "value"));
                Ok((table.labels[e].clone(), row.collect::<Result<_, _>>()?))
            })
            .collect::<Result<BTreeMap<_, _>, String>>()?,
        hecke: spec.hecke.then(|| AssetHecke {
            class_words: classes.rep_words.iter().map(|w| w.iter().map(|g| g + 1).collect()).collect(),
            values: (0..n)
                .map(|e| (table.labels[e].clone(), hk.values[e].iter().map(|p| p.to_i64s().unwrap()).collect()))
                .collect(),
        }),
    };
    let data = asset.clone().into_data(&rs, &table).map_err(err)?;
    let report = validate(&rs, &table, &data);
    if !report.passed() {
        return Err(format!("generated data fails validation:\n{report}"));
    }
    log.push(format!("{} validation passed", rs.label()));
    Ok(Generated { asset, log })
}

/// `D_E = P_W(q) / c_E` with `c_E = d_E^{-1} Σ_w q^{-ℓ(w)} tr(T_w)^2`.
pub fn generic_degrees(rs: &RootSystem, table: &CharacterTable, hk: &HeckeCharTable) -> Result<Vec<RatFunc>, String> {
    let elems = rs.elements().map_err(|e| e.to_string())?;
    let mut cp = ClassPolynomials::new(rs);
    let n = table.len();
    let maxlen = rs.num_positive() as i64;
    // accumulate q^{N} c_E d_E as a polynomial
    let mut acc = vec![Poly::zero(); n];
    for w in elems {
        let f = cp.of(w).map_err(|e| e.to_string())?;
        for e in 0..n {
            let tr = hk.values[e].iter().zip(&f).fold(Poly::zero(), |s, (v, c)| s + v * c);
            acc[e] += &(&tr * &tr).shift((maxlen - w.length() as i64) as usize);
        }
    }
    let pw = rs.poincare_polynomial().shift(maxlen as usize);
    Ok((0..n)
        .map(|e| {
            let c = RatFunc::from_poly(acc[e].clone());
            &(&RatFunc::from_poly(pw.clone()) * &RatFunc::from_poly(Poly::from_ints(&[table.dim(e)]))) / &c
        })
        .collect())
}

/// `R_E(1) = |W|^{-1} Σ_w χ_E(w) ε(w) |G^F|_{q'} / |T_w^F|`.
fn almost_degrees(rs: &RootSystem, table: &CharacterTable, input: &GreenInput) -> Vec<RatFunc> {
    let classes = rs.conjugacy_classes().unwrap();
    let gq = rs.degrees().iter().fold(Poly::from_ints(&[1]), |acc, &d| acc * (Poly::q_pow(d) - Poly::from_ints(&[1])));
    (0..table.len())
        .map(|e| {
            let mut total = RatFunc::zero();
            for c in 0..classes.len() {
                let sign = if classes.reps[c].length() % 2 == 0 { 1 } else { -1 };
                let x = sign * table.values[e][c] * table.class_sizes[c] as i64;
                if x != 0 {
                    total = total
                        + &RatFunc::new(gq.scale(&Q::from_integer(x.into())), input.torus[c].clone());
                }
            }
            total.scale(&q_frac(1, table.group_order as i64))
        })
        .collect()
}

/// Chooses the labelling of a family by pairs `(x, σ)` and applies the
/// Fourier matrix to the class sums. Every labelling compatible with the
/// Springer data and the generic degrees must give the same table.
#[allow(clippy::too_many_arguments)]
fn fourier_family(
    table: &CharacterTable,
    fam: &[usize],
    k: usize,
    springer: &[(usize, usize)],
    schur: &[RatFunc],
    deg_r: &[RatFunc],
    sums: &[Vec<Poly>],
    ab: &[(usize, usize)],
    log: &mut Vec<String>,
) -> Result<Vec<Vec<Poly>>, String> {
    let fg = FourierGroup::symmetric(k);
    let one = Partition::new(vec![1; k]);
    let special = *fam
        .iter()
        .find(|&&e| ab[e].0 == table.b(e))
        .ok_or("family without a special member")?;
    let sp_class = springer[special].0;
    let candidates: Vec<Vec<usize>> = fam
        .iter()
        .map(|&e| {
            let (c, l) = springer[e];
            fg.pairs
                .iter()
                .enumerate()
                .filter(|(_, p)| {
                    if c == sp_class {
                        p.class == one && p.sigma == l
                    } else if l == 0 {
                        p.class != one && p.sigma == 0
                    } else {
                        p.class != one
                    }
                })
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let qs = [2i64, 3, 5];
    let target: Vec<Vec<f64>> = fam.iter().map(|&e| qs.iter().map(|&q| eval(&schur[e], q)).collect()).collect();
    let rdeg: Vec<Vec<f64>> = fam.iter().map(|&e| qs.iter().map(|&q| eval(&deg_r[e], q)).collect()).collect();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut cur = Vec::new();
    search(&candidates, &mut cur, &mut |m: &[usize]| {
        let ok = (0..fam.len()).all(|i| {
            (0..qs.len()).all(|t| {
                let v: f64 = (0..fam.len()).map(|j| fg.matrix[m[i]][m[j]].re * rdeg[j][t]).sum();
                (v - target[i][t]).abs() <= 1e-7 * target[i][t].abs().max(1.0)
            })
        });
        if ok {
            found.push(m.to_vec());
        }
    });
    if found.is_empty() {
        return Err(format!("no Fourier labelling for the family of {}", table.labels[special]));
    }
    let denom = (1..=k).product::<usize>().pow(2) as i64;
    let mut tables: Vec<Vec<Vec<Poly>>> = Vec::new();
    for m in &found {
        let mut t = Vec::new();
        for i in 0..fam.len() {
            let mut row = vec![Poly::zero(); sums[0].len()];
            for j in 0..fam.len() {
                let z = fg.matrix[m[i]][m[j]];
                let num = (z.re * denom as f64).round();
                if z.im.abs() > 1e-9 || (z.re * denom as f64 - num).abs() > 1e-6 {
                    return Err("Fourier entry is not rational".into());
                }
                if num == 0.0 {
                    continue;
                }
                let f = q_frac(num as i64, denom);
                for (c, r) in row.iter_mut().enumerate() {
                    *r += &sums[fam[j]][c].scale(&f);
                }
            }
            t.push(row);
        }
        tables.push(t);
    }
    if tables.iter().any(|t| *t != tables[0]) {
        return Err(format!("Fourier labellings of the family of {} disagree", table.labels[special]));
    }
    let pairs = |m: &[usize]| {
        fam.iter()
            .zip(m)
            .map(|(&e, &p)| format!("{}={}", table.labels[e], show_pair(&fg.pairs[p])))
            .collect::<Vec<_>>()
            .join(" ")
    };
    log.push(format!("family of {}: {} labelling(s), e.g. {}", table.labels[special], found.len(), pairs(&found[0])));
    Ok(tables.swap_remove(0))
}

fn show_pair(p: &Pair) -> String {
    format!("({},{})", p.class, p.sigma)
}

fn search(cands: &[Vec<usize>], cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if cur.len() == cands.len() {
        visit(cur);
        return;
    }
    for &c in &cands[cur.len()] {
        if !cur.contains(&c) {
            cur.push(c);
            search(cands, cur, visit);
            cur.pop();
        }
    }
}
