//! Hecke character tables from left-cell modules.
//!
//! Each cell module is realised over `F_p` at `q = r^2` from its W-graph,
//! split into irreducibles by spinning eigenvectors of random algebra
//! elements, and the pieces are named by their traces on rank-2 parabolics.
//! Traces on the class representatives are then interpolated in `q`.

use std::collections::{BTreeMap, HashMap};

use braidcount::chars::{CharacterTable, HeckeCharTable};
use braidcount::poly::Poly;
use braidcount::rootweyl::RootSystem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kl::KlData;
use crate::modp::{self, Mat};

/// Generator matrices of the cell module on `cell` at `q = r^2`
/// (column convention: `T_s e_w = Σ_y M[y][w] e_y`).
pub fn cell_matrices(kl: &KlData, mu: &HashMap<(usize, usize), i64>, cell: &[usize], r: u64) -> Vec<Mat> {
    let q = modp::mul(r, r);
    let d = cell.len();
    (0..kl.rank)
        .map(|s| {
            let mut m = modp::zeros(d, d);
            for (j, &w) in cell.iter().enumerate() {
                if kl.ldesc[w] >> s & 1 == 1 {
                    m[j][j] = q;
                    continue;
                }
                m[j][j] = modp::sub(0, 1);
                for (i, &y) in cell.iter().enumerate() {
                    if kl.ldesc[y] >> s & 1 == 1 {
                        if let Some(&c) = mu.get(&(y, w)) {
                            m[i][j] = modp::add(m[i][j], modp::mul(r, modp::from_i64(c)));
                        }
                    }
                }
            }
            m
        })
        .collect()
}

/// Smallest submodule containing `v` (rows of the returned basis, reduced).
fn spin(gens: &[Mat], v: Vec<u64>) -> Mat {
    let mut basis: Mat = vec![v.clone()];
    modp::rref(&mut basis);
    let mut queue = vec![v];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = modp::mat_vec(g, &x);
            let mut trial = basis.clone();
            trial.push(y.clone());
            if modp::rref(&mut trial).len() > basis.len() {
                basis = trial;
                queue.push(y);
            }
        }
    }
    basis
}

/// Action of each generator on the submodule spanned by `basis`.
fn restrict(gens: &[Mat], basis: &Mat) -> Vec<Mat> {
    gens.iter()
        .map(|g| {
            let k = basis.len();
            let mut m = modp::zeros(k, k);
            for (j, b) in basis.iter().enumerate() {
                let c = modp::coordinates(basis, &modp::mat_vec(g, b)).expect("submodule");
                for i in 0..k {
                    m[i][j] = c[i];
                }
            }
            m
        })
        .collect()
}

pub fn word_matrix(gens: &[Mat], word: &[usize]) -> Mat {
    let d = gens[0].len();
    word.iter().fold(modp::identity(d), |acc, &s| modp::mat_mul(&acc, &gens[s]))
}

fn random_element(gens: &[Mat], rng: &mut impl Rng) -> Mat {
    let d = gens[0].len();
    let mut a = modp::zeros(d, d);
    for _ in 0..4 {
        let len = rng.gen_range(1..=4);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..gens.len())).collect();
        let m = word_matrix(gens, &word);
        let c = rng.gen_range(1..modp::P);
        for i in 0..d {
            for j in 0..d {
                a[i][j] = modp::add(a[i][j], modp::mul(c, m[i][j]));
            }
        }
    }
    a
}

/// Constituents of multiplicity one, as restricted generator matrices.
/// A simple eigenvalue of a random algebra element lies in such a
/// constituent, and its eigenvector generates it.
fn split(gens: &[Mat], rng: &mut impl Rng) -> Vec<Vec<Mat>> {
    let d = gens[0].len();
    let mut found: Vec<Mat> = Vec::new();
    let mut total = 0;
    for _ in 0..40 {
        if total == d {
            break;
        }
        let a = random_element(gens, rng);
        let f = modp::char_poly(&a);
        for lambda in modp::simple_roots(&f, rng) {
            let mut shifted = a.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = modp::sub(row[i], lambda);
            }
            let ns = modp::null_space(&shifted, d);
            let sub = spin(gens, ns[0].clone());
            // skip pieces already found
            let mut all: Mat = found.iter().flatten().cloned().collect();
            let before = modp::rref(&mut all.clone()).len();
            all.extend(sub.iter().cloned());
            if modp::rref(&mut all).len() == before + sub.len() {
                total += sub.len();
                found.push(sub);
            }
        }
    }
    found.iter().map(|b| restrict(gens, b)).collect()
}

/// Predicted traces of `T_s` and `T_s T_t` as polynomials in `q`, computed
/// from the restriction of each W-irreducible to rank-2 parabolics.
pub struct Signatures {
    pub words: Vec<Vec<usize>>,
    /// Irreducible × word, coefficients lowest first.
    pub polys: Vec<Vec<Vec<i64>>>,
}

impl Signatures {
    pub fn new(rs: &RootSystem, table: &CharacterTable) -> Result<Self, String> {
        let rank = rs.rank();
        let chi = |e: usize, w: &[usize]| -> i64 {
            let c = rs.class_of(&rs.element_from_word(w)).expect("class");
            table.values[e][c]
        };
        let mut words = Vec::new();
        let mut polys = vec![Vec::new(); table.len()];
        for s in 0..rank {
            words.push(vec![s]);
            for (e, p) in polys.iter_mut().enumerate() {
                let (d, x) = (table.dim(e), chi(e, &[s]));
                p.push(vec![-(d - x) / 2, (d + x) / 2]);
            }
        }
        for s in 0..rank {
            for t in s + 1..rank {
                let m = rs.element_from_word(&[s, t]).order();
                words.push(vec![s, t]);
                // elements of the dihedral subgroup as alternating words
                let mut elems: Vec<Vec<usize>> = Vec::new();
                for k in 0..m {
                    elems.push([s, t].iter().cycle().take(2 * k).copied().collect());
                    elems.push([s, t].iter().cycle().take(2 * k + 1).copied().collect());
                }
                for (e, p) in polys.iter_mut().enumerate() {
                    let vals: Vec<i64> = elems.iter().map(|w| chi(e, w)).collect();
                    let mult = |f: &dyn Fn(&[usize]) -> f64| -> i64 {
                        let x: f64 = elems.iter().zip(&vals).map(|(w, &v)| v as f64 * f(w)).sum();
                        (x / (2 * m) as f64).round() as i64
                    };
                    let mut poly = vec![0i64; 3];
                    for (a, b) in [(1i64, 1i64), (-1, -1), (1, -1), (-1, 1)] {
                        if a != b && m % 2 == 1 {
                            continue;
                        }
                        let n = mult(&|w: &[usize]| {
                            w.iter().map(|&g| if g == s { a } else { b }).product::<i64>() as f64
                        });
                        // T_s -> q or -1, T_t likewise
                        let lin = |x: i64| if x == 1 { [0, 1] } else { [-1, 0] };
                        let (u, v) = (lin(a), lin(b));
                        poly[0] += n * u[0] * v[0];
                        poly[1] += n * (u[0] * v[1] + u[1] * v[0]);
                        poly[2] += n * u[1] * v[1];
                    }
                    for j in 1..=(m - 1) / 2 {
                        let n = mult(&|w: &[usize]| {
                            if w.len() % 2 == 1 {
                                0.0
                            } else {
                                let k = (w.len() / 2) as f64;
                                2.0 * (2.0 * std::f64::consts::PI * j as f64 * k / m as f64).cos()
                            }
                        });
                        let c = (2.0 * (2.0 * std::f64::consts::PI * j as f64 / m as f64).cos()).round() as i64;
                        poly[1] += n * c;
                    }
                    p.push(poly);
                }
            }
        }
        for e in 0..table.len() {
            for f in 0..e {
                if table.dim(e) == table.dim(f) && polys[e] == polys[f] {
                    return Err(format!("{} and {} share a signature", table.labels[e], table.labels[f]));
                }
            }
        }
        Ok(Signatures { words, polys })
    }

    fn identify(&self, table: &CharacterTable, gens: &[Mat], q: u64) -> Option<usize> {
        let d = gens[0].len() as i64;
        let observed: Vec<u64> = self.words.iter().map(|w| modp::trace(&word_matrix(gens, w))).collect();
        let hits: Vec<usize> = (0..table.len())
            .filter(|&e| table.dim(e) == d)
            .filter(|&e| {
                self.polys[e].iter().zip(&observed).all(|(p, &o)| {
                    p.iter().rev().fold(0, |acc, &c| modp::add(modp::mul(acc, q), modp::from_i64(c))) == o
                })
            })
            .collect();
        (hits.len() == 1).then(|| hits[0])
    }
}

/// Hecke character table on the class representatives of `rs`.
pub fn hecke_table(rs: &RootSystem, table: &CharacterTable, kl: &KlData) -> Result<HeckeCharTable, String> {
    let sig = Signatures::new(rs, table)?;
    let classes = rs.conjugacy_classes().map_err(|e| e.to_string())?;
    let mu = kl.mu_table();
    let cells = kl.left_cells();
    let maxlen = classes.rep_words.iter().map(|w| w.len()).max().unwrap_or(0);
    let npts = maxlen + 4;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    // irreducible -> (xs, class values at each point)
    let mut samples: BTreeMap<usize, (Vec<u64>, Vec<Vec<u64>>)> = BTreeMap::new();
    for r in 2..(2 + npts as u64) {
        let q = modp::mul(r, r);
        let mut seen = vec![false; table.len()];
        for cell in &cells {
            if seen.iter().all(|&b| b) {
                break;
            }
            let gens = cell_matrices(kl, &mu, cell, r);
            for piece in split(&gens, &mut rng) {
                let e = sig
                    .identify(table, &piece, q)
                    .ok_or_else(|| format!("unidentified constituent of dimension {}", piece[0].len()))?;
                if seen[e] {
                    continue;
                }
                seen[e] = true;
                let vals = classes.rep_words.iter().map(|w| modp::trace(&word_matrix(&piece, w))).collect();
                let entry = samples.entry(e).or_default();
                entry.0.push(q);
                entry.1.push(vals);
            }
        }
        if let Some(e) = seen.iter().position(|&b| !b) {
            return Err(format!("{} not found in any cell", table.labels[e]));
        }
    }
    let mut values = Vec::new();
    for e in 0..table.len() {
        let (xs, ys) = &samples[&e];
        let row = (0..classes.len())
            .map(|c| {
                let col: Vec<u64> = ys.iter().map(|v| v[c]).collect();
                let coeffs = modp::interpolate(xs, &col);
                let deg = coeffs.iter().rposition(|&x| x != 0).map_or(0, |k| k);
                if deg > classes.rep_words[c].len() {
                    return Err(format!("trace of {} on class {} did not stabilise", table.labels[e], c + 1));
                }
                Ok(Poly::from_ints(&coeffs))
            })
            .collect::<Result<Vec<_>, String>>()?;
        values.push(row);
    }
    let hecke = HeckeCharTable { labels: table.labels.clone(), values };
    hecke.check_degeneration(table).map_err(|e| e.to_string())?;
    Ok(hecke)
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidcount::chars::char_table;

    #[test]
    fn matches_seminormal_in_type_a() {
        for label in ["A2", "A3", "A4"] {
            let rs = RootSystem::from_label(label).unwrap();
            let table = char_table(&rs).unwrap();
            let kl = KlData::new(&rs).unwrap();
            let got = hecke_table(&rs, &table, &kl).unwrap();
            assert_eq!(got, HeckeCharTable::type_a(&rs, &table).unwrap(), "{label}");
        }
    }

    #[test]
    fn g2_table_degenerates() {
        let rs = RootSystem::from_label("G2").unwrap();
        let table = char_table(&rs).unwrap();
        let kl = KlData::new(&rs).unwrap();
        hecke_table(&rs, &table, &kl).unwrap();
    }
}
