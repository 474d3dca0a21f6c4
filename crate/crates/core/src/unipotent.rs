//! Unipotent classes and class-total values of unipotent principal series
//! characters.
//!
//! `values[E][C]` is `T_{E,C}(q) = Σ_{g ∈ C^F} tr(g, ρ_E)`, the total over
//! all rational points of the geometric class, so split classes need no
//! special treatment. Type A (as `GL_n`) is computed from Kostka–Foulkes
//! polynomials; other types are read from bundled data files.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::chars::{CharacterTable, HeckeCharTable};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{q_frac, q_int, Poly};
use crate::rootweyl::{CartanType, RootSystem};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable overriding the data directory.
pub const DATA_DIR_ENV: &str = "BRAIDCOUNT_DATA";

#[derive(Clone, Debug, PartialEq)]
pub struct UnipotentClass {
    /// Machine label, e.g. `A~1` or `(2,1)`.
    pub label: String,
    pub dim: usize,
    /// `|C^F|` as a polynomial in `q`.
    pub size: Poly,
}

impl UnipotentClass {
    /// Label with `~` rendered as a tilde accent: `A~1` becomes `Ã1`.
    pub fn display_label(&self) -> String {
        display_label(&self.label)
    }
}

pub fn display_label(label: &str) -> String {
    label.replace("A~", "Ã")
}

/// Accepts both `Ã1` and `A~1`.
pub fn machine_label(label: &str) -> String {
    label.replace('Ã', "A~")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepData {
    pub label: String,
    pub dim: i64,
    pub b: usize,
    pub a: usize,
    pub big_a: usize,
}

/// Group-side data for one type.
#[derive(Clone, Debug)]
pub struct UnipotentData {
    pub type_label: String,
    /// `|G^F|(q)`.
    pub group_order: Poly,
    /// Sorted by dimension, ties in file order.
    pub classes: Vec<UnipotentClass>,
    /// Covering pairs `(lower, upper)` of the closure order.
    pub hasse: Vec<(usize, usize)>,
    pub irreps: Vec<IrrepData>,
    /// Irreducible × class.
    pub values: Vec<Vec<Poly>>,
    pub hecke: Option<HeckeCharTable>,
    reach: Vec<Vec<bool>>,
}

impl UnipotentData {
    fn finish(mut self) -> Result<Self> {
        let n = self.classes.len();
        let mut reach = vec![vec![false; n]; n];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(lo, hi) in &self.hasse {
            reach[lo][hi] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        self.reach = reach;
        Ok(self)
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        let m = machine_label(label);
        self.classes.iter().position(|c| c.label == m)
    }

    /// `upper ≥ lower` in the closure order.
    pub fn geq(&self, upper: usize, lower: usize) -> bool {
        self.reach[lower][upper]
    }

    /// The class `{1}`.
    pub fn trivial_class(&self) -> usize {
        0
    }

    /// The regular class.
    pub fn regular_class(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn irrep_index(&self, label: &str) -> Option<usize> {
        self.irreps.iter().position(|e| e.label == label)
    }

    /// `|C^F|`.
    pub fn class_size(&self, c: usize) -> &Poly {
        &self.classes[c].size
    }

    /// Row index in `self.irreps` for each row of the character table.
    pub fn align(&self, table: &CharacterTable) -> Result<Vec<usize>> {
        table
            .labels
            .iter()
            .map(|l| {
                self.irrep_index(l)
                    .ok_or_else(|| Error::InvalidAsset(format!("no data for irreducible {l}")))
            })
            .collect()
    }
}

/// `|GL_n(F_q)| = q^{n(n-1)/2} Π_{i=1}^n (q^i - 1)`.
pub fn gl_order_poly(n: usize) -> Poly {
    (1..=n).fold(Poly::q_pow(n * n.saturating_sub(1) / 2), |acc, i| {
        acc * (Poly::q_pow(i) - Poly::one())
    })
}

/// `q^N Π (q^{d_i} - 1)`.
pub fn group_order_poly(rs: &RootSystem) -> Poly {
    rs.degrees()
        .iter()
        .fold(Poly::q_pow(rs.num_positive()), |acc, &d| {
            acc * (Poly::q_pow(d) - Poly::one())
        })
}

/// Centralizer of a unipotent of Jordan type `μ` in `GL_n`.
pub fn gl_centralizer_poly(mu: &Partition) -> Poly {
    let s: usize = mu.conjugate().parts().iter().map(|p| p * p).sum();
    let m = mu.multiplicities();
    let sm: usize = m.iter().map(|x| x * x).sum();
    m.iter()
        .fold(Poly::q_pow(s - sm), |acc, &k| acc * gl_order_poly(k))
}

/// Semistandard tableaux of shape `λ` and content `μ`, as rows.
pub fn ssyt(lambda: &Partition, mu: &Partition) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let rows = vec![Vec::new(); lambda.len()];
    fn rec(
        lambda: &Partition,
        mu: &Partition,
        letter: usize,
        rows: Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if letter == mu.len() {
            if rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == lambda.part(i))
            {
                out.push(rows);
            }
            return;
        }
        // place mu[letter] copies of the letter as a horizontal strip
        let shape: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        let mut adds = vec![0usize; rows.len()];
        fn strip(
            i: usize,
            left: usize,
            shape: &[usize],
            lambda: &Partition,
            adds: &mut Vec<usize>,
            f: &mut dyn FnMut(&[usize]),
        ) {
            if i == shape.len() {
                if left == 0 {
                    f(adds);
                }
                return;
            }
            // new boxes in row i must sit above old boxes of row i-1
            let cap_above = if i == 0 { usize::MAX } else { shape[i - 1] };
            let max = (lambda.part(i) - shape[i])
                .min(cap_above.saturating_sub(shape[i]))
                .min(left);
            for a in 0..=max {
                adds[i] = a;
                strip(i + 1, left - a, shape, lambda, adds, f);
            }
            adds[i] = 0;
        }
        let mut choices = Vec::new();
        strip(0, mu.part(letter), &shape, lambda, &mut adds, &mut |a| {
            choices.push(a.to_vec())
        });
        for a in choices {
            let mut next = rows.clone();
            for (r, &k) in a.iter().enumerate() {
                next[r].extend(std::iter::repeat(letter).take(k));
            }
            rec(lambda, mu, letter + 1, next, out);
        }
    }
    rec(lambda, mu, 0, rows, &mut out);
    out
}

/// Lascoux–Schützenberger charge of a word with partition content
/// (letters `0..`).
pub fn charge(word: &[usize]) -> usize {
    let mut letters: Vec<Option<usize>> = word.iter().map(|&x| Some(x)).collect();
    let mut total = 0;
    while letters.iter().any(|x| x.is_some()) {
        let top = letters.iter().flatten().max().copied().unwrap();
        let n = letters.len();
        let mut pos = n;
        let mut index = 0;
        for k in 0..=top {
            // scan leftwards cyclically from pos for letter k
            let mut found = None;
            let mut wrapped = false;
            for step in 1..=n {
                let p = (pos + n - step) % n;
                if pos < step {
                    wrapped = true;
                }
                if letters[p] == Some(k) {
                    found = Some(p);
                    break;
                }
            }
            let p = found.expect("content must be a partition");
            if k > 0 && wrapped {
                index += 1;
            }
            total += index;
            letters[p] = None;
            pos = p;
        }
        letters.retain(|x| x.is_some());
    }
    total
}

/// Kostka–Foulkes polynomial `K_{λμ}(t)` by charge.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Poly {
    let mut coeffs = vec![0i64; mu.n_statistic() + 1];
    for t in ssyt(lambda, mu) {
        // reading word: rows bottom to top, each left to right
        let word: Vec<usize> = t.iter().rev().flatten().copied().collect();
        coeffs[charge(&word)] += 1;
    }
    Poly::from_ints(&coeffs)
}

/// `GL_n` data for `A_{n-1}`: classes by Jordan type under dominance, and
/// `T_{λ,μ} = |C_μ^F| q^{n(μ)} K_{λμ}(q^{-1})`.
pub fn type_a_data(rs: &RootSystem, table: &CharacterTable) -> Result<UnipotentData> {
    let CartanType::A(r) = rs.cartan_type() else {
        return Err(Error::UnsupportedType(rs.label()));
    };
    let n = r + 1;
    let g = gl_order_poly(n);
    let mut parts = Partition::all(n);
    let dim = |mu: &Partition| n * n - mu.conjugate().parts().iter().map(|p| p * p).sum::<usize>();
    parts.sort_by(|a, b| {
        dim(a)
            .cmp(&dim(b))
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
    let classes = parts
        .iter()
        .map(|mu| {
            let size = g
                .div_exact(&gl_centralizer_poly(mu))
                .ok_or_else(|| Error::InexactDivision(mu.to_string()))?;
            Ok(UnipotentClass {
                label: mu.to_string(),
                dim: dim(mu),
                size,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut hasse = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for (j, b) in parts.iter().enumerate() {
            if i != j && b.dominates(a) {
                let covered = parts
                    .iter()
                    .any(|c| c != a && c != b && c.dominates(a) && b.dominates(c));
                if !covered {
                    hasse.push((i, j));
                }
            }
        }
    }
    let labels = table
        .partitions
        .as_ref()
        .ok_or_else(|| Error::UnsupportedType(rs.label()))?;
    let irreps = (0..table.len())
        .map(|e| {
            let f = &table.fake_degrees[e];
            IrrepData {
                label: table.labels[e].clone(),
                dim: table.dim(e),
                b: table.b(e),
                a: f.valuation().unwrap_or(0),
                big_a: f.degree().unwrap_or(0),
            }
        })
        .collect();
    let values = labels
        .iter()
        .map(|lambda| {
            parts
                .iter()
                .zip(&classes)
                .map(|(mu, c)| {
                    let k = kostka_foulkes(lambda, mu);
                    let nm = mu.n_statistic();
                    // q^{n(μ)} K(1/q): reverse the coefficients up to n(μ)
                    &c.size * &k.reverse(nm)
                })
                .collect()
        })
        .collect();
    UnipotentData {
        type_label: format!("GL{n}"),
        group_order: g,
        classes,
        hasse,
        irreps,
        values,
        hecke: None,
        reach: Vec::new(),
    }
    .finish()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AssetIrrep {
    pub label: String,
    pub dim: i64,
    pub b: usize,
    pub a: usize,
    #[serde(rename = "A")]
    pub big_a: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AssetClass {
    pub label: String,
    pub dim: usize,
    /// `|C^F|`, coefficients lowest degree first.
    pub size: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AssetHecke {
    /// Minimal-length class representatives, 1-based generators.
    pub class_words: Vec<Vec<usize>>,
    /// Per irreducible, one coefficient list per class word.
    pub values: BTreeMap<String, Vec<Vec<i64>>>,
}

/// On-disk form of [`UnipotentData`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AssetFile {
    #[serde(rename = "type")]
    pub type_label: String,
    pub schema_version: u32,
    pub irreps: Vec<AssetIrrep>,
    pub classes: Vec<AssetClass>,
    pub hasse: Vec<[String; 2]>,
    /// Common denominator of every entry of `values`.
    #[serde(default = "one_i64")]
    pub denominator: i64,
    /// Per irreducible, one coefficient list per class in `classes` order,
    /// scaled by `denominator`.
    pub values: BTreeMap<String, Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hecke: Option<AssetHecke>,
}

fn one_i64() -> i64 {
    1
}

impl AssetFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::InvalidAsset(e.to_string()))
    }

    pub fn to_text(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::InvalidAsset(e.to_string()))
    }

    /// Resolves labels against the root system and its character table.
    pub fn into_data(self, rs: &RootSystem, table: &CharacterTable) -> Result<UnipotentData> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::InvalidAsset(format!(
                "schema version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        if self.denominator <= 0 {
            return Err(Error::InvalidAsset("denominator must be positive".into()));
        }
        if self.type_label != rs.label() {
            return Err(Error::InvalidAsset(format!(
                "file is for {}, not {}",
                self.type_label,
                rs.label()
            )));
        }
        let classes: Vec<UnipotentClass> = self
            .classes
            .iter()
            .map(|c| UnipotentClass {
                label: c.label.clone(),
                dim: c.dim,
                size: Poly::from_ints(&c.size),
            })
            .collect();
        let find = |l: &str| {
            classes
                .iter()
                .position(|c| c.label == l)
                .ok_or_else(|| Error::InvalidAsset(format!("unknown class {l}")))
        };
        let hasse = self
            .hasse
            .iter()
            .map(|[a, b]| Ok((find(a)?, find(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let irreps: Vec<IrrepData> = self
            .irreps
            .iter()
            .map(|e| IrrepData {
                label: e.label.clone(),
                dim: e.dim,
                b: e.b,
                a: e.a,
                big_a: e.big_a,
            })
            .collect();
        let values = irreps
            .iter()
            .map(|e| {
                let row = self
                    .values
                    .get(&e.label)
                    .ok_or_else(|| Error::InvalidAsset(format!("no values for {}", e.label)))?;
                if row.len() != classes.len() {
                    return Err(Error::InvalidAsset(format!(
                        "value row of {} has wrong length",
                        e.label
                    )));
                }
                Ok(row
                    .iter()
                    .map(|c| Poly::from_ints(c).scale(&q_frac(1, self.denominator)))
                    .collect())
            })
            .collect::<Result<Vec<Vec<Poly>>>>()?;
        #[cfg(feature = "tier2")]
        let hecke = match self.hecke {
            None => None,
            Some(h) => Some(hecke_from_asset(rs, table, &h)?),
        };
        #[cfg(not(feature = "tier2"))]
        let hecke = {
            let _ = table;
            None
        };
        UnipotentData {
            type_label: self.type_label,
            group_order: group_order_poly(rs),
            classes,
            hasse,
            irreps,
            values,
            hecke,
            reach: Vec::new(),
        }
        .finish()
    }
}

#[cfg(feature = "tier2")]
/// Maps the asset's class words onto the conjugacy classes of `rs`.
fn hecke_from_asset(
    rs: &RootSystem,
    table: &CharacterTable,
    h: &AssetHecke,
) -> Result<HeckeCharTable> {
    let classes = rs.conjugacy_classes()?;
    let mut column = vec![usize::MAX; classes.len()];
    for (k, word) in h.class_words.iter().enumerate() {
        if word.iter().any(|&g| g == 0 || g > rs.rank()) {
            return Err(Error::InvalidAsset(format!(
                "bad generator in class word {k}"
            )));
        }
        let w = rs.element_from_word(&word.iter().map(|g| g - 1).collect::<Vec<_>>());
        let c = rs.class_of(&w)?;
        if w.length() != classes.reps[c].length() || w.length() != word.len() {
            return Err(Error::InvalidAsset(format!(
                "class word {k} is not of minimal length"
            )));
        }
        column[c] = k;
    }
    if column.iter().any(|&k| k == usize::MAX) {
        return Err(Error::InvalidAsset(
            "Hecke table misses a conjugacy class".into(),
        ));
    }
    let values = table
        .labels
        .iter()
        .map(|l| {
            let row = h
                .values
                .get(l)
                .ok_or_else(|| Error::InvalidAsset(format!("no Hecke values for {l}")))?;
            Ok(column.iter().map(|&k| Poly::from_ints(&row[k])).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HeckeCharTable {
        labels: table.labels.clone(),
        values,
    })
}

/// Directory holding `<TYPE>.toml` data files: an explicit path, else the
/// environment override, else the crate's bundled `data/`.
pub fn data_dir(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Ok(p) = std::env::var(DATA_DIR_ENV) {
        return PathBuf::from(p);
    }
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data"))
}

pub fn asset_path(rs: &RootSystem, dir: Option<&Path>) -> PathBuf {
    data_dir(dir).join(format!("{}.toml", rs.label()))
}

pub fn load_asset_file(rs: &RootSystem, dir: Option<&Path>) -> Result<AssetFile> {
    let path = asset_path(rs, dir);
    let text =
        fs::read_to_string(&path).map_err(|_| Error::MissingAsset(path.display().to_string()))?;
    AssetFile::parse(&text)
}

/// Group-side data for any supported type.
pub fn load(rs: &RootSystem, table: &CharacterTable, dir: Option<&Path>) -> Result<UnipotentData> {
    if rs.cartan_type().is_type_a() {
        return type_a_data(rs, table);
    }
    load_asset_file(rs, dir)?.into_data(rs, table)
}

/// Outcome of one named validation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: std::result::Result<(), String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub type_label: String,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome.is_ok())
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            match &c.outcome {
                Ok(()) => writeln!(f, "PASS  {}", c.name)?,
                Err(e) => writeln!(f, "FAIL  {}: {e}", c.name)?,
            }
        }
        write!(
            f,
            "{} {}",
            self.type_label,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

fn check(name: &'static str, f: impl FnOnce() -> std::result::Result<(), String>) -> Check {
    Check { name, outcome: f() }
}

/// Every structural invariant of the data against the character table.
pub fn validate(rs: &RootSystem, table: &CharacterTable, data: &UnipotentData) -> ValidationReport {
    let mut checks = Vec::new();
    let n = data.classes.len();
    checks.push(check("irreducibles match the character table", || {
        if data.irreps.len() != table.len() {
            return Err(format!(
                "{} irreducibles, table has {}",
                data.irreps.len(),
                table.len()
            ));
        }
        for (e, l) in table.labels.iter().enumerate() {
            let d = data.irrep_index(l).ok_or(format!("missing {l}"))?;
            let r = &data.irreps[d];
            if r.dim != table.dim(e) || r.b != table.b(e) {
                return Err(format!("{l}: dim/b disagree with the character table"));
            }
            if !(r.a <= r.b && r.b <= r.big_a && r.big_a <= rs.num_positive()) {
                return Err(format!("{l}: expected a <= b <= A <= N"));
            }
        }
        Ok(())
    }));
    checks.push(check(
        "identity column has valuation a and degree A",
        || {
            let one = data.trivial_class();
            for (e, r) in data.irreps.iter().enumerate() {
                let v = &data.values[e][one];
                if v.valuation() != Some(r.a) || v.degree() != Some(r.big_a) {
                    return Err(format!(
                        "{}: ρ(1) = {v} but (a, A) = ({}, {})",
                        r.label, r.a, r.big_a
                    ));
                }
            }
            Ok(())
        },
    ));
    checks.push(check("trivial row equals class sizes", || {
        let t = data
            .irreps
            .iter()
            .position(|r| r.dim == 1 && r.b == 0)
            .ok_or("no trivial irreducible")?;
        for c in 0..n {
            if data.values[t][c] != data.classes[c].size {
                return Err(format!("class {}", data.classes[c].label));
            }
        }
        Ok(())
    }));
    checks.push(check("class sizes sum to q^{2N}", || {
        let total = data
            .classes
            .iter()
            .fold(Poly::zero(), |acc, c| acc + &c.size);
        let want = Poly::q_pow(2 * rs.num_positive())
            * if rs.cartan_type().is_type_a() {
                Poly::q_pow(0)
            } else {
                Poly::one()
            };
        // GL_n has n^2 - n unipotent dimensions, i.e. q^{2N} as well
        if total != want {
            return Err(format!("sum is {total}"));
        }
        for q0 in [2, 3] {
            if total.eval_int(q0) != q_int(q0).pow(2 * rs.num_positive() as i32) {
                return Err(format!("numeric check at q={q0}"));
            }
        }
        Ok(())
    }));
    checks.push(check("closure order", || {
        if n == 0 {
            return Err("no classes".into());
        }
        for &(lo, hi) in &data.hasse {
            if data.classes[lo].dim >= data.classes[hi].dim {
                return Err(format!(
                    "{} < {} but dimensions do not increase",
                    data.classes[lo].label, data.classes[hi].label
                ));
            }
        }
        for c in 0..n {
            if !data.geq(c, 0) || !data.geq(n - 1, c) {
                return Err(format!(
                    "{} is not between 1 and the regular class",
                    data.classes[c].label
                ));
            }
        }
        if data.classes[0].dim != 0 || data.classes[n - 1].dim != 2 * rs.num_positive() {
            return Err("extreme classes have wrong dimensions".into());
        }
        Ok(())
    }));
    checks.push(check("class sizes have degree dim C", || {
        for c in &data.classes {
            if c.size.degree() != Some(c.dim) {
                return Err(format!("{}: degree of |C^F| differs from dim", c.label));
            }
        }
        Ok(())
    }));
    if let Some(h) = &data.hecke {
        checks.push(check(
            "Hecke table specialises to the W character table",
            || h.check_degeneration(table).map_err(|e| e.to_string()),
        ));
    }
    ValidationReport {
        type_label: rs.label(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::char_table;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn kostka_foulkes_small() {
        assert_eq!(
            kostka_foulkes(&p("3"), &p("111")),
            Poly::from_ints(&[0, 0, 0, 1])
        );
        assert_eq!(
            kostka_foulkes(&p("21"), &p("111")),
            Poly::from_ints(&[0, 1, 1])
        );
        assert_eq!(kostka_foulkes(&p("111"), &p("111")), Poly::one());
        assert_eq!(
            kostka_foulkes(&p("22"), &p("211")),
            Poly::from_ints(&[0, 1])
        );
        assert_eq!(
            kostka_foulkes(&p("31"), &p("211")),
            Poly::from_ints(&[0, 1, 1])
        );
        assert_eq!(kostka_foulkes(&p("31"), &p("22")), Poly::from_ints(&[0, 1]));
        // K(1) are Kostka numbers
        for l in Partition::all(5) {
            for m in Partition::all(5) {
                let k = kostka_foulkes(&l, &m);
                assert_eq!(k.eval_int(1), q_int(ssyt(&l, &m).len() as i64));
                assert_eq!(k.is_zero(), !l.dominates(&m));
            }
        }
    }

    #[test]
    fn gl_class_sizes() {
        let a1 = RootSystem::from_label("A1").unwrap();
        let t = char_table(&a1).unwrap();
        let d = type_a_data(&a1, &t).unwrap();
        let reg = d.class_index("(2)").unwrap();
        assert_eq!(d.classes[reg].size, Poly::from_ints(&[-1, 0, 1]));
        let a2 = RootSystem::from_label("A2").unwrap();
        let d = type_a_data(&a2, &char_table(&a2).unwrap()).unwrap();
        let c = d.class_index("(2,1)").unwrap();
        // (q+1)(q^3-1): 21 at q = 2, which is 64 - 1 - 42
        assert_eq!(
            d.classes[c].size,
            Poly::from_ints(&[1, 1]) * Poly::from_ints(&[-1, 0, 0, 1])
        );
        let s = crate::oracle::FlagSpace::new(3, 2)
            .unwrap()
            .unipotent_class_sizes()
            .unwrap();
        for (k, mu) in Partition::all(3).iter().enumerate() {
            let c = d.class_index(&mu.to_string()).unwrap();
            assert_eq!(d.classes[c].size.eval_int(2), q_int(s[mu] as i64), "{k}");
        }
        assert!(d.geq(d.regular_class(), c) && !d.geq(d.trivial_class(), c));
    }

    #[test]
    fn type_a_pins() {
        for l in ["A1", "A2", "A3", "A4"] {
            let rs = RootSystem::from_label(l).unwrap();
            let t = char_table(&rs).unwrap();
            let d = type_a_data(&rs, &t).unwrap();
            let report = validate(&rs, &t, &d);
            assert!(report.passed(), "{report}");
        }
        let a1 = RootSystem::from_label("A1").unwrap();
        let t = char_table(&a1).unwrap();
        let d = type_a_data(&a1, &t).unwrap();
        let sign = d.irrep_index("(1,1)").unwrap();
        assert!(d.values[sign][d.class_index("(2)").unwrap()].is_zero());
        assert_eq!(d.values[sign][d.trivial_class()], Poly::q_pow(1));
    }

    #[test]
    fn fault_injection_is_caught() {
        let rs = RootSystem::from_label("A2").unwrap();
        let t = char_table(&rs).unwrap();
        let mut d = type_a_data(&rs, &t).unwrap();
        let e = d.irrep_index("(2,1)").unwrap();
        d.irreps[e].a = 2;
        d.irreps[e].big_a = 1;
        assert!(!validate(&rs, &t, &d).passed());
        let mut d = type_a_data(&rs, &t).unwrap();
        d.hasse.push((2, 1));
        assert!(!validate(&rs, &t, &d).passed());
    }
}
