//! Characters of Weyl groups and of their Iwahori–Hecke algebras.
//!
//! Hecke algebra convention: `T_s^2 = (q-1) T_s + q`, so `T_s` has eigenvalues
//! `q` and `-1`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::braid::{BraidWord, Slope};
use crate::error::{Error, Result};
use crate::partition::{mn_character, standard_tableaux, Partition};
use crate::poly::{cyclotomic, q_frac, q_int, Poly, RatFunc, Q};
use crate::rootweyl::{RootSystem, WeylElement};

/// Character table of `W`. Rows are irreducibles, columns follow
/// [`RootSystem::conjugacy_classes`].
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub labels: Vec<String>,
    pub values: Vec<Vec<i64>>,
    pub class_sizes: Vec<usize>,
    pub fake_degrees: Vec<Poly>,
    /// Partition labels in type A.
    pub partitions: Option<Vec<Partition>>,
    pub group_order: usize,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn dim(&self, e: usize) -> i64 {
        self.values[e][0]
    }

    /// Lowest degree of the fake degree.
    pub fn b(&self, e: usize) -> usize {
        self.fake_degrees[e].valuation().unwrap_or(0)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn trivial(&self) -> usize {
        self.index_where(|t, e| t.values[e].iter().all(|&v| v == 1))
    }

    pub fn sign(&self) -> usize {
        let n = self
            .fake_degrees
            .iter()
            .filter_map(|f| f.degree())
            .max()
            .unwrap_or(0);
        self.index_where(|t, e| t.dim(e) == 1 && t.b(e) == n)
    }

    fn index_where(&self, f: impl Fn(&Self, usize) -> bool) -> usize {
        (0..self.len())
            .find(|&e| f(self, e))
            .expect("character not found")
    }

    /// `Σ_C |C| χ(C) ψ(C)`.
    pub fn inner(&self, e: usize, f: usize) -> i64 {
        (0..self.class_sizes.len())
            .map(|c| self.class_sizes[c] as i64 * self.values[e][c] * self.values[f][c])
            .sum()
    }

    /// Multiplicities of the irreducibles in a class function given on classes.
    pub fn decompose(&self, chi: &[i64]) -> Result<Vec<i64>> {
        (0..self.len())
            .map(|e| {
                let s: i64 = (0..chi.len())
                    .map(|c| self.class_sizes[c] as i64 * chi[c] * self.values[e][c])
                    .sum();
                if s % self.group_order as i64 != 0 {
                    return Err(Error::InvalidInput(
                        "class function is not a character".into(),
                    ));
                }
                Ok(s / self.group_order as i64)
            })
            .collect()
    }
}

/// Cycle type of a type-A element, read off its reflection characteristic
/// polynomial: `(x - 1) det(x - w) = Π (x^{λ_i} - 1)`.
pub fn cycle_type(rs: &RootSystem, w: &WeylElement) -> Partition {
    let n = rs.rank() + 1;
    let mut p = rs.char_poly(w) * cyclotomic(1);
    // number of parts divisible by k equals the multiplicity of Φ_k
    let mut divisible = vec![0usize; n + 1];
    for (k, slot) in divisible.iter_mut().enumerate().skip(1) {
        let phi = cyclotomic(k);
        while let Some(qt) = p.div_exact(&phi) {
            p = qt;
            *slot += 1;
        }
    }
    let mut exact = vec![0usize; n + 1];
    for k in (1..=n).rev() {
        let bigger: usize = (2..=n / k).map(|j| exact[j * k]).sum();
        exact[k] = divisible[k] - bigger;
    }
    let mut parts = Vec::new();
    for (k, &c) in exact.iter().enumerate().skip(1) {
        parts.extend(std::iter::repeat(k).take(c));
    }
    Partition::new(parts)
}

pub fn char_table(rs: &RootSystem) -> Result<CharacterTable> {
    let classes = rs.conjugacy_classes()?;
    let order = classes.group_order;
    let (rows, partitions) = if rs.cartan_type().is_type_a() {
        let types: Vec<Partition> = classes.reps.iter().map(|w| cycle_type(rs, w)).collect();
        let parts = Partition::all(rs.rank() + 1);
        let rows = parts
            .iter()
            .map(|l| types.iter().map(|mu| mn_character(l, mu)).collect())
            .collect();
        (rows, Some(parts))
    } else {
        (dixon_schneider(rs)?, None)
    };
    let fake = fake_degrees_of(rs, &rows, &classes.sizes)?;
    let mut table = CharacterTable {
        labels: Vec::new(),
        values: rows,
        class_sizes: classes.sizes.clone(),
        fake_degrees: fake,
        partitions,
        group_order: order,
    };
    if let Some(parts) = &table.partitions {
        table.labels = parts.iter().map(|p| p.to_string()).collect();
    } else {
        label_exceptional(&mut table);
    }
    check_orthogonality(&table)?;
    Ok(table)
}

/// Sorts rows by `(b, dim)` and labels them `dim_b` with primes separating
/// equal keys; among such rows, larger value vectors (in class order) get
/// fewer primes.
fn label_exceptional(t: &mut CharacterTable) {
    let n = t.values.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&x, &y| {
        (t.b(x), t.dim(x))
            .cmp(&(t.b(y), t.dim(y)))
            .then_with(|| t.values[y].cmp(&t.values[x]))
    });
    t.values = idx.iter().map(|&i| t.values[i].clone()).collect();
    t.fake_degrees = idx.iter().map(|&i| t.fake_degrees[i].clone()).collect();
    let keys: Vec<(i64, usize)> = (0..n).map(|e| (t.dim(e), t.b(e))).collect();
    t.labels = (0..n)
        .map(|e| {
            let same = keys.iter().filter(|k| **k == keys[e]).count();
            let rank = keys[..e].iter().filter(|k| **k == keys[e]).count();
            let primes = if same > 1 {
                "'".repeat(rank + 1)
            } else {
                String::new()
            };
            format!("{}_{}{}", keys[e].0, keys[e].1, primes)
        })
        .collect();
}

fn check_orthogonality(t: &CharacterTable) -> Result<()> {
    for e in 0..t.len() {
        for f in 0..t.len() {
            let want = if e == f { t.group_order as i64 } else { 0 };
            if t.inner(e, f) != want {
                return Err(Error::InvalidInput(format!(
                    "orthogonality fails for {} and {}",
                    t.labels[e], t.labels[f]
                )));
            }
        }
    }
    Ok(())
}

const PRIME: u64 = 2_147_483_647;

fn mulm(a: u64, b: u64) -> u64 {
    a * b % PRIME
}

fn powm(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a);
        }
        a = mulm(a, a);
        e >>= 1;
    }
    r
}

fn invm(a: u64) -> u64 {
    powm(a, PRIME - 2)
}

fn tom(x: i64) -> u64 {
    x.rem_euclid(PRIME as i64) as u64
}

fn liftm(x: u64) -> i64 {
    if x > PRIME / 2 {
        x as i64 - PRIME as i64
    } else {
        x as i64
    }
}

/// Row-reduces `rows` in place mod p; returns pivot columns.
fn rref_mod(rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = invm(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = mulm(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..cols {
                    let t = mulm(f, rows[r][j]);
                    rows[i][j] = (rows[i][j] + PRIME - t) % PRIME;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Null space mod p of a square matrix, as row vectors.
fn null_space_mod(a: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut rows = a.to_vec();
    let pivots = rref_mod(&mut rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (PRIME - rows[i][f]) % PRIME;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial mod p (Faddeev–LeVerrier), low degree first.
fn char_poly_mod(a: &[Vec<u64>]) -> Vec<u64> {
    let n = a.len();
    let mut c = vec![0u64; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0u64; n]; n];
    for k in 1..=n {
        let mut next = vec![vec![0u64; n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l] == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] = (next[i][j] + mulm(a[i][l], m[l][j])) % PRIME;
                }
            }
            next[i][i] = (next[i][i] + c[n - k + 1]) % PRIME;
        }
        m = next;
        let mut tr = 0;
        for i in 0..n {
            for l in 0..n {
                tr = (tr + mulm(a[i][l], m[l][i])) % PRIME;
            }
        }
        c[n - k] = mulm(PRIME - tr, invm(k as u64)) % PRIME;
    }
    c
}

/// Structure constants `a[j][k][l] = #{(x, y) ∈ C_j × C_k : xy = z_l}`.
fn class_constants(rs: &RootSystem) -> Result<Vec<Vec<Vec<u64>>>> {
    let classes = rs.conjugacy_classes()?;
    let elements = rs.elements()?;
    let r = classes.len();
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for (l, z) in classes.reps.iter().enumerate() {
        for (i, x) in elements.iter().enumerate() {
            let j = classes.class_of[i];
            let y = x.inverse().compose(z);
            let k = rs.class_of(&y)?;
            a[j][k][l] += 1;
        }
    }
    Ok(a)
}

/// Rational character table by the Dixon–Schneider method over `F_p`:
/// common eigenvectors of the class matrices give the central characters,
/// which lift to integers.
fn dixon_schneider(rs: &RootSystem) -> Result<Vec<Vec<i64>>> {
    let classes = rs.conjugacy_classes()?;
    let r = classes.len();
    let order = classes.group_order as u64;
    let a = class_constants(rs)?;
    let sizes: Vec<u64> = classes.sizes.iter().map(|&s| s as u64).collect();

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for mut sp in spaces {
            if sp.len() == 1 {
                next.push(sp);
                continue;
            }
            let pivots = rref_mod(&mut sp);
            let k = sp.len();
            let mut restricted = vec![vec![0u64; k]; k];
            for (t, b) in sp.iter().enumerate() {
                for (i, &pv) in pivots.iter().enumerate() {
                    let mut s = 0;
                    for (l, &bl) in b.iter().enumerate() {
                        if bl != 0 && a[j][pv][l] != 0 {
                            s = (s + mulm(a[j][pv][l], bl)) % PRIME;
                        }
                    }
                    restricted[i][t] = s;
                }
            }
            let cp = char_poly_mod(&restricted);
            let h = sizes[j] as i64;
            let mut total = 0;
            for lam in -h..=h {
                let x = tom(lam);
                let val = cp
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &c| (mulm(acc, x) + c) % PRIME);
                if val != 0 {
                    continue;
                }
                let mut shifted = restricted.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = (row[i] + PRIME - x) % PRIME;
                }
                let ns = null_space_mod(&shifted);
                total += ns.len();
                let mut sub: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|u| {
                        let mut v = vec![0u64; r];
                        for (t, &ut) in u.iter().enumerate() {
                            for l in 0..r {
                                v[l] = (v[l] + mulm(ut, sp[t][l])) % PRIME;
                            }
                        }
                        v
                    })
                    .collect();
                rref_mod(&mut sub);
                next.push(sub);
            }
            if total != k {
                return Err(Error::InvalidInput(
                    "class matrix has non-integral eigenvalues".into(),
                ));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::InvalidInput(
            "class matrices do not separate the characters".into(),
        ));
    }
    let mut rows = Vec::with_capacity(r);
    for sp in spaces {
        let v = &sp[0];
        let norm = invm(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| mulm(x, norm)).collect();
        let s = (0..r).fold(0u64, |acc, l| {
            (acc + mulm(mulm(omega[l], omega[l]), invm(sizes[l]))) % PRIME
        });
        let deg_sq = mulm(order % PRIME, invm(s));
        let deg = (1..=order).find(|d| d * d == deg_sq).ok_or_else(|| {
            Error::InvalidInput("degree lift failed in character computation".into())
        })?;
        rows.push(
            (0..r)
                .map(|l| liftm(mulm(mulm(omega[l], deg), invm(sizes[l]))))
                .collect::<Vec<i64>>(),
        );
    }
    Ok(rows)
}

/// `R_E(q) = Π(1 - q^{d_i}) · (1/|W|) Σ_w χ_E(w) / det(1 - q w)`.
fn fake_degrees_of(rs: &RootSystem, rows: &[Vec<i64>], sizes: &[usize]) -> Result<Vec<Poly>> {
    let classes = rs.conjugacy_classes()?;
    let order = classes.group_order as i64;
    let top = rs
        .degrees()
        .iter()
        .fold(Poly::one(), |acc, &d| acc * (Poly::one() - Poly::q_pow(d)));
    let terms: Vec<RatFunc> = classes
        .reps
        .iter()
        .map(|w| {
            let den = rs.char_poly(w).reverse(rs.rank());
            RatFunc::new(top.clone(), den)
        })
        .collect();
    rows.iter()
        .map(|row| {
            let mut acc = RatFunc::zero();
            for (c, t) in terms.iter().enumerate() {
                if row[c] != 0 {
                    acc += &t.scale(&q_frac(sizes[c] as i64 * row[c], order));
                }
            }
            let p = acc
                .as_poly()
                .cloned()
                .ok_or_else(|| Error::InvalidInput("fake degree not polynomial".into()))?;
            if !p.is_integral() || p.coeffs().iter().any(|c| c < &Q::zero()) {
                return Err(Error::InvalidInput(
                    "fake degree has bad coefficients".into(),
                ));
            }
            Ok(p)
        })
        .collect()
}

/// Fake degrees in table order.
pub fn fake_degrees(table: &CharacterTable) -> &[Poly] {
    &table.fake_degrees
}

/// Invariants `(b, a, A, c)` of one irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentRecord {
    pub label: String,
    pub fake_degree: Poly,
    pub b: usize,
    pub a: usize,
    pub big_a: usize,
    /// `|Φ| - a - A`.
    pub c: i64,
}

/// Type A: generic degrees are fake degrees, so `a` and `A` are their
/// valuation and degree.
pub fn contents_type_a(rs: &RootSystem, table: &CharacterTable) -> Vec<ContentRecord> {
    let aa: Vec<(usize, usize)> = table
        .fake_degrees
        .iter()
        .map(|f| (f.valuation().unwrap_or(0), f.degree().unwrap_or(0)))
        .collect();
    contents_with(rs, table, &aa)
}

/// Records from externally supplied `(a, A)` pairs in table order.
pub fn contents_with(
    rs: &RootSystem,
    table: &CharacterTable,
    aa: &[(usize, usize)],
) -> Vec<ContentRecord> {
    (0..table.len())
        .map(|e| {
            let (a, big_a) = aa[e];
            ContentRecord {
                label: table.labels[e].clone(),
                fake_degree: table.fake_degrees[e].clone(),
                b: table.b(e),
                a,
                big_a,
                c: rs.num_roots() as i64 - a as i64 - big_a as i64,
            }
        })
        .collect()
}

/// `coeff · q^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeTrace {
    pub coeff: i64,
    pub exponent: i64,
}

impl HeckeTrace {
    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::q_pow(self.exponent).scale(&q_int(self.coeff))
    }
}

/// `tr((T_w)^d, E_q) = q^{ν c(E)} χ_E(w^d)` for a root element `w`.
pub fn springer_trace(chi_wd: i64, content: &ContentRecord, slope: Slope) -> Result<HeckeTrace> {
    if chi_wd == 0 {
        return Ok(HeckeTrace {
            coeff: 0,
            exponent: 0,
        });
    }
    let num = slope.d as i64 * content.c;
    if num % slope.m as i64 != 0 {
        return Err(Error::NonIntegralExponent {
            irrep: content.label.clone(),
            exponent: format!("{num}/{}", slope.m),
        });
    }
    Ok(HeckeTrace {
        coeff: chi_wd,
        exponent: num / slope.m as i64,
    })
}

/// Traces of `(T_w)^d` on every irreducible, in table order.
pub fn springer_traces(
    rs: &RootSystem,
    table: &CharacterTable,
    contents: &[ContentRecord],
    w: &WeylElement,
    slope: Slope,
) -> Result<Vec<HeckeTrace>> {
    let cls = rs.class_of(&w.pow(slope.d))?;
    (0..table.len())
        .map(|e| springer_trace(table.values[e][cls], &contents[e], slope))
        .collect()
}

/// Seminormal form of the irreducible Hecke module labelled by a partition.
///
/// Basis: standard tableaux. With `ρ = c(i+1) - c(i)` the content difference,
/// `T_i v_T = x_T v_T + y_T v_{s_i T}` where `x_T = (q-1) q^ρ / (q^ρ - 1)`,
/// `y_T = 1` when `i+1` lies in a lower row than `i`, and otherwise
/// `y_T = x_T x_{s_i T} + q` (so each 2×2 block has determinant `-q`).
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    tableaux: Vec<Vec<usize>>,
    cols: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    n: usize,
}

impl SeminormalRep {
    pub fn new(lambda: &Partition) -> Self {
        let tableaux = standard_tableaux(lambda);
        let cols = tableaux
            .iter()
            .map(|rows| {
                let mut fill = vec![0usize; lambda.len()];
                rows.iter()
                    .map(|&r| {
                        fill[r] += 1;
                        fill[r] - 1
                    })
                    .collect()
            })
            .collect();
        let index = tableaux
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        SeminormalRep {
            tableaux,
            cols,
            index,
            n: lambda.size(),
        }
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    fn content(&self, t: usize, k: usize) -> i64 {
        self.cols[t][k] as i64 - self.tableaux[t][k] as i64
    }

    /// Column `t` of the matrix of `T_i` at `q = q0`: pairs (row, value).
    fn column(&self, i: usize, t: usize, q0: &Q) -> Vec<(usize, Q)> {
        let rows = &self.tableaux[t];
        let rho = self.content(t, i + 1) - self.content(t, i);
        let x = |rho: i64| -> Q {
            let qr = pow_q(q0, rho);
            (q0 - Q::one()) * &qr / (qr - Q::one())
        };
        let xt = x(rho);
        if rho.abs() == 1 {
            return vec![(t, xt)];
        }
        let mut swapped = rows.clone();
        swapped.swap(i, i + 1);
        let u = self.index[&swapped];
        let y = if rows[i + 1] > rows[i] {
            Q::one()
        } else {
            &xt * x(-rho) + q0
        };
        vec![(t, xt), (u, y)]
    }

    /// Matrix of `T_{i1} ··· T_{ik}` at `q = q0`.
    pub fn matrix(&self, word: &[usize], q0: &Q) -> Vec<Vec<Q>> {
        let d = self.dim();
        let mut m: Vec<Vec<Q>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { Q::one() } else { Q::zero() })
                    .collect()
            })
            .collect();
        for &g in word {
            assert!(g + 1 < self.n, "generator out of range");
            // right multiplication: new column t = Σ_u old column u · R[u][t]
            let mut out = vec![vec![Q::zero(); d]; d];
            for t in 0..d {
                for (u, val) in self.column(g, t, q0) {
                    for row in 0..d {
                        if !m[row][u].is_zero() {
                            let add = &m[row][u] * &val;
                            out[row][t] += add;
                        }
                    }
                }
            }
            m = out;
        }
        m
    }

    /// Trace of `T_{i1} ··· T_{ik}` as a polynomial in `q`. The trace has
    /// degree at most the word length, so it is interpolated from that many
    /// integer points plus one, and checked at one more.
    pub fn trace(&self, word: &[usize]) -> Poly {
        let npts = word.len() + 1;
        let value = |x: i64| -> Q {
            let m = self.matrix(word, &q_int(x));
            (0..self.dim()).fold(Q::zero(), |acc, i| acc + &m[i][i])
        };
        let pts: Vec<(Q, Q)> = (0..npts as i64)
            .map(|k| (q_int(k + 2), value(k + 2)))
            .collect();
        let p = Poly::interpolate(&pts);
        let check = npts as i64 + 2;
        assert_eq!(
            p.eval_int(check),
            value(check),
            "seminormal trace is not polynomial"
        );
        p
    }
}

fn pow_q(q0: &Q, e: i64) -> Q {
    let mut r = Q::one();
    for _ in 0..e.unsigned_abs() {
        r *= q0;
    }
    if e < 0 {
        r.recip()
    } else {
        r
    }
}

/// Type A: traces of `T_word` on every irreducible, in table order.
pub fn hecke_trace_type_a(
    rs: &RootSystem,
    table: &CharacterTable,
    word: &BraidWord,
) -> Result<Vec<Poly>> {
    word.check_rank(rs.rank())?;
    let parts = table.partitions.as_ref().ok_or_else(|| {
        Error::TierUnavailable(format!("seminormal forms need type A, got {}", rs.label()))
    })?;
    Ok(parts
        .iter()
        .map(|l| SeminormalRep::new(l).trace(word.gens()))
        .collect())
}

/// Hecke character values at the class representatives (minimal length).
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeCharTable {
    pub labels: Vec<String>,
    /// Irreducible × class.
    pub values: Vec<Vec<Poly>>,
}

impl HeckeCharTable {
    /// Type A table from seminormal forms.
    pub fn type_a(rs: &RootSystem, table: &CharacterTable) -> Result<Self> {
        let classes = rs.conjugacy_classes()?;
        let parts = table
            .partitions
            .as_ref()
            .ok_or_else(|| Error::TierUnavailable("not type A".into()))?;
        let values = parts
            .iter()
            .map(|l| {
                let rep = SeminormalRep::new(l);
                classes.rep_words.iter().map(|w| rep.trace(w)).collect()
            })
            .collect();
        Ok(HeckeCharTable {
            labels: table.labels.clone(),
            values,
        })
    }

    /// `q -> 1` must give the character table of `W`.
    pub fn check_degeneration(&self, table: &CharacterTable) -> Result<()> {
        for (e, row) in self.values.iter().enumerate() {
            let te = table.index_of(&self.labels[e]).ok_or_else(|| {
                Error::InvalidAsset(format!("unknown irreducible {}", self.labels[e]))
            })?;
            for (c, p) in row.iter().enumerate() {
                if p.eval_int(1) != q_int(table.values[te][c]) {
                    return Err(Error::InvalidAsset(format!(
                        "Hecke value of {} on class {} does not specialise to the W character",
                        self.labels[e],
                        c + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(feature = "tier2")]
/// Expresses `tr(T_w)` as a combination of traces at minimal-length class
/// representatives, by cyclic shifts and the quadratic relation.
pub struct ClassPolynomials<'a> {
    rs: &'a RootSystem,
    memo: HashMap<usize, Vec<Poly>>,
}

#[cfg(feature = "tier2")]
impl<'a> ClassPolynomials<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        ClassPolynomials {
            rs,
            memo: HashMap::new(),
        }
    }

    /// Coefficients `f_{w,C}` with `tr(T_w, V) = Σ_C f_{w,C} tr(T_{w_C}, V)`.
    pub fn of(&mut self, w: &WeylElement) -> Result<Vec<Poly>> {
        let rs = self.rs;
        let idx = rs.element_index(w)?;
        if let Some(v) = self.memo.get(&idx) {
            return Ok(v.clone());
        }
        // explore the cyclic-shift class of w at constant length
        let mut orbit = vec![w.clone()];
        let mut seen = vec![idx];
        let mut head = 0;
        let mut step: Option<(WeylElement, usize)> = None;
        while head < orbit.len() && step.is_none() {
            let x = orbit[head].clone();
            head += 1;
            for s in 0..rs.rank() {
                let y = rs.simple(s).compose(&x).compose(rs.simple(s));
                if y.length() < x.length() {
                    step = Some((x.clone(), s));
                    break;
                }
                if y.length() == x.length() {
                    let yi = rs.element_index(&y)?;
                    if !seen.contains(&yi) {
                        seen.push(yi);
                        orbit.push(y);
                    }
                }
            }
        }
        let ncls = rs.conjugacy_classes()?.len();
        let result = match step {
            Some((x, s)) => {
                // T_x = T_s T_{sxs} T_s, so tr T_x = q tr T_{sxs} + (q-1) tr T_{sx}
                let sx = rs.simple(s).compose(&x);
                let sxs = sx.compose(rs.simple(s));
                let a = self.of(&sxs)?;
                let b = self.of(&sx)?;
                let q = Poly::q_pow(1);
                let qm1 = Poly::from_ints(&[-1, 1]);
                (0..ncls).map(|c| &q * &a[c] + &qm1 * &b[c]).collect()
            }
            None => {
                let mut v = vec![Poly::zero(); ncls];
                v[rs.class_of(w)?] = Poly::one();
                v
            }
        };
        for i in seen {
            self.memo.insert(i, result.clone());
        }
        Ok(result)
    }

    /// Class polynomials of the product `T_{i1} ··· T_{ik}`.
    pub fn of_word(&mut self, word: &BraidWord) -> Result<Vec<Poly>> {
        let rs = self.rs;
        word.check_rank(rs.rank())?;
        let mut terms: HashMap<WeylElement, Poly> = HashMap::new();
        terms.insert(rs.identity(), Poly::one());
        let q = Poly::q_pow(1);
        let qm1 = Poly::from_ints(&[-1, 1]);
        for &s in word.gens() {
            let mut next: HashMap<WeylElement, Poly> = HashMap::new();
            for (w, c) in terms {
                let ws = w.compose(rs.simple(s));
                if ws.length() > w.length() {
                    *next.entry(ws).or_insert_with(Poly::zero) += &c;
                } else {
                    *next.entry(ws).or_insert_with(Poly::zero) += &(&q * &c);
                    *next.entry(w).or_insert_with(Poly::zero) += &(&qm1 * &c);
                }
            }
            terms = next;
        }
        let ncls = rs.conjugacy_classes()?.len();
        let mut total = vec![Poly::zero(); ncls];
        let mut keys: Vec<&WeylElement> = terms.keys().collect();
        keys.sort();
        for w in keys {
            let c = &terms[w];
            if c.is_zero() {
                continue;
            }
            let f = self.of(w)?;
            for k in 0..ncls {
                total[k] += &(c * &f[k]);
            }
        }
        Ok(total)
    }
}

#[cfg(feature = "tier2")]
/// Traces of `T_word` on every irreducible of a Hecke character table.
pub fn hecke_trace_general(
    rs: &RootSystem,
    hecke: &HeckeCharTable,
    word: &BraidWord,
) -> Result<Vec<Poly>> {
    let f = ClassPolynomials::new(rs).of_word(word)?;
    Ok(hecke
        .values
        .iter()
        .map(|row| {
            row.iter()
                .zip(&f)
                .fold(Poly::zero(), |acc, (v, c)| acc + v * c)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::find_root_elements;

    fn rs(l: &str) -> RootSystem {
        RootSystem::from_label(l).unwrap()
    }

    #[test]
    fn small_tables() {
        let a1 = rs("A1");
        let t = char_table(&a1).unwrap();
        assert_eq!(t.values, vec![vec![1, 1], vec![1, -1]]);
        let g2 = rs("G2");
        let t = char_table(&g2).unwrap();
        let mut dims: Vec<i64> = (0..t.len()).map(|e| t.dim(e)).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 1, 1, 2, 2]);
        assert_eq!(t.labels, vec!["1_0", "2_1", "2_2", "1_3'", "1_3''", "1_6"]);
    }

    #[test]
    fn f4_table() {
        let f4 = rs("F4");
        let t = char_table(&f4).unwrap();
        assert_eq!(t.len(), 25);
        let s: i64 = (0..25).map(|e| t.dim(e) * t.dim(e)).sum();
        assert_eq!(s, 1152);
        assert!(t.labels.contains(&"12_4".to_string()));
        assert!(t.labels.contains(&"9_6''".to_string()));
    }

    #[test]
    fn dixon_schneider_agrees_with_mn_in_type_a() {
        for l in ["A2", "A3", "A4"] {
            let r = rs(l);
            let mn = char_table(&r).unwrap();
            let mut ds = dixon_schneider(&r).unwrap();
            let mut rows = mn.values.clone();
            ds.sort();
            rows.sort();
            assert_eq!(ds, rows, "{l}");
        }
    }

    #[test]
    fn fake_degree_identities() {
        for l in ["A1", "A3", "A5", "G2", "F4"] {
            let r = rs(l);
            let t = char_table(&r).unwrap();
            assert!(t.fake_degrees[t.trivial()].is_one());
            assert_eq!(t.fake_degrees[t.sign()], Poly::q_pow(r.num_positive()));
            let sum = (0..t.len()).fold(Poly::zero(), |acc, e| {
                acc + t.fake_degrees[e].scale(&q_int(t.dim(e)))
            });
            assert_eq!(sum, r.poincare_polynomial(), "{l}");
        }
    }

    #[test]
    fn type_a_contents() {
        let a1 = rs("A1");
        let t = char_table(&a1).unwrap();
        let c = contents_type_a(&a1, &t);
        assert_eq!(c[t.sign()].fake_degree, Poly::q_pow(1));
        assert_eq!((c[t.sign()].c, c[t.trivial()].c), (0, 2));
        let a4 = rs("A4");
        let t = char_table(&a4).unwrap();
        let c = contents_type_a(&a4, &t);
        assert_eq!(
            (c[t.trivial()].a, c[t.trivial()].big_a, c[t.trivial()].c),
            (0, 0, 20)
        );
        assert_eq!(
            (c[t.sign()].a, c[t.sign()].big_a, c[t.sign()].c),
            (10, 10, 0)
        );
    }

    #[test]
    fn springer_trace_examples() {
        let g2 = rs("G2");
        let t = char_table(&g2).unwrap();
        let aa = vec![(0, 0); t.len()];
        let mut c = contents_with(&g2, &t, &aa);
        let tr = springer_trace(1, &c[t.trivial()], Slope::new(2, 3).unwrap()).unwrap();
        assert_eq!(tr.to_ratfunc(), RatFunc::q_pow(8));
        c[0].c = 5;
        assert!(springer_trace(1, &c[0], Slope::new(2, 3).unwrap()).is_err());
        assert_eq!(
            springer_trace(0, &c[0], Slope::new(2, 3).unwrap())
                .unwrap()
                .coeff,
            0
        );
        let a1 = rs("A1");
        let t = char_table(&a1).unwrap();
        let c = contents_type_a(&a1, &t);
        let tr = springer_traces(&a1, &t, &c, a1.simple(0), Slope::new(1, 2).unwrap()).unwrap();
        assert_eq!(tr[t.trivial()].to_ratfunc(), RatFunc::q_pow(1));
    }

    #[test]
    fn seminormal_relations_hold() {
        let q0 = q_frac(7, 3);
        for n in 2..=5 {
            for l in Partition::all(n) {
                let rep = SeminormalRep::new(&l);
                for i in 0..n - 1 {
                    let t = rep.matrix(&[i], &q0);
                    let tt = rep.matrix(&[i, i], &q0);
                    for a in 0..rep.dim() {
                        for b in 0..rep.dim() {
                            let id = if a == b { q0.clone() } else { Q::zero() };
                            assert_eq!(tt[a][b], (&q0 - Q::one()) * &t[a][b] + id);
                        }
                    }
                    for j in 0..n - 1 {
                        let (lhs, rhs) = if i + 1 == j {
                            (vec![i, j, i], vec![j, i, j])
                        } else if i + 1 < j {
                            (vec![i, j], vec![j, i])
                        } else {
                            continue;
                        };
                        assert_eq!(rep.matrix(&lhs, &q0), rep.matrix(&rhs, &q0), "{l} {i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn seminormal_traces_degenerate_to_characters() {
        let a2 = rs("A2");
        let t = char_table(&a2).unwrap();
        let word = BraidWord::new(vec![0, 1]);
        let tr = hecke_trace_type_a(&a2, &t, &word).unwrap();
        let two = t.index_of("(2,1)").unwrap();
        assert_eq!(tr[two].eval_int(1), q_int(-1));
        assert_eq!(tr[two], Poly::from_ints(&[0, -1]));
        let a3 = rs("A3");
        let t = char_table(&a3).unwrap();
        let cls = a3.conjugacy_classes().unwrap();
        for (c, w) in cls.rep_words.iter().enumerate() {
            let tr = hecke_trace_type_a(&a3, &t, &BraidWord::new(w.clone())).unwrap();
            for e in 0..t.len() {
                assert_eq!(tr[e].eval_int(1), q_int(t.values[e][c]));
            }
        }
        assert_eq!(
            hecke_trace_type_a(&a3, &t, &BraidWord::default()).unwrap()[1],
            Poly::from_ints(&[3])
        );
    }

    #[cfg(feature = "tier2")]
    #[test]
    fn class_polynomial_reduction_matches_seminormal() {
        for l in ["A2", "A3"] {
            let r = rs(l);
            let t = char_table(&r).unwrap();
            let h = HeckeCharTable::type_a(&r, &t).unwrap();
            h.check_degeneration(&t).unwrap();
            for word in [
                vec![0, 1, 0, 1, 1],
                vec![1, 0, 1, 0],
                vec![0, 0, 1, 1, 0],
                vec![1, 1, 1],
            ] {
                if word.iter().any(|&g| g >= r.rank()) {
                    continue;
                }
                let bw = BraidWord::new(word);
                assert_eq!(
                    hecke_trace_general(&r, &h, &bw).unwrap(),
                    hecke_trace_type_a(&r, &t, &bw).unwrap()
                );
            }
        }
        let a3 = rs("A3");
        let t = char_table(&a3).unwrap();
        let h = HeckeCharTable::type_a(&a3, &t).unwrap();
        let bw = BraidWord::new(vec![2, 0, 1, 2, 1, 0, 0, 2, 1]);
        assert_eq!(
            hecke_trace_general(&a3, &h, &bw).unwrap(),
            hecke_trace_type_a(&a3, &t, &bw).unwrap()
        );
    }

    #[test]
    fn springer_paths_agree_in_type_a() {
        let a3 = rs("A3");
        let t = char_table(&a3).unwrap();
        let c = contents_type_a(&a3, &t);
        for m in [3usize, 4] {
            let w = &find_root_elements(&a3, m).unwrap()[0];
            for d in 1..m {
                let Ok(slope) = Slope::new(d, m) else {
                    continue;
                };
                let st = springer_traces(&a3, &t, &c, w, slope).unwrap();
                let word = BraidWord::new(a3.reduced_word(w)).power(d);
                let general = hecke_trace_type_a(&a3, &t, &word).unwrap();
                for e in 0..t.len() {
                    assert_eq!(st[e].to_ratfunc(), RatFunc::from_poly(general[e].clone()));
                }
            }
        }
    }
}
