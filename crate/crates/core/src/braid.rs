//! Positive braid monoid of a Weyl group: left-greedy normal forms, the
//! full twist, and roots of the full twist.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::{q_frac, Q};
use crate::rootweyl::{RootSystem, WeylElement};

/// Upper bound on candidates scanned by [`find_root_elements`].
pub const ROOT_SEARCH_BUDGET: usize = 10_000_000;

/// Positive braid word. Generators are stored 0-based and printed 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    gens: Vec<usize>,
}

impl BraidWord {
    pub fn new(gens: Vec<usize>) -> Self {
        BraidWord { gens }
    }

    /// From 1-based generator indices, as printed in tables.
    pub fn from_one_based(gens: &[usize]) -> Result<Self> {
        if gens.iter().any(|&g| g == 0) {
            return Err(Error::InvalidInput(
                "braid generators are numbered from 1".into(),
            ));
        }
        Ok(BraidWord {
            gens: gens.iter().map(|g| g - 1).collect(),
        })
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.gens.iter().map(|g| g + 1).collect()
    }

    /// `d` concatenated copies.
    pub fn power(&self, d: usize) -> BraidWord {
        BraidWord {
            gens: self.gens.repeat(d),
        }
    }

    /// Moves the first generator to the end.
    pub fn cyclic_shift(&self) -> BraidWord {
        let mut gens = self.gens.clone();
        if !gens.is_empty() {
            gens.rotate_left(1);
        }
        BraidWord { gens }
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        BraidWord { gens }
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.gens.iter().find(|&&g| g >= rank) {
            Some(g) => Err(Error::InvalidInput(format!(
                "generator {} exceeds rank {rank}",
                g + 1
            ))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| (g + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Accepts `1,2,1,2`, `[1,2,1,2]`, or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .trim();
        if t.is_empty() {
            return Ok(BraidWord::default());
        }
        let gens = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad generator `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::from_one_based(&gens)
    }
}

/// Slope `d/m` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    pub d: usize,
    pub m: usize,
}

impl Slope {
    pub fn new(d: usize, m: usize) -> Result<Self> {
        if d == 0 || m == 0 {
            return Err(Error::InvalidSlope(format!("{d}/{m}")));
        }
        if d.gcd(&m) != 1 {
            return Err(Error::NotCoprime { d, m });
        }
        Ok(Slope { d, m })
    }

    pub fn nu(&self) -> Q {
        q_frac(self.d as i64, self.m as i64)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.d, self.m)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSlope(s.to_string());
        let (d, m) = s.trim().split_once('/').ok_or_else(bad)?;
        Slope::new(
            d.trim().parse().map_err(|_| bad())?,
            m.trim().parse().map_err(|_| bad())?,
        )
    }
}

/// Left-greedy normal form: non-identity simples with
/// `D_L(next) ⊆ D_R(prev)` for every adjacent pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    pub simples: Vec<WeylElement>,
}

impl GarsideNormalForm {
    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    /// Concatenation of the lex-least reduced words of the simples.
    pub fn flatten(&self, rs: &RootSystem) -> BraidWord {
        BraidWord::new(
            self.simples
                .iter()
                .flat_map(|w| rs.reduced_word(w))
                .collect(),
        )
    }

    pub fn word_length(&self) -> usize {
        self.simples.iter().map(|w| w.length()).sum()
    }
}

/// Pushes left descents of `v` into `u` until the pair is left-weighted.
fn settle_pair(rs: &RootSystem, u: &mut WeylElement, v: &mut WeylElement) -> bool {
    let mut changed = false;
    while let Some(t) = (0..rs.rank()).find(|&t| v.has_left_descent(t) && !u.has_right_descent(t)) {
        *u = u.compose(rs.simple(t));
        *v = rs.simple(t).compose(v);
        changed = true;
    }
    changed
}

pub fn normal_form(rs: &RootSystem, word: &BraidWord) -> Result<GarsideNormalForm> {
    word.check_rank(rs.rank())?;
    let mut simples: Vec<WeylElement> = Vec::new();
    for &g in word.gens() {
        simples.push(rs.simple(g).clone());
        // Only the tail can be out of order after appending one generator,
        // but a full right-to-left pass keeps the argument trivial.
        loop {
            let mut changed = false;
            for i in (0..simples.len().saturating_sub(1)).rev() {
                let (a, b) = simples.split_at_mut(i + 1);
                changed |= settle_pair(rs, &mut a[i], &mut b[0]);
            }
            let before = simples.len();
            simples.retain(|w| !w.is_identity());
            if !changed && before == simples.len() {
                break;
            }
        }
    }
    Ok(GarsideNormalForm { simples })
}

pub fn braid_equal(rs: &RootSystem, a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    Ok(normal_form(rs, a)? == normal_form(rs, b)?)
}

/// Reduced word of the longest element, twice.
pub fn full_twist(rs: &RootSystem) -> BraidWord {
    rs_word(rs, &rs.longest_element()).power(2)
}

/// Lex-least reduced word of `w` as a braid word.
pub fn rs_word(rs: &RootSystem, w: &WeylElement) -> BraidWord {
    BraidWord::new(rs.reduced_word(w))
}

/// Whether the full twist divides the braid. The full twist is central, so
/// this holds exactly when the normal form starts with two copies of `w0`.
pub fn contains_full_twist(rs: &RootSystem, word: &BraidWord) -> Result<bool> {
    let nf = normal_form(rs, word)?;
    let n = rs.num_positive();
    Ok(nf.simples.len() >= 2 && nf.simples[0].length() == n && nf.simples[1].length() == n)
}

/// All `w` with `l(w) = |Φ|/m`, order `m`, and lift an `m`-th root of the
/// full twist, sorted by reduced word.
pub fn find_root_elements(rs: &RootSystem, m: usize) -> Result<Vec<WeylElement>> {
    if m == 0 || rs.num_roots() % m != 0 {
        return Ok(Vec::new());
    }
    let ell = rs.num_roots() / m;
    if ell > rs.num_positive() {
        return Ok(Vec::new());
    }
    let elements = rs.elements()?;
    if elements.len() > ROOT_SEARCH_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "{} candidates",
            elements.len()
        )));
    }
    let twist = normal_form(rs, &full_twist(rs))?;
    let mut found = Vec::new();
    for w in elements.iter().filter(|w| w.length() == ell) {
        if w.order() != m {
            continue;
        }
        let word = rs_word(rs, w).power(m);
        if normal_form(rs, &word)? == twist {
            found.push((rs.reduced_word(w), w.clone()));
        }
    }
    found.sort();
    Ok(found.into_iter().map(|(_, w)| w).collect())
}

/// Regular numbers among the divisors of `|Φ|`, in increasing order.
/// `m = 1` is included by convention: its root is the full twist itself.
pub fn regular_numbers(rs: &RootSystem) -> Result<Vec<usize>> {
    let mut out = vec![1];
    for m in 2..=rs.num_roots() {
        if rs.num_roots() % m == 0 && !find_root_elements(rs, m)?.is_empty() {
            out.push(m);
        }
    }
    Ok(out)
}

/// Complex null space of `a` (rows × cols), by Gaussian elimination with
/// partial pivoting.
fn null_space(mut a: Vec<Vec<Complex64>>, tol: f64) -> Vec<Vec<Complex64>> {
    let rows = a.len();
    let cols = a[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let (p, best) = (r..rows)
            .map(|i| (i, a[i][c].norm()))
            .fold((r, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best < tol {
            continue;
        }
        a.swap(r, p);
        let piv = a[r][c];
        for j in 0..cols {
            a[r][j] /= piv;
        }
        for i in 0..rows {
            if i != r {
                let f = a[i][c];
                if f.norm() > 0.0 {
                    for j in 0..cols {
                        let t = a[r][j] * f;
                        a[i][j] -= t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Complex64::new(0.0, 0.0); cols];
            v[fc] = Complex64::new(1.0, 0.0);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][fc];
            }
            v
        })
        .collect()
}

/// Whether `w` has an `exp(2πi/m)`-eigenvector `x` with `Re α(x) > 0` for all
/// positive roots `α`, after rescaling by a unit complex number.
///
/// Each root confines the phase of the scalar to an open half circle; the
/// test is whether these arcs meet. Arc endpoints are computed in double
/// precision and an intersection narrower than `1e-9` counts as empty, so a
/// root with `α(x) = 0` fails. Only one-dimensional eigenspaces are handled.
pub fn springer_chamber_check(rs: &RootSystem, w: &WeylElement, m: usize) -> Result<bool> {
    let n = rs.rank();
    let mat = rs.reflection_matrix(w);
    let zeta = Complex64::from_polar(1.0, 2.0 * PI / m as f64);
    let a: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    Complex64::new(mat[i][j] as f64, 0.0)
                        - if i == j {
                            zeta
                        } else {
                            Complex64::new(0.0, 0.0)
                        }
                })
                .collect()
        })
        .collect();
    let ns = null_space(a, 1e-9);
    match ns.len() {
        0 => return Err(Error::EigenvalueAbsent(m)),
        1 => {}
        k => {
            return Err(Error::TierUnavailable(format!(
                "chamber check on a {k}-dimensional eigenspace"
            )))
        }
    }
    let x = &ns[0];
    let gram = rs.gram();
    // pairing of x with every positive root through the invariant form
    let gx: Vec<Complex64> = (0..n)
        .map(|i| (0..n).map(|j| x[j] * gram[i][j] as f64).sum())
        .collect();
    let phases: Vec<Option<f64>> = (0..rs.num_positive())
        .map(|r| {
            let z: Complex64 = rs.roots()[r]
                .iter()
                .zip(&gx)
                .map(|(&c, g)| g * c as f64)
                .sum();
            if z.norm() < 1e-9 {
                None
            } else {
                Some(z.arg())
            }
        })
        .collect();
    if phases.iter().any(|p| p.is_none()) {
        return Ok(false);
    }
    let phases: Vec<f64> = phases.into_iter().flatten().collect();
    // scalar e^{iθ} works for a root of phase φ iff cos(θ + φ) > 0
    let mut ends: Vec<f64> = phases
        .iter()
        .flat_map(|&p| {
            [
                (-p - PI / 2.0).rem_euclid(2.0 * PI),
                (-p + PI / 2.0).rem_euclid(2.0 * PI),
            ]
        })
        .collect();
    ends.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ends.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    for i in 0..ends.len() {
        let lo = ends[i];
        let hi = if i + 1 < ends.len() {
            ends[i + 1]
        } else {
            ends[0] + 2.0 * PI
        };
        if hi - lo < 1e-9 {
            continue;
        }
        let theta = (lo + hi) / 2.0;
        if phases.iter().all(|&p| (theta + p).cos() > 1e-9) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Canonical `m`-th root of the full twist: the lex-least one passing the
/// chamber check when that check applies, otherwise the lex-least one.
/// For `m = 1` this is the identity, whose braid is the full twist.
pub fn springer_element(rs: &RootSystem, m: usize) -> Result<WeylElement> {
    if m == 1 {
        return Ok(rs.identity());
    }
    let roots = find_root_elements(rs, m)?;
    if roots.is_empty() {
        return Err(Error::NotRegular {
            label: rs.label(),
            m,
        });
    }
    for w in &roots {
        match springer_chamber_check(rs, w, m) {
            Ok(true) => return Ok(w.clone()),
            Ok(false) => {}
            Err(_) => break,
        }
    }
    Ok(roots[0].clone())
}

/// `(w̃_m)^d` for the canonical root element `w_m`.
pub fn springer_braid(rs: &RootSystem, slope: Slope) -> Result<BraidWord> {
    if slope.m == 1 {
        return Ok(full_twist(rs).power(slope.d));
    }
    let w = springer_element(rs, slope.m)?;
    Ok(rs_word(rs, &w).power(slope.d))
}
