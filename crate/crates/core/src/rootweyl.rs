//! Root systems and exact Weyl group arithmetic.
//!
//! A Weyl group element is stored as the permutation it induces on the root
//! indices. Positive roots occupy indices `0..N` (simple roots first, then by
//! height), and index `i + N` is the negative of root `i`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{cyclotomic, q_int, Poly, Q};

/// Largest group the enumeration tier accepts.
pub const MAX_GROUP_ORDER: usize = 1_000_000;

/// Supported Cartan types. Labelling of simple roots follows Bourbaki:
/// in `G2` root 1 is short; in `F4` roots 1, 2 are long and 3, 4 short;
/// in `E6` node 2 is attached to node 4 of the chain 1-3-4-5-6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(usize),
    G2,
    F4,
    E6,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) => n,
            CartanType::G2 => 2,
            CartanType::F4 => 4,
            CartanType::E6 => 6,
        }
    }

    pub fn is_type_a(self) -> bool {
        matches!(self, CartanType::A(_))
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::G2 => write!(f, "G2"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::E6 => write!(f, "E6"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let upper = t.to_ascii_uppercase();
        match upper.as_str() {
            "G2" => return Ok(CartanType::G2),
            "F4" => return Ok(CartanType::F4),
            "E6" => return Ok(CartanType::E6),
            "E7" | "E8" => {
                return Err(Error::GroupTooLarge(format!(
                    "{upper}: Weyl group order exceeds the enumeration limit of {MAX_GROUP_ORDER}"
                )))
            }
            _ => {}
        }
        if let Some(rest) = upper.strip_prefix('A') {
            if let Ok(n) = rest.parse::<usize>() {
                if (1..=6).contains(&n) {
                    return Ok(CartanType::A(n));
                }
            }
        }
        Err(Error::UnsupportedType(t.to_string()))
    }
}

/// Gram matrix of the simple roots for the invariant form.
fn simple_gram(ty: CartanType) -> Vec<Vec<i64>> {
    let r = ty.rank();
    let mut g = vec![vec![0i64; r]; r];
    let mut link = |i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match ty {
        CartanType::A(n) => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1);
            }
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
        }
        CartanType::G2 => {
            link(0, 1, -3);
            g[0][0] = 2;
            g[1][1] = 6;
        }
        CartanType::F4 => {
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
        }
        CartanType::E6 => {
            for &(i, j) in &[(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] {
                link(i, j, -1);
            }
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
        }
    }
    g
}

/// Weyl group element as a permutation of root indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<u8>,
    length: usize,
    rank: u8,
}

impl WeylElement {
    fn from_perm(perm: Vec<u8>, rank: usize) -> Self {
        let n = perm.len() / 2;
        let length = perm[..n].iter().filter(|&&p| p as usize >= n).count();
        WeylElement {
            perm,
            length,
            rank: rank as u8,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Image of root index `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    fn num_positive(&self) -> usize {
        self.perm.len() / 2
    }

    /// `self * other` (apply `other` first); panics on mixed root systems.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.perm.len(), other.perm.len(), "mixed root systems");
        let perm = other.perm.iter().map(|&j| self.perm[j as usize]).collect();
        WeylElement::from_perm(perm, self.rank())
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0u8; self.perm.len()];
        for (i, &j) in self.perm.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        WeylElement {
            perm: inv,
            length: self.length,
            rank: self.rank,
        }
    }

    /// Simple reflection indices `s` (0-based) with `l(s w) < l(w)`.
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        inv.right_descents()
    }

    /// Simple reflection indices `s` (0-based) with `l(w s) < l(w)`.
    pub fn right_descents(&self) -> Vec<usize> {
        let n = self.num_positive();
        (0..self.rank())
            .filter(|&s| self.perm[s] as usize >= n)
            .collect()
    }

    pub fn has_left_descent(&self, s: usize) -> bool {
        let n = self.num_positive();
        // w^{-1}(alpha_s) < 0
        self.perm
            .iter()
            .position(|&p| p as usize == s)
            .map_or(false, |i| i >= n)
    }

    pub fn has_right_descent(&self, s: usize) -> bool {
        self.perm[s] as usize >= self.num_positive()
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    pub fn pow(&self, e: usize) -> WeylElement {
        let mut acc = WeylElement::identity_like(self);
        for _ in 0..e {
            acc = acc.compose(self);
        }
        acc
    }

    fn identity_like(other: &WeylElement) -> WeylElement {
        WeylElement {
            perm: (0..other.perm.len() as u8).collect(),
            length: 0,
            rank: other.rank,
        }
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}", self.perm)
    }
}

pub fn word_to_string(word: &[usize]) -> String {
    word.iter()
        .map(|s| (s + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Enumerated group data, built on demand.
struct GroupData {
    elements: Vec<WeylElement>,
    index: HashMap<Vec<u8>, usize>,
    classes: OnceLock<ConjugacyClassSet>,
}

/// Root system with its Weyl group.
pub struct RootSystem {
    ty: CartanType,
    rank: usize,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    num_positive: usize,
    gens: Vec<WeylElement>,
    degrees: Vec<usize>,
    coxeter_number: usize,
    group: OnceLock<GroupData>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.ty)
    }
}

impl RootSystem {
    /// Build from a label such as `"A3"`, `"G2"`, `"F4"`, `"E6"`.
    pub fn from_label(label: &str) -> Result<Self> {
        Self::new(label.parse()?)
    }

    pub fn new(ty: CartanType) -> Result<Self> {
        let rank = ty.rank();
        let gram = simple_gram(ty);
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();

        // Close the simple roots under simple reflections.
        let reflect = |beta: &[i64], s: usize| -> Vec<i64> {
            let pair: i64 = (0..rank).map(|j| beta[j] * gram[j][s]).sum();
            let c = 2 * pair / gram[s][s];
            let mut out = beta.to_vec();
            out[s] -= c;
            out
        };
        let mut pos: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0; rank];
            e[i] = 1;
            seen.insert(e.clone(), ());
            queue.push_back(e);
        }
        while let Some(b) = queue.pop_front() {
            pos.push(b.clone());
            for s in 0..rank {
                let r = reflect(&b, s);
                if r.iter().all(|&c| c >= 0) && !seen.contains_key(&r) {
                    seen.insert(r.clone(), ());
                    queue.push_back(r);
                }
            }
        }
        // simple roots first, then by height, ties by descending coordinates
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let root_index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        if roots.len() > 255 {
            return Err(Error::UnsupportedType(format!("{ty}: too many roots")));
        }
        let gens: Vec<WeylElement> = (0..rank)
            .map(|s| {
                let perm = roots
                    .iter()
                    .map(|r| root_index[&reflect(r, s)] as u8)
                    .collect();
                WeylElement::from_perm(perm, rank)
            })
            .collect();

        let mut rs = RootSystem {
            ty,
            rank,
            gram,
            cartan,
            roots,
            root_index,
            num_positive: n,
            gens,
            degrees: Vec::new(),
            coxeter_number: 0,
            group: OnceLock::new(),
        };
        rs.derive_degrees()?;
        Ok(rs)
    }

    /// Degrees from the eigenvalues of a Coxeter element, validated against
    /// `prod d_i = |W|` and `sum (d_i - 1) = N`.
    fn derive_degrees(&mut self) -> Result<()> {
        let cox = self.element_from_word(&(0..self.rank).collect::<Vec<_>>());
        let h = cox.order();
        let mut charpoly = self.char_poly(&cox);
        let mut exponents = Vec::new();
        for k in 1..=h {
            if h % k != 0 {
                continue;
            }
            let phi = cyclotomic(k);
            while let Some(qt) = charpoly.div_exact(&phi) {
                charpoly = qt;
                for j in 1..=k {
                    if num_integer::gcd(j, k) == 1 {
                        exponents.push((h / k) * j % h);
                    }
                }
            }
        }
        if !charpoly.is_one() || exponents.len() != self.rank {
            return Err(Error::InvalidInput(format!(
                "{}: Coxeter eigenvalues not roots of unity",
                self.ty
            )));
        }
        let mut degrees: Vec<usize> = exponents.iter().map(|m| m + 1).collect();
        degrees.sort_unstable();
        let sum: usize = degrees.iter().map(|d| d - 1).sum();
        if sum != self.num_positive || *degrees.last().unwrap() != h {
            return Err(Error::InvalidInput(format!(
                "{}: degree identities fail",
                self.ty
            )));
        }
        let order = self.group_data()?.elements.len();
        let prod: usize = degrees.iter().product();
        if prod != order {
            return Err(Error::InvalidInput(format!(
                "{}: product of degrees {prod} differs from |W| = {order}",
                self.ty
            )));
        }
        self.degrees = degrees;
        self.coxeter_number = h;
        Ok(())
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn label(&self) -> String {
        self.ty.to_string()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// All roots in simple-root coordinates.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn num_roots(&self) -> usize {
        2 * self.num_positive
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    pub fn order(&self) -> usize {
        self.degrees.iter().product()
    }

    pub fn height(&self, root: usize) -> i64 {
        self.roots[root].iter().sum()
    }

    pub fn is_positive(&self, root: usize) -> bool {
        root < self.num_positive
    }

    pub fn negate(&self, root: usize) -> usize {
        if root < self.num_positive {
            root + self.num_positive
        } else {
            root - self.num_positive
        }
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::from_perm((0..self.num_roots() as u8).collect(), self.rank)
    }

    /// Simple reflection `s` (0-based).
    pub fn simple(&self, s: usize) -> &WeylElement {
        &self.gens[s]
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.gens
    }

    /// Product `s_{w[0]} s_{w[1]} ...` (0-based indices).
    pub fn element_from_word(&self, word: &[usize]) -> WeylElement {
        word.iter()
            .fold(self.identity(), |acc, &s| acc.compose(&self.gens[s]))
    }

    /// Lexicographically least reduced word, 0-based generator indices.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut w = w.clone();
        let mut word = Vec::with_capacity(w.length);
        while !w.is_identity() {
            let s = (0..self.rank)
                .find(|&s| w.has_left_descent(s))
                .expect("descent");
            w = self.gens[s].compose(&w);
            word.push(s);
        }
        word
    }

    /// Reduced word with 1-based indices, e.g. `1,2,1`.
    pub fn word_string(&self, w: &WeylElement) -> String {
        word_to_string(&self.reduced_word(w))
    }

    fn check(&self, w: &WeylElement) -> Result<()> {
        if w.perm.len() != self.num_roots() {
            return Err(Error::MixedRootSystems);
        }
        Ok(())
    }

    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> Result<WeylElement> {
        self.check(u)?;
        self.check(v)?;
        Ok(u.compose(v))
    }

    pub fn length(&self, w: &WeylElement) -> Result<usize> {
        self.check(w)?;
        Ok(w.length())
    }

    pub fn longest_element(&self) -> WeylElement {
        // w0 sends every positive root to a negative root
        let mut w = self.identity();
        loop {
            match (0..self.rank).find(|&s| !w.has_right_descent(s)) {
                Some(s) => w = w.compose(&self.gens[s]),
                None => return w,
            }
        }
    }

    /// Matrix of `w` on the reflection representation in the basis of simple
    /// roots: column `j` holds the coordinates of `w(alpha_j)`.
    pub fn reflection_matrix(&self, w: &WeylElement) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.rank]; self.rank];
        for j in 0..self.rank {
            let img = &self.roots[w.apply(j)];
            for i in 0..self.rank {
                m[i][j] = img[i];
            }
        }
        m
    }

    /// `det(x - w)` on the reflection representation.
    pub fn char_poly(&self, w: &WeylElement) -> Poly {
        char_poly_int(&self.reflection_matrix(w))
    }

    pub fn fixed_space_dim(&self, w: &WeylElement) -> usize {
        let mut m = self.reflection_matrix(w);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= 1;
        }
        self.rank - rank_int(&m)
    }

    pub fn is_elliptic(&self, w: &WeylElement) -> bool {
        self.fixed_space_dim(w) == 0
    }

    /// `sum_w q^{l(w)} = prod_i [d_i]_q`.
    pub fn poincare_polynomial(&self) -> Poly {
        self.degrees
            .iter()
            .fold(Poly::one(), |acc, &d| acc * Poly::q_integer(d))
    }

    fn group_data(&self) -> Result<&GroupData> {
        if let Some(g) = self.group.get() {
            return Ok(g);
        }
        let mut elements = vec![self.identity()];
        let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
        index.insert(elements[0].perm[..self.rank].to_vec(), 0);
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            head += 1;
            for s in &self.gens {
                let x = w.compose(s);
                let key = x.perm[..self.rank].to_vec();
                if !index.contains_key(&key) {
                    if elements.len() >= MAX_GROUP_ORDER {
                        return Err(Error::GroupTooLarge(format!(
                            "{}: |W| exceeds {MAX_GROUP_ORDER}",
                            self.ty
                        )));
                    }
                    index.insert(key, elements.len());
                    elements.push(x);
                }
            }
        }
        let _ = self.group.set(GroupData {
            elements,
            index,
            classes: OnceLock::new(),
        });
        Ok(self.group.get().unwrap())
    }

    /// All elements in breadth-first order from the identity (so sorted by length).
    pub fn elements(&self) -> Result<&[WeylElement]> {
        Ok(&self.group_data()?.elements)
    }

    /// Position of `w` in [`RootSystem::elements`].
    pub fn element_index(&self, w: &WeylElement) -> Result<usize> {
        self.check(w)?;
        let g = self.group_data()?;
        Ok(g.index[&w.perm[..self.rank]])
    }

    /// Conjugacy classes, with representatives of minimal length and, among
    /// those, lexicographically least reduced word. Classes are sorted by
    /// representative (length, word).
    pub fn conjugacy_classes(&self) -> Result<&ConjugacyClassSet> {
        let g = self.group_data()?;
        if let Some(c) = g.classes.get() {
            return Ok(c);
        }
        let n = g.elements.len();
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![start];
            orbit_of[start] = id;
            let mut head = 0;
            while head < members.len() {
                let w = &g.elements[members[head]];
                head += 1;
                for s in &self.gens {
                    let x = s.compose(w).compose(s);
                    let xi = g.index[&x.perm[..self.rank]];
                    if orbit_of[xi] == usize::MAX {
                        orbit_of[xi] = id;
                        members.push(xi);
                    }
                }
            }
            orbits.push(members);
        }
        let mut keyed: Vec<(usize, Vec<usize>, usize)> = orbits
            .iter()
            .enumerate()
            .map(|(id, members)| {
                let min_len = members.iter().map(|&i| g.elements[i].length).min().unwrap();
                let best = members
                    .iter()
                    .filter(|&&i| g.elements[i].length == min_len)
                    .map(|&i| (self.reduced_word(&g.elements[i]), i))
                    .min()
                    .unwrap();
                (min_len, best.0, id)
            })
            .collect();
        keyed.sort();
        let mut relabel = vec![0usize; orbits.len()];
        let mut reps = Vec::new();
        let mut rep_words = Vec::new();
        let mut sizes = Vec::new();
        for (new_id, (_, word, old)) in keyed.into_iter().enumerate() {
            relabel[old] = new_id;
            reps.push(self.element_from_word(&word));
            rep_words.push(word);
            sizes.push(orbits[old].len());
        }
        let class_of = orbit_of.iter().map(|&o| relabel[o]).collect();
        let set = ConjugacyClassSet {
            reps,
            rep_words,
            sizes,
            class_of,
            group_order: n,
        };
        let _ = g.classes.set(set);
        Ok(g.classes.get().unwrap())
    }

    /// Class index of an arbitrary element.
    pub fn class_of(&self, w: &WeylElement) -> Result<usize> {
        let idx = self.element_index(w)?;
        Ok(self.conjugacy_classes()?.class_of[idx])
    }
}

/// Partition of `W` into conjugacy classes.
#[derive(Clone, Debug)]
pub struct ConjugacyClassSet {
    pub reps: Vec<WeylElement>,
    /// Representative words, 0-based generator indices.
    pub rep_words: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    /// Class index of each element, in the order of [`RootSystem::elements`].
    pub class_of: Vec<usize>,
    pub group_order: usize,
}

impl ConjugacyClassSet {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

/// `det(x I - m)` by Faddeev–LeVerrier over the integers.
pub fn char_poly_int(m: &[Vec<i64>]) -> Poly {
    let n = m.len();
    let mut coeffs = vec![0i64; n + 1];
    coeffs[n] = 1;
    let mut mk = vec![vec![0i64; n]; n];
    for k in 1..=n {
        // mk = m * mk + c_{n-k+1} I
        let mut next = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for l in 0..n {
                    s += m[i][l] * mk[l][j];
                }
                next[i][j] = s;
            }
            next[i][i] += coeffs[n - k + 1];
        }
        mk = next;
        let mut tr = 0;
        for i in 0..n {
            for l in 0..n {
                tr += m[i][l] * mk[l][i];
            }
        }
        coeffs[n - k] = -tr / k as i64;
    }
    Poly::from_ints(&coeffs)
}

/// Rank over the rationals.
pub fn rank_int(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .map(|r| r.iter().map(|&x| q_int(x)).collect())
        .collect();
    rank_q(&mut a)
}

pub fn rank_q(a: &mut [Vec<Q>]) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Q::one() / a[r][c].clone();
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] * &inv;
                for j in c..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_orders_and_degrees() {
        let a1 = RootSystem::from_label("A1").unwrap();
        assert_eq!(
            (a1.num_positive(), a1.degrees().to_vec(), a1.order()),
            (1, vec![2], 2)
        );
        let g2 = RootSystem::from_label("G2").unwrap();
        assert_eq!((g2.num_positive(), g2.num_roots(), g2.order()), (6, 12, 12));
        assert_eq!(g2.degrees(), &[2, 6]);
        let f4 = RootSystem::from_label("F4").unwrap();
        assert_eq!(
            (f4.num_positive(), f4.num_roots(), f4.order()),
            (24, 48, 1152)
        );
        assert_eq!(f4.degrees(), &[2, 6, 8, 12]);
        let a3 = RootSystem::from_label("A3").unwrap();
        assert_eq!(a3.degrees(), &[2, 3, 4]);
    }

    #[test]
    fn e6_degrees() {
        let e6 = RootSystem::from_label("E6").unwrap();
        assert_eq!(e6.degrees(), &[2, 5, 6, 8, 9, 12]);
        assert_eq!(e6.num_positive(), 36);
    }

    #[test]
    fn rejects_large_and_unknown() {
        assert!(matches!(
            RootSystem::from_label("E8"),
            Err(Error::GroupTooLarge(_))
        ));
        assert!(matches!(
            RootSystem::from_label("E7"),
            Err(Error::GroupTooLarge(_))
        ));
        assert!(matches!(
            RootSystem::from_label("B3"),
            Err(Error::UnsupportedType(_))
        ));
        assert!(matches!(
            RootSystem::from_label("A9"),
            Err(Error::UnsupportedType(_))
        ));
    }

    #[test]
    fn max_height_is_h_minus_one() {
        for l in ["A1", "A4", "G2", "F4", "E6"] {
            let rs = RootSystem::from_label(l).unwrap();
            let maxh = (0..rs.num_positive()).map(|i| rs.height(i)).max().unwrap();
            assert_eq!(maxh as usize, rs.coxeter_number() - 1, "{l}");
        }
    }

    #[test]
    fn lengths_and_orders() {
        let g2 = RootSystem::from_label("G2").unwrap();
        let w = g2.element_from_word(&[0, 1, 0, 1]);
        assert_eq!(w.length(), 4);
        assert_eq!(g2.longest_element().length(), 6);
        assert_eq!(g2.identity().length(), 0);
        let a3 = RootSystem::from_label("A3").unwrap();
        assert_eq!(a3.element_from_word(&[0, 2, 1]).order(), 4);
    }

    #[test]
    fn class_counts() {
        let a2 = RootSystem::from_label("A2").unwrap();
        let c = a2.conjugacy_classes().unwrap();
        let mut sizes = c.sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        let g2 = RootSystem::from_label("G2").unwrap();
        let c = g2.conjugacy_classes().unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c.sizes.iter().sum::<usize>(), 12);
        let f4 = RootSystem::from_label("F4").unwrap();
        let c = f4.conjugacy_classes().unwrap();
        assert_eq!(c.len(), 25);
        assert!(c.sizes.iter().all(|s| 1152 % s == 0));
    }

    #[test]
    fn reflection_invariants() {
        let g2 = RootSystem::from_label("G2").unwrap();
        assert_eq!(g2.fixed_space_dim(&g2.identity()), 2);
        assert!(!g2.is_elliptic(&g2.identity()));
        assert!(g2.is_elliptic(&g2.longest_element()));
        let a2 = RootSystem::from_label("A2").unwrap();
        let c = a2.element_from_word(&[0, 1]);
        assert_eq!(a2.char_poly(&c), Poly::from_ints(&[1, 1, 1]));
        assert!(a2.is_elliptic(&c));
    }

    #[test]
    fn poincare_matches_length_distribution() {
        for l in ["A1", "A3", "A5", "G2", "F4"] {
            let rs = RootSystem::from_label(l).unwrap();
            let mut counts = vec![0i64; rs.num_positive() + 1];
            for w in rs.elements().unwrap() {
                counts[w.length()] += 1;
            }
            assert_eq!(Poly::from_ints(&counts), rs.poincare_polynomial(), "{l}");
        }
    }

    #[test]
    fn longest_element_lengths() {
        let f4 = RootSystem::from_label("F4").unwrap();
        let w0 = f4.longest_element();
        for w in f4.elements().unwrap().iter().step_by(37) {
            assert_eq!(w0.compose(w).length(), f4.num_positive() - w.length());
            assert_eq!(w.inverse().length(), w.length());
        }
    }

    #[test]
    fn fixed_space_is_class_function() {
        let f4 = RootSystem::from_label("F4").unwrap();
        let classes = f4.conjugacy_classes().unwrap();
        let dims: Vec<usize> = classes.reps.iter().map(|r| f4.fixed_space_dim(r)).collect();
        for (i, w) in f4.elements().unwrap().iter().enumerate() {
            assert_eq!(f4.fixed_space_dim(w), dims[classes.class_of[i]]);
        }
    }

    proptest! {
        #[test]
        fn simple_reflection_changes_length_by_one(word in prop::collection::vec(0usize..4, 0..30), s in 0usize..4) {
            let f4 = RootSystem::from_label("F4").unwrap();
            let w = f4.element_from_word(&word);
            let sw = f4.simple(s).compose(&w);
            let ws = w.compose(f4.simple(s));
            prop_assert_eq!((sw.length() as i64 - w.length() as i64).abs(), 1);
            prop_assert_eq!((ws.length() as i64 - w.length() as i64).abs(), 1);
            prop_assert_eq!(w.has_left_descent(s), sw.length() < w.length());
            prop_assert_eq!(f4.element_from_word(&f4.reduced_word(&w)), w.clone());
            let m = f4.reflection_matrix(&w);
            let det = char_poly_int(&m).coeff(0);
            prop_assert!(det == q_int(1) || det == q_int(-1));
            prop_assert_eq!(1152 % w.order(), 0);
        }
    }
}
