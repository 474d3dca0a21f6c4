//! Brute force over `GL_n(F_q)` for prime `q`: complete flags, relative
//! positions, and chain counts.
//!
//! A chain for the word `s_{i1} ... s_{ik}` and a group element `g` is a
//! sequence of flags `F_1, ..., F_{k+1}` with `F_j`, `F_{j+1}` differing
//! exactly in their `i_j`-dimensional subspace and `F_{k+1} = g F_1`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::Q;

/// Largest `#flags^2 · word length` product handled by [`FlagSpace::word_matrix`].
pub const CHAIN_BUDGET: usize = 2_000_000_000;

/// Square matrix over `F_q`, row-major.
pub type Mat = Vec<Vec<u8>>;

fn is_prime(q: u32) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

fn inv_mod(a: u32, q: u32) -> u32 {
    (1..q).find(|&x| a * x % q == 1).expect("nonzero element")
}

/// Reduced row echelon form of `rows` over `F_q`; zero rows removed.
pub fn rref(rows: &[Vec<u8>], q: u32) -> Vec<Vec<u8>> {
    let mut m: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as u32).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = inv_mod(m[r][c], q);
        for x in m[r].iter_mut() {
            *x = *x * inv % q;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + q * q - f * m[r][j]) % q;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m.into_iter()
        .map(|row| row.into_iter().map(|x| x as u8).collect())
        .collect()
}

pub fn rank(rows: &[Vec<u8>], q: u32) -> usize {
    rref(rows, q).len()
}

pub fn mat_mul(a: &Mat, b: &Mat, q: u32) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| ((0..n).map(|k| a[i][k] as u32 * b[k][j] as u32).sum::<u32>() % q) as u8)
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as u8).collect())
        .collect()
}

/// Jordan type of a unipotent matrix from the ranks of `(u - 1)^k`.
pub fn jordan_type(u: &Mat, q: u32) -> Result<Partition> {
    let n = u.len();
    let mut x = u.clone();
    for (i, row) in x.iter_mut().enumerate() {
        row[i] = ((row[i] as u32 + q - 1) % q) as u8;
    }
    let mut ranks = vec![n];
    let mut p = identity(n);
    for _ in 0..n {
        p = mat_mul(&p, &x, q);
        ranks.push(rank(&p, q));
    }
    if ranks[n] != 0 {
        return Err(Error::InvalidInput("matrix is not unipotent".into()));
    }
    // number of blocks of size >= k is rank((u-1)^{k-1}) - rank((u-1)^k)
    let at_least: Vec<usize> = (1..=n).map(|k| ranks[k - 1] - ranks[k]).collect();
    Ok(Partition::new(at_least).conjugate())
}

/// Jordan type of a nilpotent matrix (same ranks, no shift).
pub fn nilpotent_jordan_type(x: &Mat, q: u32) -> Result<Partition> {
    let n = x.len();
    let mut u = x.clone();
    for (i, row) in u.iter_mut().enumerate() {
        row[i] = ((row[i] as u32 + 1) % q) as u8;
    }
    jordan_type(&u, q)
        .map_err(|_| Error::InvalidInput(format!("matrix of size {n} is not nilpotent")))
}

/// Upper triangular Jordan matrix with blocks `μ`.
pub fn jordan_matrix(mu: &Partition) -> Mat {
    let n = mu.size();
    let mut m = identity(n);
    let mut start = 0;
    for &p in mu.parts() {
        for i in start..start + p - 1 {
            m[i][i + 1] = 1;
        }
        start += p;
    }
    m
}

/// `|GL_n(F_q)|`.
pub fn gl_order(n: usize, q: u64) -> u64 {
    (0..n as u32).map(|i| q.pow(n as u32) - q.pow(i)).product()
}

/// Centralizer order of a unipotent element of type `μ` in `GL_n(F_q)`:
/// `q^{Σ μ'_i^2 - Σ m_i^2} Π |GL_{m_i}(F_q)|`.
pub fn centralizer_order(mu: &Partition, q: u64) -> u64 {
    let conj = mu.conjugate();
    let s: usize = conj.parts().iter().map(|p| p * p).sum();
    let m = mu.multiplicities();
    let sm: usize = m.iter().map(|x| x * x).sum();
    q.pow((s - sm) as u32) * m.iter().map(|&k| gl_order(k, q)).product::<u64>()
}

/// All complete flags of `F_q^n`.
pub struct FlagSpace {
    pub n: usize,
    pub q: u32,
    /// Adapted basis of each flag: row `i` completes the `i`-dimensional step.
    bases: Vec<Mat>,
    index: HashMap<Vec<u8>, usize>,
}

impl FlagSpace {
    pub fn new(n: usize, q: u32) -> Result<Self> {
        if !is_prime(q) || !(1..=5).contains(&n) {
            return Err(Error::InvalidInput(format!(
                "oracle supports prime q and n <= 5, got n={n}, q={q}"
            )));
        }
        let vectors: Vec<Vec<u8>> = (0..(q as usize).pow(n as u32))
            .map(|mut k| {
                (0..n)
                    .map(|_| {
                        let d = (k % q as usize) as u8;
                        k /= q as usize;
                        d
                    })
                    .collect()
            })
            .collect();
        let mut space = FlagSpace {
            n,
            q,
            bases: Vec::new(),
            index: HashMap::new(),
        };
        let mut stack: Vec<Vec<Vec<u8>>> = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == n {
                let key = space.key_of(&prefix);
                if !space.index.contains_key(&key) {
                    space.index.insert(key, space.bases.len());
                    space.bases.push(prefix);
                }
                continue;
            }
            // one representative vector per new subspace
            let mut seen: HashMap<Vec<Vec<u8>>, ()> = HashMap::new();
            for v in &vectors {
                let mut next = prefix.clone();
                next.push(v.clone());
                let r = rref(&next, q);
                if r.len() == next.len() && seen.insert(r, ()).is_none() {
                    stack.push(next);
                }
            }
        }
        Ok(space)
    }

    fn key_of(&self, basis: &[Vec<u8>]) -> Vec<u8> {
        let mut key = Vec::new();
        for i in 1..self.n {
            for row in rref(&basis[..i], self.q) {
                key.extend(row);
            }
        }
        key
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    /// Index of the flag spanned by the prefixes of `basis`.
    pub fn index_of(&self, basis: &Mat) -> usize {
        self.index[&self.key_of(basis)]
    }

    pub fn basis(&self, f: usize) -> &Mat {
        &self.bases[f]
    }

    /// Index of `g · F` (g acting on column vectors).
    pub fn act(&self, g: &Mat, f: usize) -> usize {
        let q = self.q;
        let moved: Vec<Vec<u8>> = self.bases[f]
            .iter()
            .map(|v| {
                (0..self.n)
                    .map(|i| {
                        ((0..self.n)
                            .map(|j| g[i][j] as u32 * v[j] as u32)
                            .sum::<u32>()
                            % q) as u8
                    })
                    .collect()
            })
            .collect();
        self.index[&self.key_of(&moved)]
    }

    /// Relative position `w` (one-line notation, 0-based) with
    /// `dim(F_i ∩ F'_j) = #{k < j : w(k) < i}`.
    pub fn relative_position(&self, f: usize, g: usize) -> Vec<usize> {
        let n = self.n;
        let (a, b) = (&self.bases[f], &self.bases[g]);
        let dim = |i: usize, j: usize| -> usize {
            let mut rows: Vec<Vec<u8>> = a[..i].to_vec();
            rows.extend_from_slice(&b[..j]);
            i + j - rank(&rows, self.q)
        };
        let d: Vec<Vec<usize>> = (0..=n)
            .map(|i| (0..=n).map(|j| dim(i, j)).collect())
            .collect();
        (1..=n)
            .map(|j| {
                (1..=n)
                    .find(|&i| d[i][j] + d[i - 1][j - 1] - d[i - 1][j] - d[i][j - 1] == 1)
                    .unwrap()
                    - 1
            })
            .collect()
    }

    /// Neighbours of `f` at position `s_i` (0-based `i`): flags differing
    /// exactly in the `(i+1)`-dimensional step.
    pub fn neighbours(&self, f: usize, i: usize) -> Vec<usize> {
        let basis = &self.bases[f];
        let q = self.q as u8;
        let mut out = Vec::new();
        // lines in span(b_i, b_{i+1}) other than span(b_i), added to F_i
        for c in 0..q {
            let v: Vec<u8> = (0..self.n)
                .map(|k| ((basis[i][k] as u32 * c as u32 + basis[i + 1][k] as u32) % self.q) as u8)
                .collect();
            let mut nb = basis.clone();
            nb[i] = v;
            nb[i + 1] = basis[i].clone();
            out.push(self.index[&self.key_of(&nb)]);
        }
        out
    }

    /// Dense matrix `P_{s_{i1}} ··· P_{s_{ik}}` over flag indices.
    pub fn word_matrix(&self, word: &[usize]) -> Result<Vec<Vec<u64>>> {
        let nf = self.len();
        if nf * nf * word.len().max(1) > CHAIN_BUDGET {
            return Err(Error::BudgetExceeded(format!(
                "{nf} flags, word length {}",
                word.len()
            )));
        }
        if let Some(&g) = word.iter().find(|&&g| g + 1 >= self.n) {
            return Err(Error::InvalidInput(format!(
                "generator {} out of range",
                g + 1
            )));
        }
        let adj: Vec<Vec<Vec<usize>>> = (0..self.n - 1)
            .map(|i| (0..nf).map(|f| self.neighbours(f, i)).collect())
            .collect();
        let mut m: Vec<Vec<u64>> = (0..nf)
            .map(|i| (0..nf).map(|j| (i == j) as u64).collect())
            .collect();
        for &g in word {
            let mut next = vec![vec![0u64; nf]; nf];
            for (row, out) in m.iter().zip(next.iter_mut()) {
                for (f, &val) in row.iter().enumerate() {
                    if val != 0 {
                        for &h in &adj[g][f] {
                            out[h] = out[h].checked_add(val).expect("chain count overflow");
                        }
                    }
                }
            }
            m = next;
        }
        Ok(m)
    }

    /// Number of chains closing up through `g`.
    pub fn chain_count(&self, g: &Mat, word: &[usize]) -> Result<u64> {
        let m = self.word_matrix(word)?;
        Ok(self.closing_trace(&m, g))
    }

    fn closing_trace(&self, m: &[Vec<u64>], g: &Mat) -> u64 {
        (0..self.len()).map(|f| m[f][self.act(g, f)]).sum()
    }

    /// Unipotent class sizes by Jordan type, by testing every matrix.
    pub fn unipotent_class_sizes(&self) -> Result<HashMap<Partition, u64>> {
        let (n, q) = (self.n, self.q);
        if (q as u64).pow((n * n) as u32) > 50_000_000 {
            return Err(Error::BudgetExceeded(format!(
                "enumerating {q}^{} matrices",
                n * n
            )));
        }
        let mut sizes = HashMap::new();
        let total = (q as usize).pow((n * n) as u32);
        for mut k in 0..total {
            let mut m = vec![vec![0u8; n]; n];
            for row in m.iter_mut() {
                for x in row.iter_mut() {
                    *x = (k % q as usize) as u8;
                    k /= q as usize;
                }
            }
            // unipotent iff (m - 1)^n = 0
            if let Ok(mu) = jordan_type(&m, q) {
                *sizes.entry(mu).or_insert(0u64) += 1;
            }
        }
        Ok(sizes)
    }
}

/// `|C_μ| · chain_count(u_μ) / |GL_n(F_q)|` for a simple-generator word.
pub fn stack_count_bruteforce(space: &FlagSpace, word: &[usize], mu: &Partition) -> Result<Q> {
    let m = space.word_matrix(word)?;
    Ok(stack_count_from_matrix(space, &m, mu))
}

/// Same as [`stack_count_bruteforce`] with a precomputed word matrix.
pub fn stack_count_from_matrix(space: &FlagSpace, m: &[Vec<u64>], mu: &Partition) -> Q {
    let q = space.q as u64;
    let g = gl_order(space.n, q);
    let class = g / centralizer_order(mu, q);
    let chains = space.closing_trace(m, &jordan_matrix(mu));
    Q::new(BigInt::from(class) * BigInt::from(chains), BigInt::from(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_frac;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn flag_counts_match_poincare() {
        for (n, q, want) in [
            (2, 2, 3),
            (2, 3, 4),
            (3, 2, 21),
            (3, 3, 52),
            (4, 2, 315),
            (4, 3, 2080),
        ] {
            assert_eq!(FlagSpace::new(n, q).unwrap().len(), want, "n={n} q={q}");
        }
    }

    #[test]
    fn positions() {
        let s = FlagSpace::new(3, 2).unwrap();
        for f in 0..s.len() {
            assert_eq!(s.relative_position(f, f), vec![0, 1, 2]);
            for i in 0..2 {
                for g in s.neighbours(f, i) {
                    let mut w = vec![0, 1, 2];
                    w.swap(i, i + 1);
                    assert_eq!(s.relative_position(f, g), w);
                }
            }
        }
        // row sums of P_w are q^{l(w)}
        let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
        for g in 0..s.len() {
            *counts.entry(s.relative_position(0, g)).or_insert(0) += 1;
        }
        for (w, c) in counts {
            let inv = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| w[i] > w[j])
                .count();
            assert_eq!(c, 2usize.pow(inv as u32));
        }
        // standard vs antistandard flag
        let std = s.index_of(&identity(3));
        let anti = s.act(&vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]], std);
        assert_eq!(s.relative_position(std, anti), vec![2, 1, 0]);
    }

    #[test]
    fn jordan_types() {
        assert_eq!(jordan_type(&identity(3), 2).unwrap(), p("111"));
        assert_eq!(jordan_type(&jordan_matrix(&p("4")), 3).unwrap(), p("4"));
        let mut n2 = vec![vec![0u8; 4]; 4];
        n2[2][0] = 1;
        n2[3][1] = 1;
        assert_eq!(nilpotent_jordan_type(&n2, 3).unwrap(), p("22"));
        assert!(jordan_type(&vec![vec![2, 0], vec![0, 1]], 3).is_err());
    }

    #[test]
    fn chain_counts() {
        let s = FlagSpace::new(2, 2).unwrap();
        assert_eq!(s.chain_count(&identity(2), &[]).unwrap(), 3);
        assert_eq!(s.chain_count(&jordan_matrix(&p("2")), &[0]).unwrap(), 2);
        assert_eq!(s.chain_count(&identity(2), &[0]).unwrap(), 0);
        assert_eq!(
            stack_count_bruteforce(&s, &[0], &p("2")).unwrap(),
            q_frac(1, 1)
        );
        assert_eq!(
            stack_count_bruteforce(&s, &[0], &p("11")).unwrap(),
            q_frac(0, 1)
        );
        let s3 = FlagSpace::new(2, 3).unwrap();
        assert_eq!(
            stack_count_bruteforce(&s3, &[0], &p("2")).unwrap(),
            q_frac(1, 2)
        );
    }

    #[test]
    fn class_sizes_agree_with_centralizers() {
        for (n, q) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let s = FlagSpace::new(n, q).unwrap();
            let sizes = s.unipotent_class_sizes().unwrap();
            for mu in Partition::all(n) {
                assert_eq!(
                    sizes[&mu],
                    gl_order(n, q as u64) / centralizer_order(&mu, q as u64),
                    "{mu}"
                );
            }
        }
    }

    #[test]
    fn chain_count_is_conjugation_invariant() {
        let s = FlagSpace::new(3, 2).unwrap();
        let u = jordan_matrix(&p("21"));
        let perm = vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]];
        let pinv = vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]];
        let conj = mat_mul(&mat_mul(&perm, &u, 2), &pinv, 2);
        for word in [vec![0], vec![0, 1], vec![1, 0, 1, 0]] {
            assert_eq!(
                s.chain_count(&u, &word).unwrap(),
                s.chain_count(&conj, &word).unwrap()
            );
        }
    }
}
