//! Integer partitions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// `self ⊵ other` in dominance order (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// Multiplicities `m_k` of each part size `k = 1..=n`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.size() + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Contents `col - row` of every box, row by row.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (r, &p) in self.0.iter().enumerate() {
            for c in 0..p {
                out.push(c as i64 - r as i64);
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1)`, `3,1`, `[3,1]` or `31` for single-digit parts.
    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']');
        let parts: Result<Vec<usize>> = if t.contains(',') {
            t.split(',')
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("bad partition `{s}`")))
                })
                .collect()
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidInput(format!("bad partition `{s}`")))
                })
                .collect()
        };
        let parts = parts?;
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidInput(format!("not a partition: `{s}`")));
        }
        Ok(Partition(parts))
    }
}

/// Character value `χ^λ(μ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size());
    let k = lambda.len();
    let beta: Vec<usize> = (0..k).map(|i| lambda.part(i) + (k - 1 - i)).collect();
    mn_rec(beta, mu.parts())
}

fn mn_rec(beta: Vec<usize>, mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for i in 0..beta.len() {
        let b = beta[i];
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(next, rest);
    }
    total
}

/// Standard Young tableaux of shape `λ`, each as the row of every entry
/// `0..n`.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<usize>> {
    let n = lambda.size();
    let mut out = Vec::new();
    let mut fill = vec![0usize; lambda.len()];
    let mut rows = Vec::with_capacity(n);
    fn rec(
        lambda: &Partition,
        fill: &mut [usize],
        rows: &mut Vec<usize>,
        n: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rows.len() == n {
            out.push(rows.clone());
            return;
        }
        for r in 0..fill.len() {
            if fill[r] < lambda.part(r) && (r == 0 || fill[r - 1] > fill[r]) {
                fill[r] += 1;
                rows.push(r);
                rec(lambda, fill, rows, n, out);
                rows.pop();
                fill[r] -= 1;
            }
        }
    }
    rec(lambda, &mut fill, &mut rows, n, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_and_stats() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(7).len(), 15);
        assert_eq!(p("(3,1)").conjugate(), p("(2,1,1)"));
        assert_eq!(p("(2,2,1)").n_statistic(), 4);
        assert!(p("(3,1)").dominates(&p("(2,2)")));
        assert!(!p("(3,1,1,1)").dominates(&p("(2,2,2)")));
        assert!(!p("(2,2,2)").dominates(&p("(3,1,1,1)")));
        assert_eq!(p("321").to_string(), "(3,2,1)");
    }

    #[test]
    fn mn_small_table() {
        // S_3: rows (3), (2,1), (1,1,1); columns (1,1,1), (2,1), (3)
        let cols = [p("111"), p("21"), p("3")];
        let table: Vec<Vec<i64>> = [p("3"), p("21"), p("111")]
            .iter()
            .map(|l| cols.iter().map(|m| mn_character(l, m)).collect())
            .collect();
        assert_eq!(table, vec![vec![1, 1, 1], vec![2, 0, -1], vec![1, -1, 1]]);
        assert_eq!(mn_character(&p("(3,2,1)"), &p("(1,1,1,1,1,1)")), 16);
    }

    #[test]
    fn tableaux_count_is_dimension() {
        for n in 1..=6 {
            let ones = Partition::new(vec![1; n]);
            for l in Partition::all(n) {
                assert_eq!(standard_tableaux(&l).len() as i64, mn_character(&l, &ones));
            }
        }
    }
}
