//! Kazhdan–Lusztig polynomials, μ-coefficients and cells.

use braidcount::rootweyl::RootSystem;
use braidcount::Result;

pub struct KlData {
    pub n: usize,
    pub rank: usize,
    pub length: Vec<usize>,
    /// `left[s][w]` = index of `s·w`.
    pub left: Vec<Vec<usize>>,
    /// Left descent bitmask.
    pub ldesc: Vec<u32>,
    pub rdesc: Vec<u32>,
    /// `mu[w]` = list of `(y, μ(y, w))` with `y < w`, μ ≠ 0.
    pub mu: Vec<Vec<(usize, i64)>>,
}

impl KlData {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let elems = rs.elements()?;
        let n = elems.len();
        let rank = rs.rank();
        let length: Vec<usize> = elems.iter().map(|w| w.length()).collect();
        let mut left = vec![vec![0; n]; rank];
        let mut right = vec![vec![0; n]; rank];
        for s in 0..rank {
            for (i, w) in elems.iter().enumerate() {
                left[s][i] = rs.element_index(&rs.simple(s).compose(w))?;
                right[s][i] = rs.element_index(&w.compose(rs.simple(s)))?;
            }
        }
        let mask = |f: &dyn Fn(usize) -> bool| (0..rank).filter(|&s| f(s)).fold(0u32, |m, s| m | (1 << s));
        let ldesc = (0..n).map(|i| mask(&|s| length[left[s][i]] < length[i])).collect();
        let rdesc = (0..n).map(|i| mask(&|s| length[right[s][i]] < length[i])).collect();
        let mut kl = KlData { n, rank, length, left, ldesc, rdesc, mu: vec![Vec::new(); n] };
        kl.compute();
        Ok(kl)
    }

    fn compute(&mut self) {
        let n = self.n;
        // p[w][x] as coefficient vectors; empty = 0
        let mut p: Vec<Vec<Vec<i64>>> = Vec::with_capacity(n);
        for w in 0..n {
            if self.length[w] == 0 {
                let mut col = vec![Vec::new(); n];
                col[w] = vec![1];
                p.push(col);
                continue;
            }
            let s = (0..self.rank).find(|&s| self.ldesc[w] >> s & 1 == 1).unwrap();
            let v = self.left[s][w];
            let lw = self.length[w];
            let mut col = vec![Vec::new(); n];
            for x in 0..n {
                if self.length[x] > lw {
                    continue;
                }
                let sx = self.left[s][x];
                let c = self.ldesc[x] >> s & 1 == 1;
                // q^{1-c} P_{sx,v} + q^c P_{x,v}
                let mut acc: Vec<i64> = Vec::new();
                add_shifted(&mut acc, &p[v][sx], if c { 0 } else { 1 }, 1);
                add_shifted(&mut acc, &p[v][x], if c { 1 } else { 0 }, 1);
                for &(z, m) in &self.mu[v] {
                    if self.ldesc[z] >> s & 1 == 1 && !p[z][x].is_empty() {
                        let sh = (lw - self.length[z]) / 2;
                        add_shifted(&mut acc, &p[z][x], sh, -m);
                    }
                }
                while acc.last() == Some(&0) {
                    acc.pop();
                }
                col[x] = acc;
            }
            let mut mus = Vec::new();
            for (x, px) in col.iter().enumerate() {
                let d = lw as isize - self.length[x] as isize;
                if d > 0 && d % 2 == 1 {
                    let k = ((d - 1) / 2) as usize;
                    if let Some(&m) = px.get(k) {
                        if m != 0 {
                            mus.push((x, m));
                        }
                    }
                }
            }
            self.mu[w] = mus;
            p.push(col);
        }
    }

    /// Symmetrised μ, as a lookup.
    pub fn mu_table(&self) -> std::collections::HashMap<(usize, usize), i64> {
        let mut t = std::collections::HashMap::new();
        for w in 0..self.n {
            for &(y, m) in &self.mu[w] {
                t.insert((y, w), m);
                t.insert((w, y), m);
            }
        }
        t
    }

    /// Left cells, each sorted; cells listed by smallest element.
    pub fn left_cells(&self) -> Vec<Vec<usize>> {
        let mut g = petgraph::graph::DiGraph::<(), ()>::new();
        let nodes: Vec<_> = (0..self.n).map(|_| g.add_node(())).collect();
        for w in 0..self.n {
            for &(y, _) in &self.mu[w] {
                // edge a -> b when C_b occurs in T_s C_a for some s
                for (a, b) in [(w, y), (y, w)] {
                    if self.ldesc[b] & !self.ldesc[a] != 0 {
                        g.add_edge(nodes[a], nodes[b], ());
                    }
                }
            }
        }
        let mut cells: Vec<Vec<usize>> = petgraph::algo::tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut v: Vec<usize> = c.into_iter().map(|x| x.index()).collect();
                v.sort_unstable();
                v
            })
            .collect();
        cells.sort();
        cells
    }

    /// Two-sided cells as unions of left cells (`w ~ w^{-1}` relation added).
    pub fn two_sided_cells(&self, left: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut cell_of = vec![0; self.n];
        for (i, c) in left.iter().enumerate() {
            for &w in c {
                cell_of[w] = i;
            }
        }
        let mut g = petgraph::graph::DiGraph::<(), ()>::new();
        let nodes: Vec<_> = (0..self.n).map(|_| g.add_node(())).collect();
        for w in 0..self.n {
            for &(y, _) in &self.mu[w] {
                for (a, b) in [(w, y), (y, w)] {
                    if self.ldesc[b] & !self.ldesc[a] != 0 || self.rdesc[b] & !self.rdesc[a] != 0 {
                        g.add_edge(nodes[a], nodes[b], ());
                    }
                }
            }
        }
        let mut cells: Vec<Vec<usize>> = petgraph::algo::tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut v: Vec<usize> = c.into_iter().map(|x| cell_of[x.index()]).collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        cells.sort();
        cells
    }
}

fn add_shifted(acc: &mut Vec<i64>, p: &[i64], shift: usize, scale: i64) {
    if p.is_empty() {
        return;
    }
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        acc[i + shift] += scale * c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_counts() {
        // number of left cells = number of involutions in type A
        let rs = RootSystem::from_label("A3").unwrap();
        let kl = KlData::new(&rs).unwrap();
        assert_eq!(kl.left_cells().len(), 10);
        assert_eq!(kl.two_sided_cells(&kl.left_cells()).len(), 5);
        let g2 = RootSystem::from_label("G2").unwrap();
        let kl = KlData::new(&g2).unwrap();
        let cells = kl.left_cells();
        assert_eq!(cells.len(), 4);
        assert_eq!(kl.two_sided_cells(&cells).len(), 3);
    }
}
