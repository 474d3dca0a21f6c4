//! Nonabelian Fourier matrices for the groups `S_1, ..., S_4`.

use braidcount::partition::{mn_character, Partition};
use num_complex::Complex64;

type Perm = Vec<usize>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

fn inverse(a: &Perm) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

fn cycle_type(a: &Perm) -> Partition {
    let mut seen = vec![false; a.len()];
    let mut parts = Vec::new();
    for i in 0..a.len() {
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = a[j];
            len += 1;
        }
        if len > 0 {
            parts.push(len);
        }
    }
    Partition::new(parts)
}

fn all_perms(k: usize) -> Vec<Perm> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_perms(k - 1) {
        for pos in 0..k {
            let mut q: Perm = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Irreducible characters of a small permutation group, as values on its
/// listed elements, trivial character first.
fn irreducibles(group: &[Perm], full_symmetric: bool) -> Vec<Vec<Complex64>> {
    let n = group.len();
    if full_symmetric {
        let k = group[0].len();
        let mut parts = Partition::all(k);
        parts.sort_by(|a, b| b.cmp(a));
        return parts
            .iter()
            .map(|l| group.iter().map(|g| Complex64::new(mn_character(l, &cycle_type(g)) as f64, 0.0)).collect())
            .collect();
    }
    let index = |p: &Perm| group.iter().position(|g| g == p).unwrap();
    let order = |g: &Perm| {
        let id: Perm = (0..g.len()).collect();
        let mut x = g.clone();
        let mut o = 1usize;
        while x != id {
            x = compose(&x, g);
            o += 1;
        }
        o
    };
    let exp = group.iter().map(order).max().unwrap();
    // linear characters: homomorphisms to exp-th roots of unity, found on a
    // generating set
    let mut gens: Vec<usize> = Vec::new();
    let mut span = vec![index(&(0..group[0].len()).collect())];
    for i in 0..n {
        if span.contains(&i) {
            continue;
        }
        gens.push(i);
        loop {
            let before = span.len();
            for a in span.clone() {
                for &g in &gens {
                    let c = index(&compose(&group[a], &group[g]));
                    if !span.contains(&c) {
                        span.push(c);
                    }
                }
            }
            if span.len() == before {
                break;
            }
        }
    }
    let root = |k: usize| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / exp as f64);
    let mut chars: Vec<Vec<Complex64>> = Vec::new();
    let total = exp.pow(gens.len() as u32);
    for code in 0..total {
        let imgs: Vec<usize> = (0..gens.len()).map(|j| code / exp.pow(j as u32) % exp).collect();
        // extend by breadth-first words
        let mut val: Vec<Option<usize>> = vec![None; n];
        val[span[0]] = Some(0);
        let mut ok = true;
        let mut queue = vec![span[0]];
        while let Some(a) = queue.pop() {
            for (j, &g) in gens.iter().enumerate() {
                let c = index(&compose(&group[a], &group[g]));
                let v = (val[a].unwrap() + imgs[j]) % exp;
                match val[c] {
                    None => {
                        val[c] = Some(v);
                        queue.push(c);
                    }
                    Some(w) if w != v => ok = false,
                    _ => {}
                }
            }
        }
        if ok {
            chars.push(val.iter().map(|v| root(v.unwrap())).collect());
        }
    }
    let sum_sq: f64 = chars.iter().map(|c| c[span[0]].norm_sqr()).sum();
    let missing = n as f64 - sum_sq;
    if missing > 0.5 {
        // exactly one nonlinear irreducible is left: it is the remainder of
        // the regular character
        let d = missing.sqrt().round();
        assert!((d * d - missing).abs() < 1e-9, "group too large for this method");
        let mut chi = vec![Complex64::new(0.0, 0.0); n];
        for (i, x) in chi.iter_mut().enumerate() {
            let reg = if i == span[0] { n as f64 } else { 0.0 };
            let lin: Complex64 = chars.iter().map(|c| c[i]).sum();
            *x = (Complex64::new(reg, 0.0) - lin) / d;
        }
        chars.push(chi);
    }
    chars
}

/// A pair `(x, σ)`: `x` a class representative of `Γ = S_k`, `σ` an
/// irreducible of its centralizer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pair {
    /// Cycle type of `x`.
    pub class: Partition,
    /// Index into the irreducibles of `Z(x)`; 0 is trivial. For `x = 1`
    /// these follow partitions in decreasing order.
    pub sigma: usize,
}

pub struct FourierGroup {
    pub pairs: Vec<Pair>,
    pub matrix: Vec<Vec<Complex64>>,
}

impl FourierGroup {
    pub fn symmetric(k: usize) -> Self {
        let group = all_perms(k);
        let mut classes: Vec<Partition> = Partition::all(k);
        classes.sort();
        let reps: Vec<Perm> =
            classes.iter().map(|c| group.iter().find(|g| cycle_type(g) == *c).unwrap().clone()).collect();
        let cents: Vec<Vec<Perm>> = reps
            .iter()
            .map(|x| group.iter().filter(|g| compose(g, x) == compose(x, g)).cloned().collect())
            .collect();
        let chars: Vec<Vec<Vec<Complex64>>> =
            cents.iter().enumerate().map(|(i, z)| irreducibles(z, i == 0 || z.len() == 1)).collect();
        let mut pairs = Vec::new();
        for (i, c) in classes.iter().enumerate() {
            for s in 0..chars[i].len() {
                pairs.push(Pair { class: c.clone(), sigma: s });
            }
        }
        let value = |ci: usize, s: usize, g: &Perm| -> Complex64 {
            let pos = cents[ci].iter().position(|z| z == g).expect("centralizer element");
            chars[ci][s][pos]
        };
        let m = pairs.len();
        let mut matrix = vec![vec![Complex64::new(0.0, 0.0); m]; m];
        for a in 0..m {
            for b in 0..m {
                let (i, j) = (classes.iter().position(|c| *c == pairs[a].class).unwrap(),
                              classes.iter().position(|c| *c == pairs[b].class).unwrap());
                let (x, y) = (&reps[i], &reps[j]);
                let mut total = Complex64::new(0.0, 0.0);
                for g in &group {
                    let gi = inverse(g);
                    let gyg = compose(&compose(g, y), &gi);
                    if compose(x, &gyg) != compose(&gyg, x) {
                        continue;
                    }
                    let gxg = compose(&compose(&gi, x), g);
                    total += value(i, pairs[a].sigma, &gyg) * value(j, pairs[b].sigma, &gxg).conj();
                }
                matrix[a][b] = total / (cents[i].len() * cents[j].len()) as f64;
            }
        }
        FourierGroup { pairs, matrix }
    }

}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_unitarity() {
        for (k, size) in [(1, 1), (2, 4), (3, 8), (4, 21)] {
            let f = FourierGroup::symmetric(k);
            assert_eq!(f.pairs.len(), size);
            // symmetric and unitary
            let m = &f.matrix;
            for a in 0..size {
                for b in 0..size {
                    assert!((m[a][b] - m[b][a]).norm() < 1e-9);
                    let sq: Complex64 = (0..size).map(|c| m[a][c] * m[b][c].conj()).sum();
                    assert!((sq - if a == b { 1.0 } else { 0.0 }).norm() < 1e-9);
                }
            }
        }
        let f = FourierGroup::symmetric(3);
        assert!((f.matrix[0][0] - 1.0 / 6.0).norm() < 1e-12);
    }
}
