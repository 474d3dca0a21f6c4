//! Arithmetic modulo the prime `2^31 - 1`.

use rand::Rng;

pub const P: u64 = 2_147_483_647;

pub fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

pub fn sub(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

pub fn mul(a: u64, b: u64) -> u64 {
    a * b % P
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64) -> u64 {
    assert!(a % P != 0, "inverse of zero");
    pow(a, P - 2)
}

pub fn from_i64(x: i64) -> u64 {
    x.rem_euclid(P as i64) as u64
}

/// Symmetric lift to `(-P/2, P/2]`.
pub fn lift(x: u64) -> i64 {
    if x > P / 2 {
        x as i64 - P as i64
    } else {
        x as i64
    }
}

pub type Mat = Vec<Vec<u64>>;

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![0; c]; r]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, |r| r.len()));
    let mut out = zeros(n, m);
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] = (out[i][j] + x * b[l][j]) % P;
            }
        }
    }
    out
}

pub fn mat_vec(a: &Mat, v: &[u64]) -> Vec<u64> {
    a.iter().map(|row| row.iter().zip(v).fold(0, |acc, (x, y)| (acc + x * y) % P)).collect()
}

pub fn trace(a: &Mat) -> u64 {
    (0..a.len()).fold(0, |acc, i| add(acc, a[i][i]))
}

/// Row echelon form in place; returns pivot columns.
pub fn rref(m: &mut Mat) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pr);
        let iv = inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = mul(*x, iv);
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x = sub(*x, mul(f, *y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of the right null space of `m` (columns as vectors).
pub fn null_space(m: &Mat, cols: usize) -> Vec<Vec<u64>> {
    let mut a = m.clone();
    let piv = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (r, &pc) in piv.iter().enumerate() {
                v[pc] = sub(0, a[r][f]);
            }
            v
        })
        .collect()
}

/// Solves `x · basis = v` for a vector in the row span of `basis` (rows
/// independent).
pub fn coordinates(basis: &Mat, v: &[u64]) -> Option<Vec<u64>> {
    let k = basis.len();
    let n = v.len();
    // augmented transpose: n equations in k unknowns
    let mut a: Mat = (0..n).map(|j| {
        let mut row: Vec<u64> = (0..k).map(|i| basis[i][j]).collect();
        row.push(v[j]);
        row
    }).collect();
    let piv = rref(&mut a);
    if piv.contains(&k) {
        return None;
    }
    let mut x = vec![0; k];
    for (r, &c) in piv.iter().enumerate() {
        x[c] = a[r][k];
    }
    Some(x)
}

/// Characteristic polynomial (coefficients lowest first, monic), by
/// Hessenberg reduction.
pub fn char_poly(a: &Mat) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    for c in 0..n.saturating_sub(2) {
        let Some(pr) = (c + 1..n).find(|&i| h[i][c] != 0) else { continue };
        if pr != c + 1 {
            h.swap(pr, c + 1);
            for row in h.iter_mut() {
                row.swap(pr, c + 1);
            }
        }
        let iv = inv(h[c + 1][c]);
        for i in c + 2..n {
            let f = mul(h[i][c], iv);
            if f == 0 {
                continue;
            }
            for j in 0..n {
                let t = mul(f, h[c + 1][j]);
                h[i][j] = sub(h[i][j], t);
            }
            for row in h.iter_mut() {
                let t = mul(f, row[i]);
                row[c + 1] = add(row[c + 1], t);
            }
        }
    }
    // p_k = charpoly of leading k×k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let mut pk = vec![0; k + 1];
        // (x - h[k-1][k-1]) p_{k-1}
        let prev = &polys[k - 1];
        for (i, &c) in prev.iter().enumerate() {
            pk[i + 1] = add(pk[i + 1], c);
            pk[i] = sub(pk[i], mul(h[k - 1][k - 1], c));
        }
        let mut prod = 1;
        for i in (0..k - 1).rev() {
            prod = mul(prod, h[i + 1][i]);
            let coef = mul(prod, h[i][k - 1]);
            for (j, &c) in polys[i].iter().enumerate() {
                pk[j] = sub(pk[j], mul(coef, c));
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

fn trim(p: &mut Vec<u64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

fn poly_rem(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let il = inv(b[db]);
    while r.len() > db && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let f = mul(r[dr], il);
        for i in 0..=db {
            r[dr - db + i] = sub(r[dr - db + i], mul(f, b[i]));
        }
        r.pop();
        trim(&mut r);
    }
    if r.is_empty() {
        r.push(0);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add(out[i + j], mul(x, y));
        }
    }
    poly_rem(&out, m)
}

fn poly_gcd(a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    let il = inv(*a.last().unwrap());
    a.iter().map(|&x| mul(x, il)).collect()
}

/// `base^e mod m`.
fn poly_powmod(base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut r = vec![1];
    let mut b = poly_rem(base, m);
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod(&r, &b, m);
        }
        b = poly_mulmod(&b, &b, m);
        e >>= 1;
    }
    r
}

fn eval(p: &[u64], x: u64) -> u64 {
    p.iter().rev().fold(0, |acc, &c| add(mul(acc, x), c))
}

/// Roots in `F_p` of `f` that are simple.
pub fn simple_roots(f: &[u64], rng: &mut impl Rng) -> Vec<u64> {
    let mut f = f.to_vec();
    trim(&mut f);
    if f.len() < 2 {
        return Vec::new();
    }
    // product of distinct linear factors
    let xp = poly_powmod(&[0, 1], P, &f);
    let mut xpx = xp.clone();
    if xpx.len() < 2 {
        xpx.resize(2, 0);
    }
    xpx[1] = sub(xpx[1], 1);
    let g = poly_gcd(&f, &xpx);
    let mut roots = Vec::new();
    split(&g, rng, &mut roots);
    // keep simple ones: f'(r) != 0
    let df: Vec<u64> = f.iter().enumerate().skip(1).map(|(i, &c)| mul(c, i as u64 % P)).collect();
    roots.retain(|&r| eval(&df, r) != 0);
    roots.sort_unstable();
    roots
}

fn split(g: &[u64], rng: &mut impl Rng, out: &mut Vec<u64>) {
    let d = g.len() - 1;
    if d == 0 {
        return;
    }
    if d == 1 {
        out.push(sub(0, mul(g[0], inv(g[1]))));
        return;
    }
    loop {
        let a = rng.gen_range(0..P);
        let h = poly_powmod(&[a, 1], (P - 1) / 2, g);
        let mut h1 = h.clone();
        h1[0] = sub(h1[0], 1);
        let c = poly_gcd(g, &h1);
        let dc = c.len() - 1;
        if dc > 0 && dc < d {
            let (q, _) = poly_divmod(g, &c);
            split(&c, rng, out);
            split(&q, rng, out);
            return;
        }
    }
}

fn poly_divmod(a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![0], r);
    }
    let mut q = vec![0; r.len() - db];
    let il = inv(b[db]);
    for k in (0..q.len()).rev() {
        let f = mul(r[k + db], il);
        q[k] = f;
        for i in 0..=db {
            r[k + i] = sub(r[k + i], mul(f, b[i]));
        }
    }
    r.truncate(db.max(1));
    trim(&mut r);
    (q, r)
}

/// Interpolates the polynomial through `(x_i, y_i)` (Newton form), lifting
/// coefficients symmetrically.
pub fn interpolate(xs: &[u64], ys: &[u64]) -> Vec<i64> {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = mul(sub(coef[i], coef[i - 1]), inv(sub(xs[i], xs[i - j])));
        }
    }
    // expand Newton form
    let mut poly = vec![0u64; n];
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + coef[i]
        let mut next = vec![0u64; n];
        for k in 0..n - 1 {
            next[k + 1] = add(next[k + 1], poly[k]);
            next[k] = sub(next[k], mul(poly[k], xs[i]));
        }
        next[0] = add(next[0], coef[i]);
        poly = next;
    }
    let mut out: Vec<i64> = poly.into_iter().map(lift).collect();
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn char_poly_and_roots() {
        let a: Mat = vec![vec![2, 1, 0], vec![0, 3, 0], vec![1, 0, 3]];
        // (x-2)(x-3)^2
        let cp = char_poly(&a);
        assert_eq!(cp, vec![P - 18, 21, P - 8, 1]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        assert_eq!(simple_roots(&cp, &mut rng), vec![2]);
    }

    #[test]
    fn interpolation_round_trip() {
        let p = [3i64, -2, 0, 5];
        let xs: Vec<u64> = (2..6).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| eval(&p.iter().map(|&c| from_i64(c)).collect::<Vec<_>>(), x)).collect();
        assert_eq!(interpolate(&xs, &ys), p.to_vec());
    }
}
