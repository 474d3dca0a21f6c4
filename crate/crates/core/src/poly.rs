//! Exact univariate polynomials and rational functions in the indeterminate `q`
//! with rational coefficients.
//!
//! Every point count produced by the crate is a [`RatFunc`]. Values are kept in
//! lowest terms with a monic denominator, so structural equality is equality
//! of functions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rational scalar.
pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Polynomial with coefficients listed lowest degree first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: Q, k: usize) -> Self {
        let mut v = vec![Q::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(Q::one(), k)
    }

    pub fn from_coeffs(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| q_int(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|c| Q::from_integer(c.clone())).collect())
    }

    /// `1 + q + ... + q^{k-1}`.
    pub fn q_integer(k: usize) -> Self {
        Self::from_coeffs(vec![Q::one(); k])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, or `None` if some coefficient is not integral.
    pub fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.to_bigints()?.iter().map(|c| c.to_i64()).collect()
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Q {
        self.eval(&q_int(x))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Q::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Divide by `q^k`, which must divide exactly.
    pub fn unshift(&self, k: usize) -> Self {
        assert!(
            self.valuation().map_or(true, |v| v >= k),
            "q^{k} does not divide"
        );
        Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lead = self.leading();
        self.scale(&lead.recip())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `q -> q^k`.
    pub fn inflate(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Q::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::from_coeffs(v)
    }

    /// `q^{deg} p(1/q)` for the given degree bound.
    pub fn reverse(&self, deg: usize) -> Self {
        assert!(self.degree().map_or(true, |d| d <= deg));
        let mut v = vec![Q::zero(); deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[deg - i] = c.clone();
        }
        Self::from_coeffs(v)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (qt, r) = self.div_rem(d);
        r.is_zero().then_some(qt)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut x = a.monic();
        let mut y = b.monic();
        while !y.is_zero() {
            let r = x.div_rem(&y).1.monic();
            x = y;
            y = r;
        }
        x
    }

    /// Content-normalised primitive integer polynomial and the scalar such that
    /// `self = scalar * primitive`, with positive leading coefficient.
    pub fn primitive_part(&self) -> (Q, Poly) {
        if self.is_zero() {
            return (Q::zero(), Poly::zero());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if self.leading().is_negative() {
            g = -g;
        }
        let prim = Poly::from_coeffs(ints.iter().map(|c| Q::from_integer(c / &g)).collect());
        (Q::new(g, den), prim)
    }

    /// Unique polynomial of degree `< points.len()` through the given points
    /// (Newton divided differences).
    pub fn interpolate(points: &[(Q, Q)]) -> Poly {
        let n = points.len();
        let mut coef: Vec<Q> = points.iter().map(|p| p.1.clone()).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = &coef[i] - &coef[i - 1];
                coef[i] = num / (&points[i].0 - &points[i - j].0);
            }
        }
        let mut acc = Poly::zero();
        for i in (0..n).rev() {
            let lin = Poly::from_coeffs(vec![-points[i].0.clone(), Q::one()]);
            acc = acc * lin + Poly::constant(coef[i].clone());
        }
        acc
    }

    pub fn var_name() -> &'static str {
        "q"
    }
}

/// The `k`-th cyclotomic polynomial (k >= 1).
pub fn cyclotomic(k: usize) -> Poly {
    assert!(k >= 1);
    let mut p = Poly::q_pow(k) - Poly::one();
    for d in 1..k {
        if k % d == 0 {
            p = p.div_exact(&cyclotomic(d)).expect("cyclotomic division");
        }
    }
    p
}

fn add_coeffs(a: &[Q], b: &[Q], sign: bool) -> Poly {
    let n = a.len().max(b.len());
    let mut v = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Q::zero);
        let y = b.get(i).cloned().unwrap_or_else(Q::zero);
        v.push(if sign { x + y } else { x - y });
    }
    Poly::from_coeffs(v)
}

fn mul_coeffs(a: &[Q], b: &[Q]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Poly::zero();
    }
    let mut v = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    Poly::from_coeffs(v)
}

macro_rules! poly_binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
    };
}

poly_binop!(Add, add, |a, b| add_coeffs(a, b, true));
poly_binop!(Sub, sub, |a, b| add_coeffs(a, b, false));
poly_binop!(Mul, mul, mul_coeffs);

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = add_coeffs(&self.coeffs, &rhs.coeffs, true);
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = add_coeffs(&self.coeffs, &rhs.coeffs, false);
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

fn fmt_q(c: &Q) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Highest degree first, e.g. `q^2+3q+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                let s = fmt_q(&abs);
                if k > 0 && !abs.is_integer() {
                    write!(f, "({s})")?;
                } else {
                    write!(f, "{s}")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Rational function `num / den` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = Poly::gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lead = d.leading();
        if !lead.is_one() {
            let inv = lead.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n, den: d }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Q) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Poly::q_pow(k as usize))
        } else {
            RatFunc {
                num: Poly::one(),
                den: Poly::q_pow((-k) as usize),
            }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn inv(&self) -> Self {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Evaluate at a rational point; `None` if it is a pole.
    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn eval_int(&self, x: i64) -> Option<Q> {
        self.eval(&q_int(x))
    }

    pub fn scale(&self, c: &Q) -> Self {
        RatFunc::new(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Factored display: scalar, a residual polynomial, a power of `q`, and
    /// cyclotomic factors `Φk^e`, matching the usual table typography.
    pub fn factored(&self) -> Factored {
        Factored::of(self)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! rat_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: &RatFunc) -> RatFunc {
                (&self).$f(rhs)
            }
        }
    };
}
rat_owned!(Add, add);
rat_owned!(Sub, sub);
rat_owned!(Mul, mul);
rat_owned!(Div, div);

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = &*self * rhs;
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.factored())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "RatFunc({})", self.num)
        } else {
            write!(f, "RatFunc(({})/({}))", self.num, self.den)
        }
    }
}

/// Largest cyclotomic index tried when factoring for display.
pub const MAX_CYCLOTOMIC: usize = 60;

/// `scalar * residual * q^qpow * prod Φk^e` with `residual` free of `q` and of
/// the cyclotomic factors tried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    pub scalar: Q,
    pub residual_num: Poly,
    pub residual_den: Poly,
    pub q_power: i64,
    pub cyclotomics: Vec<(usize, i32)>,
}

fn strip_factors(
    p: &Poly,
    exps: &mut std::collections::BTreeMap<usize, i32>,
    sign: i32,
) -> (Poly, i64) {
    let v = p.valuation().unwrap_or(0);
    let mut rest = p.unshift(v);
    for k in 1..=MAX_CYCLOTOMIC {
        let deg = rest.degree().unwrap_or(0);
        if deg == 0 {
            break;
        }
        let phi = cyclotomic(k);
        if phi.degree().unwrap() > deg {
            continue;
        }
        while let Some(qt) = rest.div_exact(&phi) {
            rest = qt;
            *exps.entry(k).or_insert(0) += sign;
        }
    }
    (rest, v as i64)
}

impl Factored {
    fn of(r: &RatFunc) -> Self {
        if r.is_zero() {
            return Factored {
                scalar: Q::zero(),
                residual_num: Poly::one(),
                residual_den: Poly::one(),
                q_power: 0,
                cyclotomics: Vec::new(),
            };
        }
        let mut exps = std::collections::BTreeMap::new();
        let (n, vn) = strip_factors(&r.num, &mut exps, 1);
        let (d, vd) = strip_factors(&r.den, &mut exps, -1);
        let (cn, pn) = n.primitive_part();
        let (cd, pd) = d.primitive_part();
        Factored {
            scalar: cn / cd,
            residual_num: pn,
            residual_den: pd,
            q_power: vn - vd,
            cyclotomics: exps.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scalar.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut scalar = self.scalar.clone();
        let has_res_num = !self.residual_num.is_one();
        if has_res_num && scalar.is_negative() {
            // keep the residual's leading coefficient positive, move the sign out
            scalar = -scalar;
            parts.push("-".into());
        }
        if !scalar.is_one() {
            if scalar == -Q::one() {
                parts.push("-".into());
            } else {
                parts.push(fmt_q(&scalar));
            }
        }
        if has_res_num {
            parts.push(format!("({})", self.residual_num));
        }
        if self.q_power != 0 {
            parts.push(if self.q_power == 1 {
                "q".into()
            } else {
                format!("q^{}", self.q_power)
            });
        }
        for &(k, e) in &self.cyclotomics {
            parts.push(if e == 1 {
                format!("Φ{k}")
            } else {
                format!("Φ{k}^{e}")
            });
        }
        if !self.residual_den.is_one() {
            parts.push(format!("/({})", self.residual_den));
        }
        let body: String = parts.concat();
        match body.as_str() {
            "" => write!(f, "1"),
            "-" => write!(f, "-1"),
            _ => write!(f, "{body}"),
        }
    }
}

/// Order polynomials by degree then coefficients (used only for canonical sorting).
impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn cyclotomics_small() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = p(&[3, -2, 0, 5, 1]);
        let pts: Vec<(Q, Q)> = (0..5)
            .map(|x| (q_int(x * 2 - 3), f.eval_int(x * 2 - 3)))
            .collect();
        assert_eq!(Poly::interpolate(&pts), f);
    }

    #[test]
    fn ratfunc_reduces() {
        // (q^2 - 1) / (q - 1) = q + 1
        let r = RatFunc::new(p(&[-1, 0, 1]), p(&[-1, 1]));
        assert!(r.is_poly());
        assert_eq!(r.num(), &p(&[1, 1]));
    }

    #[test]
    fn factored_display_matches_table_style() {
        // q^-4 Φ1^-1
        let r = RatFunc::new(Poly::one(), p(&[-1, 1]).shift(4));
        assert_eq!(r.to_string(), "q^-4Φ1^-1");
        // (q^2+3q+1) q^-5
        let r = RatFunc::new(p(&[1, 3, 1]), Poly::q_pow(5));
        assert_eq!(r.to_string(), "(q^2+3q+1)q^-5");
        // q^-5 Φ1 Φ2^2
        let num = &p(&[-1, 1]) * &p(&[1, 1]).pow(2);
        let r = RatFunc::new(num, Poly::q_pow(5));
        assert_eq!(r.to_string(), "q^-5Φ1Φ2^2");
        assert_eq!(RatFunc::zero().to_string(), "0");
        assert_eq!(RatFunc::one().to_string(), "1");
        assert_eq!(RatFunc::q_pow(6).to_string(), "q^6");
        assert_eq!(RatFunc::from_poly(p(&[0, -1])).to_string(), "-q");
    }

    #[test]
    fn gcd_and_division() {
        let a = &p(&[-1, 1]) * &p(&[1, 1, 1]);
        let b = &p(&[-1, 1]) * &p(&[1, 1]);
        assert_eq!(Poly::gcd(&a, &b), p(&[-1, 1]));
        assert_eq!(a.div_exact(&p(&[1, 1, 1])), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 1])), None);
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-5i64..=5, 0..6).prop_map(|v| Poly::from_ints(&v))
    }

    proptest! {
        #[test]
        fn ring_identities(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn division_roundtrip(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (qt, r) = a.div_rem(&b);
            prop_assert_eq!(&(&qt * &b) + &r, a);
            prop_assert!(r.degree() < b.degree() || r.is_zero());
        }

        #[test]
        fn ratfunc_field(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let x = RatFunc::new(a.clone(), b.clone());
            let y = RatFunc::new(c.clone(), b.clone());
            let s = &x + &y;
            prop_assert_eq!(&s - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!(&(&x * &y) / &y, x);
            }
        }
    }
}
