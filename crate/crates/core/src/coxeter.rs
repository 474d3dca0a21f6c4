//! The nilpotent `N_d = Σ_{ht(α) = -d} x_α` of a Coxeter connection and its
//! comparison with the minimal class at slope `d/h`.
//!
//! Only `gl_n` is realised. There `x_α` for the negative root `e_{i+d} - e_i`
//! is the matrix unit `E_{i+d,i}`, so `N_d` is the all-ones `d`-th
//! subdiagonal. The Jordan type of `exp(N_d)` is that of `N_d`.

use num_integer::Integer;
use serde::Serialize;

use crate::braid::Slope;
use crate::count::{BraidSpec, Context};
use crate::error::{Error, Result};
use crate::oracle::{nilpotent_jordan_type, Mat};
use crate::partition::Partition;
use crate::rootweyl::RootSystem;

/// Ranks of 0/1 shift patterns do not depend on the field.
const FIELD: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalNilpotent {
    pub n: usize,
    pub d: usize,
    pub matrix: Mat,
    pub jordan_type: Partition,
}

fn check(n: usize, d: usize) -> Result<()> {
    if n < 2 || d == 0 || d >= n || d.gcd(&n) != 1 {
        return Err(Error::InvalidInput(format!(
            "need 0 < d < {n} with gcd(d, {n}) = 1, got d = {d}"
        )));
    }
    Ok(())
}

fn shift(n: usize, d: usize, below: bool) -> Mat {
    let mut m = vec![vec![0u8; n]; n];
    for i in 0..n - d {
        if below {
            m[i + d][i] = 1;
        } else {
            m[i][i + d] = 1;
        }
    }
    m
}

/// `N_d` in the defining representation of `gl_n`, `n = rank + 1`.
pub fn build_nd(rs: &RootSystem, d: usize) -> Result<PrincipalNilpotent> {
    if !rs.cartan_type().is_type_a() {
        return Err(Error::TierUnavailable(format!(
            "Coxeter nilpotents are only realised for gl_n, not {}",
            rs.label()
        )));
    }
    build_nd_gl(rs.rank() + 1, d)
}

pub fn build_nd_gl(n: usize, d: usize) -> Result<PrincipalNilpotent> {
    check(n, d)?;
    let matrix = shift(n, d, true);
    let jordan_type = nilpotent_jordan_type(&matrix, FIELD)?;
    Ok(PrincipalNilpotent {
        n,
        d,
        matrix,
        jordan_type,
    })
}

/// Jordan type of the superdiagonal variant; always equal to the subdiagonal one.
pub fn transpose_jordan_type(n: usize, d: usize) -> Result<Partition> {
    check(n, d)?;
    nilpotent_jordan_type(&shift(n, d, false), FIELD)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterCheck {
    pub n: usize,
    pub d: usize,
    /// Jordan type of `N_d`.
    pub jordan_type: String,
    /// Minimal class at slope `d/n` from point counts.
    pub minimal_class: Option<String>,
    pub agrees: bool,
}

/// Compares the class of `exp(N_d)` with the minimal class at slope `d/n` in `GL_n`.
pub fn coxeter_check(n: usize, d: usize) -> Result<CoxeterCheck> {
    let nd = build_nd_gl(n, d)?;
    let ctx = Context::gl(n)?;
    let verdict = ctx.minimal_class(&BraidSpec::Slope(Slope::new(d, n)?))?;
    let jordan_type = nd.jordan_type.to_string();
    let agrees = verdict.minimal_class.as_deref() == Some(jordan_type.as_str());
    Ok(CoxeterCheck {
        n,
        d,
        jordan_type,
        minimal_class: verdict.minimal_class,
        agrees,
    })
}

pub fn verify_coxeter_minimal(n: usize, d: usize) -> Result<bool> {
    Ok(coxeter_check(n, d)?.agrees)
}

/// Every admissible `d` for `GL_n`.
pub fn coprime_residues(n: usize) -> Vec<usize> {
    (1..n).filter(|d| d.gcd(&n) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jt(n: usize, d: usize) -> Partition {
        build_nd_gl(n, d).unwrap().jordan_type
    }

    #[test]
    fn jordan_types() {
        for n in 2..=6 {
            assert_eq!(jt(n, 1), Partition::new(vec![n]));
        }
        assert_eq!(jt(4, 3), Partition::new(vec![2, 1, 1]));
        assert_eq!(jt(5, 2), Partition::new(vec![3, 2]));
        for n in 2..=6 {
            for d in coprime_residues(n) {
                assert_eq!(transpose_jordan_type(n, d).unwrap(), jt(n, d));
            }
        }
    }

    #[test]
    fn rejects_bad_d() {
        assert!(build_nd_gl(4, 2).is_err());
        assert!(build_nd_gl(4, 4).is_err());
        let g2 = RootSystem::from_label("G2").unwrap();
        assert!(matches!(build_nd(&g2, 1), Err(Error::TierUnavailable(_))));
    }

    #[test]
    fn small_cases_agree() {
        assert!(verify_coxeter_minimal(4, 3).unwrap());
        assert!(verify_coxeter_minimal(3, 2).unwrap());
    }
}
