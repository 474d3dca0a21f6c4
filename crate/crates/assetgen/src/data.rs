//! Unipotent classes and Springer correspondence for G2 and F4.
//!
//! Local systems are irreducibles of `A(u) = S_k`, written as partitions of
//! `k`. Levi subsystems (0-based simple reflections) are given for classes
//! regular in a proper Levi subgroup.

pub struct ClassSpec {
    pub label: &'static str,
    pub dim: usize,
    /// `A(u) = S_k`.
    pub k: usize,
    pub levi: Option<&'static [usize]>,
}

pub struct SpringerSpec {
    pub irrep: &'static str,
    pub class: &'static str,
    pub local: &'static str,
}

pub struct TypeSpec {
    pub label: &'static str,
    pub classes: Vec<ClassSpec>,
    pub springer: Vec<SpringerSpec>,
    /// Write the Hecke table into the asset.
    pub hecke: bool,
}

const fn c(label: &'static str, dim: usize, k: usize, levi: Option<&'static [usize]>) -> ClassSpec {
    ClassSpec { label, dim, k, levi }
}

const fn s(irrep: &'static str, class: &'static str, local: &'static str) -> SpringerSpec {
    SpringerSpec { irrep, class, local }
}

pub fn g2() -> TypeSpec {
    TypeSpec {
        label: "G2",
        classes: vec![
            c("1", 0, 1, Some(&[])),
            c("A1", 6, 1, Some(&[1])),
            c("A~1", 8, 1, Some(&[0])),
            c("G2(a1)", 10, 3, None),
            c("G2", 12, 1, Some(&[0, 1])),
        ],
        springer: vec![
            s("1_0", "G2", "1"),
            s("2_1", "G2(a1)", "3"),
            s("1_3'", "G2(a1)", "21"),
            s("2_2", "A~1", "1"),
            s("1_3''", "A1", "1"),
            s("1_6", "1", "1"),
        ],
        hecke: true,
    }
}

pub fn f4() -> TypeSpec {
    TypeSpec {
        label: "F4",
        classes: vec![
            c("1", 0, 1, Some(&[])),
            c("A1", 16, 1, Some(&[0])),
            c("A~1", 22, 2, Some(&[2])),
            c("A1+A~1", 28, 1, Some(&[0, 2])),
            c("A~2", 30, 1, Some(&[2, 3])),
            c("A2", 30, 2, Some(&[0, 1])),
            c("A2+A~1", 34, 1, Some(&[0, 1, 3])),
            c("A~2+A1", 36, 1, Some(&[0, 2, 3])),
            c("B2", 36, 2, Some(&[1, 2])),
            c("C3(a1)", 38, 2, None),
            c("F4(a3)", 40, 4, None),
            c("C3", 42, 1, Some(&[1, 2, 3])),
            c("B3", 42, 1, Some(&[0, 1, 2])),
            c("F4(a2)", 44, 2, None),
            c("F4(a1)", 46, 2, None),
            c("F4", 48, 1, Some(&[0, 1, 2, 3])),
        ],
        springer: vec![
            s("1_0", "F4", "1"),
            s("4_1", "F4(a1)", "2"),
            s("2_4''", "F4(a1)", "11"),
            s("9_2", "F4(a2)", "2"),
            s("2_4'", "F4(a2)", "11"),
            s("8_3''", "C3", "1"),
            s("8_3'", "B3", "1"),
            s("12_4", "F4(a3)", "4"),
            s("9_6''", "F4(a3)", "31"),
            s("6_6''", "F4(a3)", "22"),
            s("1_12''", "F4(a3)", "211"),
            s("16_5", "C3(a1)", "2"),
            s("4_7''", "C3(a1)", "11"),
            s("6_6'", "A~2+A1", "1"),
            s("9_6'", "B2", "2"),
            s("4_8", "B2", "11"),
            s("4_7'", "A2+A~1", "1"),
            s("8_9''", "A~2", "1"),
            s("8_9'", "A2", "2"),
            s("1_12'", "A2", "11"),
            s("9_10", "A1+A~1", "1"),
            s("4_13", "A~1", "2"),
            s("2_16''", "A~1", "11"),
            s("2_16'", "A1", "1"),
            s("1_24", "1", "1"),
        ],
        hecke: true,
    }
}
