//! Point counts of braid stacks, minimal classes, niceness and rigidity.
//!
//! `count(β, C) = |G^F|^{-1} Σ_E tr(T_β, E_q) · T_{E,C}(q)`.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::braid::{
    braid_equal, contains_full_twist, full_twist, rs_word, springer_braid, springer_element,
    BraidWord, Slope,
};
#[cfg(feature = "tier2")]
use crate::chars::hecke_trace_general;
use crate::chars::{
    char_table, contents_type_a, contents_with, hecke_trace_type_a, springer_traces,
    CharacterTable, ContentRecord,
};
use crate::error::{Error, Result};
use crate::poly::{q_int, Poly, RatFunc};
use crate::rootweyl::RootSystem;
use crate::unipotent::{self, display_label, gl_order_poly, group_order_poly, UnipotentData};

/// Which braid to count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidSpec {
    /// `(w̃_m)^d` for the canonical root element `w_m`.
    Slope(Slope),
    /// `word^power`.
    Word { word: BraidWord, power: usize },
}

impl fmt::Display for BraidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidSpec::Slope(s) => write!(f, "slope {s}"),
            BraidSpec::Word { word, power: 1 } => write!(f, "{word}"),
            BraidSpec::Word { word, power } => write!(f, "{word}^{power}"),
        }
    }
}

/// How Hecke traces were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceMethod {
    /// Root element of the full twist: `q^{νc} χ(w^d)`.
    Springer,
    /// Explicit Hecke modules or a stored Hecke character table.
    Hecke,
}

/// Everything needed to count over one group.
pub struct Context {
    pub rs: RootSystem,
    pub table: CharacterTable,
    /// In table order.
    pub contents: Vec<ContentRecord>,
    pub data: UnipotentData,
    pub group_order: Poly,
    /// Table row to row of `data`.
    rows: Vec<usize>,
    gl: bool,
}

impl Context {
    /// The adjoint group of the given type.
    pub fn new(label: &str, data_dir: Option<&Path>) -> Result<Self> {
        let rs = RootSystem::from_label(label)?;
        let order = group_order_poly(&rs);
        Self::build(rs, order, false, data_dir)
    }

    /// `GL_n`, as type `A_{n-1}`.
    pub fn gl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("GL_{n} has no braid group")));
        }
        let rs = RootSystem::from_label(&format!("A{}", n - 1))?;
        Self::build(rs, gl_order_poly(n), true, None)
    }

    fn build(rs: RootSystem, group_order: Poly, gl: bool, data_dir: Option<&Path>) -> Result<Self> {
        let table = char_table(&rs)?;
        let data = unipotent::load(&rs, &table, data_dir)?;
        let rows = data.align(&table)?;
        let contents = if rs.cartan_type().is_type_a() {
            contents_type_a(&rs, &table)
        } else {
            let aa: Vec<(usize, usize)> = rows
                .iter()
                .map(|&r| (data.irreps[r].a, data.irreps[r].big_a))
                .collect();
            contents_with(&rs, &table, &aa)
        };
        Ok(Context {
            rs,
            table,
            contents,
            data,
            group_order,
            rows,
            gl,
        })
    }

    pub fn group_label(&self) -> String {
        if self.gl {
            format!("GL{}", self.rs.rank() + 1)
        } else {
            self.rs.label()
        }
    }

    pub fn class_labels(&self) -> Vec<String> {
        self.data
            .classes
            .iter()
            .map(|c| c.display_label())
            .collect()
    }

    pub fn class_index(&self, label: &str) -> Result<usize> {
        self.data.class_index(label).ok_or_else(|| {
            Error::InvalidInput(format!(
                "no unipotent class `{label}` in {}",
                self.group_label()
            ))
        })
    }

    /// Traces of the braid on every irreducible, in table order.
    pub fn traces(&self, spec: &BraidSpec) -> Result<(Vec<RatFunc>, TraceMethod)> {
        match spec {
            BraidSpec::Slope(slope) => {
                let w = springer_element(&self.rs, slope.m)?;
                let t = springer_traces(&self.rs, &self.table, &self.contents, &w, *slope)?;
                Ok((
                    t.iter().map(|h| h.to_ratfunc()).collect(),
                    TraceMethod::Springer,
                ))
            }
            BraidSpec::Word { word, power } => {
                word.check_rank(self.rs.rank())?;
                if let Some(t) = self.root_element_traces(word, *power)? {
                    return Ok((t, TraceMethod::Springer));
                }
                let full = word.power(*power);
                let t = if self.rs.cartan_type().is_type_a() {
                    hecke_trace_type_a(&self.rs, &self.table, &full)?
                } else {
                    self.exceptional_word_traces(&full)?
                };
                Ok((
                    t.into_iter().map(RatFunc::from).collect(),
                    TraceMethod::Hecke,
                ))
            }
        }
    }

    #[cfg(feature = "tier2")]
    fn exceptional_word_traces(&self, full: &BraidWord) -> Result<Vec<Poly>> {
        let hecke = self.data.hecke.as_ref().ok_or_else(|| {
            Error::TierUnavailable(format!(
                "no Hecke character table for {}; only powers of root elements are supported",
                self.rs.label()
            ))
        })?;
        let t = hecke_trace_general(&self.rs, hecke, full)?;
        let order: Vec<usize> = self
            .table
            .labels
            .iter()
            .map(|l| {
                hecke
                    .labels
                    .iter()
                    .position(|h| h == l)
                    .expect("labels checked on load")
            })
            .collect();
        Ok(order.into_iter().map(|i| t[i].clone()).collect())
    }

    #[cfg(not(feature = "tier2"))]
    fn exceptional_word_traces(&self, _full: &BraidWord) -> Result<Vec<Poly>> {
        Err(Error::TierUnavailable(format!(
            "general braid words in type {} need the `tier2` feature; only powers of root elements are supported",
            self.rs.label()
        )))
    }

    /// When `word` is a reduced lift of an `m`-th root of the full twist,
    /// `tr((T_w)^p, E_q) = q^{p c(E)/m} χ_E(w^p)`.
    fn root_element_traces(&self, word: &BraidWord, power: usize) -> Result<Option<Vec<RatFunc>>> {
        let rs = &self.rs;
        let w = rs.element_from_word(word.gens());
        if word.is_empty() || w.length() != word.len() || rs.num_roots() % word.len() != 0 {
            return Ok(None);
        }
        let m = rs.num_roots() / word.len();
        if w.order() != m || !braid_equal(rs, &rs_word(rs, &w).power(m), &full_twist(rs))? {
            return Ok(None);
        }
        let cls = rs.class_of(&w.pow(power))?;
        let mut out = Vec::with_capacity(self.table.len());
        for (e, content) in self.contents.iter().enumerate() {
            let chi = self.table.values[e][cls];
            if chi == 0 {
                out.push(RatFunc::zero());
                continue;
            }
            let num = power as i64 * content.c;
            if num % m as i64 != 0 {
                return Ok(None);
            }
            out.push(RatFunc::q_pow(num / m as i64).scale(&q_int(chi)));
        }
        Ok(Some(out))
    }

    fn count_with(&self, traces: &[RatFunc], class: usize) -> RatFunc {
        let mut total = RatFunc::zero();
        for (e, t) in traces.iter().enumerate() {
            if t.is_zero() {
                continue;
            }
            let v = &self.data.values[self.rows[e]][class];
            total += &(t * &RatFunc::from(v.clone()));
        }
        &total / &RatFunc::from(self.group_order.clone())
    }

    /// Point count of the braid stack over one class.
    pub fn count_points(&self, spec: &BraidSpec, class: usize) -> Result<RatFunc> {
        let (t, _) = self.traces(spec)?;
        Ok(self.count_with(&t, class))
    }

    /// Counts over every class, in closure-compatible order.
    pub fn count_table(&self, spec: &BraidSpec) -> Result<CountResult> {
        let (t, method) = self.traces(spec)?;
        let rows = (0..self.data.classes.len())
            .map(|c| CountRow {
                class: self.data.classes[c].display_label(),
                value: self.count_with(&t, c),
            })
            .collect();
        Ok(CountResult {
            group: self.group_label(),
            braid: spec.to_string(),
            method,
            rows,
        })
    }

    /// Minimal class of the support, when the support is an up-set.
    pub fn minimal_class(&self, spec: &BraidSpec) -> Result<NicenessVerdict> {
        if let BraidSpec::Slope(s) = spec {
            if s.d > s.m {
                if contains_full_twist(&self.rs, &springer_braid(&self.rs, *s)?)? {
                    let all: Vec<usize> = (0..self.data.classes.len()).collect();
                    return Ok(self.verdict(all, Shortcut::FullTwist));
                }
            }
        }
        let table = self.count_table(spec)?;
        let support = table
            .rows
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.value.is_zero())
            .map(|(i, _)| i)
            .collect();
        Ok(self.verdict(support, Shortcut::Formula))
    }

    fn verdict(&self, support: Vec<usize>, how: Shortcut) -> NicenessVerdict {
        let d = &self.data;
        let labels = |v: &[usize]| {
            v.iter()
                .map(|&i| d.classes[i].display_label())
                .collect::<Vec<_>>()
        };
        let minima: Vec<usize> = support
            .iter()
            .copied()
            .filter(|&c| !support.iter().any(|&o| o != c && d.geq(c, o)))
            .collect();
        let mut witness = None;
        let mut minimal = None;
        if minima.len() == 1 {
            let m = minima[0];
            let holes: Vec<usize> = (0..d.classes.len())
                .filter(|&c| d.geq(c, m) && !support.contains(&c))
                .collect();
            if holes.is_empty() {
                minimal = Some(m);
            } else {
                witness = Some(format!(
                    "classes above {} with zero count: {}",
                    d.classes[m].display_label(),
                    labels(&holes).join(", ")
                ));
            }
        } else if minima.is_empty() {
            witness = Some("empty support".into());
        } else {
            // largest common lower bounds of the minima, all outside the support
            let below: Vec<usize> = (0..d.classes.len())
                .filter(|&c| minima.iter().all(|&m| d.geq(m, c)))
                .collect();
            let top: Vec<usize> = below
                .iter()
                .copied()
                .filter(|&c| !below.iter().any(|&o| o != c && d.geq(o, c)))
                .collect();
            witness = Some(format!(
                "incomparable minimal classes {} with zero count at {}",
                labels(&minima).join(", "),
                labels(&top).join(", ")
            ));
        }
        NicenessVerdict {
            nice: minimal.is_some(),
            minimal_class: minimal.map(|m| d.classes[m].display_label()),
            regular_class: d.classes[d.regular_class()].display_label(),
            support: labels(&support),
            witness,
            full_twist_shortcut: how == Shortcut::FullTwist,
        }
    }

    /// Count at the minimal class of a nice braid.
    pub fn count_at_minimal(&self, spec: &BraidSpec) -> Result<RatFunc> {
        let v = self.minimal_class(spec)?;
        let label = v
            .minimal_class
            .ok_or_else(|| Error::NotNice(v.witness.unwrap_or_default()))?;
        self.count_points(spec, self.class_index(&label)?)
    }

    /// Elliptic root element and count 1 at the minimal class.
    pub fn is_rigid(&self, slope: Slope) -> Result<bool> {
        let w = springer_element(&self.rs, slope.m)?;
        Ok(self.rs.is_elliptic(&w) && self.count_at_minimal(&BraidSpec::Slope(slope))?.is_one())
    }
}

#[derive(PartialEq, Eq)]
enum Shortcut {
    FullTwist,
    Formula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NicenessVerdict {
    pub nice: bool,
    pub minimal_class: Option<String>,
    pub regular_class: String,
    pub support: Vec<String>,
    pub witness: Option<String>,
    /// Decided by the braid containing the full twist, without counting.
    pub full_twist_shortcut: bool,
}

impl fmt::Display for NicenessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.minimal_class {
            Some(m) => write!(f, "({}, {})", m, self.regular_class),
            None => write!(f, "not nice: {}", self.witness.as_deref().unwrap_or("")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CountRow {
    pub class: String,
    pub value: RatFunc,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CountResult {
    pub group: String,
    pub braid: String,
    pub method: TraceMethod,
    pub rows: Vec<CountRow>,
}

impl CountResult {
    pub fn value(&self, class: &str) -> Option<&RatFunc> {
        let want = display_label(&unipotent::machine_label(class));
        self.rows.iter().find(|r| r.class == want).map(|r| &r.value)
    }

    pub fn to_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| r.class.chars().count())
            .max()
            .unwrap_or(0)
            .max(5);
        let mut s = format!("{} {}\n", self.group, self.braid);
        for r in &self.rows {
            let pad = width - r.class.chars().count();
            s += &format!("{}{}  {}\n", r.class, " ".repeat(pad), r.value.factored());
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("class,value,numerator,denominator\n");
        for r in &self.rows {
            s += &format!(
                "{},{},{},{}\n",
                r.class,
                r.value.factored(),
                r.value.num(),
                r.value.den()
            );
        }
        s
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(&CountJson::from(self))
            .map_err(|e| Error::InvalidInput(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: CountJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        j.try_into()
    }
}

/// Exact coefficient lists (lowest degree first, as rationals) plus the
/// factored display string.
#[derive(Serialize, Deserialize)]
struct CountJson {
    group: String,
    braid: String,
    method: TraceMethod,
    rows: Vec<RowJson>,
}

#[derive(Serialize, Deserialize)]
struct RowJson {
    class: String,
    display: String,
    numerator: Vec<String>,
    denominator: Vec<String>,
}

impl From<&CountResult> for CountJson {
    fn from(c: &CountResult) -> Self {
        let coeffs = |p: &Poly| p.coeffs().iter().map(|x| x.to_string()).collect();
        CountJson {
            group: c.group.clone(),
            braid: c.braid.clone(),
            method: c.method,
            rows: c
                .rows
                .iter()
                .map(|r| RowJson {
                    class: r.class.clone(),
                    display: r.value.factored().to_string(),
                    numerator: coeffs(r.value.num()),
                    denominator: coeffs(r.value.den()),
                })
                .collect(),
        }
    }
}

impl TryFrom<CountJson> for CountResult {
    type Error = Error;
    fn try_from(j: CountJson) -> Result<Self> {
        let poly = |v: &[String]| -> Result<Poly> {
            let c = v
                .iter()
                .map(|s| {
                    s.parse()
                        .map_err(|_| Error::InvalidInput(format!("bad coefficient `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Poly::from_coeffs(c))
        };
        let rows = j
            .rows
            .iter()
            .map(|r| {
                let den = poly(&r.denominator)?;
                if den.is_zero() {
                    return Err(Error::InvalidInput("zero denominator".into()));
                }
                Ok(CountRow {
                    class: r.class.clone(),
                    value: RatFunc::new(poly(&r.numerator)?, den),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CountResult {
            group: j.group,
            braid: j.braid,
            method: j.method,
            rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str, p: usize) -> BraidSpec {
        BraidSpec::Word {
            word: BraidWord::from_one_based(
                &s.split(',').map(|x| x.parse().unwrap()).collect::<Vec<_>>(),
            )
            .unwrap(),
            power: p,
        }
    }

    #[test]
    fn gl2_worked_count() {
        let ctx = Context::gl(2).unwrap();
        let t = ctx
            .count_table(&BraidSpec::Slope(Slope::new(1, 2).unwrap()))
            .unwrap();
        assert!(t.value("(1,1)").unwrap().is_zero());
        assert_eq!(
            t.value("(2)").unwrap(),
            &RatFunc::new(Poly::one(), Poly::from_ints(&[-1, 1]))
        );
        let t2 = ctx.count_table(&word("1", 1)).unwrap();
        assert_eq!(
            t,
            CountResult {
                method: TraceMethod::Springer,
                braid: t.braid.clone(),
                ..t2
            }
        );
    }

    #[test]
    fn word_and_slope_routes_agree() {
        let ctx = Context::gl(4).unwrap();
        for (d, m) in [(1, 4), (3, 4), (5, 4), (1, 3), (2, 3), (1, 2), (3, 2)] {
            let slope = Slope::new(d, m).unwrap();
            let a = ctx.count_table(&BraidSpec::Slope(slope)).unwrap();
            let full = crate::braid::springer_braid(&ctx.rs, slope).unwrap();
            let w = full.to_string();
            let t = hecke_trace_type_a(&ctx.rs, &ctx.table, &full).unwrap();
            let t: Vec<RatFunc> = t.into_iter().map(RatFunc::from).collect();
            for c in 0..ctx.data.classes.len() {
                assert_eq!(
                    a.rows[c].value,
                    ctx.count_with(&t, c),
                    "{w} {d}/{m} class {c}"
                );
            }
        }
    }

    #[cfg(feature = "tier2")]
    #[test]
    fn exceptional_hecke_route_matches_springer_traces() {
        let cases: [(&str, &[(usize, usize)]); 2] = [
            ("G2", &[(1, 6), (5, 6), (1, 3), (2, 3), (1, 2), (7, 6)]),
            ("F4", &[(1, 12), (5, 12), (1, 8), (3, 8), (1, 6), (1, 4)]),
        ];
        for (label, slopes) in cases {
            let ctx = Context::new(label, None).unwrap();
            for &(d, m) in slopes {
                let slope = Slope::new(d, m).unwrap();
                let (want, _) = ctx.traces(&BraidSpec::Slope(slope)).unwrap();
                let full = crate::braid::springer_braid(&ctx.rs, slope).unwrap();
                let got = ctx.exceptional_word_traces(&full).unwrap();
                for (e, (g, w)) in got.into_iter().zip(&want).enumerate() {
                    assert_eq!(
                        &RatFunc::from(g),
                        w,
                        "{label} {d}/{m} irrep {}",
                        ctx.table.labels[e]
                    );
                }
            }
        }
    }

    /// For elliptic slopes the stack at `C_ν` has dimension
    /// `dim C_ν + ℓ(β) - 2N - r`; count 1 should coincide with dimension 0.
    #[test]
    fn rigid_exactly_when_dimension_zero() {
        use num_integer::Integer;
        for label in ["G2", "F4"] {
            let ctx = Context::new(label, None).unwrap();
            let (n, r) = (ctx.rs.num_positive(), ctx.rs.rank());
            for m in crate::braid::regular_numbers(&ctx.rs)
                .unwrap()
                .into_iter()
                .filter(|&m| m > 1)
            {
                for d in (1..m).filter(|d| d.gcd(&m) == 1) {
                    let slope = Slope::new(d, m).unwrap();
                    let c = ctx
                        .minimal_class(&BraidSpec::Slope(slope))
                        .unwrap()
                        .minimal_class
                        .unwrap();
                    let dim = ctx.data.classes[ctx.class_index(&c).unwrap()].dim;
                    let len = d * 2 * n / m;
                    assert_eq!(
                        ctx.is_rigid(slope).unwrap(),
                        dim + len == 2 * n + r,
                        "{label} {slope}"
                    );
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let ctx = Context::gl(3).unwrap();
        let t = ctx.count_table(&word("1,2,1,2", 1)).unwrap();
        let back = CountResult::from_json(&t.to_json().unwrap()).unwrap();
        assert_eq!(back.to_text(), t.to_text());
    }

    #[test]
    fn verdicts_in_type_a() {
        let ctx = Context::gl(3).unwrap();
        let v = ctx
            .minimal_class(&BraidSpec::Slope(Slope::new(1, 3).unwrap()))
            .unwrap();
        assert_eq!(v.minimal_class.as_deref(), Some("(3)"));
        let v = ctx
            .minimal_class(&BraidSpec::Slope(Slope::new(4, 3).unwrap()))
            .unwrap();
        assert!(v.full_twist_shortcut && v.minimal_class.as_deref() == Some("(1,1,1)"));
        let formula = ctx
            .count_table(&BraidSpec::Slope(Slope::new(4, 3).unwrap()))
            .unwrap();
        assert!(formula.rows.iter().all(|r| !r.value.is_zero()));
    }
}
