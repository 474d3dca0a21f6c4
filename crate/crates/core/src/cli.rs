//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error or failed check, 2 when a tier,
//! data file or enumeration budget is unavailable. Braid words are 1-based.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::braid::{
    regular_numbers, springer_braid, springer_chamber_check, springer_element, BraidWord,
};
use crate::chars::char_table;
use crate::count::{BraidSpec, Context};
use crate::coxeter::{coprime_residues, coxeter_check, CoxeterCheck};
use crate::error::{Error, Result};
use crate::oracle::{stack_count_from_matrix, FlagSpace};
use crate::partition::Partition;
use crate::rootweyl::{word_to_string, RootSystem};
use crate::unipotent;

#[derive(Parser, Debug)]
#[command(
    name = "braidcount",
    version,
    about = "Point counts of braid stacks and minimal unipotent classes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Point count at every unipotent class.
    Count {
        #[command(flatten)]
        braid: BraidArgs,
        /// Print only this class.
        #[arg(long)]
        class: Option<String>,
    },
    /// Minimal and regular class of the support, or why there is none.
    Interval {
        #[command(flatten)]
        braid: BraidArgs,
    },
    /// Point count at the minimal class.
    CountMin {
        #[command(flatten)]
        braid: BraidArgs,
    },
    /// Regular numbers with a root element each.
    Springer {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Compare the formula with brute-force flag counting in GL_n(F_q).
    Oracle {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long, default_value_t = 2)]
        q: u32,
    },
    /// Check a data file against the character table.
    ValidateData {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Compare the Jordan type of N_d with the minimal class at slope d/n in GL_n.
    Coxeter {
        #[command(flatten)]
        group: GroupArgs,
        /// A single d; all admissible d by default.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// Root system label: A1..A6, G2, F4, E6.
    #[arg(long = "type")]
    pub type_label: Option<String>,
    /// Use GL_n (type A_{n-1}) instead of the adjoint group.
    #[arg(long)]
    pub gl: Option<usize>,
    /// Directory with <TYPE>.toml data files; defaults to $BRAIDCOUNT_DATA, then the bundled data.
    #[arg(long)]
    pub data_dir: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct BraidArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Comma-separated generators, numbered from 1.
    #[arg(long, conflicts_with = "slope", required_unless_present = "slope")]
    pub word: Option<String>,
    #[arg(long, default_value_t = 1, requires = "word")]
    pub power: usize,
    /// d/m: the d-th power of the canonical m-th root of the full twist.
    #[arg(long)]
    pub slope: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl GroupArgs {
    fn context(&self) -> Result<Context> {
        match (self.gl, &self.type_label) {
            (Some(n), t) => {
                if let Some(t) = t {
                    let want = format!("A{}", n.saturating_sub(1));
                    if RootSystem::from_label(t)?.label() != want {
                        return Err(Error::InvalidInput(format!(
                            "--gl {n} needs type {want}, not {t}"
                        )));
                    }
                }
                Context::gl(n)
            }
            (None, Some(t)) => Context::new(t, self.data_dir.as_deref()),
            (None, None) => Err(Error::InvalidInput(
                "one of --type or --gl is required".into(),
            )),
        }
    }

    fn root_system(&self) -> Result<RootSystem> {
        match (self.gl, &self.type_label) {
            (Some(n), _) if n >= 2 => RootSystem::from_label(&format!("A{}", n - 1)),
            (Some(n), _) => Err(Error::InvalidInput(format!("GL_{n} has no braid group"))),
            (None, Some(t)) => RootSystem::from_label(t),
            (None, None) => Err(Error::InvalidInput(
                "one of --type or --gl is required".into(),
            )),
        }
    }
}

pub fn parse_word(s: &str) -> Result<BraidWord> {
    let gens = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("bad generator `{t}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    BraidWord::from_one_based(&gens)
}

impl BraidArgs {
    fn spec(&self) -> Result<BraidSpec> {
        match (&self.word, &self.slope) {
            (Some(w), None) => Ok(BraidSpec::Word {
                word: parse_word(w)?,
                power: self.power,
            }),
            (None, Some(s)) => Ok(BraidSpec::Slope(s.parse()?)),
            _ => Err(Error::InvalidInput(
                "give exactly one of --word or --slope".into(),
            )),
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TierUnavailable(_)
        | Error::MissingAsset(_)
        | Error::BudgetExceeded(_)
        | Error::GroupTooLarge(_) => 2,
        _ => 1,
    }
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::InvalidInput(e.to_string()))
}

/// Runs one invocation, writing the report to `out` and errors to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                eprint!("{e}");
                return 1;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(&cli.command) {
        Ok((text, ok)) => {
            let _ = write!(out, "{text}");
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// The report and whether every check in it passed.
fn execute(cmd: &Command) -> Result<(String, bool)> {
    match cmd {
        Command::Count { braid, class } => {
            let ctx = braid.group.context()?;
            let mut table = ctx.count_table(&braid.spec()?)?;
            if let Some(c) = class {
                let keep = unipotent::display_label(&unipotent::machine_label(c));
                ctx.class_index(c)?;
                table.rows.retain(|r| r.class == keep);
            }
            let text = match braid.format {
                Format::Table => table.to_text(),
                Format::Csv => table.to_csv(),
                Format::Json => table.to_json()? + "\n",
            };
            Ok((text, true))
        }
        Command::Interval { braid } => {
            let ctx = braid.group.context()?;
            let v = ctx.minimal_class(&braid.spec()?)?;
            let text = match braid.format {
                Format::Table => format!("{v}\n"),
                Format::Json => json(&v)? + "\n",
                Format::Csv => format!(
                    "nice,minimal,regular,witness\n{},{},{},\"{}\"\n",
                    v.nice,
                    v.minimal_class.clone().unwrap_or_default(),
                    v.regular_class,
                    v.witness.clone().unwrap_or_default()
                ),
            };
            Ok((text, true))
        }
        Command::CountMin { braid } => {
            let ctx = braid.group.context()?;
            let spec = braid.spec()?;
            let class = ctx
                .minimal_class(&spec)?
                .minimal_class
                .ok_or_else(|| Error::NotNice(format!("{spec} has no minimal class")))?;
            let value = ctx.count_at_minimal(&spec)?;
            let text = match braid.format {
                Format::Table => format!("{class}  {}\n", value.factored()),
                Format::Json => {
                    json(&serde_json::json!({
                        "class": class,
                        "value": value.factored().to_string(),
                        "numerator": value.num().to_string(),
                        "denominator": value.den().to_string(),
                    }))? + "\n"
                }
                Format::Csv => format!("class,value\n{class},{}\n", value.factored()),
            };
            Ok((text, true))
        }
        Command::Springer { group, format } => springer(group, *format),
        Command::Oracle { braid, q } => oracle(braid, *q),
        Command::ValidateData { group } => {
            let rs = group.root_system()?;
            let table = char_table(&rs)?;
            let data = unipotent::load(&rs, &table, group.data_dir.as_deref())?;
            let report = unipotent::validate(&rs, &table, &data);
            Ok((format!("{report}\n"), report.passed()))
        }
        Command::Coxeter { group, d, format } => {
            let rs = group.root_system()?;
            if !rs.cartan_type().is_type_a() {
                return Err(Error::TierUnavailable(format!(
                    "Coxeter nilpotents are only realised for gl_n, not {}",
                    rs.label()
                )));
            }
            let n = rs.rank() + 1;
            let ds = match d {
                Some(d) => vec![*d],
                None => coprime_residues(n),
            };
            let rows = ds
                .iter()
                .map(|&d| coxeter_check(n, d))
                .collect::<Result<Vec<CoxeterCheck>>>()?;
            let ok = rows.iter().all(|r| r.agrees);
            let text = match format {
                Format::Json => json(&rows)? + "\n",
                Format::Csv => {
                    let mut s = String::from("n,d,jordan_type,minimal_class,agrees\n");
                    for r in &rows {
                        s += &format!(
                            "{},{},\"{}\",\"{}\",{}\n",
                            r.n,
                            r.d,
                            r.jordan_type,
                            r.minimal_class.clone().unwrap_or_default(),
                            r.agrees
                        );
                    }
                    s
                }
                Format::Table => {
                    let mut s = format!("GL{n}\n");
                    for r in &rows {
                        s += &format!(
                            "d={}/{}  N_d {}  minimal {}  {}\n",
                            r.d,
                            r.n,
                            r.jordan_type,
                            r.minimal_class.as_deref().unwrap_or("-"),
                            if r.agrees { "agree" } else { "DISAGREE" }
                        );
                    }
                    s
                }
            };
            Ok((text, ok))
        }
    }
}

#[derive(Serialize)]
struct SpringerRow {
    m: usize,
    word: Vec<usize>,
    elliptic: bool,
    /// `None` when the chamber check does not apply.
    chamber_check: Option<bool>,
}

fn springer(group: &GroupArgs, format: Format) -> Result<(String, bool)> {
    let rs = group.root_system()?;
    let mut rows = Vec::new();
    for m in regular_numbers(&rs)? {
        let w = springer_element(&rs, m)?;
        let chamber_check = if m == 1 {
            None
        } else {
            springer_chamber_check(&rs, &w, m).ok()
        };
        rows.push(SpringerRow {
            m,
            word: rs.reduced_word(&w).iter().map(|g| g + 1).collect(),
            elliptic: rs.is_elliptic(&w),
            chamber_check,
        });
    }
    let text = match format {
        Format::Json => json(&rows)? + "\n",
        Format::Csv => {
            let mut s = String::from("m,word,elliptic,chamber_check\n");
            for r in &rows {
                let words: Vec<String> = r.word.iter().map(|g| g.to_string()).collect();
                let cc = r.chamber_check.map(|b| b.to_string()).unwrap_or_default();
                s += &format!("{},\"{}\",{},{}\n", r.m, words.join(","), r.elliptic, cc);
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "{} regular numbers: {:?}\n",
                rs.label(),
                rows.iter().map(|r| r.m).collect::<Vec<_>>()
            );
            for r in &rows {
                let word: Vec<usize> = r.word.iter().map(|g| g - 1).collect();
                s += &format!(
                    "m={:<3} w={}  {}{}\n",
                    r.m,
                    if word.is_empty() {
                        "1".to_string()
                    } else {
                        word_to_string(&word)
                    },
                    if r.elliptic {
                        "elliptic"
                    } else {
                        "non-elliptic"
                    },
                    match r.chamber_check {
                        Some(true) => "",
                        Some(false) => "  (fails chamber check)",
                        None => "",
                    }
                );
            }
            s
        }
    };
    Ok((text, true))
}

fn oracle(braid: &BraidArgs, q: u32) -> Result<(String, bool)> {
    let n = match (braid.group.gl, braid.group.root_system()) {
        (Some(n), _) => n,
        (None, Ok(rs)) if rs.cartan_type().is_type_a() => rs.rank() + 1,
        (None, Ok(rs)) => {
            return Err(Error::TierUnavailable(format!(
                "no brute-force oracle for {}",
                rs.label()
            )))
        }
        (None, Err(e)) => return Err(e),
    };
    let ctx = Context::gl(n)?;
    let spec = braid.spec()?;
    let word = match &spec {
        BraidSpec::Slope(s) => springer_braid(&ctx.rs, *s)?,
        BraidSpec::Word { word, power } => {
            word.check_rank(ctx.rs.rank())?;
            word.power(*power)
        }
    };
    let space = FlagSpace::new(n, q)?;
    let m = space.word_matrix(word.gens())?;
    let table = ctx.count_table(&spec)?;
    let mut rows = Vec::new();
    for mu in Partition::all(n) {
        let brute = stack_count_from_matrix(&space, &m, &mu);
        let formula = table
            .value(&mu.to_string())
            .and_then(|v| v.eval_int(q as i64))
            .ok_or_else(|| Error::InvalidInput(format!("formula has a pole at q = {q}")))?;
        rows.push((
            mu.to_string(),
            formula.to_string(),
            brute.to_string(),
            formula == brute,
        ));
    }
    let ok = rows.iter().all(|r| r.3);
    let text = match braid.format {
        Format::Json => json(
            &rows
                .iter()
                .map(|(c, f, b, a)| serde_json::json!({"class": c, "formula": f, "brute_force": b, "agree": a}))
                .collect::<Vec<_>>(),
        )? + "\n",
        Format::Csv => {
            let mut s = String::from("class,formula,brute_force,agree\n");
            for (c, f, b, a) in &rows {
                s += &format!("\"{c}\",{f},{b},{a}\n");
            }
            s
        }
        Format::Table => {
            let mut s = format!("GL{n}(F_{q}) {spec}\n");
            for (c, f, b, a) in &rows {
                s += &format!("{c:<12} formula {f:<10} brute force {b:<10} {}\n", if *a { "ok" } else { "MISMATCH" });
            }
            s
        }
    };
    Ok((text, ok))
}
