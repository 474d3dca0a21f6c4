//! Regenerates `crates/core/data/{G2,F4}.toml`.
//!
//! Usage: `assetgen [OUT_DIR] [--check] [--only LABEL]`. With `--check` the
//! files on disk are compared against freshly generated ones instead of
//! being written.

mod data;
mod fourier;
mod generate;
mod greens;
mod hecke;
mod kl;
mod modp;

use std::path::PathBuf;
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut check = false;
    let mut only = None;
    let mut out = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data");
    let mut args = std::env::args().skip(1);
    while let Some(a) = args.next() {
        match a.as_str() {
            "--check" => check = true,
            "--only" => only = args.next(),
            _ if a.starts_with("--") => {
                eprintln!("unknown flag {a}");
                return ExitCode::from(1);
            }
            _ => out = PathBuf::from(a),
        }
    }
    let mut ok = true;
    for spec in [data::g2(), data::f4()] {
        if only.as_deref().is_some_and(|l| l != spec.label) {
            continue;
        }
        let g = match generate::generate(&spec) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("{}: {e}", spec.label);
                ok = false;
                continue;
            }
        };
        for line in &g.log {
            eprintln!("{}: {line}", spec.label);
        }
        let text = g.asset.to_text().expect("serialise");
        let path = out.join(format!("{}.toml", spec.label));
        if check {
            let same = std::fs::read_to_string(&path).map(|t| t == text).unwrap_or(false);
            eprintln!("{}: {}", path.display(), if same { "up to date" } else { "DIFFERS" });
            ok &= same;
        } else {
            std::fs::create_dir_all(&out).expect("create output directory");
            std::fs::write(&path, text).expect("write data file");
            eprintln!("wrote {}", path.display());
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
