use std::path::PathBuf;
use std::process::Command;

fn bundled() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data")
}

#[test]
fn g2_matches_bundled_file() {
    let out = std::env::temp_dir().join(format!("assetgen-g2-{}", std::process::id()));
    let status = Command::new(env!("CARGO_BIN_EXE_assetgen"))
        .arg(&out)
        .args(["--only", "G2"])
        .status()
        .unwrap();
    assert!(status.success());
    let fresh = std::fs::read_to_string(out.join("G2.toml")).unwrap();
    let shipped = std::fs::read_to_string(bundled().join("G2.toml")).unwrap();
    std::fs::remove_dir_all(&out).ok();
    assert_eq!(fresh, shipped);
}

/// About two minutes in release mode.
#[test]
#[ignore]
fn f4_matches_bundled_file() {
    let status = Command::new(env!("CARGO_BIN_EXE_assetgen"))
        .arg(bundled())
        .args(["--check", "--only", "F4"])
        .status()
        .unwrap();
    assert!(status.success());
}
