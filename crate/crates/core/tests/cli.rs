use std::path::PathBuf;

use modelcat::cli::{run, Outcome};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

fn modelcat(args: &[&str]) -> Outcome {
    run(std::iter::once("modelcat".to_string()).chain(args.iter().map(|s| s.to_string())))
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

#[test]
fn lift_identity_matches_golden() {
    let out = modelcat(&["lift", &data("lift_identity.txt")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, golden("lift_identity.golden"));
}

#[test]
fn rlp_two_points_matches_golden() {
    let out = modelcat(&["rlp", &data("two_points_to_point.txt"), "--gen", "I", "--cap", "1"]);
    assert_eq!(out.code, 1, "{}", out.stderr);
    assert_eq!(out.stdout, golden("rlp_two_points.golden"));
}

#[test]
fn factorize_point_matches_golden() {
    let out = modelcat(&["factorize", &data("empty_to_point.txt"), "--gen", "I", "--mode", "reduced", "--budget", "5"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, golden("factorize_point.golden"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["factorize", &data("two_points_to_point.txt"), "--gen", "J", "--cap", "2", "--budget", "3"];
    assert_eq!(modelcat(&args).stdout, modelcat(&args).stdout);
}

#[test]
fn soa_report_parses_back() {
    let out = modelcat(&["factorize", &data("empty_to_point.txt"), "--gen", "I", "--mode", "reduced"]);
    let (header, doc) = modelcat::format::parse_soa(&out.stdout).unwrap();
    assert_eq!(header.stages_run, 2);
    assert_eq!(header.residual, 0);
    assert_eq!(doc.map("right").unwrap().source().size(), 1);
}

#[test]
fn malformed_input_is_located() {
    let dir = std::env::temp_dir().join(format!("modelcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(&path, "sset/1 X\ndim 0: a\ndim 1: e\nface e: a zz\nend\n").unwrap();
    let out = modelcat(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("error: "), "{}", out.stderr);
    assert!(out.stderr.contains("bad.txt:4:"), "{}", out.stderr);
}

#[test]
fn missing_file_and_bad_flags_are_input_errors() {
    assert_eq!(modelcat(&["validate", "/nonexistent/x.txt"]).code, 2);
    assert_eq!(modelcat(&["rlp", &data("two_points_to_point.txt"), "--gen", "K"]).code, 2);
    assert_eq!(modelcat(&["frobnicate"]).code, 2);
}
