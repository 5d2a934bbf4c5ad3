#[path = "../src/summary.rs"]
#[allow(dead_code)]
mod summary;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use summary::Summary;

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forge"))
        .args(args)
        .env_remove("FORGE_CHAR")
        .output()
        .expect("forge runs")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "forge failed: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gorenstein_in_p3(dir: &Path) -> PathBuf {
    let ig = dir.join("ig.id");
    let o = forge(&[
        "br", "--t", "1", "--r", "3", "--entry-deg", "2", "--sec-deg", "2", "--n", "3", "--seed", "7", "--out",
        path_str(&ig),
    ]);
    stdout(&o);
    ig
}

#[test]
fn help_and_usage_errors() {
    assert_eq!(forge(&["--help"]).status.code(), Some(0));
    let o = forge(&["br", "--t", "1", "--r", "5", "--entry-deg", "1", "--sec-deg", "2", "--n", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--seed"));
    let o = forge(&["hilb", "--ideal", "/nonexistent/file.id"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn zero_section_exits_with_two() {
    let o = forge(&["section", "--matrix", &fixture("plane_sextic_phi.mat"), "--deg", "-5", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn br_then_hilb_gives_degree_21() {
    let dir = tempfile::tempdir().unwrap();
    let ix = dir.path().join("ix.id");
    let o = forge(&[
        "br", "--t", "1", "--r", "5", "--entry-deg", "1", "--sec-deg", "2", "--n", "6", "--seed", "1", "--out",
        path_str(&ix),
    ]);
    stdout(&o);
    let text = std::fs::read_to_string(&ix).unwrap();
    assert!(text.starts_with("# forge br seed 1\nring 32003 6\n"));
    let h = stdout(&forge(&["hilb", "--ideal", path_str(&ix)]));
    assert!(h.contains("// degree      = 21"));
    assert!(h.contains("// codimension = 5"));
    assert!(h.contains("//        21 t^4"));
    let second: Vec<&str> = h.split("\n\n").nth(1).unwrap().lines().collect();
    assert_eq!(second, ["//         1 t^0", "//         5 t^1", "//         9 t^2", "//         5 t^3", "//         1 t^4"]);
}

#[test]
fn br_is_deterministic_per_seed() {
    let args = ["br", "--t", "2", "--r", "3", "--entry-deg", "1", "--sec-deg", "1", "--n", "4", "--seed", "11", "--json", "-"];
    let a = forge(&args);
    let b = forge(&args);
    assert_eq!(stdout(&a), stdout(&b));
    let mut other = args;
    other[12] = "12";
    assert_ne!(stdout(&a), stdout(&forge(&other)));
}

#[test]
fn verified_br_summary_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("s.json");
    let o = forge(&[
        "br", "--t", "2", "--r", "3", "--entry-deg", "1", "--sec-deg", "1", "--n", "4", "--seed", "3", "--verify",
        "--json", path_str(&json),
    ]);
    stdout(&o);
    let text = std::fs::read_to_string(&json).unwrap();
    let s: Summary = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&s).unwrap() + "\n", text);
    let Summary::Br { top, verification: Some(v), .. } = s else {
        panic!("expected a verified br summary")
    };
    assert!(v.degree_matches && v.certificate.is_gorenstein);
    assert_eq!(v.expected_degree, top.degree.to_string());
    assert_eq!(top.codimension, 3);
}

#[test]
fn predict_two_to_the_six_three() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("t1r5a2b3n6.cfg");
    std::fs::write(&cfg, "# t = 1, r = 5\na = 2^6\nb = 3\nn = 6\n").unwrap();
    let o = stdout(&forge(&["predict", "--spec", path_str(&cfg), "--json", "-"]));
    assert!(o.starts_with("c1 = 9\nc = 1 9 33 61 57 21 1\ndegree = 21\n"));
    assert!(o.contains("shape: 0 -> R(-9) -> R(-6)+6R(-7) -> 21R(-5)+R(-6) -> R(-3)+21R(-4) -> 6R(-2)+R(-3) -> I -> 0"));
    let json = &o[o.find('{').unwrap()..];
    let Summary::Predict { chern: Some(c), generalized: None } = serde_json::from_str(json).unwrap() else {
        panic!("expected a chern summary")
    };
    assert_eq!((c.c1.as_str(), c.expected_degree.as_str()), ("9", "21"));
}

#[test]
fn predict_reads_json_specs() {
    let dir = tempfile::tempdir().unwrap();
    let kv = dir.path().join("s.cfg");
    let js = dir.path().join("s.json");
    std::fs::write(&kv, "a = 2^4\nb = 3\nn = 3\n").unwrap();
    std::fs::write(&js, r#"{"a": [2, 2, 2, 2], "b": 3, "n": 3}"#).unwrap();
    let o = stdout(&forge(&["predict", "--spec", path_str(&kv)]));
    assert!(o.contains("degree formula = "), "{o}");
    assert_eq!(o, stdout(&forge(&["predict", "--spec", path_str(&js)])));
}

#[test]
fn pfaffians_of_the_skew_fixture() {
    let o = stdout(&forge(&["pfaffians", "--matrix", &fixture("skew5_linear.mat")]));
    assert!(o.starts_with("# degree 5, codimension 3, Gorenstein: true\nring 32003 3\n"));
    assert!(o.contains("z1*z2 + z3^2"));
}

#[test]
fn minors_of_the_rational_normal_quartic() {
    let o = stdout(&forge(&["minors", "--matrix", &fixture("rational_normal_quartic.mat"), "--t", "2"]));
    assert!(o.starts_with("# codimension 3 (expected 3)\n"));
    assert_eq!(o.lines().skip(2).count(), 6);
}

#[test]
fn res_of_the_gorenstein_fixture() {
    let o = stdout(&forge(&["res", "--ideal", &fixture("link_ix.id"), "--minimal", "--json", "-"]));
    assert!(o.starts_with("# 0 -> R(-5) -> 5R(-3) -> 5R(-2) -> I -> 0\n"));
    let json = &o[o.find('{').unwrap()..];
    let Summary::Res { minimal: true, regularity, certificate: Some(c), .. } = serde_json::from_str(json).unwrap()
    else {
        panic!("expected a minimal resolution summary")
    };
    assert!(c.is_gorenstein);
    assert_eq!(regularity, Some(3));
}

#[test]
fn link_writes_its_ideals() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("link");
    let o = forge(&[
        "link", "--phi", &fixture("link_phi.mat"), "--ideal", &fixture("link_residual.id"), "--seed", "3",
        "--out-dir", path_str(&out), "--json", "-",
    ]);
    let text = stdout(&o);
    assert!(text.contains("# X, Gorenstein: true, 0 -> R(-5) -> 5R(-3) -> 5R(-2) -> I -> 0"));
    for f in ["zs.id", "ix.id", "iw.id"] {
        assert!(std::fs::read_to_string(out.join(f)).unwrap().starts_with("ring 32003 5\n"));
    }
    let json = &text[text.find('{').unwrap()..];
    let Summary::Link { ix, iw, .. } = serde_json::from_str(json).unwrap() else {
        panic!("expected a link summary")
    };
    assert_eq!((ix.degree, iw.degree), (5, 4));
}

#[test]
fn genbr_through_a_gorenstein_ideal_in_p3() {
    let dir = tempfile::tempdir().unwrap();
    let ig = gorenstein_in_p3(dir.path());
    let out = dir.path().join("gb");
    let o = forge(&[
        "genbr", "--gorenstein", path_str(&ig), "--ci", "3,3,3", "--d", "6", "--seed", "2", "--out-dir",
        path_str(&out), "--json", "-",
    ]);
    let text = stdout(&o);
    assert!(text.contains("# ghost pairs:"), "{text}");
    assert!(out.join("iv.id").exists() && out.join("zs.id").exists());
    let json = &text[text.find('{').unwrap()..];
    let Summary::Genbr { spec, ghost_pairs, .. } = serde_json::from_str(json).unwrap() else {
        panic!("expected a genbr summary")
    };
    assert!(spec.verified_range);
    assert!(ghost_pairs.is_some());
    let o = forge(&["genbr", "--gorenstein", path_str(&ig), "--ci", "3,3", "--d", "6", "--seed", "2"]);
    assert_eq!(o.status.code(), Some(1));
}
