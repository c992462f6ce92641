use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_strongprops"));
    c.env_remove("STRONGPROPS_CORPUS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON report")
}

#[test]
fn star_has_ssp() {
    let o = run(&["verify", "--property", "ssp", "--cert", "corpus:exstar"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("SSP holds"));
}

#[test]
fn cube_matrix_fails_smp_with_witness() {
    let o = run(&["verify", "--property", "smp", "--cert", "corpus:SMPnotSAP", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["outcome"], "refuted");
    assert_eq!(v["body"]["report"]["verdict"], false);
    assert_eq!(v["body"]["report"]["witness"]["mode"], "exact");
}

#[test]
fn path_classification() {
    let dir = TempDir::new().unwrap();
    let p5 = write(&dir, "P5.el", "n 5\n1 2\n2 3\n3 4\n4 5\n");
    let o = run(&["classify", "--graph", s(&p5)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "q = |G| (path)");
}

#[test]
fn graph6_input() {
    let dir = TempDir::new().unwrap();
    // C5 in graph6
    let g = write(&dir, "c5.g6", "Dhc\n");
    let o = run(&["classify", "--graph", s(&g)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("q <= |G| - 2"), "{}", stdout(&o));
}

#[test]
fn verify_reports_recheck() {
    let dir = TempDir::new().unwrap();
    for (prop, cert, want) in [("ssp", "corpus:exstar", 0), ("smp", "corpus:SMPnotSAP", 1), ("ssp", "corpus:exdistinctnoSSP", 1)] {
        let out = dir.path().join(format!("{prop}-{}.json", cert.replace(':', "-")));
        let o = run(&["verify", "--property", prop, "--cert", cert, "--format", "json", "--out", s(&out)]);
        assert_eq!(code(&o), want);
        let r = run(&["verify", "--recheck", s(&out)]);
        assert_eq!(code(&r), 0, "{}", stdout(&r));
        assert!(stdout(&r).contains("reproduced"));
    }
}

#[test]
fn tampered_report_does_not_reproduce() {
    let dir = TempDir::new().unwrap();
    let o = run(&["verify", "--property", "ssp", "--cert", "corpus:exstar", "--format", "json"]);
    let mut v = json(&o);
    v["body"]["report"]["verdict"] = Value::Bool(false);
    let p = write(&dir, "bad.json", &v.to_string());
    let r = run(&["verify", "--recheck", s(&p)]);
    assert_eq!(code(&r), 1);
}

#[test]
fn bounds_classify_and_gersh_recheck() {
    let dir = TempDir::new().unwrap();
    let c6 = write(&dir, "c6.el", "1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["bounds", "--graph", s(&c6), "--max-nullity", "2"], 0),
        (vec!["classify", "--graph", s(&c6)], 0),
        (vec!["gersh", "--cert", "corpus:bowtie"], 2),
        (vec!["gersh", "--cert", "corpus:J3"], 0),
    ];
    for (k, (args, want)) in cases.into_iter().enumerate() {
        let out = dir.path().join(format!("r{k}.json"));
        let mut full = args.clone();
        full.extend(["--format", "json", "--out", s(&out)]);
        assert_eq!(code(&run(&full)), want, "{args:?}");
        let r = run(&["verify", "--recheck", s(&out)]);
        assert_eq!(code(&r), want, "{args:?}: {}", stdout(&r));
    }
}

#[test]
fn bounds_report_for_cycle() {
    let dir = TempDir::new().unwrap();
    let c6 = write(&dir, "c6.el", "1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
    let o = run(&["bounds", "--graph", s(&c6), "--max-nullity", "2", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["body"]["report"]["lower"]["value"], 3);
    assert_eq!(v["body"]["report"]["upper"]["value"], 3);
}

#[test]
fn lift_star_to_paw() {
    let dir = TempDir::new().unwrap();
    let paw = write(&dir, "paw.el", "1 2\n1 3\n1 4\n2 3\n");
    let out = dir.path().join("B.json");
    let o = run(&[
        "lift", "--seed", "corpus:exstar", "--supergraph", s(&paw), "--mode", "spectrum", "--t-target", "0.1", "--format",
        "json", "--out", s(&out),
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(v["body"]["result"]["path_log"].as_array().is_some_and(|a| !a.is_empty()));
    assert!(v["body"]["result"]["spectrum_error"].as_f64().unwrap() < 1e-8);
    let r = run(&["verify", "--recheck", s(&out)]);
    assert_eq!(code(&r), 0, "{}", stdout(&r));
}

#[test]
fn augmented_lift() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.el", "1 2\n1 3\n2 3\n3 4\n4 5\n");
    let o = run(&["lift", "--seed", "corpus:J3", "--supergraph", s(&g), "--extra", "5,7"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = run(&["lift", "--seed", "corpus:J3", "--supergraph", s(&g), "--extra", "5"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn lift_without_strong_property_is_inconclusive() {
    let dir = TempDir::new().unwrap();
    let g = write(
        &dir,
        "q3plus.el",
        "1 2\n1 3\n1 5\n2 4\n2 6\n3 4\n3 7\n4 8\n5 6\n5 7\n6 8\n7 8\n1 4\n",
    );
    let o = run(&["lift", "--seed", "corpus:SMPnotSAP", "--supergraph", s(&g), "--mode", "spectrum"]);
    assert_eq!(code(&o), 2, "{}", stdout(&o));
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["verify", "--property", "smp", "--cert", "corpus:exdistinctnoSSP", "--mode", "float", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["schema_version"], 1);
    assert_eq!(json(&a)["body"]["certainty"], "numerical");
}

#[test]
fn exact_mode_rejects_float_matrices() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.json", r#"{"mode": "float", "n": 2, "entries": [0.0, 1.0, 1.0, 0.0]}"#);
    let o = run(&["verify", "--property", "ssp", "--matrix", s(&m), "--mode", "exact"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("exact mode"));
    let o = run(&["verify", "--property", "ssp", "--matrix", s(&m)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn usage_and_io_errors_exit_3() {
    assert_eq!(code(&run(&["verify", "--property", "ssp", "--cert", "/no/such/file.json"])), 3);
    assert_eq!(code(&run(&["verify", "--property", "xyz", "--cert", "corpus:exstar"])), 3);
    assert_eq!(code(&run(&["verify", "--property", "ssp", "--cert", "corpus:missing"])), 3);
    assert_eq!(code(&run(&["frobnicate"])), 3);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn corpus_override_and_check() {
    let dir = TempDir::new().unwrap();
    let export = run(&["corpus", "export"]);
    assert_eq!(code(&export), 0);
    let text = stdout(&export);
    let good = write(&dir, "good.json", &text);
    assert_eq!(code(&run(&["corpus", "check", s(&good)])), 0);

    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["certificates"] = Value::Array(vec![v["certificates"][0].clone()]);
    let small = write(&dir, "small.json", &v.to_string());
    let o = bin().args(["corpus", "list"]).env("STRONGPROPS_CORPUS", &small).output().unwrap();
    assert_eq!(stdout(&o).lines().count(), 1);
    let o = bin()
        .args(["verify", "--property", "ssp", "--cert", "corpus:bowtie"])
        .env("STRONGPROPS_CORPUS", &small)
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);

    let claims = v["certificates"][0]["claims"].as_array_mut().unwrap();
    for c in claims.iter_mut() {
        if c["kind"] == "q" {
            c["value"] = Value::from(2);
        }
    }
    let bad = write(&dir, "bad.json", &v.to_string());
    let o = run(&["corpus", "check", s(&bad)]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
}
