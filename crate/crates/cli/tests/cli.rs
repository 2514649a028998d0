use std::path::Path;
use std::process::{Command, Output};

fn colorlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorlie")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn catalog_spec(dir: &Path, args: &[&str], file: &str) -> String {
    let path = dir.join(file);
    let mut full = vec!["catalog"];
    full.extend_from_slice(args);
    full.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(colorlie(&full).status.code(), Some(0));
    path.to_str().unwrap().to_string()
}

#[test]
fn emitted_spec_validates() {
    let dir = tempfile::tempdir().unwrap();
    let spec = catalog_spec(dir.path(), &["qn", "--n", "2"], "q2.json");
    let o = colorlie(&["validate", &spec]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("result: PASS\n"));
}

#[test]
fn bad_factor_is_a_mathematical_failure() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "z3.json",
        r#"{
  "name": "bad",
  "grading": { "orders": [3], "omega": { "root_order": 3, "matrix": [[1]] } },
  "space": [ { "degree": "0", "dim": 1 } ],
  "generators": [ { "name": "h", "degree": "0", "matrix": [["1"]] } ]
}"#,
    );
    let o = colorlie(&["validate", &spec]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(1), "{text}");
    assert!(text.contains("FAIL  omega(a,b)*omega(b,a) = 1 (9 instances) witness: a=1 b=1"), "{text}");
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let spec = catalog_spec(dir.path(), &["qn", "--n", "1"], "q1.json");
    let text = std::fs::read_to_string(&spec).unwrap();
    let cut = write(dir.path(), "cut.json", &text[..text.len() / 3]);
    assert_eq!(colorlie(&["validate", &cut]).status.code(), Some(2));
    assert_eq!(colorlie(&["validate", "/nonexistent/spec.json"]).status.code(), Some(2));
    assert_eq!(colorlie(&["commutant", "catalog:qn", "--n", "1", "--degree", "12"]).status.code(), Some(2));
    assert_eq!(colorlie(&["report", "catalog:nope"]).status.code(), Some(2));
    assert_eq!(colorlie(&["loop-check", "catalog:qn", "--n", "1", "--modes", "2..1"]).status.code(), Some(2));
    assert_eq!(colorlie(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn commutants() {
    let o = colorlie(&["commutant", "catalog:qn", "--n", "1", "--all"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    for g in ["00", "11", "01", "10"] {
        assert!(text.contains(&format!("degree {g}: dim 1")), "{text}");
    }
    let o = colorlie(&["commutant", "catalog:z32-sl2", "--degree", "10"]);
    assert!(stdout(&o).contains("degree 10: dim 0"), "{}", stdout(&o));
    let o = colorlie(&["commutant", "catalog:osp", "--m", "1", "--n", "1", "--degree", "11"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass  commutant 11 matches published"), "{}", stdout(&o));
}

#[test]
fn casimirs() {
    let o = colorlie(&["casimir", "catalog:qn", "--n", "2", "--degree", "00"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("degenerate: no Casimir at degree 00"), "{}", stdout(&o));
    for args in [["catalog:qn", "--n", "2", "--degree", "11"], ["catalog:z32-sl2", "--degree", "22", "", ""]] {
        let args: Vec<&str> = args.into_iter().filter(|a| !a.is_empty()).collect();
        let mut full = vec!["casimir"];
        full.extend(args);
        let o = colorlie(&full);
        let text = stdout(&o);
        assert_eq!(o.status.code(), Some(0), "{text}");
        assert!(text.contains("pass  [X_a, C] = 0 in U(g)") && text.contains("pass  [rho(X_a), rho(C)] = 0") && text.ends_with("result: PASS\n"), "{text}");
    }
    let o = colorlie(&["casimir", "catalog:z32-sl2", "--degree", "01"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no Casimir at degree 01"));
}

#[test]
fn loop_check_small_window() {
    let o = colorlie(&["loop-check", "catalog:z32-sl2", "--modes", "0..0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("result: PASS\n"));
}

#[test]
fn spec_round_trip_reproduces_report() {
    let dir = tempfile::tempdir().unwrap();
    for (args, file) in [(&["qn", "--n", "1"][..], "q1.json"), (&["osp", "--m", "1", "--n", "1"][..], "osp.json")] {
        let spec = catalog_spec(dir.path(), args, file);
        let mut direct = vec!["report".to_string(), format!("catalog:{}", args[0])];
        direct.extend(args[1..].iter().map(|s| s.to_string()));
        let direct: Vec<&str> = direct.iter().map(String::as_str).collect();
        let a = colorlie(&direct);
        let b = colorlie(&["report", &spec]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(stdout(&a), stdout(&b), "{file}");
    }
}

#[test]
fn report_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.txt");
    let o = colorlie(&["report", "catalog:qn", "--n", "1", "--modes", "0..1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.starts_with("# colorlie report: q(1)\n"), "{text}");
}

#[test]
fn documented_specs_match_catalog() {
    let docs = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/specs");
    for (file, args) in [
        ("q1.json", &["qn", "--n", "1"][..]),
        ("z32-sl2.json", &["z32-sl2"][..]),
        ("osp-1-1.json", &["osp", "--m", "1", "--n", "1"][..]),
    ] {
        let mut full = vec!["catalog"];
        full.extend_from_slice(args);
        let want = stdout(&colorlie(&full));
        let path = docs.join(file);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), want, "{file}");
        let o = colorlie(&["validate", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{file}");
    }
}
