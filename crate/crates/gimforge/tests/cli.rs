use std::path::{Path, PathBuf};

use gimforge::cli::run;

fn file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gimforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("gimforge").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_reports_and_exit_codes() {
    let slodowy = file("slodowy.txt", "4\n2 -1 0 0\n-1 2 -1 0\n0 -1 2 -2\n0 0 -1 2\n");
    let (code, out, _) = call(&["validate", path(&slodowy)]);
    assert_eq!(code, 0);
    assert!(out.contains("valid GIM of size 4"));
    let semidef = file("semidef.txt", "3\n2 -1 2\n-1 2 -1\n2 -1 2\n");
    let (code, out, _) = call(&["validate", path(&semidef), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["corank"].as_u64(), v["definiteness"].as_str()), (Some(1), Some("positive semidefinite")));
    let bad = file("bad.txt", "2\n2 -1\n");
    assert_eq!(call(&["validate", path(&bad)]).0, 3);
    let invalid = file("invalid.txt", "2\n2 -1\n1 2\n");
    assert_eq!(call(&["validate", path(&invalid)]).0, 2);
    assert_eq!(call(&["validate", "/nonexistent/matrix.txt"]).0, 3);
}

#[test]
fn classify_outputs() {
    let mixed = file("mixed.txt", "3\n2 -1 1\n-1 2 -1\n1 -1 2\n");
    let (code, out, _) = call(&["classify", path(&mixed)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("type: A_3(1)\n"));
    let semidef = file("semidef.json", "{\"matrix\": [[2,-1,2],[-1,2,-1],[2,-1,2]]}");
    let (_, out, _) = call(&["classify", path(&semidef), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reduced_gim"], serde_json::json!([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]));
    let (_, dot, _) = call(&["classify", path(&semidef), "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    let b3 = file("b3.txt", "4\n2 2 -1 0\n2 2 -1 0\n-1 -1 2 -1\n0 0 -2 2\n");
    assert!(call(&["classify", path(&b3)]).1.starts_with("type: B_3(2,1)"));
    let ind = file("ind.txt", "2\n2 -3\n-3 2\n");
    assert_eq!(call(&["classify", path(&ind)]).0, 4);
    let dec = file("dec.txt", "3\n2 0 0\n0 2 -1\n0 -1 2\n");
    let (code, _, err) = call(&["classify", path(&dec)]);
    assert_eq!(code, 5);
    assert!(err.contains("[[1], [2, 3]]"), "{err}");
}

#[test]
fn dims_tables() {
    let a2 = file("a2.txt", "2\n2 -1\n-1 2\n");
    let (code, out, _) = call(&["dims", path(&a2), "--degree", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("heights: 2 1 0"), "{out}");
    let (_, out, _) = call(&["dims", path(&a2), "--degree", "3", "--relations", "pra", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["heights"], serde_json::json!([2, 1, 0]));
    assert_eq!(v["complete"], serde_json::json!(true));
    let ex3 = file("ex3.txt", "4\n2 2 2 2\n2 2 2 2\n2 2 2 2\n2 2 2 2\n");
    let key = "1,1,1,-1";
    let get = |rel: &str| {
        let (_, out, _) = call(&["dims", path(&ex3), "--relations", rel, "--part", "all", "--degree", "4", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        v["dims"][key].as_u64().unwrap_or(0)
    };
    assert_eq!(get("im"), 0);
    assert!(get("gim") > 0);
    let pres = file(
        "pres.json",
        r#"{"generators":[{"name":"x","degree":[1,0]},{"name":"y","degree":[0,1]}],"relations":[],"degree":2}"#,
    );
    assert!(call(&["dims", path(&pres)]).1.contains("heights: 2 1"));
}

#[test]
fn config_file_and_flags() {
    let a2 = file("a2b.txt", "2\n2 -1\n-1 2\n");
    let cfg = file("run.cfg", "# run settings\ndegree = 2\nformat = json\n");
    let (_, out, _) = call(&["dims", path(&a2), "--config", path(&cfg)]);
    assert!(out.contains("\"heights\":[2,1]"), "{out}");
    let (_, out, _) = call(&["dims", path(&a2), "--config", path(&cfg), "--degree", "3", "--format", "text"]);
    assert!(out.contains("heights: 2 1 0"));
    let broken = file("broken.cfg", "colour = blue\n");
    assert_eq!(call(&["dims", path(&a2), "--config", path(&broken)]).0, 3);
    assert_eq!(call(&["dims", path(&a2), "--relations", "xyz"]).0, 1);
    assert_eq!(call(&["dims", path(&a2), "--degree", "0"]).0, 1);
}

#[test]
fn verify_examples_is_deterministic() {
    let a = call(&["verify-examples", "--seed", "3"]);
    let b = call(&["verify-examples", "--seed", "3"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
    assert!(a.1.ends_with("0 failed\n"));
}
