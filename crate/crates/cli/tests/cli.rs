use std::process::{Command, Output};

fn coxeter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxeter")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_row_for_affine_g2() {
    let o = coxeter(&["table", "--preset", "affine-G2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "12 12 49 26 41 21");
}

#[test]
fn canonical_join_in_a2() {
    let o = coxeter(&["canonical-join", "sts", "--preset", "I2:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"s","t"}"#);
    let o = coxeter(&["--format", "json", "canonical-join", "sts", "--preset", "I2:3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!(["s", "t"]));
}

#[test]
fn cone_types_in_infinite_dihedral() {
    let o = coxeter(&["conetype-equal", "s", "sts", "--preset", "I2:inf"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");
    let o = coxeter(&["conetype-equal", "e", "s", "--preset", "I2:inf"]);
    assert_eq!(stdout(&o).trim(), "false");
}

#[test]
fn witnesses_and_root_indices() {
    let o = coxeter(&["witness", "st", "1", "--preset", "I2:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("witness ts"));
    let o = coxeter(&["witness", "st", "1", "--preset", "I2:inf"]);
    assert!(stdout(&o).contains("witness none"));
    let o = coxeter(&["witness", "st", "2", "--preset", "I2:3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("root index 2 out of range"));
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [
        &["table", "--preset", "affine-E9"][..],
        &["table"][..],
        &["ultralow", "sq", "--preset", "I2:3"][..],
        &["table", "--matrix", "/nonexistent/group.json"][..],
        &["no-such-command"][..],
    ] {
        let o = coxeter(args);
        assert_eq!(o.status.code(), Some(2), "{:?}", args);
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn matrix_files() {
    let dir = std::env::temp_dir().join(format!("coxeter-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g2.json");
    std::fs::write(&path, r#"{"generators": ["a", "b", "c"], "matrix": [[1,3,2],[3,1,6],[2,6,1]]}"#).unwrap();
    let o = coxeter(&["table", "--matrix", path.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "12 12 49 26 41 21");
    let dot = dir.join("a.dot");
    let json = dir.join("a.json");
    let o = coxeter(&[
        "automaton", "--raw", "--preset", "I2:inf", "--dot", dot.to_str().unwrap(), "--json", json.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(dot).unwrap();
    assert!(dot.contains("0 -> 1 [label=\"s\"]") && dot.contains("0 -> 2 [label=\"t\"]"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(v["states"].as_array().unwrap().len(), 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["--format", "json", "gates", "--preset", "affine-B2"][..],
        &["automaton", "--preset", "affine-A2"][..],
        &["--format", "json", "super-elementary", "--preset", "rank3:II:5:5"][..],
        &["elementary", "--preset", "cycle:3,3,4,3"][..],
    ] {
        let a = coxeter(args);
        let b = coxeter(args);
        assert_eq!(a.status.code(), Some(0), "{:?}", args);
        assert_eq!(a.stdout, b.stdout, "{:?}", args);
    }
}

#[test]
fn info_and_sets() {
    let o = coxeter(&["info", "--preset", "I2:5"]);
    let out = stdout(&o);
    assert!(out.contains("rank 2") && out.contains("degree 2"));
    let o = coxeter(&["--format", "json", "low", "--preset", "affine-A2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["elements"].as_array().map(|a| a.len()), Some(16));
    let o = coxeter(&["ultralow", "sts", "--preset", "I2:3"]);
    assert_eq!(stdout(&o).trim(), "true");
}

#[test]
fn verify_published_suite() {
    let o = Command::new(env!("CARGO_BIN_EXE_coxeter"))
        .args(["verify", "--suite", "paper"])
        .env("COXETER_THREADS", "4")
        .output()
        .unwrap();
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{}", out);
    assert!(out.trim_end().ends_with("checks passed"));
    assert!(!out.contains("FAIL"));
}
