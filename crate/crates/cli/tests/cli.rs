use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monodimer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (v, out.status.code().unwrap_or(-1))
}

fn value(args: &[&str]) -> String {
    let (v, code) = json(args);
    assert_eq!(code, 0, "{v}");
    v["value"].as_str().unwrap().to_string()
}

#[test]
fn count_examples() {
    assert_eq!(value(&["count", "--base", "path:2", "--n", "4"]), "71");
    assert_eq!(value(&["count", "--base", "path:2", "--n", "-6"]), "11");
    assert_eq!(value(&["count", "--base", "path:1", "--n", "0"]), "1");
}

#[test]
fn count_methods_agree() {
    for base in ["path:1", "path:2", "path:3", "cycle:3"] {
        for n in -4..=4 {
            let n = n.to_string();
            let oracle = value(&["count", "--base", base, "--n", &n, "--method", "oracle"]);
            let rec = value(&["count", "--base", base, "--n", &n, "--method", "recurrence"]);
            assert_eq!(oracle, rec, "{base} n={n}");
            if !n.starts_with('-') {
                assert_eq!(oracle, value(&["count", "--base", base, "--n", &n, "--method", "transfer"]));
            }
        }
    }
}

#[test]
fn census_examples() {
    let (v, _) = json(&["census", "--base", "path:2", "--n", "-6"]);
    assert_eq!((v["positive"].as_str(), v["negative"].as_str()), (Some("41"), Some("30")));
    let (v, _) = json(&["census", "--base", "path:2", "--n", "-7"]);
    assert_eq!((v["positive"].as_str(), v["negative"].as_str()), (Some("121"), Some("107")));
    let (v, _) = json(&["census", "--base", "path:2", "--n", "2"]);
    assert_eq!((v["positive"].as_str(), v["negative"].as_str()), (Some("7"), Some("0")));
}

#[test]
fn recurrence_of_two_rows() {
    let (v, code) = json(&["recurrence", "--base", "path:2"]);
    assert_eq!(code, 0);
    assert_eq!(v["coefficients"], serde_json::json!(["3", "1", "-1"]));
}

#[test]
fn extend_reports_first_fraction() {
    let dir = std::env::temp_dir().join(format!("monodimer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let seq = dir.join("pow2.json");
    std::fs::write(&seq, "[2, 4, 8]").unwrap();
    let (v, code) = json(&["extend", "--seq", seq.to_str().unwrap(), "--lo", "-1", "--hi", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["integral"], false);
    assert_eq!(v["non_integral"]["index"], -1);
    assert_eq!(v["non_integral"]["value"], "1/2");
    assert_eq!(v["recurrence"], serde_json::json!(["2"]));
}

#[test]
fn verify_sweeps() {
    let (v, code) = json(&["verify", "reciprocity1", "--base", "path:2", "--n", "0..4"]);
    assert_eq!(code, 0);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 5);
    assert!(verdicts.iter().all(|x| x["pass"] == true));

    for args in [
        &["verify", "adjunction", "--base", "path:1", "--ns", "2,-3,1"][..],
        &["verify", "eq1", "--m", "1..2", "--n", "0..2"],
        &["verify", "reciprocity2", "--base", "path:1"],
        &["verify", "stanley", "--m", "2", "--n", "0..3"],
        &["verify", "stanley", "--m", "6", "--n", "1", "--route", "transfer"],
        &["verify", "mod2", "--m", "1..2", "--nmax", "5"],
        &["verify", "census", "--base", "path:2", "--n", "0..3"],
    ] {
        let (v, code) = json(args);
        assert_eq!((code, &v["pass"]), (0, &Value::Bool(true)), "{args:?}: {v}");
    }
}

#[test]
fn poly_and_genfunc() {
    let (v, _) = json(&["poly", "--m", "1", "--n", "2"]);
    assert_eq!(v["poly"], "z^2 + x");
    let (v, _) = json(&["poly", "--m", "1", "--n", "2", "--formal"]);
    assert!(v["poly"].as_str().unwrap().contains("x_{1,1}"));
    let (v, code) = json(&["genfunc", "--base", "path:1"]);
    assert_eq!(code, 0);
    assert_eq!(v["numerator"], "1");
}

#[test]
fn graph_outputs() {
    let (v, code) = json(&["graph", "--base", "path:2", "--n", "-3"]);
    assert_eq!(code, 0);
    assert_eq!(v["length"], -3);
    let dot = run(&["graph", "--base", "path:2", "--n", "-3", "--dot"]);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("graph signed {"));
    assert!(text.contains("shape=box") && text.contains("shape=point") && text.contains("dashed"));
}

#[test]
fn base_graph_files() {
    let dir = std::env::temp_dir().join(format!("monodimer-cli-file-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("tri.txt");
    std::fs::write(&file, "# triangle\nvertices 3\nedge 0 1\nedge 1 2\nedge 2 0\n").unwrap();
    let spec = format!("file:{}", file.display());
    assert_eq!(value(&["count", "--base", &spec, "--n", "2"]), value(&["count", "--base", "cycle:3", "--n", "2"]));
}

#[test]
fn error_contract() {
    let (v, code) = json(&["count", "--base", "path:5", "--n", "-9", "--method", "oracle"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "size_guard");
    assert_eq!(v["error"]["guard"], "oracle_edges");

    let (v, code) = json(&["count", "--base", "path:2", "--n", "-1", "--method", "transfer"]);
    assert_eq!((code, v["error"]["code"].as_str()), (2, Some("domain")));

    let (v, code) = json(&["count", "--base", "star:3", "--n", "1"]);
    assert_eq!((code, v["error"]["code"].as_str()), (2, Some("usage")));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "eq1", "--m", "2", "--n", "0..2"]).stdout;
    let b = run(&["verify", "eq1", "--m", "2", "--n", "0..2"]).stdout;
    assert_eq!(a, b);
}
