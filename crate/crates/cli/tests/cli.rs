use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

const TWO_ONE: &str = r#"{"ell":1,"components":[{"beta":0,"offset":"0","cells":[[1,0],[1,1],[2,-1]]}]}"#;

fn hecke(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().expect("exit code"), json, stdout)
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("hecke-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn arg(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_row_reading_of_two_one() {
    let w = temp_file("w021.json", r#"{"a":["0","1","-1"],"b":[0,0,0]}"#);
    let (code, v, _) = hecke(&["classify", "--weight", arg(&w), "--ell", "1"]);
    assert_eq!(code, 0);
    let cells = &v["shape"]["components"][0]["cells"];
    assert_eq!(cells, &serde_json::json!([[1, 0], [1, 1], [2, -1]]));
    let labels: Vec<i64> = v["tableau"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e[3].as_i64().unwrap())
        .collect();
    assert_eq!(labels, vec![1, 2, 3]);
}

#[test]
fn classify_rejects_adjacent_equal() {
    let w = temp_file("w00.json", r#"{"ell":1,"a":["0","0"],"b":[0,0]}"#);
    let (code, v, _) = hecke(&["classify", "--weight", arg(&w)]);
    assert_eq!(code, 2);
    assert_eq!(v["violation"]["kind"], "AdjacentEqual");
    assert_eq!(v["violation"]["i"], 1);
    assert_eq!(v["violation"]["j"], 2);
}

#[test]
fn malformed_inputs_exit_one() {
    let w = temp_file("wbad.json", r#"{"a":["0"],"b":[0]}"#);
    assert_eq!(hecke(&["classify", "--weight", arg(&w)]).0, 1, "missing ell");
    let w = temp_file("wmismatch.json", r#"{"ell":2,"a":["0"],"b":[0]}"#);
    assert_eq!(hecke(&["classify", "--weight", arg(&w), "--ell", "3"]).0, 1, "ell mismatch");
    let s = temp_file("garbage.json", "{not json");
    assert_eq!(hecke(&["build", "--shape", arg(&s)]).0, 1);
    assert_eq!(hecke(&["build", "--shape", "/nonexistent/shape.json"]).0, 1);
    assert_eq!(hecke(&["twist", "--shape", arg(&s)]).0, 1, "needs --t or --rho");
}

#[test]
fn disconnected_component_is_rejected() {
    let s = temp_file(
        "split.json",
        r#"{"ell":1,"components":[{"beta":0,"offset":"0","cells":[[1,0],[1,2]]}]}"#,
    );
    assert_eq!(hecke(&["verify", "--shape", arg(&s)]).0, 2);
}

#[test]
fn shapes_counts() {
    let (code, v, _) = hecke(&["shapes", "--ell", "1", "--n", "1", "--window", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 1);
    let (_, v, _) = hecke(&["shapes", "--ell", "2", "--n", "1", "--window", "1"]);
    assert_eq!(v["count"], 2);
    let (_, v, _) = hecke(&["shapes", "--ell", "1", "--n", "1", "--window", "0"]);
    assert_eq!(v["count"], 1);
}

#[test]
fn shapes_output_roundtrips() {
    let (_, v, _) = hecke(&["shapes", "--ell", "2", "--n", "3"]);
    for (k, shape) in v["shapes"].as_array().unwrap().iter().enumerate().take(10) {
        let text = serde_json::to_string(shape).unwrap();
        let f = temp_file(&format!("rt{k}.json"), &text);
        let (code, back, _) = hecke(&["build", "--shape", arg(&f), "--dump-matrices"]);
        assert_eq!(code, 0);
        assert_eq!(&back["module"]["shape"], shape);
    }
}

#[test]
fn syt_with_hook_dimension() {
    let s = temp_file("syt21.json", TWO_ONE);
    let (code, v, _) = hecke(&["syt", "--shape", arg(&s)]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 2);
    assert_eq!(v["hook_dimension"], "2");
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 2);
}

#[test]
fn build_reports_weights() {
    let s = temp_file("build21.json", TWO_ONE);
    let (code, v, _) = hecke(&["build", "--shape", arg(&s), "--dump-matrices", "--dense"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["weights"][0]["a"], serde_json::json!(["0", "1", "-1"]));
    assert_eq!(v["module"]["s"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_all_checks_pass() {
    let s = temp_file("verify21.json", TWO_ONE);
    let (code, v, _) = hecke(&["verify", "--shape", arg(&s), "--intertwiners", "--jm", "--commutant"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert!(v["report"]["checks"].as_array().unwrap().len() > 10);
}

#[test]
fn twists_classify_as_predicted() {
    let s = temp_file("twist21.json", TWO_ONE);
    let (code, v, _) = hecke(&["twist", "--shape", arg(&s), "--rho"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert_eq!(v["shape"], v["expected"]);
    assert_eq!(v["shape"]["components"][0]["cells"].as_array().unwrap().len(), 3);
    let (code, v, _) = hecke(&["twist", "--shape", arg(&s), "--t", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(v["shape"]["components"][0]["offset"], "1/2");
    let (code, _, _) = hecke(&["twist", "--shape", arg(&s), "--t", "-3"]);
    assert_eq!(code, 0);
}

#[test]
fn jm_check_passes() {
    let (code, v, _) = hecke(&["jm-check", "--ell", "2", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
}

#[test]
fn suite_table_all_pass() {
    let (code, _, text) = hecke(&["suite", "--ell", "2", "--max-n", "4"]);
    assert_eq!(code, 0, "{text}");
    assert_eq!(text.matches("[PASS]").count(), 10, "{text}");
    assert!(!text.contains("[FAIL]"));
}
