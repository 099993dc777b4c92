use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn ctalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctalg"))
        .args(args)
        .env_remove("CTALG_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ctalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn present_text() {
    let o = ctalg(&["present", "ex1_c", "radI:2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("0 → M⊗B → I_B(2) → I_B(1) ⊕ I_B(5)"), "{s}");
    assert!(s.contains("oracle: accept"));
}

#[test]
fn present_json_agrees_with_text() {
    let o = ctalg(&["--json", "present", "ex1_c", "radI:2"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["module"], "3/2");
    assert_eq!(v["pd"], 2);
    assert_eq!(v["id"], 1);
    assert_eq!(v["terms"]["left"], serde_json::json!([["2", 1]]));
    assert_eq!(v["terms"]["right"], serde_json::json!([["1", 1], ["5", 1]]));
    assert_eq!(v["oracle"]["accepted"], true);
    assert_eq!(v["certificate"]["found"], true);
    let text = stdout(&ctalg(&["present", "ex1_c", "radI:2"]));
    assert!(text.contains("pd 2, id 1"), "{text}");
}

#[test]
fn relext_table_round_trips() {
    let o = ctalg(&["--json", "relext", "ex2_c"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let table: ctalg::io::AlgebraTable = serde_json::from_value(v["algebra"].clone()).unwrap();
    let b = table.to_algebra().unwrap();
    assert_eq!(b.dim(), 21);
}

#[test]
fn functor_tau_of_simple() {
    let o = ctalg(&["functor", "tau", "ex1_c", "S:5"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!stdout(&o).is_empty());
}

#[test]
fn resolve_example_three() {
    let o = ctalg(&["resolve", "ex3_b", "S:1", "ex3_cuts"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("periodic, period 6"));
}

#[test]
fn malformed_input_exits_two() {
    let p = scratch(
        "broken.json",
        "{\"vertices\": [\"1\"], \"arrows\": [{\"name\": \"a\", \"from\": \"1\", \"to\": \"9\"}]}",
    );
    let o = ctalg(&["relext", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = ctalg(&["present", "ex1_c", "X:1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn global_dimension_three_exits_three() {
    let p = scratch(
        "a4.json",
        r#"{"vertices": ["1", "2", "3", "4"],
            "arrows": [{"name": "a", "from": "1", "to": "2"}, {"name": "b", "from": "2", "to": "3"}, {"name": "c", "from": "3", "to": "4"}],
            "relations": [[{"coeff": "1", "path": ["a", "b"]}], [{"coeff": "1", "path": ["b", "c"]}]]}"#,
    );
    let o = ctalg(&["relext", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn gorenstein_json() {
    let o = ctalg(&["--json", "gorenstein", "ex2_c"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.to_string().contains("id_projective"));
}
