use std::io::Write;
use std::process::{Command, Output, Stdio};

use ssym_harmonic::golden::all_rows;

fn ssym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ssym")).args(args).output().expect("run ssym")
}

fn ssym_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ssym"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn ssym");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn basis_text() {
    let o = ssym(&["basis", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(4): 27/4*Q2^2 + 27/2*Q4\n");
    let o = ssym(&["basis", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "");
}

#[test]
fn basis_json() {
    let v = json(&ssym(&["basis", "9", "--format", "json"]));
    let lambdas: Vec<_> = v.as_array().unwrap().iter().map(|r| r["lambda"].clone()).collect();
    assert_eq!(lambdas, serde_json::json!([[9], [6, 3], [5, 4], [3, 3, 3]]).as_array().unwrap().clone());
    let v = json(&ssym(&["basis", "4", "--format", "json"]));
    assert_eq!(
        v,
        serde_json::json!([{
            "lambda": [4],
            "h": [
                {"coeff": "27/4", "monomial": {"2": 2}},
                {"coeff": "27/2", "monomial": {"4": 1}}
            ],
            "q_bracket": [{"coeff": "9/320", "P": 0, "Q": 1, "R": 0}]
        }])
    );
    // keys appear in schema order
    let text = stdout(&ssym(&["basis", "4", "--format", "json"]));
    let (l, h, q) = (text.find("\"lambda\"").unwrap(), text.find("\"h\"").unwrap(), text.find("\"q_bracket\"").unwrap());
    assert!(l < h && h < q);
}

#[test]
fn basis_min_part() {
    let o = ssym(&["basis", "4", "--min-part", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn qbracket_examples() {
    for (expr, form) in [("27/4*Q2^2 + 27/2*Q4", "9/320*Q"), ("Q2", "-1/24*P"), ("Q3", "0")] {
        let o = ssym(&["qbracket", expr]);
        assert!(o.status.success(), "{expr}: {}", stderr(&o));
        assert!(stdout(&o).lines().any(|l| l == format!("form: {form}")), "{expr}: {}", stdout(&o));
    }
    let o = ssym(&["qbracket", "Q2", "-N", "3"]);
    assert!(stdout(&o).starts_with("series: -1/24 + q + 3*q^2 + 4*q^3 + O(q^4)"));
    let v = json(&ssym(&["qbracket", "Q2", "--format", "json"]));
    assert_eq!(v["q_bracket"], serde_json::json!([{"coeff": "-1/24", "P": 1, "Q": 0, "R": 0}]));
    assert_eq!(v["series"].as_array().unwrap().len(), 31);
    let o = ssym(&["qbracket", "Q2", "--weight", "4"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn recognize_series() {
    let o = ssym(&["recognize", "--weight", "2", "1 - 24*q - 72*q^2 - 96*q^3 - 168*q^4 - 144*q^5 - 288*q^6 - 192*q^7 - 360*q^8 - 312*q^9 - 432*q^10 - 288*q^11 - 672*q^12 + O(q^13)"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("form: P"));
    let o = ssym(&["recognize", "--weight", "4", "1 + q + O(q^2)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("insufficient order"));
}

#[test]
fn decompose_examples() {
    let o = ssym(&["decompose", "Q4"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "h0 = 1/2*Q2^2 + Q4  [harmonic]\nh1 = 0  [harmonic]\nh2 = -1/2  [harmonic]\ndepth 2\n"
    );
    let o = ssym_stdin(&["decompose"], "Q2^2\n");
    assert!(stdout(&o).contains("h2 = 1  [harmonic]"));
    assert!(stdout(&o).ends_with("depth 2\n"));
    let o = ssym(&["decompose", "27/4*Q2^2 + 27/2*Q4"]);
    assert!(stdout(&o).ends_with("depth 0\n"));
    let v = json(&ssym(&["decompose", "Q4", "--format", "json"]));
    assert_eq!(v["depth"], 2);
    assert_eq!(v["components"].as_array().unwrap().len(), 3);
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&ssym(&["eval", "Q2", "(2,1)"])), "71/24\n");
    assert_eq!(stdout(&ssym(&["eval", "Q2^2", "(1)"])), "529/576\n");
    assert_eq!(stdout(&ssym(&["eval", "-Q2", "()"])), "1/24\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["decompose", "Q3^(1/2)"][..],
        &["decompose", "Q1*Q3"],
        &["qbracket", "Q2 +"],
        &["eval", "Q2", "(1,2)"],
        &["basis"],
        &["frobnicate"],
    ] {
        let o = ssym(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_rejects_low_order() {
    let o = ssym(&["verify", "-N", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("insufficient order"));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--max-weight", "6", "--samples", "4"];
    let a = ssym(&args);
    let b = ssym(&args);
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
    let out = stdout(&a);
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() >= 20);
    assert!(!out.contains("FAIL"));
}

#[test]
fn tables_match_goldens() {
    let o = ssym(&["tables", "--format", "latex"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.matches("\\begin{array}").count(), 2);
    for row in all_rows() {
        assert!(out.lines().any(|l| l == row.latex), "missing row {}", row.latex);
    }
    let v = json(&ssym(&["tables", "--format", "json"]));
    assert_eq!(v["even"].as_array().unwrap().len(), 12);
    assert_eq!(v["odd"].as_array().unwrap().len(), 8);
}
