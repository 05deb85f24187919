use std::process::{Command, Output};

use qimm::combinatorics::{character_on_class, Partition};
use qimm::immanant::{det_q, per_q};
use qimm::qmatrix::QMatElement;
use qimm::scalar::{Rational, ScalarQ};
use qimm::verify::SuiteReport;
use serde_json::Value;

fn qimm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qimm")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn imm_json_round_trips() {
    let out = qimm(&["imm", "--n", "3", "--shape", "3", "--rows", "1,2,3", "--cols", "1,2,3", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "imm");
    let x: QMatElement = serde_json::from_value(v["result"]["value"].clone()).unwrap();
    assert_eq!(x, per_q(3, &[1, 2, 3], &[1, 2, 3]).unwrap());
    assert_eq!(serde_json::to_value(&x).unwrap(), v["result"]["value"]);
}

#[test]
fn text_output() {
    let out = qimm(&["imm", "--n", "2", "--shape", "1,1", "--rows", "1,2", "--cols", "1,2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim(), det_q(2, &[1, 2], &[1, 2]).unwrap().to_string());
    let out = qimm(&["partitions", "--m", "3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "(3) 1\n(2,1) 2\n(1,1,1) 1\n");
}

#[test]
fn exit_codes() {
    assert_eq!(qimm(&["verify", "nosuchsuite"]).status.code(), Some(2));
    assert_eq!(qimm(&["imm", "--n", "2", "--shape", "2,1", "--rows", "1,2"]).status.code(), Some(2));
    assert_eq!(qimm(&["idempotent", "--tableau", "2,1"]).status.code(), Some(2));
    assert_eq!(qimm(&["char-table", "--m", "7"]).status.code(), Some(2));
    assert_eq!(qimm(&["bogus"]).status.code(), Some(2));
    let out = qimm(&["verify", "macmahon", "--n", "2", "--degree", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: SuiteReport = serde_json::from_value(json(&out)["result"].clone()).unwrap();
    assert!(report.passed());
    assert_eq!(report.cases, 3);
}

#[test]
fn jobs_do_not_change_output() {
    let args = ["verify", "coherence", "--m", "3", "--n", "2", "--format", "json"];
    let one = qimm(&[&args[..], &["--jobs", "1"]].concat());
    let two = qimm(&[&args[..], &["--jobs", "2"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn char_table_degenerates() {
    let v = json(&qimm(&["char-table", "--m", "4", "--format", "json"]));
    let classes = v["result"]["classes"].as_array().unwrap().len();
    assert_eq!(classes, 5);
    let classes: Vec<Partition> = serde_json::from_value(v["result"]["classes"].clone()).unwrap();
    for row in v["result"]["rows"].as_array().unwrap() {
        let lambda: Partition = serde_json::from_value(row["shape"].clone()).unwrap();
        let values: Vec<ScalarQ> = serde_json::from_value(row["values"].clone()).unwrap();
        for (rho, value) in classes.iter().zip(&values) {
            let at_one = value.evaluate_at_q(&Rational::ONE).unwrap();
            assert_eq!(at_one, Rational::from_int(character_on_class(&lambda, rho)), "{lambda} {rho}");
        }
    }
}
