//! Exact identity checks. Each check returns a [`SuiteReport`] listing every
//! identity tried and the two sides of any that failed.

mod checks;
mod suites;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub use checks::{
    check_alpha_commutativity, check_cayley_hamilton, check_goulden_jackson, check_hessenberg,
    check_littlewood_one, check_littlewood_three, check_littlewood_two, check_lmw, check_macmahon, check_newton,
    check_phi_isomorphism, check_q_kostant, immanant_sum, LmwRows,
};
pub use suites::{suite_bethe, suite_coherence, suite_degeneration, suite_foundations, suite_hecke};

use crate::error::Result;
use crate::immanant::AMatrix;
use crate::qmatrix::QMatElement;
use crate::scalar::ScalarQ;

/// How the two sides of a failure should be re-read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueKind {
    Element,
    Matrix,
    Scalar,
    Other,
    Error,
}

/// One identity that did not hold.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub label: String,
    pub inputs: Value,
    pub kind: ValueKind,
    pub lhs: Value,
    pub rhs: Value,
}

impl Failure {
    /// Parse both sides back into their types and confirm they still differ.
    pub fn reverify(&self) -> bool {
        fn differ<T: for<'de> Deserialize<'de> + PartialEq>(a: &Value, b: &Value) -> bool {
            match (serde_json::from_value::<T>(a.clone()), serde_json::from_value::<T>(b.clone())) {
                (Ok(x), Ok(y)) => x != y,
                _ => false,
            }
        }
        match self.kind {
            ValueKind::Element => differ::<QMatElement>(&self.lhs, &self.rhs),
            ValueKind::Matrix => differ::<AMatrix>(&self.lhs, &self.rhs),
            ValueKind::Scalar => differ::<ScalarQ>(&self.lhs, &self.rhs),
            ValueKind::Other => self.lhs != self.rhs,
            ValueKind::Error => true,
        }
    }
}

/// Outcome of a named check over a family of cases.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: Value,
    /// Number of exact identities evaluated.
    pub cases: usize,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Values other suites compare against, keyed by name.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, Value>,
}

impl SuiteReport {
    pub fn new(suite: &str, params: Value) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            params,
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            witnesses: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Fold another report's cases and failures into this one.
    pub fn absorb(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        for mut f in other.failures {
            f.label = format!("{}: {}", other.suite, f.label);
            self.failures.push(f);
        }
        for n in other.notes {
            if !self.notes.contains(&n) {
                self.notes.push(n);
            }
        }
        for (k, v) in other.witnesses {
            self.witnesses.insert(format!("{}.{}", other.suite, k), v);
        }
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{}: {} ({} identities, {} failed)\n",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases,
            self.failures.len()
        );
        s.push_str(&format!("  params: {}\n", self.params));
        for n in &self.notes {
            s.push_str(&format!("  note: {n}\n"));
        }
        for f in &self.failures {
            s.push_str(&format!("  failed {}: inputs {}\n    lhs = {}\n    rhs = {}\n", f.label, f.inputs, f.lhs, f.rhs));
        }
        s
    }
}

/// A single evaluated identity.
pub(crate) struct Check {
    failure: Option<Failure>,
}

pub(crate) fn compare<T: Serialize + PartialEq>(label: &str, inputs: Value, kind: ValueKind, lhs: &T, rhs: &T) -> Check {
    let failure = (lhs != rhs).then(|| Failure {
        label: label.to_string(),
        inputs,
        kind,
        lhs: serde_json::to_value(lhs).expect("serializable"),
        rhs: serde_json::to_value(rhs).expect("serializable"),
    });
    Check { failure }
}

pub(crate) fn holds(label: &str, inputs: Value, ok: bool) -> Check {
    compare(label, inputs, ValueKind::Other, &ok, &true)
}

pub(crate) type CaseFn<'a> = Box<dyn Fn() -> Result<Vec<Check>> + Send + Sync + 'a>;

/// Run cases in parallel and merge their results in case order.
pub(crate) fn run_cases(report: &mut SuiteReport, cases: Vec<CaseFn<'_>>) {
    let results: Vec<Result<Vec<Check>>> = cases.par_iter().map(|c| c()).collect();
    for (idx, r) in results.into_iter().enumerate() {
        match r {
            Ok(checks) => {
                report.cases += checks.len();
                report.failures.extend(checks.into_iter().filter_map(|c| c.failure));
            }
            Err(e) => {
                report.cases += 1;
                report.failures.push(Failure {
                    label: "error".into(),
                    inputs: json!({ "case": idx }),
                    kind: ValueKind::Error,
                    lhs: Value::String(e.to_string()),
                    rhs: Value::Null,
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_reverify() {
        let a = QMatElement::generator(2, 1, 1);
        let b = QMatElement::generator(2, 2, 2);
        let c = compare("x", json!({}), ValueKind::Element, &a, &b);
        let f = c.failure.unwrap();
        assert!(f.reverify());
        let text = serde_json::to_string(&f).unwrap();
        let back: Failure = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        assert!(compare("y", json!({}), ValueKind::Element, &a, &a).failure.is_none());
    }

    #[test]
    fn runner_keeps_order() {
        let mut r = SuiteReport::new("t", json!({}));
        let cases: Vec<CaseFn> = (0..8)
            .map(|k| -> CaseFn { Box::new(move || Ok(vec![holds(&format!("c{k}"), json!(k), k % 3 != 0)])) })
            .collect();
        run_cases(&mut r, cases);
        assert_eq!(r.cases, 8);
        let labels: Vec<&str> = r.failures.iter().map(|f| f.label.as_str()).collect();
        assert_eq!(labels, vec!["c0", "c3", "c6"]);
    }
}
