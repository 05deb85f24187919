//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints one PASS/FAIL line; the process fails if any criterion fails.

use std::process::Command;
use std::time::Instant;

use qimm::combinatorics::{compositions, multisets, partitions_of, Partition};
use qimm::qmatrix::QMatElement;
use qimm::verify::{
    check_goulden_jackson, check_littlewood_one, check_littlewood_three, check_littlewood_two, check_lmw,
    check_phi_isomorphism, check_q_kostant, suite_bethe, suite_coherence, suite_degeneration, suite_foundations,
    suite_hecke, LmwRows, SuiteReport,
};
use qimm::Result;

struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failures: Vec::new() }
    }

    fn add(&mut self, report: Result<SuiteReport>) {
        match report {
            Ok(r) => {
                self.cases += r.cases;
                for f in &r.failures {
                    if !f.reverify() {
                        self.failures.push(format!("{}: counterexample did not re-verify", r.suite));
                    }
                    self.failures.push(format!("{} {} {}", r.suite, f.label, f.inputs));
                }
            }
            Err(e) => self.failures.push(format!("error: {e}")),
        }
    }

    fn check(&mut self, ok: bool, what: String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what);
        }
    }
}

fn shapes_up_to(r: usize) -> Vec<Partition> {
    (1..=r).flat_map(partitions_of).collect()
}

fn c1_foundations(t: &mut Tally) {
    t.add(Ok(suite_foundations()));
}

fn c2_hecke(t: &mut Tally) {
    t.add(suite_hecke(5));
}

fn c3_degeneration(t: &mut Tally) {
    t.add(suite_degeneration(5));
}

fn c4_coherence(t: &mut Tally) {
    t.add(suite_coherence(4, 3));
}

fn c5_bethe(t: &mut Tally) {
    for n in 1..=3 {
        t.add(suite_bethe(n));
    }
}

fn c6_goulden_jackson(t: &mut Tally) {
    for lambda in shapes_up_to(4) {
        t.add(check_goulden_jackson(&lambda, 3));
    }
}

fn c7_littlewood(t: &mut Tally) {
    for n in 1..=4 {
        for a in 0..=n {
            for mu in partitions_of(a) {
                for nu in partitions_of(n - a) {
                    t.add(check_littlewood_one(&mu, &nu, n));
                }
            }
        }
    }
    for size in 1..=3 {
        for word in multisets(3, size) {
            for a in 0..=size {
                for mu in partitions_of(a) {
                    for nu in partitions_of(size - a) {
                        t.add(check_littlewood_two(&mu, &nu, 3, &word));
                    }
                }
            }
        }
    }
    for lambda in shapes_up_to(4) {
        let r = lambda.weight();
        t.add(check_lmw(&lambda, r, &LmwRows::Full));
        let reps: &[&[usize]] = match r {
            1 => &[&[2]],
            2 => &[&[1, 1], &[1, 2]],
            3 => &[&[1, 1, 1], &[1, 1, 2], &[1, 2, 3]],
            _ => &[&[1, 1, 2, 2], &[1, 2, 2, 3], &[1, 1, 1, 2]],
        };
        for rows in reps {
            t.add(check_lmw(&lambda, 3, &LmwRows::Multiset(rows.to_vec())));
        }
    }
}

fn c8_littlewood_three_phi(t: &mut Tally) {
    for lambda in shapes_up_to(3) {
        t.add(check_littlewood_three(&lambda, 3));
    }
    for n in 1..=3 {
        t.add(check_phi_isomorphism(n));
    }
}

fn c9_q_kostant(t: &mut Tally) {
    for n in 1..=3 {
        for lambda in shapes_up_to(4) {
            if lambda.len() > n {
                continue;
            }
            for mu in compositions(lambda.weight(), n) {
                t.add(check_q_kostant(&lambda, n, &mu));
            }
        }
    }
}

fn qimm(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_qimm")).args(args).output().expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn c10_determinism(t: &mut Tally) {
    let commands: &[&[&str]] = &[
        &["imm", "--n", "3", "--shape", "2,1", "--rows", "1,2,3", "--cols", "3,1,2", "--format", "json"],
        &["imm", "--n", "2", "--shape", "2", "--rows", "1,1", "--cols", "1,1", "--normalized"],
        &["char-table", "--m", "4", "--format", "json"],
        &["char-table", "--m", "3"],
        &["idempotent", "--tableau", "1,3/2", "--format", "json"],
        &["bethe", "--n", "2", "--degree", "3", "--format", "json"],
        &["partitions", "--m", "5", "--format", "json"],
        &["verify", "goulden-jackson", "--n", "3", "--shape", "2,1", "--format", "json"],
        &["verify", "macmahon", "--n", "2", "--degree", "3", "--jobs", "1"],
        &["verify", "q-kostant", "--n", "2", "--shape", "2,1", "--format", "json"],
    ];
    for args in commands {
        let (a, code_a) = qimm(args);
        let (b, code_b) = qimm(args);
        t.check(a == b && code_a == code_b && code_a == 0, format!("{args:?} not reproducible"));
    }
    let (out, _) = qimm(commands[0]);
    let v: serde_json::Value = serde_json::from_slice(&out).expect("json output");
    let x: QMatElement = serde_json::from_value(v["result"]["value"].clone()).expect("element parses");
    t.check(serde_json::to_value(&x).unwrap() == v["result"]["value"], "element json round trip".into());
    let back = serde_json::to_vec_pretty(&v).unwrap();
    t.check(back.as_slice() == out.strip_suffix(b"\n").unwrap_or(&out), "document round trip".into());
    let (_, code) = qimm(&["verify", "nosuchsuite"]);
    t.check(code == 2, "unknown suite exits 2".into());
}

type Criterion = (&'static str, fn(&mut Tally));

fn main() {
    let criteria: &[Criterion] = &[
        ("1 algebra foundations", c1_foundations),
        ("2 hecke suite m <= 5", c2_hecke),
        ("3 character degeneration", c3_degeneration),
        ("4 immanant coherence", c4_coherence),
        ("5 bethe suite", c5_bethe),
        ("6 goulden-jackson", c6_goulden_jackson),
        ("7 littlewood I, II and LMW", c7_littlewood),
        ("8 littlewood III and phi", c8_littlewood_three_phi),
        ("9 q-kostant", c9_q_kostant),
        ("10 determinism", c10_determinism),
    ];
    let only: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !only.is_empty() && !only.iter().any(|o| name.starts_with(&format!("{o} "))) {
            continue;
        }
        let start = Instant::now();
        let mut tally = Tally::new();
        run(&mut tally);
        let secs = start.elapsed().as_secs_f64();
        let status = if tally.failures.is_empty() && tally.cases > 0 { "PASS" } else { "FAIL" };
        println!("criterion {name}: {status} ({} identities, {secs:.1}s)", tally.cases);
        for f in tally.failures.iter().take(10) {
            println!("    {f}");
        }
        if status == "FAIL" {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
