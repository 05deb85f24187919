//! Command-line front end. [`run`] does all the work and returns the text to
//! print with an exit code, so the binary is a thin wrapper.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{compositions, partitions_of, Composition, Partition, Permutation, Tableau};
use crate::error::{Error, Result};
use crate::hecke::{irreducible_character, primitive_idempotent};
use crate::immanant::{irreducible_immanant, normalized_immanant, BetheGenerators};
use crate::verify::{self, LmwRows, SuiteReport};

pub const SCHEMA_VERSION: u32 = 1;
const MAX_M: usize = 6;
const MAX_TENSOR_DIM: u128 = 100_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const SUITES: &[&str] = &[
    "foundations",
    "hecke",
    "degeneration",
    "coherence",
    "bethe",
    "alpha-commutativity",
    "macmahon",
    "newton",
    "cayley-hamilton",
    "goulden-jackson",
    "littlewood-one",
    "littlewood-two",
    "lmw",
    "littlewood-three",
    "q-kostant",
    "phi-isomorphism",
    "hessenberg",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qimm", version, about = "Quantum immanants, Hecke algebras and Bethe subalgebras in exact arithmetic")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Worker threads for verification suites (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Allow m > 6 or n^m > 100000.
    #[arg(long, global = true)]
    pub unsafe_scale: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irreducible quantum immanant of a submatrix.
    Imm(ImmArgs),
    /// Coefficients of the irreducible characters on class representatives.
    CharTable {
        #[arg(long)]
        m: usize,
    },
    /// Primitive idempotent of a standard tableau, rows separated by `/`.
    Idempotent {
        #[arg(long)]
        tableau: String,
    },
    /// The generators alpha_k, beta_k, gamma_k up to a degree.
    Bethe {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Partitions of m with their numbers of standard tableaux.
    Partitions {
        #[arg(long)]
        m: usize,
    },
    /// Run an identity suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ImmArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub shape: String,
    #[arg(long)]
    pub rows: String,
    #[arg(long)]
    pub cols: Option<String>,
    /// Divide by m_{q^2}(rows); rows must equal cols and be nondecreasing.
    #[arg(long)]
    pub normalized: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long)]
    pub shape: Option<String>,
    #[arg(long)]
    pub shape2: Option<String>,
    /// Row multiset, or `full` for the lmw suite.
    #[arg(long)]
    pub rows: Option<String>,
    #[arg(long)]
    pub weight: Option<String>,
}

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(msg: String) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_USAGE }
    }
}

pub fn parse_list(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
        .collect()
}

pub fn parse_shape(text: &str) -> Result<Partition> {
    Partition::new(parse_list(text)?)
}

fn parse_tableau(text: &str) -> Result<Tableau> {
    let rows = text.split('/').map(parse_list).collect::<Result<Vec<_>>>()?;
    Tableau::standard(rows)
}

fn guard(unsafe_scale: bool, n: usize, m: usize) -> Result<()> {
    if unsafe_scale {
        return Ok(());
    }
    if m > MAX_M {
        return Err(Error::Precondition(format!("m = {m} exceeds {MAX_M}; pass --unsafe-scale to override")));
    }
    let dim = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if dim > MAX_TENSOR_DIM {
        return Err(Error::Precondition(format!(
            "n^m = {n}^{m} exceeds {MAX_TENSOR_DIM}; pass --unsafe-scale to override"
        )));
    }
    Ok(())
}

fn envelope(command: &str, result: Value) -> String {
    let mut s = serde_json::to_string_pretty(&json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "result": result,
    }))
    .expect("serializable");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// A minimal-length permutation of cycle type `rho`: consecutive blocks of simple reflections.
fn class_representative(rho: &Partition) -> Permutation {
    let m = rho.weight();
    let mut sigma = Permutation::identity(m);
    let mut start = 0;
    for &part in rho.parts() {
        for i in start..start + part - 1 {
            sigma = sigma.right_mul_s(i);
        }
        start += part;
    }
    sigma
}

fn cmd_imm(cli: &Cli, a: &ImmArgs) -> Result<(String, Value, String)> {
    let lambda = parse_shape(&a.shape)?;
    let rows = parse_list(&a.rows)?;
    let cols = match &a.cols {
        Some(c) => parse_list(c)?,
        None => rows.clone(),
    };
    guard(cli.unsafe_scale, a.n, lambda.weight())?;
    let value = if a.normalized {
        if rows != cols {
            return Err(Error::Precondition("--normalized needs rows equal to cols".into()));
        }
        normalized_immanant(&lambda, a.n, &rows)?
    } else {
        irreducible_immanant(&lambda, a.n, &rows, &cols)?
    };
    let result = json!({ "n": a.n, "shape": lambda, "rows": rows, "cols": cols, "normalized": a.normalized, "value": value });
    Ok(("imm".into(), result, format!("{value}\n")))
}

fn cmd_char_table(cli: &Cli, m: usize) -> Result<(String, Value, String)> {
    guard(cli.unsafe_scale, 1, m)?;
    let classes = partitions_of(m);
    let reps: Vec<Permutation> = classes.iter().map(class_representative).collect();
    let mut rows = Vec::new();
    let mut text = String::from("classes:");
    for (rho, sigma) in classes.iter().zip(&reps) {
        text.push_str(&format!(" {rho}={sigma}"));
    }
    text.push('\n');
    for lambda in &classes {
        let chi = irreducible_character(lambda);
        // the coefficient of T_σ in χ^λ is χ^λ(T_{σ^{-1}})
        let values: Vec<_> = reps.iter().map(|s| chi.coeff(&s.inverse())).collect();
        text.push_str(&format!("{lambda}:"));
        for v in &values {
            text.push_str(&format!(" {v}"));
        }
        text.push('\n');
        rows.push(json!({ "shape": lambda, "values": values }));
    }
    let result = json!({
        "m": m,
        "classes": classes,
        "representatives": reps.iter().map(|s| s.one_line()).collect::<Vec<_>>(),
        "rows": rows,
    });
    Ok(("char-table".into(), result, text))
}

fn cmd_idempotent(cli: &Cli, tableau: &str) -> Result<(String, Value, String)> {
    let t = parse_tableau(tableau)?;
    guard(cli.unsafe_scale, 1, t.size())?;
    let e = primitive_idempotent(&t)?;
    let result = json!({ "tableau": t, "value": e });
    Ok(("idempotent".into(), result, format!("{e}\n")))
}

fn cmd_bethe(cli: &Cli, n: usize, degree: usize) -> Result<(String, Value, String)> {
    if n == 0 {
        return Err(Error::Precondition("n ≥ 1".into()));
    }
    guard(cli.unsafe_scale, n, degree)?;
    let g = BetheGenerators::compute(n, degree);
    let mut text = String::new();
    let mut entries = Vec::new();
    for k in 0..=degree {
        let (a, b, c) = (g.alpha(k as i64), g.beta(k as i64), g.gamma[k].clone());
        text.push_str(&format!("alpha_{k} = {a}\nbeta_{k} = {b}\ngamma_{k} = {c}\n"));
        entries.push(json!({ "k": k, "alpha": a, "beta": b, "gamma": c }));
    }
    Ok(("bethe".into(), json!({ "n": n, "degree": degree, "generators": entries }), text))
}

fn cmd_partitions(cli: &Cli, m: usize) -> Result<(String, Value, String)> {
    guard(cli.unsafe_scale, 1, m)?;
    let ps = partitions_of(m);
    let text: String = ps.iter().map(|p| format!("{p} {}\n", p.num_syt())).collect();
    let result = json!({
        "m": m,
        "partitions": ps.iter().map(|p| json!({ "shape": p, "num_syt": p.num_syt() as u64 })).collect::<Vec<_>>(),
    });
    Ok(("partitions".into(), result, text))
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::Precondition(format!("--{flag} is required for this suite")))
}

fn verify_report(cli: &Cli, a: &VerifyArgs) -> Result<SuiteReport> {
    let n = a.n;
    let shape = a.shape.as_deref().map(parse_shape).transpose()?;
    let shape2 = a.shape2.as_deref().map(parse_shape).transpose()?;
    let g = |n: usize, m: usize| guard(cli.unsafe_scale, n, m);
    match a.suite.as_str() {
        "foundations" => Ok(verify::suite_foundations()),
        "hecke" => {
            let m = a.m.unwrap_or(4);
            g(1, m)?;
            verify::suite_hecke(m)
        }
        "degeneration" => {
            let m = a.m.unwrap_or(4);
            g(1, m)?;
            verify::suite_degeneration(m)
        }
        "coherence" => {
            let (m, n) = (a.m.unwrap_or(3), n.unwrap_or(3));
            g(n, m)?;
            verify::suite_coherence(m, n)
        }
        "bethe" => {
            let n = n.unwrap_or(2);
            g(n, (n + 1).max(4))?;
            verify::suite_bethe(n)
        }
        "alpha-commutativity" => {
            let n = n.unwrap_or(3);
            g(n, n)?;
            verify::check_alpha_commutativity(n)
        }
        "macmahon" => {
            let (n, d) = (n.unwrap_or(2), a.degree.unwrap_or(4));
            g(n, d)?;
            verify::check_macmahon(n, d)
        }
        "newton" => {
            let n = n.unwrap_or(2);
            let d = a.degree.unwrap_or(n + 1);
            g(n, d)?;
            verify::check_newton(n, d)
        }
        "cayley-hamilton" => {
            let n = n.unwrap_or(2);
            g(n, n)?;
            verify::check_cayley_hamilton(n)
        }
        "goulden-jackson" | "littlewood-three" | "hessenberg" => {
            let (lambda, n) = (need(&shape, "shape")?, need(&n, "n")?);
            g(n, lambda.weight())?;
            match a.suite.as_str() {
                "goulden-jackson" => verify::check_goulden_jackson(&lambda, n),
                "littlewood-three" => verify::check_littlewood_three(&lambda, n),
                _ => verify::check_hessenberg(&lambda, n),
            }
        }
        "littlewood-one" => {
            let (mu, nu, n) = (need(&shape, "shape")?, need(&shape2, "shape2")?, need(&n, "n")?);
            g(n, n)?;
            verify::check_littlewood_one(&mu, &nu, n)
        }
        "littlewood-two" => {
            let (mu, nu, n) = (need(&shape, "shape")?, need(&shape2, "shape2")?, need(&n, "n")?);
            let rows = parse_list(&need(&a.rows, "rows")?)?;
            g(n, rows.len())?;
            verify::check_littlewood_two(&mu, &nu, n, &rows)
        }
        "lmw" => {
            let (lambda, n) = (need(&shape, "shape")?, need(&n, "n")?);
            let rows = match a.rows.as_deref() {
                None | Some("full") => LmwRows::Full,
                Some(r) => LmwRows::Multiset(parse_list(r)?),
            };
            g(n, lambda.weight())?;
            verify::check_lmw(&lambda, n, &rows)
        }
        "q-kostant" => {
            let (lambda, n) = (need(&shape, "shape")?, need(&n, "n")?);
            g(n, lambda.weight())?;
            match a.weight.as_deref() {
                Some(w) => verify::check_q_kostant(&lambda, n, &Composition(parse_list(w)?)),
                None => {
                    let mut report = SuiteReport::new("q-kostant", json!({ "shape": lambda, "n": n }));
                    for mu in compositions(lambda.weight(), n) {
                        report.absorb(verify::check_q_kostant(&lambda, n, &mu)?);
                    }
                    Ok(report)
                }
            }
        }
        "phi-isomorphism" => {
            let n = n.unwrap_or(3);
            g(n, n)?;
            verify::check_phi_isomorphism(n)
        }
        other => Err(Error::UnknownVariant(format!("unknown suite {other:?}; known: {}", SUITES.join(", ")))),
    }
}

/// Execute a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Outcome::usage("--jobs must be at least 1".into());
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    let produced = match &cli.command {
        Command::Imm(a) => cmd_imm(cli, a),
        Command::CharTable { m } => cmd_char_table(cli, *m),
        Command::Idempotent { tableau } => cmd_idempotent(cli, tableau),
        Command::Bethe { n, degree } => cmd_bethe(cli, *n, *degree),
        Command::Partitions { m } => cmd_partitions(cli, *m),
        Command::Verify(a) => {
            return match verify_report(cli, a) {
                Ok(report) => {
                    let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
                    let stdout = match cli.format {
                        Format::Json => envelope("verify", to_value(&report)),
                        Format::Text => report.to_text(),
                    };
                    Outcome { stdout, stderr: String::new(), code }
                }
                Err(e) => Outcome::usage(e.to_string()),
            };
        }
    };
    match produced {
        Ok((command, json_value, text)) => {
            let stdout = match cli.format {
                Format::Json => envelope(&command, json_value),
                Format::Text => text,
            };
            Outcome { stdout, stderr: String::new(), code: EXIT_OK }
        }
        Err(e) => Outcome::usage(e.to_string()),
    }
}
