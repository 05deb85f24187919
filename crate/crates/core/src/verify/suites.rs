use serde_json::json;

use super::{
    check_alpha_commutativity, check_cayley_hamilton, check_goulden_jackson, check_littlewood_three,
    check_macmahon, check_newton, compare, holds, run_cases, CaseFn, Check, SuiteReport, ValueKind,
};
use crate::combinatorics::{
    classical_character, enumerate_syt, multisets, partitions_of, schur_element, CommPoly, Permutation,
};
use crate::error::{Error, Result};
use crate::hecke::{irreducible_character, jucys_murphy, primitive_idempotent, primitive_idempotent_jm, HeckeElement};
use crate::immanant::{irreducible_immanant, normalized_immanant, normalized_immanant_via_idempotent};
use crate::qmatrix::{gen_pair, QMatElement, RewriteOrder};
use crate::scalar::{Rational, ScalarQ};
use crate::tensorrep::{hecke_action, r_matrix, x_chain, RVariant, TensorOperator};

fn op_case(label: &'static str, inputs: serde_json::Value, lhs: TensorOperator, rhs: TensorOperator) -> Check {
    holds(label, inputs, lhs == rhs)
}

/// Yang–Baxter, the Hecke relations for `Ř`, the `R^±` identities, RTT and
/// confluence of the quantum-matrix rewriting.
pub fn suite_foundations() -> SuiteReport {
    let mut report = SuiteReport::new("foundations", json!({ "n": [2, 3, 4] }));
    let mut cases: Vec<CaseFn> = Vec::new();
    for n in 2..=4usize {
        cases.push(Box::new(move || {
            let r = r_matrix(n, RVariant::R);
            let (r12, r13, r23) = (r.embed(3, 0, 1)?, r.embed(3, 0, 2)?, r.embed(3, 1, 2)?);
            let lhs = r12.compose(&r13)?.compose(&r23)?;
            let rhs = r23.compose(&r13)?.compose(&r12)?;
            Ok(vec![op_case("Yang-Baxter", json!({ "n": n }), lhs, rhs)])
        }));
        cases.push(Box::new(move || {
            let p = r_matrix(n, RVariant::P);
            let r = r_matrix(n, RVariant::R);
            let minus = r_matrix(n, RVariant::RMinus);
            let id = TensorOperator::identity(n, 2);
            let inputs = json!({ "n": n });
            Ok(vec![
                op_case("R+ = PRP", inputs.clone(), p.compose(&r)?.compose(&p)?, r_matrix(n, RVariant::RPlus)),
                op_case("R- R = 1", inputs.clone(), minus.compose(&r)?, id.clone()),
                op_case("R R- = 1", inputs.clone(), r.compose(&minus)?, id),
                op_case("Rcheck = PR", inputs, p.compose(&r)?, r_matrix(n, RVariant::RCheck)),
            ])
        }));
        cases.push(Box::new(move || {
            let m = 3;
            let id = TensorOperator::identity(n, m);
            let rc = r_matrix(n, RVariant::RCheck);
            let (g1, g2) = (rc.embed(m, 0, 1)?, rc.embed(m, 1, 2)?);
            let mut out = Vec::new();
            for (i, g) in [&g1, &g2].into_iter().enumerate() {
                let a = g.try_sub(&id.scale(&ScalarQ::q()))?;
                let b = g.try_add(&id.scale(&ScalarQ::q_pow(-1)))?;
                let inputs = json!({ "n": n, "i": i + 1 });
                out.push(holds("(Rcheck - q)(Rcheck + 1/q) = 0", inputs.clone(), a.compose(&b)?.is_zero()));
                let t = HeckeElement::generator(m, i + 1)?;
                out.push(op_case("T_i acts by Rcheck", inputs, hecke_action(&t, n), g.clone()));
            }
            out.push(op_case(
                "braid",
                json!({ "n": n }),
                g1.compose(&g2)?.compose(&g1)?,
                g2.compose(&g1)?.compose(&g2)?,
            ));
            Ok(out)
        }));
    }
    for n in 2..=3usize {
        for m in 2..=3usize {
            cases.push(Box::new(move || {
                let x = x_chain(n, m);
                (1..m)
                    .map(|k| {
                        let r = hecke_action(&HeckeElement::generator(m, k)?, n);
                        let (lhs, rhs) = (x.left_scalar(&r)?, x.right_scalar(&r)?);
                        Ok(holds("RTT", json!({ "n": n, "m": m, "k": k }), lhs == rhs))
                    })
                    .collect()
            }));
        }
        cases.push(Box::new(move || {
            let gens = n * n;
            let mut out = Vec::new();
            for a in 0..gens {
                for b in 0..gens {
                    for c in 0..gens {
                        let w: Vec<(usize, usize)> = [a, b, c].iter().map(|&g| gen_pair(n, g as u8)).collect();
                        let one = ScalarQ::one();
                        let l = QMatElement::normal_form_by(n, &w, &one, RewriteOrder::Leftmost)?;
                        let r = QMatElement::normal_form_by(n, &w, &one, RewriteOrder::Rightmost)?;
                        let word: Vec<u8> = [a, b, c].iter().map(|&g| g as u8).collect();
                        let inputs = json!({ "n": n, "word": w });
                        out.push(compare("leftmost = rightmost", inputs.clone(), ValueKind::Element, &l, &r));
                        out.push(compare("rewrite = insertion", inputs, ValueKind::Element, &l, &QMatElement::from_word(n, &word)));
                    }
                }
            }
            Ok(out)
        }));
    }
    run_cases(&mut report, cases);
    report
}

fn tableau_json(t: &crate::combinatorics::Tableau) -> serde_json::Value {
    json!(t.rows())
}

/// Idempotents, Jucys–Murphy eigenvalues and character formulas in `H_m` for `m ≤ max_m`.
pub fn suite_hecke(max_m: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("hecke", json!({ "max_m": max_m }));
    let mut cases: Vec<CaseFn> = Vec::new();
    for m in 1..=max_m {
        cases.push(Box::new(move || {
            let tabs: Vec<_> = partitions_of(m).iter().flat_map(enumerate_syt).collect();
            let es: Vec<HeckeElement> = tabs.iter().map(primitive_idempotent).collect::<Result<_>>()?;
            let mut out = Vec::new();
            let mut total = HeckeElement::zero(m);
            for (a, ea) in es.iter().enumerate() {
                total = &total + ea;
                for (b, eb) in es.iter().enumerate() {
                    let prod = ea * eb;
                    let inputs = json!({ "s": tableau_json(&tabs[a]), "t": tableau_json(&tabs[b]) });
                    let want = if a == b { ea.clone() } else { HeckeElement::zero(m) };
                    out.push(compare("E_S E_T = d_ST E_T", inputs, ValueKind::Other, &prod, &want));
                }
            }
            out.push(compare("sum E_T = 1", json!({ "m": m }), ValueKind::Other, &total, &HeckeElement::one(m)));
            Ok(out)
        }));
        for lambda in partitions_of(m) {
            let lam = lambda.clone();
            cases.push(Box::new(move || {
                let mut out = Vec::new();
                let ys: Vec<HeckeElement> = (1..=m).map(|k| jucys_murphy(k, m)).collect::<Result<_>>()?;
                let mut sum = HeckeElement::zero(m);
                for t in enumerate_syt(&lam) {
                    let e = primitive_idempotent(&t)?;
                    sum = &sum + &e;
                    for (k, y) in ys.iter().enumerate() {
                        let want = e.scale(&ScalarQ::q_pow(2 * t.content_of(k + 1) as i32));
                        let inputs = json!({ "t": tableau_json(&t), "k": k + 1 });
                        out.push(compare("y_k E_T", inputs.clone(), ValueKind::Other, &(y * &e), &want));
                        out.push(compare("E_T y_k", inputs, ValueKind::Other, &(&e * y), &want));
                    }
                    let jm = primitive_idempotent_jm(&t)?;
                    out.push(compare("E_T = JM recurrence", json!({ "t": tableau_json(&t) }), ValueKind::Other, &e, &jm));
                }
                let chi = irreducible_character(&lam);
                let inputs = json!({ "shape": lam });
                out.push(compare("chi = c sum E_T", inputs.clone(), ValueKind::Other, &chi, &sum.scale(&schur_element(&lam))));
                let t = enumerate_syt(&lam).into_iter().next().expect("standard tableau exists");
                let conj = primitive_idempotent(&t)?.conjugation_sum();
                out.push(compare("chi = sum T E_T T^-1", inputs, ValueKind::Other, &chi, &conj));
                Ok(out)
            }));
        }
    }
    run_cases(&mut report, cases);
    Ok(report)
}

/// Characters at `q = 1` against the classical character table, every permutation.
pub fn suite_degeneration(max_m: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("degeneration", json!({ "max_m": max_m }));
    let mut cases: Vec<CaseFn> = Vec::new();
    for m in 1..=max_m {
        for lambda in partitions_of(m) {
            cases.push(Box::new(move || {
                let chi = irreducible_character(&lambda);
                let mut out = Vec::new();
                for sigma in Permutation::all(m) {
                    let got = chi.coeff(&sigma).evaluate_at_q(&Rational::ONE)?;
                    let want = Rational::from_int(classical_character(&lambda, &sigma)?);
                    let inputs = json!({ "shape": lambda, "sigma": sigma.to_string() });
                    out.push(compare("chi at q=1", inputs, ValueKind::Other, &got.to_ratio_string(), &want.to_ratio_string()));
                }
                Ok(out)
            }));
        }
    }
    run_cases(&mut report, cases);
    Ok(report)
}

fn all_tuples(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|w| (1..=n).map(move |a| [w.clone(), vec![a]].concat()))
            .collect();
    }
    out
}

/// `Σ_σ χ(σ) Π_k x_{i_{σ(k)} j_k}` in commuting variables.
fn classical_immanant_brute(chars: &[(Permutation, i64)], n: usize, rows: &[usize], cols: &[usize]) -> CommPoly {
    let mut out = CommPoly::zero(n * n);
    for (s, c) in chars {
        let mut e = vec![0u32; n * n];
        for k in 0..rows.len() {
            e[(rows[s.image(k)] - 1) * n + cols[k] - 1] += 1;
        }
        out.add_term(e, Rational::from_int(*c));
    }
    out
}

/// Two routes to the normalized immanant, immanants at `q = 1`, and the value
/// shared between the Goulden–Jackson and dual Jacobi–Trudi checks.
pub fn suite_coherence(max_m: usize, n: usize) -> Result<SuiteReport> {
    if n == 0 {
        return Err(Error::Precondition("n ≥ 1".into()));
    }
    let mut report = SuiteReport::new("coherence", json!({ "max_m": max_m, "n": n }));
    let mut cases: Vec<CaseFn> = Vec::new();
    for m in 1..=max_m {
        for lambda in partitions_of(m) {
            let lam = lambda.clone();
            cases.push(Box::new(move || {
                multisets(n, m)
                    .into_iter()
                    .map(|word| {
                        let a = normalized_immanant(&lam, n, &word)?;
                        let b = normalized_immanant_via_idempotent(&lam, n, &word)?;
                        Ok(compare("character = idempotent", json!({ "shape": lam, "rows": word }), ValueKind::Element, &a, &b))
                    })
                    .collect()
            }));
            let lam = lambda.clone();
            cases.push(Box::new(move || {
                let chars: Vec<(Permutation, i64)> = Permutation::all(m)
                    .into_iter()
                    .map(|s| classical_character(&lam, &s).map(|c| (s, c)))
                    .collect::<Result<_>>()?;
                let mut out = Vec::new();
                for nn in 1..=n {
                    let cols_all = all_tuples(nn, m);
                    for rows in multisets(nn, m) {
                        for cols in &cols_all {
                            let got = irreducible_immanant(&lam, nn, &rows, cols)?.specialize_q_one()?;
                            let want = classical_immanant_brute(&chars, nn, &rows, cols);
                            let inputs = json!({ "shape": lam, "n": nn, "rows": rows, "cols": cols });
                            out.push(compare("immanant at q=1", inputs, ValueKind::Other, &got, &want));
                        }
                    }
                }
                Ok(out)
            }));
        }
    }
    for r in 1..=max_m.min(n) {
        for lambda in partitions_of(r) {
            cases.push(Box::new(move || {
                let gj = check_goulden_jackson(&lambda, n)?;
                let l3 = check_littlewood_three(&lambda, n)?;
                let key = "immanant_sum";
                let a = serde_json::to_string(&gj.witnesses[key]).expect("json");
                let b = serde_json::to_string(&l3.witnesses[key]).expect("json");
                let inputs = json!({ "shape": lambda, "n": n });
                Ok(vec![compare("shared immanant sum", inputs, ValueKind::Other, &a, &b)])
            }));
        }
    }
    run_cases(&mut report, cases);
    Ok(report)
}

/// Commutativity, MacMahon to degree 4, Newton to degree `n + 1` and Cayley–Hamilton.
pub fn suite_bethe(n: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("bethe", json!({ "n": n }));
    report.absorb(check_alpha_commutativity(n)?);
    report.absorb(check_macmahon(n, 4)?);
    report.absorb(check_newton(n, n + 1)?);
    report.absorb(check_cayley_hamilton(n)?);
    Ok(report)
}
