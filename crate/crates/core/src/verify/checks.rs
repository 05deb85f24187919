use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use serde_json::{json, Value};

use super::{compare, run_cases, CaseFn, SuiteReport, ValueKind};
use crate::combinatorics::{
    enumerate_syt, inverse_kostka, lr_expansion, multiset_splittings, multisets, partitions_of, schur_in_vars,
    subsets, Composition, CommPoly, Partition,
};
use crate::error::{Error, Result};
use crate::hecke::{induced_character, primitive_idempotent, HeckeElement, InducedFrom};
use crate::immanant::{
    bethe_alpha, bethe_beta, classical_immanant, det_q, gamma, hessenberg_immanant, idempotent_trace,
    immanant_of, irreducible_immanant, normalized_immanant, per_q, star_power, AMatrix, BetheGenerators,
};
use crate::qmatrix::QMatElement;
use crate::scalar::{multiset_multiplicity, Multiplicity, ScalarQ};
use crate::tensorrep::{coaction, hecke_action, weight_projector, AValuedOperator};

fn zero(n: usize) -> QMatElement {
    QMatElement::zero(n)
}

fn signed(x: &QMatElement, negative: bool) -> QMatElement {
    if negative {
        -x
    } else {
        x.clone()
    }
}

/// `Imm_{χ^λ}(X^I_I)`, with the empty shape giving 1.
fn imm(lambda: &Partition, n: usize, word: &[usize]) -> Result<QMatElement> {
    if lambda.weight() == 0 {
        return Ok(QMatElement::one(n));
    }
    irreducible_immanant(lambda, n, word, word)
}

fn m_q2(word: &[usize]) -> Result<ScalarQ> {
    multiset_multiplicity(word, Multiplicity::Q2)
}

/// `Σ_I Imm_{χ^λ}(X_I) / m_{q²}(I)` over nondecreasing `I` of size `|λ|`.
pub fn immanant_sum(lambda: &Partition, n: usize) -> Result<QMatElement> {
    let mut acc = zero(n);
    for word in multisets(n, lambda.weight()) {
        acc.add_assign_ref(&normalized_immanant(lambda, n, &word)?);
    }
    Ok(acc)
}

/// `α_r α_s = α_s α_r` for `0 ≤ r < s ≤ n`.
pub fn check_alpha_commutativity(n: usize) -> Result<SuiteReport> {
    if n == 0 {
        return Err(Error::Precondition("n ≥ 1".into()));
    }
    let mut report = SuiteReport::new("alpha-commutativity", json!({ "n": n }));
    let alphas: Vec<QMatElement> = (0..=n).map(|k| bethe_alpha(n, k)).collect();
    let alphas = &alphas;
    let mut cases: Vec<CaseFn> = Vec::new();
    for r in 0..=n {
        for s in r + 1..=n {
            cases.push(Box::new(move || {
                let lhs = &alphas[r] * &alphas[s];
                let rhs = &alphas[s] * &alphas[r];
                Ok(vec![compare("a_r a_s = a_s a_r", json!({ "r": r, "s": s }), ValueKind::Element, &lhs, &rhs)])
            }));
        }
    }
    run_cases(&mut report, cases);
    Ok(report)
}

/// `Σ_{r=0}^{k} (−1)^r α_r β_{k−r} = 0` for `1 ≤ k ≤ degree`.
pub fn check_macmahon(n: usize, degree: usize) -> Result<SuiteReport> {
    if degree == 0 || n == 0 {
        return Err(Error::Precondition("n ≥ 1 and degree ≥ 1".into()));
    }
    let mut report = SuiteReport::new("macmahon", json!({ "n": n, "degree": degree }));
    let alphas: Vec<QMatElement> = (0..=n).map(|k| bethe_alpha(n, k)).collect();
    let betas: Vec<QMatElement> = (0..=degree).map(|k| bethe_beta(n, k)).collect();
    let (alphas, betas) = (&alphas, &betas);
    let cases: Vec<CaseFn> = (1..=degree)
        .map(|k| -> CaseFn {
            Box::new(move || {
                let mut lhs = zero(n);
                for r in 0..=k.min(n) {
                    lhs.add_assign_ref(&signed(&(&alphas[r] * &betas[k - r]), r % 2 == 1));
                }
                Ok(vec![compare("sum (-1)^r a_r b_(k-r)", json!({ "k": k }), ValueKind::Element, &lhs, &zero(n))])
            })
        })
        .collect();
    run_cases(&mut report, cases);
    Ok(report)
}

/// `k α_k = Σ_j (−1)^{j−1} α_{k−j} γ_j` and `k β_k = Σ_j γ_j β_{k−j}`.
pub fn check_newton(n: usize, degree: usize) -> Result<SuiteReport> {
    if n == 0 || degree == 0 || degree > n + 2 {
        return Err(Error::Precondition(format!("1 ≤ degree ≤ n + 2, got n = {n}, degree = {degree}")));
    }
    let mut report = SuiteReport::new("newton", json!({ "n": n, "degree": degree }));
    let gens = BetheGenerators::compute(n, degree);
    let gens = &gens;
    let cases: Vec<CaseFn> = (1..=degree)
        .map(|k| -> CaseFn {
            Box::new(move || {
                let kk = ScalarQ::from_int(k as i64);
                let mut rhs_a = zero(n);
                let mut rhs_b = zero(n);
                for j in 1..=k {
                    let a = &gens.alpha((k - j) as i64) * &gens.gamma[j];
                    rhs_a.add_assign_ref(&signed(&a, j % 2 == 0));
                    rhs_b.add_assign_ref(&(&gens.gamma[j] * &gens.beta((k - j) as i64)));
                }
                Ok(vec![
                    compare("k a_k", json!({ "k": k }), ValueKind::Element, &gens.alpha(k as i64).scale(&kk), &rhs_a),
                    compare("k b_k", json!({ "k": k }), ValueKind::Element, &gens.beta(k as i64).scale(&kk), &rhs_b),
                ])
            })
        })
        .collect();
    run_cases(&mut report, cases);
    Ok(report)
}

/// `Σ_k (−1)^k α_k X^{[n−k]} = 0`.
pub fn check_cayley_hamilton(n: usize) -> Result<SuiteReport> {
    if n == 0 {
        return Err(Error::Precondition("n ≥ 1".into()));
    }
    let mut report = SuiteReport::new("cayley-hamilton", json!({ "n": n }));
    let powers = star_power(n, n);
    let mut acc = AMatrix::zero(n);
    for k in 0..=n {
        acc = acc.add_left_multiple(&signed(&bethe_alpha(n, k), k % 2 == 1), &powers[n - k]);
    }
    let check = compare("sum (-1)^k a_k X^[n-k]", json!({ "n": n }), ValueKind::Matrix, &acc, &AMatrix::zero(n));
    report.cases = 1;
    report.failures.extend(check.failure);
    Ok(report)
}

fn alpha_or_zero(cache: &[QMatElement], n: usize, k: i64) -> QMatElement {
    usize::try_from(k).ok().and_then(|k| cache.get(k)).cloned().unwrap_or_else(|| zero(n))
}

/// `det(α_{λᵀ_i − i + j})` as a determinant over the commuting Bethe generators.
fn det_a(lambda: &Partition, n: usize, alphas: &[QMatElement]) -> Result<QMatElement> {
    let lt = lambda.conjugate();
    let size = lambda.part(0);
    let mat: Vec<Vec<QMatElement>> = (0..size)
        .map(|i| (0..size).map(|j| alpha_or_zero(alphas, n, lt.part(i) as i64 - i as i64 + j as i64)).collect())
        .collect();
    classical_immanant(&Partition::column(size), &mat, n)
}

/// `det(β_{λ_i − i + j})`.
fn det_b(lambda: &Partition, n: usize, betas: &[QMatElement]) -> Result<QMatElement> {
    let size = lambda.len();
    let mat: Vec<Vec<QMatElement>> = (0..size)
        .map(|i| (0..size).map(|j| alpha_or_zero(betas, n, lambda.part(i) as i64 - i as i64 + j as i64)).collect())
        .collect();
    classical_immanant(&Partition::column(size), &mat, n)
}

fn element_json(x: &QMatElement) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// `det A = det B = tr E_T X_1⋯X_r = Σ_I Imm_{χ^λ}(X_I)/m_{q²}(I)`.
pub fn check_goulden_jackson(lambda: &Partition, n: usize) -> Result<SuiteReport> {
    let r = lambda.weight();
    if r == 0 || n == 0 {
        return Err(Error::Precondition("nonempty shape and n ≥ 1".into()));
    }
    let mut report = SuiteReport::new("goulden-jackson", json!({ "shape": lambda, "n": n }));
    let alphas: Vec<QMatElement> = (0..=n).map(|k| bethe_alpha(n, k)).collect();
    let betas: Vec<QMatElement> = (0..=r).map(|k| bethe_beta(n, k)).collect();
    let sum = immanant_sum(lambda, n)?;
    let t = enumerate_syt(lambda).into_iter().next().expect("standard tableau exists");
    let inputs = json!({ "shape": lambda, "n": n });
    let checks = [
        compare("det A", inputs.clone(), ValueKind::Element, &det_a(lambda, n, &alphas)?, &sum),
        compare("det B", inputs.clone(), ValueKind::Element, &det_b(lambda, n, &betas)?, &sum),
        compare("tr E_T X", inputs, ValueKind::Element, &idempotent_trace(&t, n), &sum),
    ];
    report.cases = checks.len();
    report.failures.extend(checks.into_iter().filter_map(|c| c.failure));
    report.witnesses.insert("immanant_sum".into(), element_json(&sum));
    report.witnesses.insert("det_a".into(), element_json(&det_a(lambda, n, &alphas)?));
    Ok(report)
}

fn lr_side(mu: &Partition, nu: &Partition, n: usize, word: &[usize]) -> Result<QMatElement> {
    let mut rhs = zero(n);
    for (lambda, c) in lr_expansion(mu, nu) {
        rhs.add_scaled(&imm(&lambda, n, word)?, &ScalarQ::from_int(c));
    }
    Ok(rhs)
}

/// Complementary principal minors against the Littlewood–Richardson expansion.
pub fn check_littlewood_one(mu: &Partition, nu: &Partition, n: usize) -> Result<SuiteReport> {
    if mu.weight() + nu.weight() != n {
        return Err(Error::WeightMismatch(mu.weight() + nu.weight(), n));
    }
    let mut report = SuiteReport::new("littlewood-one", json!({ "mu": mu, "nu": nu, "n": n }));
    let full: Vec<usize> = (1..=n).collect();
    let mut lhs = zero(n);
    for i1 in subsets(n, mu.weight()) {
        let i2: Vec<usize> = full.iter().copied().filter(|x| !i1.contains(x)).collect();
        lhs.add_assign_ref(&(&imm(mu, n, &i1)? * &imm(nu, n, &i2)?));
    }
    let rhs = lr_side(mu, nu, n, &full)?;
    let check = compare("minor products", json!({ "mu": mu, "nu": nu }), ValueKind::Element, &lhs, &rhs);
    report.cases = 1;
    report.failures.extend(check.failure);
    Ok(report)
}

fn check_multiset(n: usize, word: &[usize]) -> Result<()> {
    if word.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::NotSorted(word.to_vec()));
    }
    if let Some(&bad) = word.iter().find(|&&x| x == 0 || x > n) {
        return Err(Error::IndexOutOfRange { index: bad, bound: n });
    }
    Ok(())
}

/// Weighted multiset splittings against the Littlewood–Richardson expansion.
pub fn check_littlewood_two(mu: &Partition, nu: &Partition, n: usize, word: &[usize]) -> Result<SuiteReport> {
    check_multiset(n, word)?;
    if mu.weight() + nu.weight() != word.len() {
        return Err(Error::WeightMismatch(mu.weight() + nu.weight(), word.len()));
    }
    let mut report = SuiteReport::new("littlewood-two", json!({ "mu": mu, "nu": nu, "n": n, "rows": word }));
    let total = m_q2(word)?;
    let mut lhs = zero(n);
    for (i1, i2) in multiset_splittings(word, mu.weight()) {
        let w = &total / &(&m_q2(&i1)? * &m_q2(&i2)?);
        lhs.add_scaled(&(&imm(mu, n, &i1)? * &imm(nu, n, &i2)?), &w);
    }
    let rhs = lr_side(mu, nu, n, word)?;
    let check = compare("weighted minor products", json!({ "rows": word }), ValueKind::Element, &lhs, &rhs);
    report.cases = 1;
    report.failures.extend(check.failure);
    Ok(report)
}

/// Which principal submatrix a generalized LMW check uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LmwRows {
    Full,
    Multiset(Vec<usize>),
}

/// Ordered sequences `(I_1, …, I_l)` of nondecreasing tuples with `|I_j| = parts[j]` whose union is `word`.
fn ordered_splittings(word: &[usize], parts: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = parts.split_first() else {
        return if word.is_empty() { vec![Vec::new()] } else { Vec::new() };
    };
    let mut out = Vec::new();
    for (a, b) in multiset_splittings(word, first) {
        for mut tail in ordered_splittings(&b, rest) {
            tail.insert(0, a.clone());
            out.push(tail);
        }
    }
    out
}

/// Induced sign and trivial immanants against sums of products of `det_q` and `per_q`.
///
/// Both sides carry the weight `m_{q²}(I) / Π m_{q²}(I_j)`; it is 1 when the
/// letters of `I` are distinct.
pub fn check_lmw(lambda: &Partition, n: usize, rows: &LmwRows) -> Result<SuiteReport> {
    let word = match rows {
        LmwRows::Full => (1..=n).collect::<Vec<_>>(),
        LmwRows::Multiset(w) => w.clone(),
    };
    check_multiset(n, &word)?;
    if lambda.weight() != word.len() {
        return Err(Error::WeightMismatch(lambda.weight(), word.len()));
    }
    let mut report = SuiteReport::new("lmw", json!({ "shape": lambda, "n": n, "rows": word }));
    let parts = lambda.parts();
    let psi = induced_character(parts, &InducedFrom::Sign)?;
    let phi = induced_character(parts, &InducedFrom::Trivial)?;
    let total = m_q2(&word)?;
    let mut det_side = zero(n);
    let mut per_side = zero(n);
    for seq in ordered_splittings(&word, parts) {
        let mut w = total.clone();
        let mut dp = QMatElement::one(n);
        let mut pp = QMatElement::one(n);
        for block in &seq {
            w = &w / &m_q2(block)?;
            dp = &dp * &det_q(n, block, block)?;
            pp = &pp * &per_q(n, block, block)?;
        }
        det_side.add_scaled(&dp, &w);
        per_side.add_scaled(&pp, &w);
    }
    let inputs = json!({ "shape": lambda, "rows": word });
    let checks = [
        compare("Imm_psi", inputs.clone(), ValueKind::Element, &immanant_of(&psi, n, &word, &word)?, &det_side),
        compare("Imm_phi", inputs, ValueKind::Element, &immanant_of(&phi, n, &word, &word)?, &per_side),
    ];
    report.cases = checks.len();
    report.failures.extend(checks.into_iter().filter_map(|c| c.failure));
    Ok(report)
}

/// `Σ_μ (K^{-1})_{μ,λᵀ} α_{μ_1}⋯α_{μ_l} = Σ_I Imm_{χ^λ}(X_I)/m_{q²}(I)`.
pub fn check_littlewood_three(lambda: &Partition, n: usize) -> Result<SuiteReport> {
    let r = lambda.weight();
    if r == 0 || n == 0 {
        return Err(Error::Precondition("nonempty shape and n ≥ 1".into()));
    }
    let mut report = SuiteReport::new("littlewood-three", json!({ "shape": lambda, "n": n }));
    let alphas: Vec<QMatElement> = (0..=n).map(|k| bethe_alpha(n, k)).collect();
    let ps = partitions_of(r);
    let inv = inverse_kostka(r);
    let col = ps.iter().position(|p| *p == lambda.conjugate()).expect("conjugate is a partition of r");
    let mut lhs = zero(n);
    for (row, mu) in ps.iter().enumerate() {
        if inv[row][col] == 0 {
            continue;
        }
        let mut prod = QMatElement::one(n);
        for &part in mu.parts() {
            prod = &prod * &alpha_or_zero(&alphas, n, part as i64);
        }
        lhs.add_scaled(&prod, &ScalarQ::from_int(inv[row][col]));
    }
    let sum = immanant_sum(lambda, n)?;
    let inputs = json!({ "shape": lambda, "n": n });
    let mut checks = vec![compare("dual Jacobi-Trudi", inputs.clone(), ValueKind::Element, &lhs, &sum)];
    if *lambda == Partition::column(r) {
        checks.push(compare("e_k", inputs.clone(), ValueKind::Element, &sum, &bethe_alpha(n, r)));
    }
    if *lambda == Partition::row(r) {
        checks.push(compare("h_k", inputs, ValueKind::Element, &sum, &bethe_beta(n, r)));
    }
    report.cases = checks.len();
    report.failures.extend(checks.into_iter().filter_map(|c| c.failure));
    report.notes.push("p_k specialization is covered by the newton check".into());
    report.witnesses.insert("immanant_sum".into(), element_json(&sum));
    report.witnesses.insert("det_a".into(), element_json(&lhs));
    Ok(report)
}

static COACTION_CACHE: Lazy<Mutex<HashMap<(usize, usize), Arc<AValuedOperator>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn cached_coaction(n: usize, m: usize) -> Arc<AValuedOperator> {
    if let Some(hit) = COACTION_CACHE.lock().unwrap().get(&(n, m)) {
        return hit.clone();
    }
    let d = Arc::new(coaction(n, m));
    COACTION_CACHE.lock().unwrap().insert((n, m), d.clone());
    d
}

/// The weight-`μ` immanant against the isotypic trace.
///
/// With `z_λ = Σ_T E_T`, the composite `z_λ P_μ (P_μ ⊗ 1)Δ` has trace
/// `f^λ · Imm_{χ^λ}(X_I)/m_{q²}(I)`: Hecke and `U_q(gl_n)` actions commute, so
/// each of the `f^λ` idempotents contributes the same trace.
pub fn check_q_kostant(lambda: &Partition, n: usize, mu: &Composition) -> Result<SuiteReport> {
    let m = lambda.weight();
    if lambda.len() > n {
        return Err(Error::Precondition(format!("shape {lambda} has more than {n} rows")));
    }
    if mu.len() != n {
        return Err(Error::LengthMismatch(mu.len(), n));
    }
    if mu.weight() != m {
        return Err(Error::WeightMismatch(mu.weight(), m));
    }
    let mut report = SuiteReport::new("q-kostant", json!({ "shape": lambda, "n": n, "weight": mu }));
    report.notes.push("proof-route verification: isotypic trace divided by f^λ".into());
    let word = mu.to_multiset();
    let lhs = normalized_immanant(lambda, n, &word)?;

    let mut z = HeckeElement::zero(m);
    for t in enumerate_syt(lambda) {
        z = &z + &primitive_idempotent(&t)?;
    }
    let zop = hecke_action(&z, n);
    let proj = weight_projector(mu, m)?;
    let composite = cached_coaction(n, m).left_scalar(&proj)?.right_scalar(&proj)?.left_scalar(&zop)?;
    let f = ScalarQ::from_int(enumerate_syt(lambda).len() as i64);
    let rhs = composite.trace().scale(&f.inv()?);
    let check = compare("normalized immanant", json!({ "rows": word }), ValueKind::Element, &lhs, &rhs);
    report.cases = 1;
    report.failures.extend(check.failure);
    Ok(report)
}

fn rank(mut rows: Vec<Vec<ScalarQ>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().expect("nonzero pivot");
        let pivot: Vec<ScalarQ> = rows[rank].iter().map(|x| x * &inv).collect();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                for k in c..cols {
                    let v = &rows[r][k] - &(&f * &pivot[k]);
                    rows[r][k] = v;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

fn to_scalar_poly(p: &CommPoly) -> CommPoly<ScalarQ> {
    p.map_coeffs(|c| ScalarQ::from_rational(c.clone()))
}

/// `Φ(α_k) = e_k`, `Φ(Σ_I Imm/m_{q²}) = s_λ`, and independence of the immanant sums for `λ ⊢ n`.
pub fn check_phi_isomorphism(n: usize) -> Result<SuiteReport> {
    if n == 0 {
        return Err(Error::Precondition("n ≥ 1".into()));
    }
    let mut report = SuiteReport::new("phi-isomorphism", json!({ "n": n }));
    let mut cases: Vec<CaseFn> = Vec::new();
    for k in 1..=n {
        cases.push(Box::new(move || {
            let got = bethe_alpha(n, k).specialize_diagonal();
            let expect = to_scalar_poly(&schur_in_vars(&Partition::column(k), n));
            Ok(vec![compare("Phi(a_k) = e_k", json!({ "k": k }), ValueKind::Other, &got, &expect)])
        }));
    }
    for r in 1..=n {
        for lambda in partitions_of(r) {
            cases.push(Box::new(move || {
                let got = immanant_sum(&lambda, n)?.specialize_diagonal();
                let expect = to_scalar_poly(&schur_in_vars(&lambda, n));
                Ok(vec![compare("Phi(sum Imm) = s_lambda", json!({ "shape": lambda }), ValueKind::Other, &got, &expect)])
            }));
        }
    }
    cases.push(Box::new(move || {
        let sums: Vec<QMatElement> = partitions_of(n).iter().map(|l| immanant_sum(l, n)).collect::<Result<_>>()?;
        let mut monos: Vec<_> = sums.iter().flat_map(|s| s.terms().map(|(m, _)| m.clone())).collect();
        monos.sort();
        monos.dedup();
        let rows = sums.iter().map(|s| monos.iter().map(|m| s.coeff(m)).collect()).collect();
        let got = rank(rows);
        Ok(vec![compare("rank", json!({ "n": n }), ValueKind::Other, &got, &partitions_of(n).len())])
    }));
    run_cases(&mut report, cases);
    Ok(report)
}

/// `Σ_I Imm_{χ^λ}(X_I)/m_{q²}(I) = Imm_{χ^λ}(Γ_r)/r!`.
pub fn check_hessenberg(lambda: &Partition, n: usize) -> Result<SuiteReport> {
    let r = lambda.weight();
    if r == 0 || n == 0 {
        return Err(Error::Precondition("nonempty shape and n ≥ 1".into()));
    }
    let mut report = SuiteReport::new("hessenberg", json!({ "shape": lambda, "n": n }));
    let gammas = gamma(n, r);
    let lhs = immanant_sum(lambda, n)?;
    let rhs = hessenberg_immanant(lambda, &gammas, n)?;
    let check = compare("Hessenberg immanant", json!({ "shape": lambda }), ValueKind::Element, &lhs, &rhs);
    report.cases = 1;
    report.failures.extend(check.failure);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn immanant_sums_vanish_past_n_rows() {
        assert!(!immanant_sum(&p(&[2, 1]), 2).unwrap().is_zero());
        assert!(immanant_sum(&p(&[1, 1, 1]), 2).unwrap().is_zero());
        let t = enumerate_syt(&p(&[1, 1, 1])).remove(0);
        assert!(idempotent_trace(&t, 2).is_zero());
        assert_eq!(immanant_sum(&p(&[1]), 2).unwrap(), bethe_alpha(2, 1));
    }

    #[test]
    fn splitting_weights_are_needed() {
        let (one, n) = (p(&[1]), 2);
        assert!(check_littlewood_two(&one, &one, n, &[1, 1]).unwrap().passed());
        let x = imm(&one, n, &[1]).unwrap();
        let unweighted = &x * &x;
        assert_ne!(unweighted, lr_side(&one, &one, n, &[1, 1]).unwrap());
        assert!(check_lmw(&p(&[1, 1]), n, &LmwRows::Multiset(vec![1, 1])).unwrap().passed());
        // the determinant side needs the same weight: unweighted it is x_11², off by m_{q²}(1,1)
        let psi = induced_character(&[1, 1], &InducedFrom::Sign).unwrap();
        assert_ne!(immanant_of(&psi, n, &[1, 1], &[1, 1]).unwrap(), unweighted);
    }

    #[test]
    fn hessenberg_beyond_n() {
        for r in 1..=4 {
            for lambda in partitions_of(r) {
                for n in 1..=3 {
                    let report = check_hessenberg(&lambda, n).unwrap();
                    assert!(report.passed(), "{}", report.to_text());
                }
            }
        }
    }

    #[test]
    fn newton_and_macmahon_small() {
        assert!(check_newton(2, 3).unwrap().passed());
        assert!(check_macmahon(2, 3).unwrap().passed());
        assert!(check_cayley_hamilton(2).unwrap().passed());
        assert_eq!(check_cayley_hamilton(2).unwrap().cases, 1);
    }

    #[test]
    fn goulden_jackson_witness_is_the_shared_sum() {
        let lambda = p(&[2, 1]);
        let gj = check_goulden_jackson(&lambda, 3).unwrap();
        let l3 = check_littlewood_three(&lambda, 3).unwrap();
        assert!(gj.passed() && l3.passed());
        assert_eq!(gj.witnesses["immanant_sum"], l3.witnesses["immanant_sum"]);
        assert_eq!(gj.witnesses["immanant_sum"], element_json(&immanant_sum(&lambda, 3).unwrap()));
    }

    #[test]
    fn rank_over_rational_functions() {
        let q = ScalarQ::q();
        let one = ScalarQ::one();
        let rows = vec![vec![one.clone(), q.clone()], vec![q.clone(), &q * &q]];
        assert_eq!(rank(rows), 1);
        let rows = vec![vec![one.clone(), q.clone()], vec![q.clone(), one]];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn preconditions() {
        assert!(matches!(check_alpha_commutativity(0), Err(Error::Precondition(_))));
        assert!(matches!(check_newton(2, 5), Err(Error::Precondition(_))));
        assert!(matches!(check_littlewood_one(&p(&[1]), &p(&[1]), 3), Err(Error::WeightMismatch(2, 3))));
        assert!(matches!(check_littlewood_two(&p(&[1]), &p(&[1]), 2, &[2, 1]), Err(Error::NotSorted(_))));
        assert!(matches!(check_lmw(&p(&[2]), 2, &LmwRows::Multiset(vec![1, 3])), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(check_q_kostant(&p(&[1, 1, 1]), 2, &Composition(vec![2, 1])), Err(Error::Precondition(_))));
        assert!(matches!(check_q_kostant(&p(&[2, 1]), 2, &Composition(vec![2, 2])), Err(Error::WeightMismatch(4, 3))));
    }
}
