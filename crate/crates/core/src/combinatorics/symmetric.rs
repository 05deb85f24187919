use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use once_cell::sync::Lazy;

use super::partition::Partition;
use super::permutation::Permutation;
use super::poly::CommPoly;
use super::tableau::enumerate_ssyt;
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// `s_λ(x_1, …, x_n)` as a sum over semistandard tableaux.
pub fn schur_in_vars(lambda: &Partition, n: usize) -> CommPoly {
    let mut out = CommPoly::zero(n);
    for t in enumerate_ssyt(lambda, n, None) {
        let mut e = vec![0u32; n];
        for x in t.reading_word() {
            e[x - 1] += 1;
        }
        out.add_term(e, Rational::ONE);
    }
    out
}

/// `s_μ s_ν = Σ_λ c^λ_{μν} s_λ`, by peeling off leading monomials.
pub fn lr_expansion(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, i64> {
    static CACHE: Lazy<Mutex<HashMap<(Partition, Partition), BTreeMap<Partition, i64>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    let key = (mu.clone(), nu.clone());
    if let Some(hit) = CACHE.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let n = (mu.weight() + nu.weight()).max(1);
    let mut rest = schur_in_vars(mu, n).mul(&schur_in_vars(nu, n));
    let mut out = BTreeMap::new();
    while let Some((e, c)) = rest.leading_term() {
        let lambda = Partition::new(e.iter().map(|&x| x as usize).collect())
            .expect("leading monomial of a symmetric polynomial is a partition");
        let c = c.clone();
        assert!(c.is_integer());
        let ci = c.numer().try_into().expect("small structure constant");
        rest = rest.sub(&schur_in_vars(&lambda, n).scale(&c));
        out.insert(lambda, ci);
    }
    CACHE.lock().unwrap().insert(key, out.clone());
    out
}

/// The Littlewood–Richardson coefficient `c^λ_{μν}`.
pub fn littlewood_richardson(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() + nu.weight() {
        return Err(Error::WeightMismatch(lambda.weight(), mu.weight() + nu.weight()));
    }
    Ok(lr_expansion(mu, nu).get(lambda).copied().unwrap_or(0))
}

/// `χ^λ` on the class of cycle type `rho`, by Murnaghan–Nakayama on beta-sets.
pub fn character_on_class(lambda: &Partition, rho: &Partition) -> i64 {
    fn rec(beta: &mut Vec<usize>, rho: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
        if rho.is_empty() {
            return 1;
        }
        let key = (beta.clone(), rho.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let r = rho[0];
        let mut total = 0;
        for idx in 0..beta.len() {
            let b = beta[idx];
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            beta[idx] = b - r;
            total += sign * rec(beta, &rho[1..], memo);
            beta[idx] = b;
        }
        memo.insert(key, total);
        total
    }
    if lambda.weight() != rho.weight() {
        return 0;
    }
    let l = lambda.len();
    let mut beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + (l - 1 - i)).collect();
    rec(&mut beta, rho.parts(), &mut HashMap::new())
}

/// Classical irreducible character `χ^λ(σ)`.
pub fn classical_character(lambda: &Partition, sigma: &Permutation) -> Result<i64> {
    if lambda.weight() != sigma.m() {
        return Err(Error::WeightMismatch(lambda.weight(), sigma.m()));
    }
    Ok(character_on_class(lambda, &sigma.cycle_type()))
}
