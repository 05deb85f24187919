//! Quantum immanants, the Bethe generators `α_k`, `β_k`, `γ_k`, the
//! `*`-powers of the generator matrix and Hessenberg immanants.

mod bethe;

use serde::{Deserialize, Serialize};

pub use bethe::{
    bethe_alpha, bethe_alpha_trace, bethe_beta, bethe_beta_trace, char_poly, classical_immanant, gamma,
    hessenberg_immanant, hessenberg_matrix, idempotent_trace, star_power, star_product, AMatrix, BetheGenerators,
};

use crate::combinatorics::{enumerate_syt, rearrangements, Partition};
use crate::error::{Error, Result};
use crate::hecke::{irreducible_character, primitive_idempotent, HeckeElement};
use crate::qmatrix::{gen_index, QMatElement};
use crate::scalar::{multiset_multiplicity, Multiplicity};
use crate::tensorrep::{hecke_row, TensorIndex};

/// Inputs of `Imm_χ(X^I_J)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImmanantSpec {
    pub character: HeckeElement,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub n: usize,
}

fn check_letters(n: usize, word: &[usize]) -> Result<()> {
    match word.iter().find(|&&x| x == 0 || x > n) {
        Some(&bad) => Err(Error::IndexOutOfRange { index: bad, bound: n }),
        None => Ok(()),
    }
}

/// `Σ_K c_K x_{k_1 j_1} ⋯ x_{k_m j_m}` for a row vector `c` on the tensor basis.
fn contract_row(n: usize, m: usize, row: &crate::tensorrep::TensorVector, cols: &[usize]) -> QMatElement {
    let mut acc = QMatElement::zero(n);
    for (&k, c) in row {
        let ks = TensorIndex::unflatten(n, m, k);
        let word: Vec<u8> = ks.letters().iter().zip(cols).map(|(&i, &j)| gen_index(n, i, j)).collect();
        acc.add_scaled(&QMatElement::from_word(n, &word), c);
    }
    acc
}

/// `⟨I| χ X_1 ⋯ X_m |J⟩`.
pub fn immanant(spec: &ImmanantSpec) -> Result<QMatElement> {
    let m = spec.character.m();
    if spec.rows.len() != m {
        return Err(Error::LengthMismatch(spec.rows.len(), m));
    }
    if spec.cols.len() != m {
        return Err(Error::LengthMismatch(spec.cols.len(), m));
    }
    check_letters(spec.n, &spec.rows)?;
    check_letters(spec.n, &spec.cols)?;
    let row = TensorIndex::new(spec.n, spec.rows.clone())?.flatten(spec.n);
    let v = hecke_row(&spec.character, spec.n, row);
    Ok(contract_row(spec.n, m, &v, &spec.cols))
}

/// Shorthand for [`immanant`] with owned-free arguments.
pub fn immanant_of(character: &HeckeElement, n: usize, rows: &[usize], cols: &[usize]) -> Result<QMatElement> {
    immanant(&ImmanantSpec { character: character.clone(), rows: rows.to_vec(), cols: cols.to_vec(), n })
}

/// `Imm_{χ^λ}(X^I_J)` for an irreducible character.
pub fn irreducible_immanant(lambda: &Partition, n: usize, rows: &[usize], cols: &[usize]) -> Result<QMatElement> {
    immanant_of(&irreducible_character(lambda), n, rows, cols)
}

/// `det_q(X^I_J)`.
pub fn det_q(n: usize, rows: &[usize], cols: &[usize]) -> Result<QMatElement> {
    irreducible_immanant(&Partition::column(rows.len()), n, rows, cols)
}

/// `per_q(X^I_J)`.
pub fn per_q(n: usize, rows: &[usize], cols: &[usize]) -> Result<QMatElement> {
    irreducible_immanant(&Partition::row(rows.len()), n, rows, cols)
}

fn check_sorted(word: &[usize]) -> Result<()> {
    if word.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::NotSorted(word.to_vec()));
    }
    Ok(())
}

/// `Imm_{χ^λ}(X_I) / m_{q²}(I)` for a nondecreasing `I`.
pub fn normalized_immanant(lambda: &Partition, n: usize, word: &[usize]) -> Result<QMatElement> {
    check_sorted(word)?;
    if lambda.weight() != word.len() {
        return Err(Error::WeightMismatch(lambda.weight(), word.len()));
    }
    let imm = irreducible_immanant(lambda, n, word, word)?;
    Ok(imm.scale(&multiset_multiplicity(word, Multiplicity::Q2)?.inv()?))
}

/// The same value as `m(I)^{-1} Σ_σ ⟨I_σ| E_T X_1⋯X_m |I_σ⟩` for one standard tableau `T`.
pub fn normalized_immanant_via_idempotent(lambda: &Partition, n: usize, word: &[usize]) -> Result<QMatElement> {
    check_sorted(word)?;
    check_letters(n, word)?;
    if lambda.weight() != word.len() {
        return Err(Error::WeightMismatch(lambda.weight(), word.len()));
    }
    let t = enumerate_syt(lambda).into_iter().next().expect("every shape has a standard tableau");
    let e = primitive_idempotent(&t)?;
    // each distinct rearrangement occurs m(I) times among the I_σ
    Ok(idempotent_diagonal_sum(&e, n, rearrangements(word)))
}

/// `Σ_K ⟨K| h X_1⋯X_m |K⟩` over the given basis tuples.
pub(crate) fn idempotent_diagonal_sum(h: &HeckeElement, n: usize, tuples: impl IntoIterator<Item = Vec<usize>>) -> QMatElement {
    let m = h.m();
    let mut acc = QMatElement::zero(n);
    for k in tuples {
        let row = TensorIndex::new(n, k.clone()).expect("letters in range").flatten(n);
        let v = hecke_row(h, n, row);
        acc.add_assign_ref(&contract_row(n, m, &v, &k));
    }
    acc
}
