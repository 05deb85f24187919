use serde::{Deserialize, Serialize};

use super::{det_q, idempotent_diagonal_sum, normalized_immanant};
use crate::combinatorics::{classical_character, multisets, perm_table, subsets, Partition, Tableau};
use crate::error::{Error, Result};
use crate::hecke::primitive_idempotent;
use crate::qmatrix::QMatElement;
use crate::scalar::ScalarQ;
use crate::tensorrep::TensorIndex;

/// An `n × n` matrix over `A_q(Mat_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AMatrix {
    n: usize,
    entries: Vec<QMatElement>,
}

impl AMatrix {
    pub fn zero(n: usize) -> Self {
        AMatrix { n, entries: vec![QMatElement::zero(n); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![QMatElement::zero(n); n * n];
        for i in 0..n {
            entries[i * n + i] = QMatElement::one(n);
        }
        AMatrix { n, entries }
    }

    /// The generator matrix `X = (x_ij)`.
    pub fn generator(n: usize) -> Self {
        let entries = (0..n * n).map(|k| QMatElement::generator(n, k / n + 1, k % n + 1)).collect();
        AMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &QMatElement {
        &self.entries[r * self.n + c]
    }

    pub fn trace(&self) -> QMatElement {
        let mut acc = QMatElement::zero(self.n);
        for i in 0..self.n {
            acc.add_assign_ref(self.get(i, i));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// `self + a · other`, with `a` multiplying each entry from the left.
    pub fn add_left_multiple(&self, a: &QMatElement, other: &AMatrix) -> AMatrix {
        let entries = self.entries.iter().zip(&other.entries).map(|(s, o)| s + &(a * o)).collect();
        AMatrix { n: self.n, entries }
    }
}

/// `Y * Z = tr_1 P^q Y_1 Z_2`, i.e. `(Y*Z)_{bd} = Σ_a w(a,b) Y_{ba} Z_{ad}` with
/// `w = 1, q, q^{-1}` for `a = b`, `a > b`, `a < b`.
pub fn star_product(y: &AMatrix, z: &AMatrix) -> Result<AMatrix> {
    if y.n != z.n {
        return Err(Error::DimensionMismatch(y.n, z.n));
    }
    let n = y.n;
    let mut entries = Vec::with_capacity(n * n);
    for b in 0..n {
        for d in 0..n {
            let mut acc = QMatElement::zero(n);
            for a in 0..n {
                let w = match a.cmp(&b) {
                    std::cmp::Ordering::Equal => ScalarQ::one(),
                    std::cmp::Ordering::Greater => ScalarQ::q(),
                    std::cmp::Ordering::Less => ScalarQ::q_pow(-1),
                };
                acc.add_scaled(&y.get(b, a).try_mul(z.get(a, d))?, &w);
            }
            entries.push(acc);
        }
    }
    Ok(AMatrix { n, entries })
}

/// `X^{[0]}, …, X^{[k]}`.
pub fn star_power(n: usize, k: usize) -> Vec<AMatrix> {
    let x = AMatrix::generator(n);
    let mut out = vec![AMatrix::identity(n)];
    for j in 1..=k {
        let next = if j == 1 { x.clone() } else { star_product(&out[j - 1], &x).expect("same n") };
        out.push(next);
    }
    out
}

/// `γ_0, …, γ_k` with `γ_j = tr X^{[j]}`.
pub fn gamma(n: usize, k: usize) -> Vec<QMatElement> {
    star_power(n, k).iter().map(|m| m.trace()).collect()
}

/// `α_k = Σ_{|I| = k} det_q(X_I)` over increasing subsets.
pub fn bethe_alpha(n: usize, k: usize) -> QMatElement {
    if k == 0 {
        return QMatElement::one(n);
    }
    let mut acc = QMatElement::zero(n);
    for s in subsets(n, k) {
        acc.add_assign_ref(&det_q(n, &s, &s).expect("valid subset"));
    }
    acc
}

/// `β_k = Σ_{|I| = k} per_q(X_I) / m_{q²}(I)` over nondecreasing multisets.
pub fn bethe_beta(n: usize, k: usize) -> QMatElement {
    if k == 0 {
        return QMatElement::one(n);
    }
    let mut acc = QMatElement::zero(n);
    for s in multisets(n, k) {
        acc.add_assign_ref(&normalized_immanant(&Partition::row(k), n, &s).expect("valid multiset"));
    }
    acc
}

/// `tr E_T X_1 ⋯ X_k` over the full tensor basis.
pub fn idempotent_trace(tableau: &Tableau, n: usize) -> QMatElement {
    let k = tableau.size();
    if k == 0 {
        return QMatElement::one(n);
    }
    let e = primitive_idempotent(tableau).expect("standard tableau");
    let dim = n.pow(k as u32);
    let tuples = (0..dim).map(|i| TensorIndex::unflatten(n, k, i).letters().to_vec());
    idempotent_diagonal_sum(&e, n, tuples)
}

/// `α_k = tr E^{(1^k)} X_1 ⋯ X_k`.
pub fn bethe_alpha_trace(n: usize, k: usize) -> QMatElement {
    let t = Tableau::standard((1..=k).map(|i| vec![i]).collect()).expect("column tableau");
    idempotent_trace(&t, n)
}

/// `β_k = tr E^{(k)} X_1 ⋯ X_k`.
pub fn bethe_beta_trace(n: usize, k: usize) -> QMatElement {
    let rows = if k == 0 { Vec::new() } else { vec![(1..=k).collect()] };
    let t = Tableau::standard(rows).expect("row tableau");
    idempotent_trace(&t, n)
}

/// Coefficients `[(−1)^k α_k]` of `char_q(X, t)`, highest power of `t` first.
pub fn char_poly(n: usize) -> Vec<QMatElement> {
    (0..=n)
        .map(|k| {
            let a = bethe_alpha(n, k);
            if k % 2 == 1 {
                -&a
            } else {
                a
            }
        })
        .collect()
}

/// `Σ_σ χ^λ(σ) Π_i M_{i,σ(i)}` for a square matrix of pairwise commuting entries.
pub fn classical_immanant(lambda: &Partition, matrix: &[Vec<QMatElement>], n: usize) -> Result<QMatElement> {
    let r = matrix.len();
    if lambda.weight() != r {
        return Err(Error::WeightMismatch(lambda.weight(), r));
    }
    if let Some(row) = matrix.iter().find(|row| row.len() != r) {
        return Err(Error::LengthMismatch(row.len(), r));
    }
    let mut acc = QMatElement::zero(n);
    for sigma in &perm_table(r).perms {
        let mut prod = QMatElement::one(n);
        for (i, row) in matrix.iter().enumerate() {
            let entry = &row[sigma.image(i)];
            if entry.is_zero() {
                prod = QMatElement::zero(n);
                break;
            }
            prod = &prod * entry;
        }
        if !prod.is_zero() {
            acc.add_scaled(&prod, &ScalarQ::from_int(classical_character(lambda, sigma)?));
        }
    }
    Ok(acc)
}

/// Lower Hessenberg matrix with `γ_{i-j+1}` on and below the diagonal and
/// `i` at position `(i, i+1)` (1-based).
pub fn hessenberg_matrix(gammas: &[QMatElement], r: usize, n: usize) -> Result<Vec<Vec<QMatElement>>> {
    if gammas.len() <= r {
        return Err(Error::LengthMismatch(gammas.len(), r + 1));
    }
    Ok((0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if j <= i {
                        gammas[i - j + 1].clone()
                    } else if j == i + 1 {
                        QMatElement::scalar(n, ScalarQ::from_int(i as i64 + 1))
                    } else {
                        QMatElement::zero(n)
                    }
                })
                .collect()
        })
        .collect())
}

/// `Imm_{χ^λ}(Γ_r) / r!` with `gammas[k] = γ_k`.
pub fn hessenberg_immanant(lambda: &Partition, gammas: &[QMatElement], n: usize) -> Result<QMatElement> {
    let r = lambda.weight();
    let m = hessenberg_matrix(gammas, r, n)?;
    let fact: i64 = (1..=r as i64).product();
    Ok(classical_immanant(lambda, &m, n)?.scale(&ScalarQ::from_int(fact).inv()?))
}

/// `α_0..α_n`, `β_0..β_d` and `γ_0..γ_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetheGenerators {
    pub n: usize,
    pub alpha: Vec<QMatElement>,
    pub beta: Vec<QMatElement>,
    pub gamma: Vec<QMatElement>,
}

impl BetheGenerators {
    pub fn compute(n: usize, degree: usize) -> Self {
        BetheGenerators {
            n,
            alpha: (0..=n).map(|k| bethe_alpha(n, k)).collect(),
            beta: (0..=degree).map(|k| bethe_beta(n, k)).collect(),
            gamma: gamma(n, degree),
        }
    }

    /// `α_k`, zero outside `0..=n`.
    pub fn alpha(&self, k: i64) -> QMatElement {
        usize::try_from(k).ok().and_then(|k| self.alpha.get(k)).cloned().unwrap_or_else(|| QMatElement::zero(self.n))
    }

    /// `β_k`, zero for negative `k`.
    pub fn beta(&self, k: i64) -> QMatElement {
        if k < 0 {
            return QMatElement::zero(self.n);
        }
        self.beta.get(k as usize).cloned().expect("β computed to this degree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::CommPoly;
    use crate::scalar::Rational;

    fn x(n: usize, i: usize, j: usize) -> QMatElement {
        QMatElement::generator(n, i, j)
    }

    #[test]
    fn low_degree_generators() {
        for n in 1..=3 {
            let tr = (1..=n).fold(QMatElement::zero(n), |acc, i| &acc + &x(n, i, i));
            assert_eq!(bethe_alpha(n, 0), QMatElement::one(n));
            assert_eq!(bethe_alpha(n, 1), tr);
            assert_eq!(bethe_beta(n, 1), tr);
            assert!(bethe_alpha(n, n + 1).is_zero());
            assert_eq!(gamma(n, 1)[1], tr);
            assert_eq!(star_power(n, 1)[1], AMatrix::generator(n));
            let cp = char_poly(n);
            assert_eq!(cp[0], QMatElement::one(n));
            assert_eq!(cp[1], -&tr);
        }
        assert_eq!(bethe_beta(1, 2), &x(1, 1, 1) * &x(1, 1, 1));
    }

    #[test]
    fn subset_and_trace_routes_agree() {
        for n in 1..=3 {
            for k in 0..=n + 1 {
                assert_eq!(bethe_alpha(n, k), bethe_alpha_trace(n, k), "α n={n} k={k}");
            }
            for k in 0..=3 {
                assert_eq!(bethe_beta(n, k), bethe_beta_trace(n, k), "β n={n} k={k}");
            }
        }
    }

    #[test]
    fn gamma_two_at_q_one() {
        // tr(X²) in the commutative limit
        let n = 2;
        let got = gamma(n, 2)[2].specialize_q_one().unwrap();
        let mut expect = CommPoly::<Rational>::zero(4);
        for i in 0..n {
            for j in 0..n {
                let mut e = vec![0u32; 4];
                e[i * n + j] += 1;
                e[j * n + i] += 1;
                expect.add_term(e, Rational::ONE);
            }
        }
        assert_eq!(got, expect);
    }

    #[test]
    fn hessenberg_small() {
        let n = 1;
        let g1 = x(1, 1, 1);
        let g2 = QMatElement::scalar(1, ScalarQ::from_int(5));
        let gammas = vec![QMatElement::one(n), g1.clone(), g2.clone()];
        assert_eq!(hessenberg_immanant(&Partition::row(1), &gammas, n).unwrap(), g1);
        let half = ScalarQ::from_rational(Rational::new(1, 2));
        let sq = &g1 * &g1;
        assert_eq!(hessenberg_immanant(&Partition::column(2), &gammas, n).unwrap(), (&sq - &g2).scale(&half));
        assert_eq!(hessenberg_immanant(&Partition::row(2), &gammas, n).unwrap(), (&sq + &g2).scale(&half));
    }
}
