use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use super::{Layout, TensorIndex, TensorOperator};
use crate::error::{Error, Result};
use crate::qmatrix::{gen_index, QMatElement};
use crate::scalar::ScalarQ;

/// Operator on `(C^n)^{⊗m}` with entries in `A_q(Mat_n)`.
///
/// Scalars commute with everything, so only the order of two `A`-valued
/// factors matters when composing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AValuedOperator {
    n: usize,
    m: usize,
    rows: BTreeMap<usize, BTreeMap<usize, QMatElement>>,
}

impl AValuedOperator {
    pub fn zero(n: usize, m: usize) -> Self {
        AValuedOperator { n, m, rows: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        Layout { n: self.n, m: self.m }.dim()
    }

    pub fn get(&self, row: usize, col: usize) -> QMatElement {
        self.rows.get(&row).and_then(|r| r.get(&col)).cloned().unwrap_or_else(|| QMatElement::zero(self.n))
    }

    pub fn entry(&self, row: &TensorIndex, col: &TensorIndex) -> QMatElement {
        self.get(row.flatten(self.n), col.flatten(self.n))
    }

    pub fn add(&mut self, row: usize, col: usize, x: &QMatElement, c: &ScalarQ) {
        let r = self.rows.entry(row).or_default();
        let slot = r.entry(col).or_insert_with(|| QMatElement::zero(self.n));
        slot.add_scaled(x, c);
        if slot.is_zero() {
            r.remove(&col);
            if r.is_empty() {
                self.rows.remove(&row);
            }
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &QMatElement)> {
        self.rows.iter().flat_map(|(&r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    fn check_scalar(&self, s: &TensorOperator) -> Result<()> {
        if self.n != s.n() {
            return Err(Error::DimensionMismatch(self.n, s.n()));
        }
        if self.m != s.m() {
            return Err(Error::RankMismatch(self.m, s.m()));
        }
        Ok(())
    }

    /// `S ∘ self`.
    pub fn left_scalar(&self, s: &TensorOperator) -> Result<AValuedOperator> {
        self.check_scalar(s)?;
        let mut out = AValuedOperator::zero(self.n, self.m);
        for (r, mid, c) in s.entries() {
            if let Some(row) = self.rows.get(&mid) {
                for (&col, x) in row {
                    out.add(r, col, x, c);
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ S`.
    pub fn right_scalar(&self, s: &TensorOperator) -> Result<AValuedOperator> {
        self.check_scalar(s)?;
        let mut out = AValuedOperator::zero(self.n, self.m);
        for (&r, row) in &self.rows {
            for (&mid, x) in row {
                if let Some(srow) = s.row(mid) {
                    for (&col, c) in srow {
                        out.add(r, col, x, c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ other`, multiplying entries in the order self-then-other.
    pub fn compose(&self, other: &AValuedOperator) -> Result<AValuedOperator> {
        if (self.n, self.m) != (other.n, other.m) {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        let mut out = AValuedOperator::zero(self.n, self.m);
        let one = ScalarQ::one();
        for (&r, row) in &self.rows {
            for (&mid, a) in row {
                if let Some(orow) = other.rows.get(&mid) {
                    for (&col, b) in orow {
                        out.add(r, col, &a.try_mul(b)?, &one);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &AValuedOperator) -> Result<AValuedOperator> {
        if (self.n, self.m) != (other.n, other.m) {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        let mut out = self.clone();
        let minus = ScalarQ::from_int(-1);
        for (r, c, x) in other.entries() {
            out.add(r, c, x, &minus);
        }
        Ok(out)
    }

    /// `Σ_K A_{KK}` over the whole basis.
    pub fn trace(&self) -> QMatElement {
        let mut acc = QMatElement::zero(self.n);
        for (&r, row) in &self.rows {
            if let Some(x) = row.get(&r) {
                acc.add_assign_ref(x);
            }
        }
        acc
    }

    /// Apply the counit `x_ij ↦ δ_ij` entrywise.
    pub fn counit(&self) -> TensorOperator {
        let mut out = TensorOperator::zero(self.n, self.m);
        for (r, c, x) in self.entries() {
            out.add(r, c, x.counit());
        }
        out
    }
}

/// Normal form of `x_{i_1 j_1} ⋯ x_{i_m j_m}`, 1-based letters.
pub fn x_entry(n: usize, rows: &[usize], cols: &[usize]) -> Result<QMatElement> {
    if rows.len() != cols.len() {
        return Err(Error::LengthMismatch(rows.len(), cols.len()));
    }
    let word: Vec<(usize, usize)> = rows.iter().copied().zip(cols.iter().copied()).collect();
    QMatElement::normal_form(n, &word, &ScalarQ::one())
}

static CHAIN_CACHE: Lazy<Mutex<HashMap<(usize, usize), Arc<AValuedOperator>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// `X_1 ⋯ X_m`: entry `(I, J)` is the normal form of `x_{i_1 j_1} ⋯ x_{i_m j_m}`.
pub fn x_chain(n: usize, m: usize) -> Arc<AValuedOperator> {
    if let Some(hit) = CHAIN_CACHE.lock().unwrap().get(&(n, m)) {
        return hit.clone();
    }
    let mut op = AValuedOperator::zero(n, m);
    let dim = op.dim();
    let one = ScalarQ::one();
    for r in 0..dim {
        let ri = TensorIndex::unflatten(n, m, r);
        for c in 0..dim {
            let ci = TensorIndex::unflatten(n, m, c);
            let word: Vec<u8> = ri.letters().iter().zip(ci.letters()).map(|(&i, &j)| gen_index(n, i, j)).collect();
            op.add(r, c, &QMatElement::from_word(n, &word), &one);
        }
    }
    let op = Arc::new(op);
    CHAIN_CACHE.lock().unwrap().insert((n, m), op.clone());
    op
}

/// The coaction `e_J ↦ Σ_I e_I ⊗ x_{i_1 j_1} ⋯ x_{i_m j_m}`, built one tensor
/// factor at a time by multiplying the coefficients of `C^n ↦ C^n ⊗ A`.
pub fn coaction(n: usize, m: usize) -> AValuedOperator {
    let mut cur = AValuedOperator::zero(n, 0);
    cur.add(0, 0, &QMatElement::one(n), &ScalarQ::one());
    let one = ScalarQ::one();
    for k in 1..=m {
        let mut next = AValuedOperator::zero(n, k);
        for (r, c, x) in cur.entries() {
            for i in 0..n {
                for j in 0..n {
                    let y = x.try_mul(&QMatElement::generator(n, i + 1, j + 1)).expect("same n");
                    next.add(r * n + i, c * n + j, &y, &one);
                }
            }
        }
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::HeckeElement;
    use crate::tensorrep::hecke_action;

    #[test]
    fn chain_entries() {
        let x1 = x_chain(2, 1);
        assert_eq!(x1.get(0, 1), QMatElement::generator(2, 1, 2));
        let x2 = x_chain(2, 2);
        let idx = |l: &[usize]| TensorIndex::new(2, l.to_vec()).unwrap();
        let e = x2.entry(&idx(&[1, 2]), &idx(&[2, 1]));
        assert_eq!(e, QMatElement::normal_form(2, &[(1, 2), (2, 1)], &ScalarQ::one()).unwrap());
        assert_eq!(e.len(), 1);
        let e = x2.entry(&idx(&[2, 2]), &idx(&[1, 1]));
        assert_eq!(e, QMatElement::generator(2, 2, 1).try_mul(&QMatElement::generator(2, 2, 1)).unwrap());
        assert!(x_entry(2, &[1], &[1, 2]).is_err());
    }

    #[test]
    fn coaction_matches_chain() {
        let d = coaction(2, 1);
        // Δ e_1 = e_1 ⊗ x_11 + e_2 ⊗ x_21
        assert_eq!(d.get(0, 0), QMatElement::generator(2, 1, 1));
        assert_eq!(d.get(1, 0), QMatElement::generator(2, 2, 1));
        for n in 1..=3 {
            for m in 1..=3 {
                let d = coaction(n, m);
                assert_eq!(d, *x_chain(n, m));
                assert_eq!(d.counit(), TensorOperator::identity(n, m));
            }
        }
    }

    #[test]
    fn rtt_intertwining() {
        for n in 2..=3 {
            for m in 2..=3 {
                let x = x_chain(n, m);
                for k in 1..m {
                    let r = hecke_action(&HeckeElement::generator(m, k).unwrap(), n);
                    assert_eq!(x.left_scalar(&r).unwrap(), x.right_scalar(&r).unwrap(), "n={n} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn compose_and_trace() {
        let x = x_chain(2, 1);
        let sq = x.compose(&x).unwrap();
        let g = |i, j| QMatElement::generator(2, i, j);
        let expect = &(&g(1, 1) * &g(1, 1)) + &(&g(1, 2) * &g(2, 1));
        assert_eq!(sq.get(0, 0), expect);
        assert_eq!(x.trace(), &g(1, 1) + &g(2, 2));
        assert!(x.try_sub(&x).unwrap().is_zero());
    }
}
