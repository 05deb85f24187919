//! The tensor space `(C^n)^{⊗m}`: R-matrices, the Hecke action through `Ř`,
//! weight projectors, the bilinear pairing and the `A_q(Mat_n)` coaction.

mod avalued;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use avalued::{coaction, x_chain, x_entry, AValuedOperator};

use crate::combinatorics::{perm_table, Composition, Permutation};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::scalar::ScalarQ;

/// A basis vector `|i_1, …, i_m⟩`, letters 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct TensorIndex {
    letters: Vec<usize>,
}

impl TensorIndex {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&x| x == 0 || x > n) {
            return Err(Error::IndexOutOfRange { index: bad, bound: n });
        }
        Ok(TensorIndex { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn m(&self) -> usize {
        self.letters.len()
    }

    /// Position in the lexicographic basis order.
    pub fn flatten(&self, n: usize) -> usize {
        self.letters.iter().fold(0, |acc, &x| acc * n + (x - 1))
    }

    pub fn unflatten(n: usize, m: usize, mut idx: usize) -> Self {
        let mut letters = vec![0; m];
        for slot in letters.iter_mut().rev() {
            *slot = idx % n + 1;
            idx /= n;
        }
        TensorIndex { letters }
    }

    /// Occurrence counts of each letter.
    pub fn weight(&self, n: usize) -> Composition {
        let mut w = vec![0; n];
        for &x in &self.letters {
            w[x - 1] += 1;
        }
        Composition(w)
    }
}

impl fmt::Display for TensorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "|{}⟩", s.join(","))
    }
}

/// Sparse vector on the flattened tensor basis.
pub type TensorVector = BTreeMap<usize, ScalarQ>;

fn add_entry(v: &mut TensorVector, k: usize, c: ScalarQ) {
    if c.is_zero() {
        return;
    }
    match v.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// `Σ_K u_K v_K`: the basis is orthonormal and the form is bilinear.
pub fn pairing(u: &TensorVector, v: &TensorVector) -> ScalarQ {
    u.iter().filter_map(|(k, a)| v.get(k).map(|b| a * b)).sum()
}

/// Layout helper: digit of position `p` in a flattened index.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Layout {
    pub n: usize,
    pub m: usize,
}

impl Layout {
    pub fn dim(&self) -> usize {
        self.n.pow(self.m as u32)
    }

    fn stride(&self, p: usize) -> usize {
        self.n.pow((self.m - 1 - p) as u32)
    }

    pub fn digit(&self, idx: usize, p: usize) -> usize {
        (idx / self.stride(p)) % self.n
    }

    fn with_digit(&self, idx: usize, p: usize, d: usize) -> usize {
        idx - self.digit(idx, p) * self.stride(p) + d * self.stride(p)
    }

    /// Swap the letters at positions `p` and `p + 1`.
    pub fn swap_adjacent(&self, idx: usize, p: usize) -> usize {
        let (a, b) = (self.digit(idx, p), self.digit(idx, p + 1));
        self.with_digit(self.with_digit(idx, p, b), p + 1, a)
    }
}

/// `v ↦ v Ř_p` for a row vector, with `Ř_p` acting on factors `p, p+1` (0-based).
///
/// `Ř` is symmetric in the standard basis, so the same map is also `Ř_p v`.
pub(crate) fn apply_rcheck(layout: Layout, v: &TensorVector, p: usize) -> TensorVector {
    let qq = ScalarQ::q_minus_qinv();
    let q = ScalarQ::q();
    let mut out = TensorVector::new();
    for (&k, c) in v {
        let (a, b) = (layout.digit(k, p), layout.digit(k, p + 1));
        if a == b {
            add_entry(&mut out, k, c * &q);
        } else {
            add_entry(&mut out, layout.swap_adjacent(k, p), c.clone());
            if a > b {
                add_entry(&mut out, k, c * &qq);
            }
        }
    }
    out
}

/// Sparse operator on `(C^n)^{⊗m}` with coefficients in `Q(q)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorOperator {
    n: usize,
    m: usize,
    rows: BTreeMap<usize, TensorVector>,
}

impl TensorOperator {
    pub fn zero(n: usize, m: usize) -> Self {
        TensorOperator { n, m, rows: BTreeMap::new() }
    }

    pub fn identity(n: usize, m: usize) -> Self {
        let mut op = Self::zero(n, m);
        for k in 0..op.dim() {
            op.add(k, k, ScalarQ::one());
        }
        op
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.layout().dim()
    }

    pub(crate) fn layout(&self) -> Layout {
        Layout { n: self.n, m: self.m }
    }

    pub fn get(&self, row: usize, col: usize) -> ScalarQ {
        self.rows.get(&row).and_then(|r| r.get(&col)).cloned().unwrap_or_default()
    }

    pub fn entry(&self, row: &TensorIndex, col: &TensorIndex) -> ScalarQ {
        self.get(row.flatten(self.n), col.flatten(self.n))
    }

    /// Adds `c` to the entry at `(row, col)`.
    pub fn add(&mut self, row: usize, col: usize, c: ScalarQ) {
        let r = self.rows.entry(row).or_default();
        add_entry(r, col, c);
        if r.is_empty() {
            self.rows.remove(&row);
        }
    }

    pub fn row(&self, row: usize) -> Option<&TensorVector> {
        self.rows.get(&row)
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &ScalarQ)> {
        self.rows.iter().flat_map(|(&r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.values().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    fn check_shape(&self, other: &TensorOperator) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        if self.m != other.m {
            return Err(Error::RankMismatch(self.m, other.m));
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &TensorOperator) -> Result<TensorOperator> {
        self.check_shape(other)?;
        let mut out = TensorOperator::zero(self.n, self.m);
        for (&r, row) in &self.rows {
            let mut acc = TensorVector::new();
            for (&mid, a) in row {
                if let Some(orow) = other.rows.get(&mid) {
                    for (&c, b) in orow {
                        add_entry(&mut acc, c, a * b);
                    }
                }
            }
            if !acc.is_empty() {
                out.rows.insert(r, acc);
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &TensorOperator) -> Result<TensorOperator> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add(r, c, v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &TensorOperator) -> Result<TensorOperator> {
        self.try_add(&other.scale(&ScalarQ::from_int(-1)))
    }

    pub fn scale(&self, s: &ScalarQ) -> TensorOperator {
        let mut out = TensorOperator::zero(self.n, self.m);
        for (r, c, v) in self.entries() {
            out.add(r, c, v * s);
        }
        out
    }

    pub fn transpose(&self) -> TensorOperator {
        let mut out = TensorOperator::zero(self.n, self.m);
        for (r, c, v) in self.entries() {
            out.add(c, r, v.clone());
        }
        out
    }

    /// Column-vector action `A v`.
    pub fn apply(&self, v: &TensorVector) -> TensorVector {
        let mut out = TensorVector::new();
        for (&r, row) in &self.rows {
            let s: ScalarQ = row.iter().filter_map(|(c, a)| v.get(c).map(|b| a * b)).sum();
            add_entry(&mut out, r, s);
        }
        out
    }

    /// Place a two-factor operator on factors `p1`, `p2` (0-based, distinct) of `m`.
    pub fn embed(&self, m: usize, p1: usize, p2: usize) -> Result<TensorOperator> {
        if self.m != 2 {
            return Err(Error::RankMismatch(self.m, 2));
        }
        if p1 == p2 || p1 >= m || p2 >= m {
            return Err(Error::Precondition(format!("factor positions {p1}, {p2} in {m}")));
        }
        let n = self.n;
        let big = Layout { n, m };
        let mut out = TensorOperator::zero(n, m);
        for col in 0..big.dim() {
            let (j, l) = (big.digit(col, p1), big.digit(col, p2));
            for r2 in 0..n * n {
                let v = self.get(r2, j * n + l);
                if v.is_zero() {
                    continue;
                }
                let (i, k) = (r2 / n, r2 % n);
                let row = big.with_digit(big.with_digit(col, p1, i), p2, k);
                out.add(row, col, v);
            }
        }
        Ok(out)
    }
}

/// The named two-factor operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RVariant {
    R,
    RPlus,
    RMinus,
    P,
    RCheck,
    Pq,
}

impl FromStr for RVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "R" => RVariant::R,
            "R+" => RVariant::RPlus,
            "R-" => RVariant::RMinus,
            "P" => RVariant::P,
            "Rcheck" => RVariant::RCheck,
            "Pq" => RVariant::Pq,
            other => return Err(Error::UnknownVariant(other.to_string())),
        })
    }
}

/// The two-factor operator of the given variant; `e_ij ⊗ e_kl` sits at row `(i,k)`, column `(j,l)`.
pub fn r_matrix(n: usize, variant: RVariant) -> TensorOperator {
    let mut op = TensorOperator::zero(n, 2);
    let at = |i: usize, k: usize| i * n + k;
    let q = ScalarQ::q();
    let qinv = ScalarQ::q_pow(-1);
    let qq = ScalarQ::q_minus_qinv();
    for i in 0..n {
        for j in 0..n {
            // e_ii ⊗ e_jj and e_ij ⊗ e_ji
            let (diag, cross) = (at(i, j), at(j, i));
            match variant {
                RVariant::R | RVariant::RPlus | RVariant::RMinus => {
                    let d = match (i == j, variant) {
                        (true, RVariant::RMinus) => qinv.clone(),
                        (true, _) => q.clone(),
                        (false, _) => ScalarQ::one(),
                    };
                    op.add(diag, diag, d);
                    let off = match variant {
                        RVariant::R if i < j => qq.clone(),
                        RVariant::RPlus if i > j => qq.clone(),
                        RVariant::RMinus if i < j => -&qq,
                        _ => ScalarQ::zero(),
                    };
                    op.add(diag, cross, off);
                }
                RVariant::P => op.add(diag, cross, ScalarQ::one()),
                RVariant::RCheck => {
                    if i == j {
                        op.add(diag, diag, q.clone());
                    } else {
                        op.add(diag, cross, ScalarQ::one());
                        if i > j {
                            op.add(diag, diag, qq.clone());
                        }
                    }
                }
                RVariant::Pq => {
                    let c = match i.cmp(&j) {
                        std::cmp::Ordering::Equal => ScalarQ::one(),
                        std::cmp::Ordering::Greater => q.clone(),
                        std::cmp::Ordering::Less => qinv.clone(),
                    };
                    op.add(diag, cross, c);
                }
            }
        }
    }
    op
}

/// `⟨I| ρ(h)` as a row vector, where `T_k ↦ Ř_k`.
pub fn hecke_row(h: &HeckeElement, n: usize, row: usize) -> TensorVector {
    let m = h.m();
    let layout = Layout { n, m };
    let mut start = TensorVector::new();
    start.insert(row, ScalarQ::one());
    if m < 2 {
        let c = h.coeff(&Permutation::identity(m));
        return if c.is_zero() { TensorVector::new() } else { [(row, c)].into_iter().collect() };
    }
    let table = perm_table(m);
    // ⟨I|Ř_σ for each σ, grown along the weak order: Ř_σ = Ř_π Ř_i when σ = π s_i is longer.
    let mut order: Vec<usize> = (0..table.len()).collect();
    order.sort_by_key(|&k| table.length[k]);
    let mut rows: Vec<Option<TensorVector>> = vec![None; table.len()];
    rows[0] = Some(start);
    for &idx in order.iter().skip(1) {
        let i = (0..m - 1).find(|&i| !table.right_ascent(idx, i)).expect("nonidentity has a descent");
        let parent = rows[table.right_s(idx, i)].as_ref().expect("shorter element first");
        rows[idx] = Some(apply_rcheck(layout, parent, i));
    }
    let mut out = TensorVector::new();
    for (sigma, c) in h.terms() {
        if let Some(r) = &rows[sigma.rank()] {
            for (&k, v) in r {
                add_entry(&mut out, k, v * c);
            }
        }
    }
    out
}

/// `Σ_σ h_σ Ř_σ` on `(C^n)^{⊗m}`.
pub fn hecke_action(h: &HeckeElement, n: usize) -> TensorOperator {
    let mut op = TensorOperator::zero(n, h.m());
    for r in 0..op.dim() {
        let row = hecke_row(h, n, r);
        if !row.is_empty() {
            op.rows.insert(r, row);
        }
    }
    op
}

/// Diagonal projector onto basis vectors of weight `mu`.
pub fn weight_projector(mu: &Composition, m: usize) -> Result<TensorOperator> {
    if mu.weight() != m {
        return Err(Error::WeightMismatch(mu.weight(), m));
    }
    let n = mu.len();
    let mut op = TensorOperator::zero(n, m);
    for k in 0..op.dim() {
        if TensorIndex::unflatten(n, m, k).weight(n) == *mu {
            op.add(k, k, ScalarQ::one());
        }
    }
    Ok(op)
}

/// Whether `⟨h u, v⟩ = ⟨u, h^* v⟩` with `T_σ^* = T_{σ^{-1}}`.
pub fn adjoint_check(h: &HeckeElement, n: usize, u: &TensorVector, v: &TensorVector) -> bool {
    let lhs = pairing(&hecke_action(h, n).apply(u), v);
    let rhs = pairing(u, &hecke_action(&h.star(), n).apply(v));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions;
    use proptest::prelude::*;

    fn t(m: usize, i: usize) -> HeckeElement {
        HeckeElement::generator(m, i).unwrap()
    }

    fn basis(n: usize, letters: &[usize]) -> usize {
        TensorIndex::new(n, letters.to_vec()).unwrap().flatten(n)
    }

    #[test]
    fn index_round_trip() {
        let idx = TensorIndex::new(3, vec![2, 1, 3]).unwrap();
        let k = idx.flatten(3);
        assert_eq!(k, 9 + 2);
        assert_eq!(TensorIndex::unflatten(3, 3, k), idx);
        assert_eq!(idx.weight(3).parts(), &[1, 1, 1]);
        assert!(TensorIndex::new(2, vec![3]).is_err());
    }

    #[test]
    fn rcheck_entries() {
        let r = r_matrix(2, RVariant::RCheck);
        let (e11, e12, e21) = (basis(2, &[1, 1]), basis(2, &[1, 2]), basis(2, &[2, 1]));
        assert_eq!(r.get(e11, e11), ScalarQ::q());
        // Ř e_1⊗e_2 = e_2⊗e_1
        assert_eq!(r.get(e21, e12), ScalarQ::one());
        assert!(r.get(e12, e12).is_zero());
        // Ř e_2⊗e_1 = e_1⊗e_2 + (q - q^{-1}) e_2⊗e_1
        assert_eq!(r.get(e12, e21), ScalarQ::one());
        assert_eq!(r.get(e21, e21), ScalarQ::q_minus_qinv());
        assert_eq!(hecke_action(&t(2, 1), 2), r);
        assert!(matches!("R?".parse::<RVariant>(), Err(Error::UnknownVariant(_))));
    }

    #[test]
    fn r_matrix_identities() {
        for n in 2..=4 {
            let r = r_matrix(n, RVariant::R);
            let p = r_matrix(n, RVariant::P);
            let plus = r_matrix(n, RVariant::RPlus);
            let minus = r_matrix(n, RVariant::RMinus);
            let id = TensorOperator::identity(n, 2);
            assert_eq!(p.compose(&r).unwrap().compose(&p).unwrap(), plus);
            assert_eq!(minus.compose(&r).unwrap(), id);
            assert_eq!(r.compose(&minus).unwrap(), id);
            assert_eq!(p.compose(&r).unwrap(), r_matrix(n, RVariant::RCheck));
        }
    }

    #[test]
    fn yang_baxter() {
        for n in 2..=4 {
            let r = r_matrix(n, RVariant::R);
            let r12 = r.embed(3, 0, 1).unwrap();
            let r13 = r.embed(3, 0, 2).unwrap();
            let r23 = r.embed(3, 1, 2).unwrap();
            let lhs = r12.compose(&r13).unwrap().compose(&r23).unwrap();
            let rhs = r23.compose(&r13).unwrap().compose(&r12).unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn hecke_relations_for_rcheck() {
        let q = ScalarQ::q();
        let qinv = ScalarQ::q_pow(-1);
        for n in 2usize..=4 {
            for m in 2..=4 {
                if n.pow(m as u32) > 256 {
                    continue;
                }
                let id = TensorOperator::identity(n, m);
                let gens: Vec<TensorOperator> =
                    (1..m).map(|i| r_matrix(n, RVariant::RCheck).embed(m, i - 1, i).unwrap()).collect();
                for g in &gens {
                    let a = g.try_sub(&id.scale(&q)).unwrap();
                    let b = g.try_add(&id.scale(&qinv)).unwrap();
                    assert!(a.compose(&b).unwrap().is_zero());
                }
                for i in 0..gens.len().saturating_sub(1) {
                    let (a, b) = (&gens[i], &gens[i + 1]);
                    let lhs = a.compose(b).unwrap().compose(a).unwrap();
                    let rhs = b.compose(a).unwrap().compose(b).unwrap();
                    assert_eq!(lhs, rhs);
                }
                for (i, g) in gens.iter().enumerate() {
                    assert_eq!(hecke_action(&t(m, i + 1), n), *g);
                }
            }
        }
    }

    #[test]
    fn action_is_multiplicative() {
        for m in 2..=4 {
            let perms = Permutation::all(m);
            for (k, a) in perms.iter().enumerate().step_by(5) {
                let b = &perms[(7 * k + 3) % perms.len()];
                let ha = &HeckeElement::basis(a) + &t(m, 1).scale(&ScalarQ::q());
                let hb = HeckeElement::basis(b);
                let prod = &ha * &hb;
                let lhs = hecke_action(&prod, 2);
                let rhs = hecke_action(&ha, 2).compose(&hecke_action(&hb, 2)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(hecke_action(&HeckeElement::one(3), 2), TensorOperator::identity(2, 3));
    }

    #[test]
    fn weight_projectors() {
        let p = weight_projector(&Composition(vec![1, 1]), 2).unwrap();
        let kept: Vec<usize> = p.entries().map(|(r, _, _)| r).collect();
        assert_eq!(kept, vec![basis(2, &[1, 2]), basis(2, &[2, 1])]);
        let p = weight_projector(&Composition(vec![3, 0]), 3).unwrap();
        assert_eq!(p.nnz(), 1);
        assert_eq!(p.get(0, 0), ScalarQ::one());
        assert!(weight_projector(&Composition(vec![1, 0]), 2).is_err());
        for n in 1..=3 {
            for m in 1..=4 {
                for mu in compositions(m, n) {
                    let pm = weight_projector(&mu, m).unwrap();
                    assert_eq!(pm.compose(&pm).unwrap(), pm);
                    for i in 1..m {
                        let g = hecke_action(&t(m, i), n);
                        assert_eq!(g.compose(&pm).unwrap(), pm.compose(&g).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn adjoint_dense() {
        let n = 2;
        let m = 3;
        let h = &t(m, 1) * &t(m, 2);
        let op = hecke_action(&h, n);
        assert_eq!(op.transpose(), hecke_action(&h.star(), n));
        let dim = op.dim();
        for a in 0..dim {
            for b in 0..dim {
                let u: TensorVector = [(a, ScalarQ::one())].into_iter().collect();
                let v: TensorVector = [(b, ScalarQ::one())].into_iter().collect();
                assert!(adjoint_check(&h, n, &u, &v));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn adjoint_random(u in prop::collection::vec(-3i64..4, 4), v in prop::collection::vec(-3i64..4, 4)) {
            let to_vec = |x: &[i64]| -> TensorVector {
                x.iter().enumerate().filter(|(_, c)| **c != 0).map(|(k, &c)| (k, ScalarQ::from_int(c))).collect()
            };
            prop_assert!(adjoint_check(&t(2, 1), 2, &to_vec(&u), &to_vec(&v)));
            prop_assert!(adjoint_check(&HeckeElement::one(2), 2, &to_vec(&u), &to_vec(&v)));
        }
    }
}
