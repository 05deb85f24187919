use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{perm_table, PermTable, Permutation};
use crate::error::{Error, Result};
use crate::scalar::{common_denominator, LaurentPoly, Rational, ScalarQ};

/// Element of `H_m` in the basis `T_σ`, keyed by the lexicographic rank of `σ`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    m: usize,
    terms: BTreeMap<u32, ScalarQ>,
}

fn q_minus_qinv_poly() -> LaurentPoly {
    LaurentPoly::from_terms([(1, Rational::ONE), (-1, Rational::from_int(-1))])
}

/// Dense coefficient vector over `S_m` with Laurent coefficients.
type Dense = Vec<LaurentPoly>;

fn dense_mul_t_right(table: &PermTable, v: &Dense, i: usize, qq: &LaurentPoly) -> Dense {
    let mut out = vec![LaurentPoly::zero(); v.len()];
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let j = table.right_s(idx, i);
        out[j] = &out[j] + c;
        if !table.right_ascent(idx, i) {
            out[idx] = &out[idx] + &(c * qq);
        }
    }
    out
}

fn dense_mul_t_left(table: &PermTable, v: &Dense, i: usize, qq: &LaurentPoly) -> Dense {
    let mut out = vec![LaurentPoly::zero(); v.len()];
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let j = table.left_s(idx, i);
        out[j] = &out[j] + c;
        if !table.left_ascent(idx, i) {
            out[idx] = &out[idx] + &(c * qq);
        }
    }
    out
}

/// Parent of `τ ≠ e` in the descent spanning tree: `τ = parent · s_i`.
fn tree_parent(table: &PermTable, idx: usize) -> Option<(usize, usize)> {
    (0..table.m.saturating_sub(1)).find(|&i| !table.right_ascent(idx, i)).map(|i| (table.right_s(idx, i), i))
}

impl HeckeElement {
    pub fn zero(m: usize) -> Self {
        HeckeElement { m, terms: BTreeMap::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::scalar(m, ScalarQ::one())
    }

    pub fn scalar(m: usize, c: ScalarQ) -> Self {
        let mut e = Self::zero(m);
        e.add_term(0, c);
        e
    }

    /// `T_σ`
    pub fn basis(sigma: &Permutation) -> Self {
        let mut e = Self::zero(sigma.m());
        e.add_term(sigma.rank() as u32, ScalarQ::one());
        e
    }

    /// `T_i` for `1 ≤ i < m`.
    pub fn generator(m: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= m {
            return Err(Error::IndexOutOfRange { index: i, bound: m.saturating_sub(1) });
        }
        Ok(Self::basis(&Permutation::simple(m, i - 1)))
    }

    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (Permutation, ScalarQ)>) -> Result<Self> {
        let mut e = Self::zero(m);
        for (p, c) in terms {
            if p.m() != m {
                return Err(Error::RankMismatch(m, p.m()));
            }
            e.add_term(p.rank() as u32, c);
        }
        Ok(e)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn table(&self) -> &'static PermTable {
        perm_table(self.m)
    }

    /// Terms in lexicographic order of the permutations.
    pub fn terms(&self) -> impl Iterator<Item = (&'static Permutation, &ScalarQ)> + '_ {
        let t = self.table();
        self.terms.iter().map(move |(&k, c)| (&t.perms[k as usize], c))
    }

    pub fn coeff(&self, sigma: &Permutation) -> ScalarQ {
        self.terms.get(&(sigma.rank() as u32)).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, k: u32, c: ScalarQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &HeckeElement, c: &ScalarQ) {
        assert_eq!(self.m, other.m, "rank mismatch");
        for (&k, v) in &other.terms {
            self.add_term(k, v * c);
        }
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        HeckeElement { m: self.m, terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    fn to_dense(&self) -> (Dense, LaurentPoly) {
        let d = common_denominator(self.terms.values());
        let mut v = vec![LaurentPoly::zero(); self.table().len()];
        for (&k, c) in &self.terms {
            v[k as usize] = c.times_denominator_multiple(&d);
        }
        (v, d)
    }

    fn from_dense(m: usize, v: Dense, den: &LaurentPoly) -> Self {
        let mut e = Self::zero(m);
        for (k, c) in v.into_iter().enumerate() {
            if !c.is_zero() {
                let s = ScalarQ::new(c, den.clone()).expect("nonzero denominator");
                e.terms.insert(k as u32, s);
            }
        }
        e
    }

    /// `self · T_i` with 0-based `i`.
    pub fn mul_t_right(&self, i: usize) -> Self {
        let t = self.table();
        let qq = ScalarQ::q_minus_qinv();
        let mut out = Self::zero(self.m);
        for (&k, c) in &self.terms {
            out.add_term(t.right_s(k as usize, i) as u32, c.clone());
            if !t.right_ascent(k as usize, i) {
                out.add_term(k, c * &qq);
            }
        }
        out
    }

    /// `T_i · self` with 0-based `i`.
    pub fn mul_t_left(&self, i: usize) -> Self {
        let t = self.table();
        let qq = ScalarQ::q_minus_qinv();
        let mut out = Self::zero(self.m);
        for (&k, c) in &self.terms {
            out.add_term(t.left_s(k as usize, i) as u32, c.clone());
            if !t.left_ascent(k as usize, i) {
                out.add_term(k, c * &qq);
            }
        }
        out
    }

    pub fn try_mul(&self, other: &HeckeElement) -> Result<HeckeElement> {
        if self.m != other.m {
            return Err(Error::RankMismatch(self.m, other.m));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.m));
        }
        let table = self.table();
        let (a, da) = self.to_dense();
        let (b, db) = other.to_dense();
        let qq = q_minus_qinv_poly();

        // Only walk the part of the descent tree that leads to the support of `other`.
        let mut needed = vec![false; table.len()];
        for &k in other.terms.keys() {
            let mut idx = k as usize;
            while !needed[idx] {
                needed[idx] = true;
                match tree_parent(table, idx) {
                    Some((p, _)) => idx = p,
                    None => break,
                }
            }
        }
        let mut children: Vec<Vec<(usize, usize)>> = vec![Vec::new(); table.len()];
        for idx in 0..table.len() {
            if needed[idx] {
                if let Some((p, i)) = tree_parent(table, idx) {
                    children[p].push((idx, i));
                }
            }
        }

        let mut acc: Dense = vec![LaurentPoly::zero(); table.len()];
        let mut stack: Vec<(usize, Dense)> = vec![(0, a)];
        while let Some((idx, cur)) = stack.pop() {
            let bc = &b[idx];
            if !bc.is_zero() {
                for (slot, c) in acc.iter_mut().zip(cur.iter()) {
                    if !c.is_zero() {
                        *slot = &*slot + &(c * bc);
                    }
                }
            }
            for &(child, i) in &children[idx] {
                stack.push((child, dense_mul_t_right(table, &cur, i, &qq)));
            }
        }
        Ok(Self::from_dense(self.m, acc, &(&da * &db)))
    }

    /// `Σ_σ T_σ · self · T_{σ^{-1}}`.
    pub fn conjugation_sum(&self) -> Self {
        let table = self.table();
        let qq = q_minus_qinv_poly();
        let (x, d) = self.to_dense();
        // T_{s_i π} X T_{π^{-1} s_i} = T_i (T_π X T_{π^{-1}}) T_i along a left-descent tree.
        let mut children: Vec<Vec<(usize, usize)>> = vec![Vec::new(); table.len()];
        for idx in 1..table.len() {
            let i = (0..table.m - 1).find(|&i| !table.left_ascent(idx, i)).unwrap();
            children[table.left_s(idx, i)].push((idx, i));
        }
        let mut acc: Dense = vec![LaurentPoly::zero(); table.len()];
        let mut stack = vec![(0usize, x)];
        while let Some((idx, cur)) = stack.pop() {
            for (slot, c) in acc.iter_mut().zip(cur.iter()) {
                if !c.is_zero() {
                    *slot = &*slot + c;
                }
            }
            for &(child, i) in &children[idx] {
                let next = dense_mul_t_right(table, &dense_mul_t_left(table, &cur, i, &qq), i, &qq);
                stack.push((child, next));
            }
        }
        Self::from_dense(self.m, acc, &d)
    }

    /// The anti-involution `T_σ ↦ T_{σ^{-1}}`.
    pub fn star(&self) -> Self {
        let t = self.table();
        let mut out = Self::zero(self.m);
        for (&k, c) in &self.terms {
            out.add_term(t.inverse[k as usize], c.clone());
        }
        out
    }

    /// Image in `H_total` under `T_σ ↦ T_{σ shifted by offset}`.
    pub fn shifted(&self, offset: usize, total: usize) -> Self {
        let mut out = Self::zero(total);
        for (p, c) in self.terms() {
            out.add_term(p.shifted(offset, total).rank() as u32, c.clone());
        }
        out
    }

    /// Natural embedding `H_m ⊂ H_{m'}`.
    pub fn embed(&self, total: usize) -> Self {
        self.shifted(0, total)
    }

    /// True when every coefficient is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.terms.values().all(|c| c.is_laurent())
    }

    /// Coefficients at `q = value`, in permutation order.
    pub fn evaluate_at_q(&self, value: &Rational) -> Result<Vec<(Permutation, Rational)>> {
        self.terms().map(|(p, c)| Ok((p.clone(), c.evaluate_at_q(value)?))).collect()
    }
}

/// Product in `H_m`.
pub fn hecke_multiply(a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    a.try_mul(b)
}

impl<'a> Add<&'a HeckeElement> for &'a HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &'a HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &ScalarQ::one());
        out
    }
}

impl<'a> Sub<&'a HeckeElement> for &'a HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &'a HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &ScalarQ::from_int(-1));
        out
    }
}

impl<'a> Mul<&'a HeckeElement> for &'a HeckeElement {
    type Output = HeckeElement;
    fn mul(self, rhs: &'a HeckeElement) -> HeckeElement {
        self.try_mul(rhs).expect("rank mismatch")
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        self.scale(&ScalarQ::from_int(-1))
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*T{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    perm: Permutation,
    coeff: ScalarQ,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    m: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for HeckeElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms().map(|(p, c)| TermRepr { perm: p.clone(), coeff: c.clone() }).collect();
        ElementRepr { m: self.m, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeckeElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(d)?;
        HeckeElement::from_terms(repr.m, repr.terms.into_iter().map(|t| (t.perm, t.coeff))).map_err(D::Error::custom)
    }
}
