//! The quantum matrix algebra `A_q(Mat_n)` in PBW normal form.
//!
//! Generators `x_ij` are indexed row-major by `(i-1)·n + (j-1)`; a monomial is
//! normal when its generator indices are weakly increasing.

mod rewrite;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::combinatorics::CommPoly;
use crate::error::{Error, Result};
use crate::scalar::{Rational, ScalarQ};

pub use rewrite::RewriteOrder;

/// A word in the generators.
pub type Mono = SmallVec<[u8; 8]>;

/// Element of `A_q(Mat_n)`: normal monomials with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatElement {
    n: usize,
    terms: BTreeMap<Mono, ScalarQ>,
}

/// Generator index of `x_ij` (1-based `i`, `j`).
pub fn gen_index(n: usize, i: usize, j: usize) -> u8 {
    ((i - 1) * n + (j - 1)) as u8
}

/// `(i, j)`, 1-based, of a generator index.
pub fn gen_pair(n: usize, g: u8) -> (usize, usize) {
    (g as usize / n + 1, g as usize % n + 1)
}

fn check_pairs(n: usize, word: &[(usize, usize)]) -> Result<Vec<u8>> {
    word.iter()
        .map(|&(i, j)| {
            for x in [i, j] {
                if x == 0 || x > n {
                    return Err(Error::IndexOutOfRange { index: x, bound: n });
                }
            }
            Ok(gen_index(n, i, j))
        })
        .collect()
}

impl QMatElement {
    pub fn zero(n: usize) -> Self {
        QMatElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, ScalarQ::one())
    }

    pub fn scalar(n: usize, c: ScalarQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::new(), c);
        }
        QMatElement { n, terms }
    }

    /// `x_ij`, 1-based.
    pub fn generator(n: usize, i: usize, j: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::from_slice(&[gen_index(n, i, j)]), ScalarQ::one());
        QMatElement { n, terms }
    }

    /// Normal form of `coeff · x_{i_1 j_1} ⋯ x_{i_k j_k}`.
    pub fn normal_form(n: usize, word: &[(usize, usize)], coeff: &ScalarQ) -> Result<Self> {
        let w = check_pairs(n, word)?;
        Ok(Self::from_terms(n, rewrite::insert_word(n, &w)).scale(coeff))
    }

    /// Normal form computed by explicit rewriting with the given strategy.
    pub fn normal_form_by(n: usize, word: &[(usize, usize)], coeff: &ScalarQ, strategy: RewriteOrder) -> Result<Self> {
        let w = check_pairs(n, word)?;
        let mut start = BTreeMap::new();
        if !coeff.is_zero() {
            start.insert(Mono::from_slice(&w), coeff.clone());
        }
        Ok(Self::from_terms(n, rewrite::rewrite(n, start, strategy)))
    }

    /// Normal form of a word of generator indices.
    pub fn from_word(n: usize, word: &[u8]) -> Self {
        Self::from_terms(n, rewrite::insert_word(n, word))
    }

    fn from_terms(n: usize, terms: BTreeMap<Mono, ScalarQ>) -> Self {
        QMatElement { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
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

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &[u8]) -> ScalarQ {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Mono, c: ScalarQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add_assign_ref(&mut self, other: &QMatElement) {
        assert_eq!(self.n, other.n, "dimension mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &QMatElement, c: &ScalarQ) {
        assert_eq!(self.n, other.n, "dimension mismatch");
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        if c.is_one() {
            return self.clone();
        }
        QMatElement { n: self.n, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn try_mul(&self, other: &QMatElement) -> Result<QMatElement> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let mut out = QMatElement::zero(self.n);
        for (mb, cb) in &other.terms {
            let prod = rewrite::append_word(self.n, self.terms.clone(), mb);
            for (m, c) in prod {
                out.add_term(m, &c * cb);
            }
        }
        Ok(out)
    }

    /// Highest total degree among the terms.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    /// Image under `x_ij ↦ δ_ij x_i` in the commutative ring `Q(q)[x_1..x_n]`.
    pub fn specialize_diagonal(&self) -> CommPoly<ScalarQ> {
        let n = self.n;
        let mut out = CommPoly::zero(n);
        'terms: for (m, c) in &self.terms {
            let mut e = vec![0u32; n];
            for &g in m {
                let (i, j) = gen_pair(n, g);
                if i != j {
                    continue 'terms;
                }
                e[i - 1] += 1;
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Coefficients evaluated at `q = 1`, monomials read commutatively in the
    /// `n²` variables `x_ij` (variable index `(i-1)·n + (j-1)`).
    pub fn specialize_q_one(&self) -> Result<CommPoly<Rational>> {
        let n = self.n;
        let mut out = CommPoly::zero(n * n);
        for (m, c) in &self.terms {
            let v = c.evaluate_at_q(&Rational::ONE)?;
            let mut e = vec![0u32; n * n];
            for &g in m {
                e[g as usize] += 1;
            }
            out.add_term(e, v);
        }
        Ok(out)
    }

    /// Apply a coefficient map to every term.
    pub fn map_coeffs(&self, f: impl Fn(&ScalarQ) -> ScalarQ) -> Self {
        let mut out = QMatElement::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Value under the counit `x_ij ↦ δ_ij`.
    pub fn counit(&self) -> ScalarQ {
        let n = self.n;
        self.terms
            .iter()
            .filter(|(m, _)| m.iter().all(|&g| gen_pair(n, g).0 == gen_pair(n, g).1))
            .map(|(_, c)| c.clone())
            .sum()
    }
}

impl<'a> Add<&'a QMatElement> for &'a QMatElement {
    type Output = QMatElement;
    fn add(self, rhs: &'a QMatElement) -> QMatElement {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a QMatElement> for &'a QMatElement {
    type Output = QMatElement;
    fn sub(self, rhs: &'a QMatElement) -> QMatElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &ScalarQ::from_int(-1));
        out
    }
}

impl<'a> Mul<&'a QMatElement> for &'a QMatElement {
    type Output = QMatElement;
    fn mul(self, rhs: &'a QMatElement) -> QMatElement {
        self.try_mul(rhs).expect("dimension mismatch")
    }
}

impl Neg for &QMatElement {
    type Output = QMatElement;
    fn neg(self) -> QMatElement {
        self.scale(&ScalarQ::from_int(-1))
    }
}

impl fmt::Display for QMatElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for &g in m {
                let (i, j) = gen_pair(self.n, g);
                write!(f, "*x{i}{j}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QMatElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    mono: Vec<(usize, usize)>,
    coeff: ScalarQ,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for QMatElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| TermRepr { mono: m.iter().map(|&g| gen_pair(self.n, g)).collect(), coeff: c.clone() })
            .collect();
        ElementRepr { n: self.n, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QMatElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(d)?;
        let mut out = QMatElement::zero(repr.n);
        for t in repr.terms {
            let e = QMatElement::normal_form(repr.n, &t.mono, &t.coeff).map_err(D::Error::custom)?;
            out.add_assign_ref(&e);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize, j: usize) -> QMatElement {
        QMatElement::generator(n, i, j)
    }

    fn word(n: usize, w: &[(usize, usize)]) -> QMatElement {
        QMatElement::normal_form(n, w, &ScalarQ::one()).unwrap()
    }

    #[test]
    fn exchange_rules() {
        let q = ScalarQ::q();
        assert_eq!(word(2, &[(1, 2), (1, 1)]), word(2, &[(1, 1), (1, 2)]).scale(&q));
        assert_eq!(word(2, &[(2, 1), (1, 1)]), word(2, &[(1, 1), (2, 1)]).scale(&q));
        assert_eq!(word(2, &[(2, 1), (1, 2)]), word(2, &[(1, 2), (2, 1)]));
        let lhs = word(2, &[(2, 2), (1, 1)]);
        let rhs = &word(2, &[(1, 1), (2, 2)]) + &word(2, &[(1, 2), (2, 1)]).scale(&ScalarQ::q_minus_qinv());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_examples() {
        let a = x(2, 1, 1);
        assert_eq!(&QMatElement::one(2) * &a, a);
        assert_eq!(&x(2, 1, 1) * &x(2, 1, 2), word(2, &[(1, 1), (1, 2)]));
        assert_eq!(&x(2, 1, 2) * &x(2, 1, 1), word(2, &[(1, 1), (1, 2)]).scale(&ScalarQ::q()));
        assert!(x(2, 1, 1).try_mul(&x(3, 1, 1)).is_err());
        assert!(QMatElement::normal_form(2, &[(3, 1)], &ScalarQ::one()).is_err());
    }

    #[test]
    fn diamond_on_all_length_three_words() {
        for n in 2..=3 {
            let gens = n * n;
            for a in 0..gens {
                for b in 0..gens {
                    for c in 0..gens {
                        let w: Vec<(usize, usize)> =
                            [a, b, c].iter().map(|&g| gen_pair(n, g as u8)).collect();
                        let l = QMatElement::normal_form_by(n, &w, &ScalarQ::one(), RewriteOrder::Leftmost).unwrap();
                        let r = QMatElement::normal_form_by(n, &w, &ScalarQ::one(), RewriteOrder::Rightmost).unwrap();
                        assert_eq!(l, r, "{w:?}");
                        assert_eq!(l, word(n, &w), "{w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn specializations() {
        let det = &word(2, &[(1, 1), (2, 2)]) - &word(2, &[(1, 2), (2, 1)]).scale(&ScalarQ::q_pow(-1));
        let phi = det.specialize_diagonal();
        assert_eq!(phi, CommPoly::monomial(2, vec![1, 1], ScalarQ::one()));
        let at1 = det.specialize_q_one().unwrap();
        assert_eq!(at1.coeff(&[1, 0, 0, 1]), Rational::ONE);
        assert_eq!(at1.coeff(&[0, 1, 1, 0]), Rational::from_int(-1));
        let t = word(2, &[(1, 2), (2, 1)]).scale(&ScalarQ::q_minus_qinv());
        assert!(t.specialize_q_one().unwrap().is_zero());
        let pole = x(2, 1, 1).scale(&ScalarQ::q_minus_qinv().inv().unwrap());
        assert!(matches!(pole.specialize_q_one(), Err(Error::Pole(_))));
    }

    #[test]
    fn json_round_trip() {
        let e = &word(3, &[(3, 3), (1, 2), (2, 1)]) + &x(3, 2, 2).scale(&ScalarQ::q_pow(-2));
        let text = serde_json::to_string(&e).unwrap();
        let back: QMatElement = serde_json::from_str(&text).unwrap();
        assert_eq!(back, e);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    fn arb_element(n: usize) -> impl Strategy<Value = QMatElement> {
        let gens = (n * n) as u8;
        prop::collection::vec((prop::collection::vec(0..gens, 0..4), -2i32..=2, -3i64..=3), 1..4).prop_map(
            move |terms| {
                let mut acc = QMatElement::zero(n);
                for (w, e, c) in terms {
                    let t = QMatElement::from_word(n, &w).scale(&ScalarQ::q_pow(e).scale(&Rational::from_int(c)));
                    acc.add_assign_ref(&t);
                }
                acc
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn associative(a in arb_element(2), b in arb_element(2), c in arb_element(2)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn associative_n3(a in arb_element(3), b in arb_element(3), c in arb_element(3)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn commutative_at_q_one(a in arb_element(3), b in arb_element(3)) {
            let d = &(&a * &b) - &(&b * &a);
            prop_assert!(d.specialize_q_one().unwrap().is_zero());
        }

        #[test]
        fn rewriting_strategies_agree(w in prop::collection::vec(0u8..9, 0..6)) {
            let pairs: Vec<(usize, usize)> = w.iter().map(|&g| gen_pair(3, g)).collect();
            let l = QMatElement::normal_form_by(3, &pairs, &ScalarQ::one(), RewriteOrder::Leftmost).unwrap();
            let r = QMatElement::normal_form_by(3, &pairs, &ScalarQ::one(), RewriteOrder::Rightmost).unwrap();
            prop_assert_eq!(&l, &r);
            prop_assert_eq!(l, QMatElement::from_word(3, &w));
        }
    }
}
