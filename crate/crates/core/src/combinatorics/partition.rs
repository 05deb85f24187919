use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{q_int, ScalarQ};

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition(vec![m])
        }
    }

    pub fn column(m: usize) -> Self {
        Partition(vec![1; m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Partition((0..first).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Cells `(row, col)`, 0-based, in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    pub fn content(row: usize, col: usize) -> i64 {
        col as i64 - row as i64
    }

    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.0[row] - col - 1;
        let leg = self.0.iter().skip(row + 1).filter(|&&p| p > col).count();
        arm + leg + 1
    }

    /// Number of standard tableaux by the hook-length formula.
    pub fn num_syt(&self) -> u128 {
        let fact: u128 = (1..=self.weight() as u128).product();
        let hooks: u128 = self.cells().map(|(r, c)| self.hook(r, c) as u128).product();
        fact / hooks
    }

    /// Outer corners where a box can be added, as `(row, col)`.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..=self.len() {
            let len = self.part(r);
            if r == 0 || self.part(r - 1) > len {
                out.push((r, len));
            }
        }
        out
    }

    /// Corners that can be removed, as `(row, col)`.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&r| self.part(r + 1) < self.part(r))
            .map(|r| (r, self.part(r) - 1))
            .collect()
    }

    pub fn with_cell_added(&self, row: usize) -> Self {
        let mut parts = self.0.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition(parts)
    }

    pub fn with_cell_removed(&self, row: usize) -> Self {
        let mut parts = self.0.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Partition(parts)
    }

    /// Dominance order `self >= other` (same weight assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.0[i])
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `m`, in reverse lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// A weight: a sequence of nonnegative integers of fixed length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Letter content of a sorted multiset over `[n]` (letters are 1-based).
    pub fn of_multiset(multiset: &[usize], n: usize) -> Result<Self> {
        let mut c = vec![0; n];
        for &x in multiset {
            if x == 0 || x > n {
                return Err(Error::IndexOutOfRange { index: x, bound: n });
            }
            c[x - 1] += 1;
        }
        Ok(Composition(c))
    }

    /// The sorted multiset with this content.
    pub fn to_multiset(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i + 1, k)).collect()
    }
}

/// All compositions of `m` with exactly `n` parts, in reverse lexicographic order.
pub fn compositions(m: usize, n: usize) -> Vec<Composition> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(rest);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for p in (0..=rest).rev() {
            cur.push(p);
            rec(rest - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if m == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    rec(m, n, &mut Vec::new(), &mut out);
    out
}

/// Steinberg's product `c_λ = ∏ q^{c(α)} [h(α)]` over the boxes of `λ`.
pub fn schur_element(lambda: &Partition) -> ScalarQ {
    let mut acc = ScalarQ::one();
    for (r, c) in lambda.cells() {
        let h = q_int(lambda.hook(r, c) as i64).expect("hook lengths are positive");
        acc = &acc * &h.shift(Partition::content(r, c) as i32);
    }
    acc
}
