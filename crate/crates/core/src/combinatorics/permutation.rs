use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// Largest rank for which a dense lookup table is built.
pub const MAX_TABLE_RANK: usize = 8;

/// A permutation in one-line notation, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((0..m as u8).collect())
    }

    /// From a 1-based one-line word.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        let m = word.len();
        let mut seen = vec![false; m];
        for &x in word {
            if x == 0 || x > m || seen[x - 1] {
                return Err(Error::InvalidPermutation(word.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation(word.iter().map(|&x| (x - 1) as u8).collect()))
    }

    /// 1-based one-line word.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// Image of the 0-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&j| self.0[j as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    /// `self · s_i` (0-based `i`): swaps positions `i` and `i+1`.
    pub fn right_mul_s(&self, i: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i, i + 1);
        Permutation(v)
    }

    /// `s_i · self`: swaps the values `i` and `i+1`.
    pub fn left_mul_s(&self, i: usize) -> Permutation {
        Permutation(
            self.0
                .iter()
                .map(|&x| if x as usize == i { x + 1 } else if x as usize == i + 1 { x - 1 } else { x })
                .collect(),
        )
    }

    /// True when `l(self · s_i) > l(self)`.
    pub fn ascent_at(&self, i: usize) -> bool {
        self.0[i] < self.0[i + 1]
    }

    /// A reduced word `[i_1, …, i_l]` (0-based) with `self = s_{i_1}⋯s_{i_l}`, found by bubble sort.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    /// The simple transposition `s_i` (0-based).
    pub fn simple(m: usize, i: usize) -> Permutation {
        Permutation::identity(m).right_mul_s(i)
    }

    /// The transposition of the 0-based points `a` and `b`.
    pub fn transposition(m: usize, a: usize, b: usize) -> Permutation {
        let mut v: Vec<u8> = (0..m as u8).collect();
        v.swap(a, b);
        Permutation(v)
    }

    pub fn cycle_type(&self) -> Partition {
        let m = self.0.len();
        let mut seen = vec![false; m];
        let mut lens = Vec::new();
        for s in 0..m {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("sorted cycle lengths")
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Position in the lexicographic listing of all permutations of the same rank.
    pub fn rank(&self) -> usize {
        let m = self.0.len();
        let mut r = 0;
        for i in 0..m {
            let smaller = (i + 1..m).filter(|&j| self.0[j] < self.0[i]).count();
            r = r * (m - i) + smaller;
        }
        r
    }

    /// All permutations of `m` letters in lexicographic order.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(m);
        let mut used = vec![false; m];
        fn rec(m: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == m {
                out.push(Permutation(cur.clone()));
                return;
            }
            for x in 0..m {
                if !used[x] {
                    used[x] = true;
                    cur.push(x as u8);
                    rec(m, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        rec(m, &mut cur, &mut used, &mut out);
        out
    }

    /// Embed into `S_{m'}` acting on the points `offset..offset+m`.
    pub fn shifted(&self, offset: usize, total: usize) -> Permutation {
        let mut v: Vec<u8> = (0..total as u8).collect();
        for (i, &x) in self.0.iter().enumerate() {
            v[offset + i] = offset as u8 + x;
        }
        Permutation(v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.one_line().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

/// Dense lookup tables for `S_m`, indexed by lexicographic rank.
pub struct PermTable {
    pub m: usize,
    pub perms: Vec<Permutation>,
    pub length: Vec<u32>,
    pub inverse: Vec<u32>,
    right_s: Vec<u32>,
    left_s: Vec<u32>,
}

impl PermTable {
    fn build(m: usize) -> Self {
        let perms = Permutation::all(m);
        let g = m.saturating_sub(1);
        let mut right_s = Vec::with_capacity(perms.len() * g);
        let mut left_s = Vec::with_capacity(perms.len() * g);
        for p in &perms {
            for i in 0..g {
                right_s.push(p.right_mul_s(i).rank() as u32);
                left_s.push(p.left_mul_s(i).rank() as u32);
            }
        }
        PermTable {
            m,
            length: perms.iter().map(|p| p.length() as u32).collect(),
            inverse: perms.iter().map(|p| p.inverse().rank() as u32).collect(),
            perms,
            right_s,
            left_s,
        }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    /// Index of `perm · s_i`.
    #[inline]
    pub fn right_s(&self, idx: usize, i: usize) -> usize {
        self.right_s[idx * (self.m - 1) + i] as usize
    }

    /// Index of `s_i · perm`.
    #[inline]
    pub fn left_s(&self, idx: usize, i: usize) -> usize {
        self.left_s[idx * (self.m - 1) + i] as usize
    }

    /// True when `l(perm · s_i) > l(perm)`.
    #[inline]
    pub fn right_ascent(&self, idx: usize, i: usize) -> bool {
        self.length[self.right_s(idx, i)] > self.length[idx]
    }

    #[inline]
    pub fn left_ascent(&self, idx: usize, i: usize) -> bool {
        self.length[self.left_s(idx, i)] > self.length[idx]
    }
}

/// Shared tables for `S_m`, built on first use.
pub fn perm_table(m: usize) -> &'static PermTable {
    static TABLES: [OnceLock<PermTable>; MAX_TABLE_RANK + 1] = [const { OnceLock::new() }; MAX_TABLE_RANK + 1];
    assert!(m <= MAX_TABLE_RANK, "permutation tables are limited to rank {MAX_TABLE_RANK}");
    TABLES[m].get_or_init(|| PermTable::build(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        let s = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(s.length(), 2);
        assert_eq!(s.inverse().one_line(), vec![3, 1, 2]);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
        assert_eq!(s.cycle_type().parts(), &[3]);
        assert_eq!(s.sign(), 1);
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert_eq!(Permutation::transposition(3, 0, 2).one_line(), vec![3, 2, 1]);
    }

    #[test]
    fn table_consistency() {
        for m in 1..=5 {
            let t = perm_table(m);
            assert_eq!(t.len(), (1..=m).product::<usize>());
            for (idx, p) in t.perms.iter().enumerate() {
                assert_eq!(p.rank(), idx);
                assert_eq!(t.perms[t.inverse[idx] as usize], p.inverse());
                for i in 0..m - 1 {
                    assert_eq!(t.perms[t.right_s(idx, i)], p.right_mul_s(i));
                    assert_eq!(t.perms[t.left_s(idx, i)], Permutation::simple(m, i).compose(p));
                    assert_eq!(t.right_ascent(idx, i), p.ascent_at(i));
                }
            }
        }
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..=6).prop_flat_map(|m| Just((0..m).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation(v.into_iter().map(|x| x as u8).collect()))
    }

    proptest! {
        #[test]
        fn reduced_word_is_reduced(p in arb_perm()) {
            let w = p.reduced_word();
            prop_assert_eq!(w.len(), p.length());
            let mut acc = Permutation::identity(p.m());
            for &i in &w {
                acc = acc.right_mul_s(i);
            }
            prop_assert_eq!(acc, p.clone());
            prop_assert_eq!(p.inverse().length(), p.length());
        }
    }
}
