//! Word rewriting with the four exchange rules, and the memoized insertion
//! used for fast multiplication.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use super::Mono;
use crate::scalar::ScalarQ;

/// Which out-of-order adjacent pair is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteOrder {
    Leftmost,
    Rightmost,
}

/// Rewrite one out-of-order pair `a b` (`a > b`) into ordered two-letter words.
pub(crate) fn exchange(n: usize, a: u8, b: u8) -> [(ScalarQ, [u8; 2]); 2] {
    debug_assert!(a > b);
    let (ia, ja) = (a as usize / n, a as usize % n);
    let (ib, jb) = (b as usize / n, b as usize % n);
    let none = (ScalarQ::zero(), [0, 0]);
    if ia == ib || ja == jb {
        // same row or same column
        [(ScalarQ::q(), [b, a]), none]
    } else if ja < jb {
        [(ScalarQ::one(), [b, a]), none]
    } else {
        let il = (ib * n + ja) as u8;
        let jk = (ia * n + jb) as u8;
        [(ScalarQ::one(), [b, a]), (ScalarQ::q_minus_qinv(), [il, jk])]
    }
}

fn add_into(acc: &mut BTreeMap<Mono, ScalarQ>, w: Mono, c: ScalarQ) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
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

fn first_inversion(w: &Mono, strategy: RewriteOrder) -> Option<usize> {
    let k = w.len();
    if k < 2 {
        return None;
    }
    match strategy {
        RewriteOrder::Leftmost => (0..k - 1).find(|&p| w[p] > w[p + 1]),
        RewriteOrder::Rightmost => (0..k - 1).rev().find(|&p| w[p] > w[p + 1]),
    }
}

/// Reduce a linear combination of words to normal form by repeated rewriting.
pub(crate) fn rewrite(n: usize, start: BTreeMap<Mono, ScalarQ>, strategy: RewriteOrder) -> BTreeMap<Mono, ScalarQ> {
    let mut done: BTreeMap<Mono, ScalarQ> = BTreeMap::new();
    let mut pending = start;
    while let Some((w, c)) = pending.pop_first() {
        let Some(p) = first_inversion(&w, strategy) else {
            add_into(&mut done, w, c);
            continue;
        };
        for (k, pair) in exchange(n, w[p], w[p + 1]) {
            if k.is_zero() {
                continue;
            }
            let mut nw = w.clone();
            nw[p] = pair[0];
            nw[p + 1] = pair[1];
            add_into(&mut pending, nw, &c * &k);
        }
    }
    done
}

type InsertKey = (u8, Mono, u8);
type Expansion = Arc<Vec<(Mono, ScalarQ)>>;

static INSERT_CACHE: Lazy<RwLock<HashMap<InsertKey, Expansion>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Normal form of `mono · x_g` for a normal monomial `mono`.
pub(crate) fn insert_right(n: usize, mono: &Mono, g: u8) -> Expansion {
    if mono.last().is_none_or(|&l| l <= g) {
        let mut w = mono.clone();
        w.push(g);
        return Arc::new(vec![(w, ScalarQ::one())]);
    }
    let key = (n as u8, mono.clone(), g);
    if let Some(hit) = INSERT_CACHE.read().get(&key) {
        return hit.clone();
    }
    let k = mono.len();
    let prefix: Mono = mono[..k - 1].iter().copied().collect();
    let mut acc: BTreeMap<Mono, ScalarQ> = BTreeMap::new();
    for (c, pair) in exchange(n, mono[k - 1], g) {
        if c.is_zero() {
            continue;
        }
        for (m1, c1) in insert_right(n, &prefix, pair[0]).iter() {
            let c1 = &c * c1;
            for (m2, c2) in insert_right(n, m1, pair[1]).iter() {
                add_into(&mut acc, m2.clone(), &c1 * c2);
            }
        }
    }
    let out: Expansion = Arc::new(acc.into_iter().collect());
    INSERT_CACHE.write().insert(key, out.clone());
    out
}

/// Normal form of an arbitrary word via successive insertion.
pub(crate) fn insert_word(n: usize, word: &[u8]) -> BTreeMap<Mono, ScalarQ> {
    let mut cur: BTreeMap<Mono, ScalarQ> = BTreeMap::new();
    cur.insert(Mono::new(), ScalarQ::one());
    append_word(n, cur, word)
}

/// Right-multiply a normal-form combination by a word.
pub(crate) fn append_word(n: usize, mut cur: BTreeMap<Mono, ScalarQ>, word: &[u8]) -> BTreeMap<Mono, ScalarQ> {
    for &g in word {
        let mut next = BTreeMap::new();
        for (m, c) in &cur {
            for (m2, c2) in insert_right(n, m, g).iter() {
                add_into(&mut next, m2.clone(), c * c2);
            }
        }
        cur = next;
    }
    cur
}
