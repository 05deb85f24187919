//! Enumeration of index tuples in lexicographic order.

/// Nondecreasing `k`-tuples over `[n]`, 1-based.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(n, k, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 1, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Increasing `k`-tuples over `[n]`, 1-based.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    multisets(n, k).into_iter().filter(|s| s.windows(2).all(|w| w[0] < w[1])).collect()
}

/// Distinct rearrangements of a tuple, in lexicographic order.
pub fn rearrangements(word: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = word.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot has a successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Ordered splittings `(A, B)` of a nondecreasing tuple into nondecreasing
/// sub-tuples with `|A| = k`, distinct as pairs of multisets.
pub fn multiset_splittings(word: &[usize], k: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &x in word {
        match counts.last_mut() {
            Some((y, c)) if *y == x => *c += 1,
            _ => counts.push((x, 1)),
        }
    }
    fn rec(counts: &[(usize, usize)], k: usize, a: &mut Vec<usize>, b: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Vec<usize>)>) {
        let Some((&(x, c), rest)) = counts.split_first() else {
            if k == 0 {
                out.push((a.clone(), b.clone()));
            }
            return;
        };
        for take in (0..=c.min(k)).rev() {
            let (la, lb) = (a.len(), b.len());
            a.extend(std::iter::repeat_n(x, take));
            b.extend(std::iter::repeat_n(x, c - take));
            rec(rest, k - take, a, b, out);
            a.truncate(la);
            b.truncate(lb);
        }
    }
    let mut out = Vec::new();
    rec(&counts, k, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn counts() {
        for n in 1..=4 {
            for k in 0..=4 {
                assert_eq!(multisets(n, k).len(), binom(n + k - 1, k));
                assert_eq!(subsets(n, k).len(), if k <= n { binom(n, k) } else { 0 });
            }
        }
        assert_eq!(multisets(2, 2), vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        assert_eq!(rearrangements(&[2, 1, 1]), vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        assert_eq!(rearrangements(&[1, 2, 3, 4]).len(), 24);
        assert_eq!(rearrangements(&[]), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn splittings() {
        let s = multiset_splittings(&[1, 2, 2], 1);
        assert_eq!(s, vec![(vec![1], vec![2, 2]), (vec![2], vec![1, 2])]);
        assert_eq!(multiset_splittings(&[1, 2, 3], 2).len(), 3);
        assert_eq!(multiset_splittings(&[1, 1], 1), vec![(vec![1], vec![1])]);
    }
}
