use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{partitions_of, Composition, Partition};
use crate::error::{Error, Result};

/// A filling of a Young diagram, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        Partition::new(lens.clone()).map_err(|_| Error::InvalidTableau(format!("row lengths {lens:?}")))?;
        if rows.iter().any(|r| r.is_empty()) || rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Tableau { rows })
    }

    /// Builds a standard tableau, rejecting anything that is not.
    pub fn standard(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Self::from_rows(rows)?;
        if !t.is_standard() {
            return Err(Error::InvalidTableau(format!("{t} is not standard")));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("validated on construction")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Row-reading word.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1].iter().enumerate().all(|(c, &below)| pair[0][c] < below)
        });
        rows_ok && cols_ok
    }

    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<usize> = self.reading_word();
        seen.sort_unstable();
        seen.iter().enumerate().all(|(i, &x)| x == i + 1)
            && self.is_semistandard()
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// 0-based cell holding `k` (standard tableaux).
    pub fn position(&self, k: usize) -> Option<(usize, usize)> {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&x| x == k) {
                return Some((r, c));
            }
        }
        None
    }

    /// Content `col - row` of the box holding `k`.
    pub fn content_of(&self, k: usize) -> i64 {
        let (r, c) = self.position(k).expect("entry present");
        Partition::content(r, c)
    }

    /// `c_{i+1} - c_i` for a standard tableau.
    pub fn axial_distance(&self, i: usize) -> i64 {
        self.content_of(i + 1) - self.content_of(i)
    }

    /// Swap the entries `i` and `i+1`; `None` if the result is not standard.
    pub fn swap(&self, i: usize) -> Option<Tableau> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
                    .collect()
            })
            .collect();
        let t = Tableau { rows };
        t.is_standard().then_some(t)
    }

    /// Remove the largest entry of a standard tableau.
    pub fn remove_max(&self) -> Tableau {
        let m = self.size();
        let mut rows = self.rows.clone();
        let (r, _) = self.position(m).expect("standard tableau");
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
        Tableau { rows }
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::from_rows(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All standard tableaux of shape `lambda`, sorted by row-reading word.
pub fn enumerate_syt(lambda: &Partition) -> Vec<Tableau> {
    fn rec(shape: &Partition, k: usize) -> Vec<Vec<Vec<usize>>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (r, _) in shape.removable_cells() {
            let smaller = shape.with_cell_removed(r);
            for mut rows in rec(&smaller, k - 1) {
                if r == rows.len() {
                    rows.push(Vec::new());
                }
                rows[r].push(k);
                out.push(rows);
            }
        }
        out
    }
    let mut out: Vec<Tableau> = rec(lambda, lambda.weight()).into_iter().map(|rows| Tableau { rows }).collect();
    out.sort_by_key(|a| a.reading_word());
    out
}

/// Semistandard tableaux of shape `lambda` with entries in `1..=n`, optionally
/// restricted to a fixed content. Sorted by row-reading word.
pub fn enumerate_ssyt(lambda: &Partition, n: usize, content: Option<&[usize]>) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
    let mut remaining: Option<Vec<usize>> = content.map(|c| c.to_vec());
    let mut out = Vec::new();

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        remaining: &mut Option<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { rows[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        let lo = lo_row.max(lo_col).max(1);
        for v in lo..=n {
            if let Some(rem) = remaining.as_mut() {
                if rem[v - 1] == 0 {
                    continue;
                }
                rem[v - 1] -= 1;
            }
            rows[r][c] = v;
            rec(idx + 1, cells, n, rows, remaining, out);
            if let Some(rem) = remaining.as_mut() {
                rem[v - 1] += 1;
            }
        }
        rows[r][c] = 0;
    }

    if let Some(c) = content {
        if c.len() != n || c.iter().sum::<usize>() != lambda.weight() {
            return out;
        }
    }
    rec(0, &cells, n, &mut rows, &mut remaining, &mut out);
    out.sort_by_key(|a| a.reading_word());
    out
}

/// Kostka number: SSYT of shape `lambda` and content `mu`.
pub fn kostka(lambda: &Partition, mu: &Composition) -> Result<u64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lambda.weight(), mu.weight()));
    }
    Ok(enumerate_ssyt(lambda, mu.len(), Some(mu.parts())).len() as u64)
}

/// `K[λ][μ]` over partitions of `r` in reverse lexicographic order.
pub fn kostka_matrix(r: usize) -> Vec<Vec<i64>> {
    let ps = partitions_of(r);
    ps.iter()
        .map(|l| {
            ps.iter()
                .map(|m| kostka(l, &Composition(m.parts().to_vec())).expect("same weight") as i64)
                .collect()
        })
        .collect()
}

/// Inverse of the Kostka matrix over partitions of `r` (same indexing).
pub fn inverse_kostka(r: usize) -> Vec<Vec<i64>> {
    let k = kostka_matrix(r);
    let d = k.len();
    // Upper unitriangular: solve K X = I column by column, bottom-up.
    let mut inv = vec![vec![0i64; d]; d];
    for col in 0..d {
        for i in (0..d).rev() {
            let mut s = if i == col { 1 } else { 0 };
            for j in i + 1..d {
                s -= k[i][j] * inv[j][col];
            }
            inv[i][col] = s;
        }
    }
    inv
}
