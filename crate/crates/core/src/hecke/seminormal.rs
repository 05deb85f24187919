use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::combinatorics::{enumerate_syt, perm_table, Partition, Tableau};
use crate::scalar::{q_int_signed, ScalarQ};

/// Dense square matrix over `Q(q)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalarMatrix {
    dim: usize,
    data: Vec<ScalarQ>,
}

impl ScalarMatrix {
    pub fn zero(dim: usize) -> Self {
        ScalarMatrix { dim, data: vec![ScalarQ::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = ScalarQ::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &ScalarQ {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ScalarQ) {
        self.data[r * self.dim + c] = v;
    }

    pub fn mul(&self, other: &ScalarMatrix) -> ScalarMatrix {
        let n = self.dim;
        let mut out = Self::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * n + c] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ScalarMatrix) -> ScalarMatrix {
        ScalarMatrix { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, s: &ScalarQ) -> ScalarMatrix {
        ScalarMatrix { dim: self.dim, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn trace(&self) -> ScalarQ {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

/// The seminormal representation of `H_m` attached to a shape.
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    pub shape: Partition,
    pub basis: Vec<Tableau>,
    /// `gens[i]` is the matrix of `T_{i+1}`, acting on column vectors.
    pub gens: Vec<ScalarMatrix>,
}

impl SeminormalRep {
    pub fn new(shape: &Partition) -> Self {
        let basis = enumerate_syt(shape);
        let m = shape.weight();
        let dim = basis.len();
        let index: HashMap<&Tableau, usize> = basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let mut gens = Vec::new();
        for i in 1..m {
            let mut g = ScalarMatrix::zero(dim);
            for (col, t) in basis.iter().enumerate() {
                let d = t.axial_distance(i);
                let qd = q_int_signed(d);
                g.set(col, col, &ScalarQ::q_pow(d as i32) / &qd);
                if let Some(swapped) = t.swap(i) {
                    let row = index[&swapped];
                    let coeff = if d < 0 {
                        ScalarQ::one()
                    } else {
                        &(&q_int_signed(d + 1) * &q_int_signed(d - 1)) / &(&qd * &qd)
                    };
                    g.set(row, col, coeff);
                }
            }
            gens.push(g);
        }
        SeminormalRep { shape: shape.clone(), basis, gens }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `ρ(T_σ)` for every `σ ∈ S_m`, indexed by lexicographic rank.
    pub fn all_matrices(&self) -> Vec<ScalarMatrix> {
        let m = self.shape.weight();
        let table = perm_table(m);
        let mut out: Vec<Option<ScalarMatrix>> = vec![None; table.len()];
        out[0] = Some(ScalarMatrix::identity(self.dim()));
        // visit by length so that every parent is ready
        let mut order: Vec<usize> = (0..table.len()).collect();
        order.sort_by_key(|&k| table.length[k]);
        for &idx in order.iter().skip(1) {
            let i = (0..m - 1).find(|&i| !table.right_ascent(idx, i)).unwrap();
            let parent = table.right_s(idx, i);
            let pm = out[parent].as_ref().expect("parent computed first");
            out[idx] = Some(pm.mul(&self.gens[i]));
        }
        out.into_iter().map(|x| x.unwrap()).collect()
    }
}

static REP_CACHE: Lazy<Mutex<HashMap<Partition, Arc<(SeminormalRep, Vec<ScalarMatrix>)>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Representation together with all `ρ(T_σ)`, cached per shape.
pub(crate) fn rep_with_matrices(shape: &Partition) -> Arc<(SeminormalRep, Vec<ScalarMatrix>)> {
    if let Some(hit) = REP_CACHE.lock().unwrap().get(shape) {
        return hit.clone();
    }
    let rep = SeminormalRep::new(shape);
    let mats = rep.all_matrices();
    let entry = Arc::new((rep, mats));
    REP_CACHE.lock().unwrap().insert(shape.clone(), entry.clone());
    entry
}

pub fn seminormal_rep(shape: &Partition) -> SeminormalRep {
    SeminormalRep::new(shape)
}
