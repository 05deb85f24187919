//! The Hecke algebra `H_m`: arithmetic in the `T_σ` basis, seminormal
//! representations, characters, idempotents and Jucys–Murphy elements.

mod element;
mod seminormal;

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

pub use element::{hecke_multiply, HeckeElement};
pub use seminormal::{seminormal_rep, ScalarMatrix, SeminormalRep};

use crate::combinatorics::{perm_table, schur_element, Partition, Permutation, Tableau};
use crate::error::{Error, Result};
use crate::scalar::ScalarQ;
use seminormal::rep_with_matrices;

/// `y_k = 1 + (q - q^{-1}) Σ_{i<k} T_{(i,k)}` in `H_m` (1-based `k`).
pub fn jucys_murphy(k: usize, m: usize) -> Result<HeckeElement> {
    if k == 0 || k > m {
        return Err(Error::IndexOutOfRange { index: k, bound: m });
    }
    let mut y = HeckeElement::one(m);
    let qq = ScalarQ::q_minus_qinv();
    for i in 0..k - 1 {
        y.add_scaled(&HeckeElement::basis(&Permutation::transposition(m, i, k - 1)), &qq);
    }
    Ok(y)
}

static CHAR_CACHE: Lazy<Mutex<HashMap<Partition, HeckeElement>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// `χ^λ = Σ_σ tr ρ_λ(T_{σ^{-1}}) T_σ`.
pub fn irreducible_character(lambda: &Partition) -> HeckeElement {
    if let Some(hit) = CHAR_CACHE.lock().unwrap().get(lambda) {
        return hit.clone();
    }
    let m = lambda.weight();
    let table = perm_table(m);
    let rep = rep_with_matrices(lambda);
    let mats = &rep.1;
    let terms = (0..table.len())
        .map(|idx| (table.perms[idx].clone(), mats[table.inverse[idx] as usize].trace()));
    let chi = HeckeElement::from_terms(m, terms).expect("matching rank");
    CHAR_CACHE.lock().unwrap().insert(lambda.clone(), chi.clone());
    chi
}

/// `E_T = c_λ^{-1} Σ_σ ρ(T_{σ^{-1}})_{TT} T_σ`.
pub fn primitive_idempotent(t: &Tableau) -> Result<HeckeElement> {
    if !t.is_standard() {
        return Err(Error::InvalidTableau(format!("{t} is not standard")));
    }
    let shape = t.shape();
    let m = shape.weight();
    let table = perm_table(m);
    let rep = rep_with_matrices(&shape);
    let k = rep.0.basis.iter().position(|b| b == t).expect("standard tableau of this shape");
    let inv_c = schur_element(&shape).inv()?;
    let terms = (0..table.len())
        .map(|idx| (table.perms[idx].clone(), rep.1[table.inverse[idx] as usize].get(k, k) * &inv_c));
    HeckeElement::from_terms(m, terms)
}

/// The same idempotent built from Jucys–Murphy eigenvalue projections.
pub fn primitive_idempotent_jm(t: &Tableau) -> Result<HeckeElement> {
    if !t.is_standard() {
        return Err(Error::InvalidTableau(format!("{t} is not standard")));
    }
    let m = t.size();
    if m <= 1 {
        return Ok(HeckeElement::one(m));
    }
    let smaller = t.remove_max();
    let mut e = primitive_idempotent_jm(&smaller)?.embed(m);
    let c = t.content_of(m) as i32;
    let y = jucys_murphy(m, m)?;
    for (r, col) in smaller.shape().addable_cells() {
        let a = Partition::content(r, col) as i32;
        if a == c {
            continue;
        }
        let shifted = &y - &HeckeElement::scalar(m, ScalarQ::q_pow(2 * a));
        let denom = &ScalarQ::q_pow(2 * c) - &ScalarQ::q_pow(2 * a);
        e = (&e * &shifted).scale(&denom.inv()?);
    }
    Ok(e)
}

/// What sits on each block of the parabolic subalgebra before inducing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InducedFrom {
    Trivial,
    Sign,
    Shapes(Vec<Partition>),
}

/// `c_V^{-1} Σ_σ T_σ χ^V T_{σ^{-1}}` for the parabolic subalgebra with block sizes `mu`.
pub fn induced_character(mu: &[usize], inner: &InducedFrom) -> Result<HeckeElement> {
    let shapes: Vec<Partition> = match inner {
        InducedFrom::Trivial => mu.iter().map(|&k| Partition::row(k)).collect(),
        InducedFrom::Sign => mu.iter().map(|&k| Partition::column(k)).collect(),
        InducedFrom::Shapes(s) => {
            if s.len() != mu.len() {
                return Err(Error::LengthMismatch(s.len(), mu.len()));
            }
            for (shape, &k) in s.iter().zip(mu) {
                if shape.weight() != k {
                    return Err(Error::WeightMismatch(shape.weight(), k));
                }
            }
            s.clone()
        }
    };
    let m: usize = mu.iter().sum();
    let mut chi_v = HeckeElement::one(m);
    let mut c_v = ScalarQ::one();
    let mut offset = 0;
    for shape in &shapes {
        let k = shape.weight();
        if k > 0 {
            chi_v = &chi_v * &irreducible_character(shape).shifted(offset, m);
            c_v = &c_v * &schur_element(shape);
        }
        offset += k;
    }
    Ok(chi_v.conjugation_sum().scale(&c_v.inv()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_syt, partitions_of};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn t(m: usize, i: usize) -> HeckeElement {
        HeckeElement::generator(m, i).unwrap()
    }

    #[test]
    fn quadratic_and_braid() {
        let one = HeckeElement::one(3);
        let lhs = &t(3, 1) * &t(3, 1);
        let mut rhs = one.clone();
        rhs.add_scaled(&t(3, 1), &ScalarQ::q_minus_qinv());
        assert_eq!(lhs, rhs);
        let s12 = Permutation::simple(3, 0).compose(&Permutation::simple(3, 1));
        assert_eq!(&t(3, 1) * &t(3, 2), HeckeElement::basis(&s12));
        assert_eq!(&(&t(3, 1) * &t(3, 2)) * &t(3, 1), &(&t(3, 2) * &t(3, 1)) * &t(3, 2));
        assert!(HeckeElement::generator(3, 3).is_err());
        assert!(t(3, 1).try_mul(&t(2, 1)).is_err());
    }

    #[test]
    fn fast_product_matches_generator_steps() {
        let m = 4;
        let table = perm_table(m);
        let a = irreducible_character(&p(&[2, 1, 1])).scale(&ScalarQ::q_minus_qinv().inv().unwrap());
        for idx in [0usize, 5, 17, 23] {
            let sigma = &table.perms[idx];
            let mut slow = a.clone();
            for i in sigma.reduced_word() {
                slow = slow.mul_t_right(i);
            }
            assert_eq!(&a * &HeckeElement::basis(sigma), slow);
        }
    }

    #[test]
    fn jucys_murphy_examples() {
        assert_eq!(jucys_murphy(1, 3).unwrap(), HeckeElement::one(3));
        assert_eq!(jucys_murphy(2, 3).unwrap(), &t(3, 1) * &t(3, 1));
        let y3 = jucys_murphy(3, 3).unwrap();
        assert_eq!(y3, &(&(&t(3, 2) * &t(3, 1)) * &t(3, 1)) * &t(3, 2));
        let y2 = jucys_murphy(2, 3).unwrap();
        assert_eq!(&y2 * &y3, &y3 * &y2);
        assert!(jucys_murphy(4, 3).is_err());
    }

    #[test]
    fn seminormal_small_cases() {
        let r2 = seminormal_rep(&p(&[2]));
        assert_eq!(r2.gens[0].get(0, 0), &ScalarQ::q());
        let r11 = seminormal_rep(&p(&[1, 1]));
        assert_eq!(r11.gens[0].get(0, 0), &-ScalarQ::q_pow(-1));
        let r21 = seminormal_rep(&p(&[2, 1]));
        assert_eq!(r21.gens[0].get(0, 0), &ScalarQ::q());
        assert_eq!(r21.gens[0].get(1, 1), &-ScalarQ::q_pow(-1));
    }

    #[test]
    fn seminormal_relations_up_to_four() {
        for m in 2..=4 {
            for l in partitions_of(m) {
                let r = seminormal_rep(&l);
                let id = ScalarMatrix::identity(r.dim());
                for (i, g) in r.gens.iter().enumerate() {
                    let a = g.add(&id.scale(&-ScalarQ::q()));
                    let b = g.add(&id.scale(&ScalarQ::q_pow(-1)));
                    assert!(a.mul(&b).is_zero(), "{l} quadratic {i}");
                    if i + 1 < r.gens.len() {
                        let h = &r.gens[i + 1];
                        assert_eq!(g.mul(h).mul(g), h.mul(g).mul(h), "{l} braid {i}");
                    }
                    for h in r.gens.iter().skip(i + 2) {
                        assert_eq!(g.mul(h), h.mul(g));
                    }
                }
            }
        }
    }

    #[test]
    fn character_examples() {
        let mut want = HeckeElement::one(2);
        want.add_scaled(&t(2, 1), &ScalarQ::q());
        assert_eq!(irreducible_character(&p(&[2])), want);
        let mut want = HeckeElement::one(2);
        want.add_scaled(&t(2, 1), &-ScalarQ::q_pow(-1));
        assert_eq!(irreducible_character(&p(&[1, 1])), want);
    }

    #[test]
    fn idempotent_examples() {
        let e = primitive_idempotent(&Tableau::standard(vec![vec![1, 2]]).unwrap()).unwrap();
        let mut want = HeckeElement::one(2);
        want.add_scaled(&t(2, 1), &ScalarQ::q());
        let den = &ScalarQ::one() + &ScalarQ::q_pow(2);
        assert_eq!(e, want.scale(&den.inv().unwrap()));
        assert_eq!(primitive_idempotent_jm(&Tableau::standard(vec![vec![1, 2]]).unwrap()).unwrap(), e);
        let e = primitive_idempotent(&Tableau::standard(vec![vec![1], vec![2]]).unwrap()).unwrap();
        let mut want = HeckeElement::one(2);
        want.add_scaled(&t(2, 1), &-ScalarQ::q_pow(-1));
        let den = &ScalarQ::one() + &ScalarQ::q_pow(-2);
        assert_eq!(e, want.scale(&den.inv().unwrap()));
        assert!(primitive_idempotent(&Tableau::standard(vec![vec![1]]).unwrap()).unwrap() == HeckeElement::one(1));
    }

    #[test]
    fn idempotents_agree_up_to_four() {
        for m in 1..=4 {
            for l in partitions_of(m) {
                for tab in enumerate_syt(&l) {
                    let e = primitive_idempotent(&tab).unwrap();
                    assert_eq!(e, primitive_idempotent_jm(&tab).unwrap(), "{tab}");
                    assert_eq!(&e * &e, e, "{tab}");
                }
            }
        }
    }

    #[test]
    fn induced_examples() {
        let psi = induced_character(&[1, 1], &InducedFrom::Sign).unwrap();
        assert_eq!(psi, &irreducible_character(&p(&[2])) + &irreducible_character(&p(&[1, 1])));
        assert_eq!(induced_character(&[3], &InducedFrom::Trivial).unwrap(), irreducible_character(&p(&[3])));
        let ind = induced_character(&[2, 1], &InducedFrom::Shapes(vec![p(&[2]), p(&[1])])).unwrap();
        assert_eq!(ind, &irreducible_character(&p(&[3])) + &irreducible_character(&p(&[2, 1])));
        assert!(induced_character(&[2, 1], &InducedFrom::Shapes(vec![p(&[1]), p(&[1])])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let chi = irreducible_character(&p(&[2, 1]));
        let text = serde_json::to_string(&chi).unwrap();
        let back: HeckeElement = serde_json::from_str(&text).unwrap();
        assert_eq!(back, chi);
        assert!(text.starts_with("{\"m\":3,\"terms\":[{\"perm\":[1,2,3]"));
    }
}
