//! Quantum integers, factorials and multiset multiplicities.

use std::str::FromStr;

use super::{LaurentPoly, Rational, ScalarQ};
use crate::error::{Error, Result};

/// Which flavour of quantum integer to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// `[k] = (q^k - q^-k)/(q - q^-1)`
    Balanced,
    /// `(k)_q = 1 + q + ... + q^(k-1)`
    Q,
    /// `(k)_{q^2} = 1 + q^2 + ... + q^(2k-2)`
    Q2,
}

/// Flavour of `m(I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Multiplicity {
    Plain,
    Q,
    Q2,
}

impl FromStr for Multiplicity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Multiplicity::Plain),
            "q" => Ok(Multiplicity::Q),
            "q2" | "q^2" | "q²" => Ok(Multiplicity::Q2),
            other => Err(Error::UnknownVariant(other.to_string())),
        }
    }
}

/// `[k]` for any integer, with `[-k] = -[k]`.
pub fn q_int_signed(k: i64) -> ScalarQ {
    let a = k.unsigned_abs() as i32;
    let sign = if k < 0 { Rational::from_int(-1) } else { Rational::ONE };
    let terms = (0..a).map(|t| (a - 1 - 2 * t, sign.clone()));
    ScalarQ::from_laurent(LaurentPoly::from_terms(terms))
}

/// Balanced quantum integer `[k]` for `k >= 0`.
pub fn q_int(k: i64) -> Result<ScalarQ> {
    if k < 0 {
        return Err(Error::NegativeArgument(k));
    }
    Ok(q_int_signed(k))
}

/// `(k)` evaluated in the given base (`Balanced` gives `[k]`).
pub fn q_int_unbalanced(k: i64, base: Base) -> Result<ScalarQ> {
    if k < 0 {
        return Err(Error::NegativeArgument(k));
    }
    let step = match base {
        Base::Balanced => return q_int(k),
        Base::Q => 1,
        Base::Q2 => 2,
    };
    let k = k as i32;
    Ok(ScalarQ::from_laurent(LaurentPoly::from_terms((0..k).map(|t| (step * t, Rational::ONE)))))
}

pub fn q_factorial(k: i64, base: Base) -> Result<ScalarQ> {
    if k < 0 {
        return Err(Error::NegativeArgument(k));
    }
    let mut acc = ScalarQ::one();
    for j in 2..=k {
        acc = &acc * &q_int_unbalanced(j, base)?;
    }
    Ok(acc)
}

/// `m(I)`, `m_q(I)` or `m_{q^2}(I)`: product of factorials of letter multiplicities.
pub fn multiset_multiplicity(multiset: &[usize], variant: Multiplicity) -> Result<ScalarQ> {
    if multiset.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::NotSorted(multiset.to_vec()));
    }
    let mut acc = ScalarQ::one();
    let mut i = 0;
    while i < multiset.len() {
        let run = multiset[i..].iter().take_while(|&&x| x == multiset[i]).count();
        let f = match variant {
            Multiplicity::Plain => ScalarQ::from_int((1..=run as i64).product()),
            Multiplicity::Q => q_factorial(run as i64, Base::Q)?,
            Multiplicity::Q2 => q_factorial(run as i64, Base::Q2)?,
        };
        acc = &acc * &f;
        i += run;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> ScalarQ {
        ScalarQ::from_laurent(LaurentPoly::from_terms(
            terms.iter().map(|&(e, c)| (e, Rational::from_int(c))),
        ))
    }

    #[test]
    fn balanced_integers() {
        assert!(q_int(0).unwrap().is_zero());
        assert_eq!(q_int(2).unwrap(), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(q_int(3).unwrap(), lp(&[(2, 1), (0, 1), (-2, 1)]));
        assert!(matches!(q_int(-1), Err(Error::NegativeArgument(-1))));
        assert_eq!(q_int_signed(-2), -q_int(2).unwrap());
    }

    #[test]
    fn unbalanced_integers() {
        assert_eq!(q_int_unbalanced(2, Base::Q2).unwrap(), lp(&[(0, 1), (2, 1)]));
        assert!(q_int_unbalanced(1, Base::Q2).unwrap().is_one());
        assert_eq!(q_int_unbalanced(3, Base::Q2).unwrap(), lp(&[(0, 1), (2, 1), (4, 1)]));
        assert!(q_int_unbalanced(-3, Base::Q).is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(q_factorial(2, Base::Balanced).unwrap(), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(
            q_factorial(3, Base::Q2).unwrap(),
            &lp(&[(0, 1), (2, 1)]) * &lp(&[(0, 1), (2, 1), (4, 1)])
        );
        assert!(q_factorial(0, Base::Balanced).unwrap().is_one());
    }

    #[test]
    fn multiplicities() {
        assert!(multiset_multiplicity(&[1, 2, 3], Multiplicity::Q2).unwrap().is_one());
        assert_eq!(multiset_multiplicity(&[1, 1, 2], Multiplicity::Q2).unwrap(), lp(&[(0, 1), (2, 1)]));
        assert_eq!(multiset_multiplicity(&[1, 1, 1], Multiplicity::Plain).unwrap(), ScalarQ::from_int(6));
        assert!(matches!(multiset_multiplicity(&[2, 1], Multiplicity::Plain), Err(Error::NotSorted(_))));
    }

    #[test]
    fn balanced_times_difference() {
        for k in 0..=12 {
            let lhs = &q_int(k).unwrap() * &ScalarQ::q_minus_qinv();
            let rhs = &ScalarQ::q_pow(k as i32) - &ScalarQ::q_pow(-(k as i32));
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn q2_multiplicity_degenerates() {
        fn multisets(len: usize, max: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(cur.clone());
            if cur.len() == len {
                return;
            }
            for x in start..=max {
                cur.push(x);
                multisets(len, max, x, cur, out);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        multisets(5, 4, 1, &mut Vec::new(), &mut all);
        for i in all {
            let q2 = multiset_multiplicity(&i, Multiplicity::Q2).unwrap();
            let plain = multiset_multiplicity(&i, Multiplicity::Plain).unwrap();
            assert_eq!(
                q2.evaluate_at_q(&Rational::ONE).unwrap(),
                plain.evaluate_at_q(&Rational::ONE).unwrap()
            );
        }
    }
}
