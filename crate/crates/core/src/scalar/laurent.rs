//! Laurent polynomials in `q` with exact rational coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense storage `coeffs[k]` is the coefficient of `q^(low + k)`.
/// The zero polynomial has no coefficients and `low == 0`; otherwise the first
/// and last coefficient are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: exp, coeffs: vec![c] }
    }

    /// `q^exp`
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(Rational::ONE, exp)
    }

    pub fn from_dense(low: i32, coeffs: Vec<Rational>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for (e, c) in terms {
            acc = &acc + &LaurentPoly::monomial(c, e);
        }
        acc
    }

    fn trim(&mut self) {
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i32;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i32 {
        self.low
    }

    pub fn high_exp(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    /// Number of coefficient slots between lowest and highest exponent.
    pub fn span(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            Rational::ZERO
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn lowest_coeff(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `q -> q^k` for a positive integer `k`.
    pub fn substitute_power(&self, k: u32) -> Self {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e * k as i32, c.clone())))
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, at: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::ZERO);
        }
        if at.is_zero() {
            if self.low < 0 {
                return Err(Error::Pole("0".into()));
            }
            return Ok(self.coeff(0));
        }
        // Horner on the ordinary polynomial, then multiply by at^low.
        let mut acc = Rational::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        let base = if self.low >= 0 { at.pow(self.low as u32) } else { at.recip()?.pow((-self.low) as u32) };
        Ok(&acc * &base)
    }

    /// Coefficients of the ordinary polynomial `q^(-low) * self` (constant first).
    pub(crate) fn dense(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Sum of absolute values of the coefficients' numerators, as a crude size measure.
    pub fn weight(&self) -> usize {
        self.coeffs.len()
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exp().max(rhs.high_exp());
        let mut coeffs = vec![Rational::ZERO; (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] = c.clone();
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(rhs.low - low) as usize + k];
            *slot += c;
        }
        LaurentPoly::from_dense(low, coeffs)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        let mut coeffs = vec![Rational::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += &(a * b);
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural total order (used only for deterministic sorting).
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.low.cmp(&other.low).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || e == 0;
            if show_coeff {
                if abs.is_integer() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
            }
            match e {
                0 => {}
                1 => write!(f, "{}q", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}q^{}", if show_coeff { "*" } else { "" }, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Ordinary polynomial helpers (constant term first), used for GCD and exact
// division after shifting Laurent polynomials to non-negative exponents.

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_make_monic(p: &mut [Rational]) {
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            let inv = lead.recip().expect("nonzero leading coefficient");
            for c in p.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
}

/// Remainder of `a` modulo `b` (b nonzero, monic).
fn poly_rem_monic(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
    let db = b.len() - 1;
    while a.len() > db {
        let lead = a.last().cloned().unwrap();
        let shift = a.len() - 1 - db;
        if !lead.is_zero() {
            for (k, c) in b.iter().enumerate() {
                let t = &lead * c;
                a[shift + k] -= &t;
            }
        }
        a.pop();
        poly_trim(&mut a);
    }
    a
}

/// Monic GCD of two nonzero ordinary polynomials.
pub(crate) fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    poly_make_monic(&mut y);
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![Rational::ONE];
        }
        let mut r = poly_rem_monic(x, &y);
        poly_make_monic(&mut r);
        x = y;
        y = r;
    }
    poly_make_monic(&mut x);
    x
}

/// Exact quotient `a / b`; panics if the division is not exact.
pub(crate) fn poly_div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut rem = a.to_vec();
    poly_trim(&mut rem);
    if rem.is_empty() {
        return rem;
    }
    let db = b.len() - 1;
    let lead_inv = b.last().unwrap().recip().expect("nonzero divisor");
    let mut quot = vec![Rational::ZERO; rem.len().saturating_sub(db).max(1)];
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let c = rem.last().unwrap() * &lead_inv;
        for (k, bc) in b.iter().enumerate() {
            let t = &c * bc;
            rem[shift + k] -= &t;
        }
        quot[shift] = c;
        rem.pop();
        poly_trim(&mut rem);
    }
    debug_assert!(rem.is_empty(), "inexact polynomial division");
    poly_trim(&mut quot);
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = LaurentPoly::from_terms([(1, r(1)), (-1, r(-1))]);
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.low_exp(), 0);
    }

    #[test]
    fn multiply_balanced_integers() {
        // (q + q^-1)(q - q^-1) = q^2 - q^-2
        let a = LaurentPoly::from_terms([(1, r(1)), (-1, r(1))]);
        let b = LaurentPoly::from_terms([(1, r(1)), (-1, r(-1))]);
        assert_eq!(&a * &b, LaurentPoly::from_terms([(2, r(1)), (-2, r(-1))]));
    }

    #[test]
    fn evaluation_and_pole() {
        let p = LaurentPoly::from_terms([(1, r(1)), (-1, r(1))]);
        assert_eq!(p.evaluate(&r(1)).unwrap(), r(2));
        assert_eq!(p.evaluate(&r(2)).unwrap(), Rational::new(5, 2));
        assert!(p.evaluate(&r(0)).is_err());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x+1)(x-2) and (x+1)(x+3)
        let a = vec![r(-2), r(-1), r(1)];
        let b = vec![r(3), r(4), r(1)];
        assert_eq!(poly_gcd(&a, &b), vec![r(1), r(1)]);
        assert_eq!(poly_div_exact(&a, &[r(1), r(1)]), vec![r(-2), r(1)]);
    }
}
