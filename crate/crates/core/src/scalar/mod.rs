//! Exact scalars: rational functions in `q` with rational coefficients.

mod laurent;
mod qnum;
mod rational;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use laurent::LaurentPoly;
pub use qnum::{
    multiset_multiplicity, q_factorial, q_int, q_int_signed, q_int_unbalanced, Base, Multiplicity,
};
pub use rational::Rational;

use crate::error::{Error, Result};
use laurent::{poly_div_exact, poly_gcd};

/// An element of the field `Q(q)`, stored as a reduced fraction of Laurent
/// polynomials whose denominator has lowest exponent 0 and leading coefficient 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for ScalarQ {
    fn default() -> Self {
        ScalarQ::zero()
    }
}

impl ScalarQ {
    pub fn zero() -> Self {
        ScalarQ { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        ScalarQ { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::constant(Rational::from_int(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_laurent(LaurentPoly::constant(r))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        ScalarQ { num: p, den: LaurentPoly::one() }
    }

    /// `q^k`
    pub fn q_pow(k: i32) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(k))
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q - q^{-1}`
    pub fn q_minus_qinv() -> Self {
        Self::from_laurent(LaurentPoly::from_terms([
            (1, Rational::ONE),
            (-1, Rational::from_int(-1)),
        ]))
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_monomial() {
            let c = den.lowest_coeff().unwrap();
            let num = if c.is_one() { num } else { num.scale(&c.recip().unwrap()) };
            return ScalarQ { num: num.shift(-den.low_exp()), den: LaurentPoly::one() };
        }
        let shift = num.low_exp() - den.low_exp();
        let (n, d) = (num.dense(), den.dense());
        let g = poly_gcd(n, d);
        let (n, d) = if g.len() > 1 { (poly_div_exact(n, &g), poly_div_exact(d, &g)) } else { (n.to_vec(), d.to_vec()) };
        let lead_inv = d.last().unwrap().recip().unwrap();
        let num = LaurentPoly::from_dense(shift, n).scale(&lead_inv);
        let den = LaurentPoly::from_dense(0, d).scale(&lead_inv);
        ScalarQ { num, den }
    }

    /// Re-applies the canonical form; a no-op on any value built by this type.
    pub fn renormalized(&self) -> Self {
        Self::normalize(self.num.clone(), self.den.clone())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = ScalarQ::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ScalarQ { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        ScalarQ { num: self.num.shift(k), den: self.den.clone() }
    }

    /// Exact value at `q = value`; a vanishing denominator is reported as a pole.
    pub fn evaluate_at_q(&self, value: &Rational) -> Result<Rational> {
        let d = self.den.evaluate(value).map_err(|_| Error::Pole(value.to_string()))?;
        if d.is_zero() {
            return Err(Error::Pole(value.to_string()));
        }
        let n = self.num.evaluate(value).map_err(|_| Error::Pole(value.to_string()))?;
        Ok(&n / &d)
    }

    /// `self · d` as a Laurent polynomial; `d` must be a multiple of the denominator.
    pub fn times_denominator_multiple(&self, d: &LaurentPoly) -> LaurentPoly {
        if self.den.is_one() {
            return &self.num * d;
        }
        let q = poly_div_exact(d.dense(), self.den.dense());
        &self.num * &LaurentPoly::from_dense(d.low_exp(), q)
    }

    fn terms_json(p: &LaurentPoly) -> Vec<(i32, String)> {
        p.terms().map(|(e, c)| (e, c.to_ratio_string())).collect()
    }
}

/// Exact evaluation of a scalar at a rational value of `q`.
pub fn evaluate_at_q(s: &ScalarQ, value: &Rational) -> Result<Rational> {
    s.evaluate_at_q(value)
}

/// Least common multiple of the denominators (monic, lowest exponent 0).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a ScalarQ>) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for v in values {
        let d = v.denominator();
        if d.is_one() || *d == acc {
            continue;
        }
        if acc.is_one() {
            acc = d.clone();
            continue;
        }
        let g = poly_gcd(acc.dense(), d.dense());
        let cofactor = poly_div_exact(d.dense(), &g);
        acc = &acc * &LaurentPoly::from_dense(0, cofactor);
    }
    acc
}

impl From<i64> for ScalarQ {
    fn from(n: i64) -> Self {
        ScalarQ::from_int(n)
    }
}

impl From<Rational> for ScalarQ {
    fn from(r: Rational) -> Self {
        ScalarQ::from_rational(r)
    }
}

impl From<LaurentPoly> for ScalarQ {
    fn from(p: LaurentPoly) -> Self {
        ScalarQ::from_laurent(p)
    }
}

impl<'a> Add<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn add(self, rhs: &'a ScalarQ) -> ScalarQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ScalarQ { num: &self.num + &rhs.num, den: LaurentPoly::one() };
        }
        if self.den == rhs.den {
            return ScalarQ::normalize(&self.num + &rhs.num, self.den.clone());
        }
        if rhs.den.is_one() {
            return ScalarQ::normalize(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return ScalarQ::normalize(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        ScalarQ::normalize(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn sub(self, rhs: &'a ScalarQ) -> ScalarQ {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: &'a ScalarQ) -> ScalarQ {
        if self.is_zero() || rhs.is_zero() {
            return ScalarQ::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ScalarQ { num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        ScalarQ::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn div(self, rhs: &'a ScalarQ) -> ScalarQ {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ScalarQ> for ScalarQ {
            type Output = ScalarQ;
            fn $m(self, rhs: ScalarQ) -> ScalarQ {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ScalarQ> for ScalarQ {
            type Output = ScalarQ;
            fn $m(self, rhs: &'a ScalarQ) -> ScalarQ {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&ScalarQ> for ScalarQ {
    fn add_assign(&mut self, rhs: &ScalarQ) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ScalarQ> for ScalarQ {
    fn sub_assign(&mut self, rhs: &ScalarQ) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&ScalarQ> for ScalarQ {
    fn mul_assign(&mut self, rhs: &ScalarQ) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for ScalarQ {
    fn sum<I: Iterator<Item = ScalarQ>>(iter: I) -> Self {
        iter.fold(ScalarQ::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for ScalarQ {
    fn product<I: Iterator<Item = ScalarQ>>(iter: I) -> Self {
        iter.fold(ScalarQ::one(), |a, b| &a * &b)
    }
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.terms().count() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    num: Vec<(i32, String)>,
    den: Vec<(i32, String)>,
}

impl Serialize for ScalarQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr { num: Self::terms_json(&self.num), den: Self::terms_json(&self.den) }.serialize(s)
    }
}

fn parse_terms(terms: &[(i32, String)]) -> Result<LaurentPoly> {
    let mut out = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        out.push((*e, c.parse::<Rational>()?));
    }
    Ok(LaurentPoly::from_terms(out))
}

impl<'de> Deserialize<'de> for ScalarQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(d)?;
        let num = parse_terms(&repr.num).map_err(D::Error::custom)?;
        let den = parse_terms(&repr.den).map_err(D::Error::custom)?;
        ScalarQ::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_int(c))))
    }

    #[test]
    fn reduces_common_factor() {
        // (q^2 - 1)/(q - 1) = q + 1
        let s = ScalarQ::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(s, ScalarQ::from_laurent(lp(&[(1, 1), (0, 1)])));
        assert!(s.is_laurent());
    }

    #[test]
    fn denominator_is_normalized() {
        // 1 / (2q^-1 + 4q) -> (q/4) / (q^2 + 1/2)
        let s = ScalarQ::new(lp(&[(0, 1)]), lp(&[(-1, 2), (1, 4)])).unwrap();
        assert_eq!(s.denominator().low_exp(), 0);
        assert!(s.denominator().leading_coeff().unwrap().is_one());
        assert_eq!(s.numerator(), &LaurentPoly::monomial(Rational::new(1, 4), 1));
    }

    #[test]
    fn evaluation() {
        let two = Rational::from_int(2);
        let qq = ScalarQ::from_laurent(lp(&[(1, 1), (-1, 1)]));
        assert_eq!(qq.evaluate_at_q(&Rational::ONE).unwrap(), two);
        let s = ScalarQ::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(evaluate_at_q(&s, &Rational::ONE).unwrap(), two);
        let pole = ScalarQ::new(lp(&[(0, 1)]), lp(&[(1, 1), (0, -1)])).unwrap();
        assert!(matches!(pole.evaluate_at_q(&Rational::ONE), Err(Error::Pole(_))));
        assert!(matches!(ScalarQ::q_pow(-1).evaluate_at_q(&Rational::ZERO), Err(Error::Pole(_))));
    }

    #[test]
    fn common_denominators() {
        let a = ScalarQ::new(lp(&[(0, 1)]), lp(&[(0, 1), (2, 1)])).unwrap();
        let b = ScalarQ::new(lp(&[(1, 1)]), lp(&[(0, 1), (2, 1), (4, 1)])).unwrap();
        let c = ScalarQ::new(lp(&[(0, 3)]), lp(&[(0, -1), (4, 1)])).unwrap();
        let d = common_denominator([&a, &b, &c, &ScalarQ::q()]);
        for v in [&a, &b, &c] {
            let cleared = ScalarQ::from_laurent(v.times_denominator_multiple(&d));
            assert_eq!(&cleared / &ScalarQ::from_laurent(d.clone()), v.clone());
        }
        // (1+q^2)(1+q^2+q^4)(q^2-1) has degree 8
        assert_eq!(d.high_exp(), 8);
    }

    #[test]
    fn json_round_trip() {
        let s = ScalarQ::new(lp(&[(-1, 3), (2, -5)]), lp(&[(0, 7), (1, 2)])).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.starts_with("{\"num\":[["));
        let back: ScalarQ = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        let parsed: ScalarQ = serde_json::from_str(r#"{"num":[[0,"2"]],"den":[[0,"4/1"]]}"#).unwrap();
        assert_eq!(parsed, ScalarQ::from_rational(Rational::new(1, 2)));
        assert!(serde_json::from_str::<ScalarQ>(r#"{"num":[[0,"1"]],"den":[]}"#).is_err());
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-3i32..=3, -4i64..=4), 0..4).prop_map(|v| lp(&v))
    }

    fn arb_scalar() -> impl Strategy<Value = ScalarQ> {
        (arb_laurent(), arb_laurent()).prop_filter_map("nonzero denominator", |(n, d)| {
            ScalarQ::new(n, d).ok()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_laws(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn normalization_is_idempotent(n in arb_laurent(), d in arb_laurent()) {
            if let Ok(s) = ScalarQ::new(n, d) {
                prop_assert_eq!(s.renormalized(), s.clone());
                prop_assert_eq!(ScalarQ::new(s.numerator().clone(), s.denominator().clone()).unwrap(), s);
            }
        }
    }
}
