//! Exact coefficients: rationals and Laurent polynomials in the formal
//! deformation parameter `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `"num/den"`, the serialized form used in every JSON schema.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rational::new(num, den))
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// A finite sum `Σ c_k q^k` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(k: i64) -> Self {
        Self::monomial(Rational::one(), k)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coefficient(&self, k: i64) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some((c, k))` when the scalar is the single term `c q^k`.
    pub fn as_monomial(&self) -> Option<(&Rational, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (c, *k))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, k: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Multiplies by `q^k`, i.e. shifts every exponent.
    pub fn shifted(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Exact substitution `q = v`.
    pub fn eval(&self, v: &Rational) -> Result<Rational> {
        if v.is_zero() {
            return Err(Error::EvalAtZero);
        }
        let mut acc = Rational::zero();
        for (k, c) in &self.terms {
            let power = if *k >= 0 {
                num_traits::pow(v.clone(), *k as usize)
            } else {
                num_traits::pow(v.recip(), k.unsigned_abs() as usize)
            };
            acc += c * power;
        }
        Ok(acc)
    }

    /// Substitutes `q = v` and returns the result as a constant scalar.
    pub fn specialize(&self, v: &Rational) -> Result<Self> {
        self.eval(v).map(Self::constant)
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c);
        }
        out
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if let Some((c, k)) = other.as_monomial() {
            return self.scaled(c).shifted(k);
        }
        if let Some((c, k)) = self.as_monomial() {
            return other.scaled(c).shifted(k);
        }
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a + b, &(ca * cb));
            }
        }
        out
    }
}

impl From<i64> for LaurentScalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<Rational> for LaurentScalar {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(mut self) -> LaurentScalar {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&LaurentScalar> for &LaurentScalar {
            type Output = LaurentScalar;
            fn $method(self, rhs: &LaurentScalar) -> LaurentScalar {
                self.$imp(rhs)
            }
        }
        impl $trait<LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $method(self, rhs: LaurentScalar) -> LaurentScalar {
                (&self).$imp(&rhs)
            }
        }
        impl $trait<&LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $method(self, rhs: &LaurentScalar) -> LaurentScalar {
                (&self).$imp(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Mul, mul, mul_ref);

impl Sub<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        self.add_ref(&-rhs)
    }
}

impl Sub<LaurentScalar> for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: LaurentScalar) -> LaurentScalar {
        &self - &rhs
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c);
        }
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &LaurentScalar) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, &-c);
        }
    }
}

fn write_q_power(f: &mut fmt::Formatter<'_>, k: i64) -> fmt::Result {
    match k {
        0 => Ok(()),
        1 => write!(f, "q"),
        _ => write!(f, "q^{k}"),
    }
}

/// Prints one signed term `c q^k` without its sign; the caller writes the sign.
fn write_abs_term(f: &mut fmt::Formatter<'_>, c: &Rational, k: i64) -> fmt::Result {
    let abs = c.abs();
    if k == 0 {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        write!(f, "{abs}")?;
    }
    write_q_power(f, k)
}

impl fmt::Display for LaurentScalar {
    /// Highest power first, e.g. `2q^2 + 1/2 - q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_abs_term(f, c, *k)?;
        }
        Ok(())
    }
}

impl Serialize for LaurentScalar {
    /// `[[k, "num/den"], ...]` with strictly increasing exponents.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, String)> = self
            .terms
            .iter()
            .map(|(k, c)| (*k, format_rational(c)))
            .collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, String)> = Vec::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        let mut last: Option<i64> = None;
        for (k, text) in pairs {
            if last.is_some_and(|prev| prev >= k) {
                return Err(D::Error::custom("exponents must be strictly increasing"));
            }
            last = Some(k);
            let c = parse_rational(&text)
                .ok_or_else(|| D::Error::custom(format!("bad rational {text:?}")))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient stored"));
            }
            terms.insert(k, c);
        }
        Ok(Self { terms })
    }
}

/// Top-level scalar JSON document `{"coeff": [[k, "num/den"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub coeff: LaurentScalar,
}

/// Adds `c` to the coefficient stored under `key`, dropping it if it cancels.
pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, LaurentScalar>, key: K, c: &LaurentScalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Renders `Σ c · basis` where an empty basis string denotes the unit.
pub(crate) fn format_sum<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a LaurentScalar, String)>,
{
    let mut out = String::new();
    for (idx, (c, basis)) in terms.into_iter().enumerate() {
        let (negative, body) = format_term(c, &basis);
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_term(c: &LaurentScalar, basis: &str) -> (bool, String) {
    if let Some((r, k)) = c.as_monomial() {
        let negative = r.is_negative();
        let magnitude = LaurentScalar::monomial(r.abs(), k);
        if basis.is_empty() {
            return (negative, magnitude.to_string());
        }
        if magnitude.is_one() {
            return (negative, basis.to_string());
        }
        return (negative, format!("{magnitude} {basis}"));
    }
    if basis.is_empty() {
        (false, format!("({c})"))
    } else {
        (false, format!("({c}) {basis}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(k: i64) -> LaurentScalar {
        LaurentScalar::q_pow(k)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(q(2) + LaurentScalar::zero(), q(2));
        assert!((q(1) + -q(1)).is_zero());
        let lhs = (q(1) + LaurentScalar::one()) + (q(-1) - LaurentScalar::one());
        assert_eq!(lhs, q(1) + q(-1));
    }

    #[test]
    fn multiplication_examples() {
        assert!((q(2) * q(-2)).is_one());
        for a in -3..=3 {
            for b in -3..=3 {
                assert_eq!(q(a) * q(b), q(a + b));
            }
        }
        let lhs = (q(1) - LaurentScalar::one()) * (q(1) + LaurentScalar::one());
        assert_eq!(lhs, q(2) - LaurentScalar::one());
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(q(3).eval(&int(1)).unwrap(), int(1));
        assert_eq!((q(-1) + q(1)).eval(&int(2)).unwrap(), rational(5, 2));
        assert_eq!(LaurentScalar::zero().eval(&int(7)).unwrap(), int(0));
        assert_eq!(q(-1).eval(&int(0)), Err(Error::EvalAtZero));
    }

    #[test]
    fn display_is_highest_power_first() {
        let s = q(2).scaled(&int(2)) - q(-1) + LaurentScalar::constant(rational(1, 2));
        assert_eq!(s.to_string(), "2q^2 + 1/2 - q^-1");
        assert_eq!((-q(1)).to_string(), "-q");
        assert_eq!(LaurentScalar::zero().to_string(), "0");
    }

    #[test]
    fn json_rejects_unsorted_exponents() {
        let bad = r#"[[2,"1/1"],[1,"1/1"]]"#;
        assert!(serde_json::from_str::<LaurentScalar>(bad).is_err());
        let good = r#"{"coeff":[[-1,"-1/1"],[2,"2/1"]]}"#;
        let parsed: ScalarJson = serde_json::from_str(good).unwrap();
        assert_eq!(parsed.coeff, q(2).scaled(&int(2)) - q(-1));
    }

    fn arb_scalar() -> impl Strategy<Value = LaurentScalar> {
        prop::collection::vec((-4i64..=4, -5i64..=5, 1i64..=3), 0..4).prop_map(|terms| {
            let mut s = LaurentScalar::zero();
            for (k, num, den) in terms {
                s.add_term(k, &rational(num, den));
            }
            s
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn eval_is_a_ring_homomorphism(a in arb_scalar(), b in arb_scalar(), v in prop_oneof![Just(int(1)), Just(int(-2)), Just(rational(3, 2))]) {
            prop_assert_eq!((&a * &b).eval(&v).unwrap(), a.eval(&v).unwrap() * b.eval(&v).unwrap());
            prop_assert_eq!((&a + &b).eval(&v).unwrap(), a.eval(&v).unwrap() + b.eval(&v).unwrap());
        }

        #[test]
        fn json_round_trip(a in arb_scalar()) {
            let text = serde_json::to_string(&ScalarJson { coeff: a.clone() }).unwrap();
            let back: ScalarJson = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back.coeff, a);
        }
    }
}
