//! The quantum n-space: PBW-ordered monomials `x₁^{α₁}⋯x_n^{α_n}` with `α₁ ∈ Z`
//! (the algebra is localized at `x₁`) and `α_i ≥ 0` for `i ≥ 2`.
//!
//! Generators satisfy `x_i x_j = q^{j−i} x_j x_i`, which gives the merge law
//! `x^α · x^β = q^{α∗β} x^{α+β}` on ordered monomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::bicharacter::{star_raw, MultiIndex};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::sample::{random_alpha, random_element, seeded_rng};
use crate::scalar::{accumulate, format_sum, LaurentScalar, Rational};

/// Product of two ordered monomials: `(k, α+β)` with `x^α x^β = q^k x^{α+β}`.
pub fn merge_monomials(a: &MultiIndex, b: &MultiIndex) -> (i64, MultiIndex) {
    (star_raw(a.entries(), b.entries()), a + b)
}

/// `Σ_k α_k`, with `α₁` counted with its sign.
pub fn total_degree(alpha: &MultiIndex) -> i64 {
    alpha.total()
}

/// Independent reordering oracle for the merge law.
///
/// Writes `x^a x^b` as a word of letters `x_i^{±1}` and bubble-sorts it into
/// PBW order, applying the generator relation `x_i^s x_j^t = q^{st(j−i)} x_j^t x_i^s`
/// once per adjacent transposition. Returns the accumulated scalar.
pub fn swap_oracle(a: &MultiIndex, b: &MultiIndex) -> Result<LaurentScalar> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    for m in [a, b] {
        if let Some(k) = (2..=m.dim()).find(|&k| m.get(k) < 0) {
            return Err(Error::NegativeExponent {
                index: k,
                exponent: m.get(k),
            });
        }
    }
    let mut word: Vec<(usize, i64)> = Vec::new();
    for m in [a, b] {
        for (k, e) in m.entries().iter().enumerate() {
            for _ in 0..e.unsigned_abs() {
                word.push((k + 1, e.signum()));
            }
        }
    }
    let mut exponent = 0i64;
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for p in 0..word.len().saturating_sub(1) {
            let ((i, s), (j, t)) = (word[p], word[p + 1]);
            if i > j {
                exponent += s * t * (j as i64 - i as i64);
                word.swap(p, p + 1);
                sorted = false;
            }
        }
    }
    Ok(LaurentScalar::q_pow(exponent))
}

/// A finite linear combination of ordered monomials with Laurent coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ElementJson", into = "ElementJson")]
pub struct Element {
    n: usize,
    terms: BTreeMap<MultiIndex, LaurentScalar>,
}

impl Element {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, LaurentScalar::one())
    }

    pub fn scalar(n: usize, c: LaurentScalar) -> Self {
        let mut out = Self::zero(n);
        out.add_term(MultiIndex::zero(n), &c);
        out
    }

    /// The ordered monomial `c · x^α`.
    pub fn monomial(alpha: MultiIndex, c: LaurentScalar) -> Result<Self> {
        if let Some(k) = (2..=alpha.dim()).find(|&k| alpha.get(k) < 0) {
            return Err(Error::NegativeExponent {
                index: k,
                exponent: alpha.get(k),
            });
        }
        let mut out = Self::zero(alpha.dim());
        out.add_term(alpha, &c);
        Ok(out)
    }

    /// `x^α` with unit coefficient; `α` must lie in the exponent domain.
    pub fn basis(alpha: MultiIndex) -> Result<Self> {
        Self::monomial(alpha, LaurentScalar::one())
    }

    /// Generator `x_i`, 1-based.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Self::basis(MultiIndex::unit(n, i))
    }

    pub fn x1_pow(n: usize, k: i64) -> Self {
        let mut alpha = MultiIndex::zero(n);
        alpha.set(1, k);
        let mut out = Self::zero(n);
        out.add_term(alpha, &LaurentScalar::one());
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &LaurentScalar)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> LaurentScalar {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    /// `Some(c)` if the element is a scalar multiple of the unit (or zero).
    pub fn as_scalar(&self) -> Option<LaurentScalar> {
        match self.terms.len() {
            0 => Some(LaurentScalar::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(a, _)| a.is_zero())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    /// Adds `c · x^α` in place.
    pub fn add_term(&mut self, alpha: MultiIndex, c: &LaurentScalar) {
        debug_assert_eq!(alpha.dim(), self.n);
        debug_assert!(
            alpha.in_exponent_domain(),
            "exponent {alpha} outside Z x Z+^(n-1)"
        );
        accumulate(&mut self.terms, alpha, c);
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            accumulate(&mut out.terms, a.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (k, sum) = merge_monomials(a, b);
                accumulate(&mut out.terms, sum, &(ca * cb).shifted(k));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (a, v) in &self.terms {
            accumulate(&mut out.terms, a.clone(), &(v * c));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.n);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Applies `c · x^α ↦ g(α) · c · x^α` termwise.
    pub fn map_diagonal(&self, mut g: impl FnMut(&MultiIndex) -> LaurentScalar) -> Self {
        let mut out = Self::zero(self.n);
        for (a, c) in &self.terms {
            accumulate(&mut out.terms, a.clone(), &(c * &g(a)));
        }
        out
    }

    /// Substitutes `q = v` in every coefficient.
    pub fn specialize(&self, v: &Rational) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (a, c) in &self.terms {
            accumulate(&mut out.terms, a.clone(), &c.specialize(v)?);
        }
        Ok(out)
    }
}

pub(crate) fn format_monomial(alpha: &MultiIndex) -> String {
    let parts: Vec<String> = alpha
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, e)| **e != 0)
        .map(|(k, e)| {
            if *e == 1 {
                format!("x{}", k + 1)
            } else {
                format!("x{}^{e}", k + 1)
            }
        })
        .collect();
    parts.join(" ")
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_sum(
            self.terms.iter().map(|(a, c)| (c, format_monomial(a))),
        ))
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs)
            .expect("dimension mismatch in Element addition")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.checked_add(&-rhs)
            .expect("dimension mismatch in Element subtraction")
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs)
            .expect("dimension mismatch in Element multiplication")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            n: self.n,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ElementTermJson {
    alpha: MultiIndex,
    coeff: LaurentScalar,
}

/// `{"n":3, "terms":[{"alpha":[...], "coeff":[[k,"num/den"],...]}]}`, terms sorted by alpha.
#[derive(Serialize, Deserialize)]
pub struct ElementJson {
    n: usize,
    terms: Vec<ElementTermJson>,
}

impl From<Element> for ElementJson {
    fn from(e: Element) -> Self {
        Self {
            n: e.n,
            terms: e
                .terms
                .into_iter()
                .map(|(alpha, coeff)| ElementTermJson { alpha, coeff })
                .collect(),
        }
    }
}

impl TryFrom<ElementJson> for Element {
    type Error = Error;

    fn try_from(json: ElementJson) -> Result<Self> {
        if json.n == 0 {
            return Err(Error::InvalidDimension);
        }
        let mut out = Element::zero(json.n);
        let mut last: Option<MultiIndex> = None;
        for t in json.terms {
            t.alpha.ensure_dim(json.n)?;
            if !t.alpha.in_exponent_domain() {
                return Err(Error::Json(format!(
                    "exponent {} outside Z x Z+^(n-1)",
                    t.alpha
                )));
            }
            if last.as_ref().is_some_and(|prev| prev >= &t.alpha) {
                return Err(Error::Json("terms must be strictly sorted by alpha".into()));
            }
            if t.coeff.is_zero() {
                return Err(Error::Json("zero coefficient stored".into()));
            }
            last = Some(t.alpha.clone());
            out.terms.insert(t.alpha, t.coeff);
        }
        Ok(out)
    }
}

/// Algebra suite: merge law against the reordering oracle, η-commutativity,
/// associativity, generator relations and invertibility of `x₁`.
pub fn check_algebra(n: usize, trials: usize, seed: u64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut merge = Report::new("x^a x^b = q^(a*b) x^(a+b) matches swap oracle");
    let mut commute = Report::new("x^a x^b = eta(a,b) x^b x^a");
    let mut assoc = Report::new("(fg)h = f(gh)");
    let mut relations = Report::new("x_i x_j = q^(j-i) x_j x_i");
    let mut inverse = Report::new("x1 x1^-1 = 1 = x1^-1 x1");
    for _ in 0..trials.max(1) * 5 {
        let a = random_alpha(&mut rng, n, -3, 4);
        let b = random_alpha(&mut rng, n, -3, 4);
        let (k, _) = merge_monomials(&a, &b);
        let oracle = swap_oracle(&a, &b).expect("exponents lie in the domain");
        merge.check_eq(&LaurentScalar::q_pow(k), &oracle, || format!("a={a} b={b}"));
    }
    for _ in 0..trials.max(1) * 3 / 2 {
        let a = random_alpha(&mut rng, n, -3, 4);
        let b = random_alpha(&mut rng, n, -3, 4);
        let (fa, fb) = (
            Element::basis(a.clone()).unwrap(),
            Element::basis(b.clone()).unwrap(),
        );
        let e = LaurentScalar::q_pow(crate::bicharacter::eta_exponent_raw(
            a.entries(),
            b.entries(),
        ));
        commute.check_eq(&(&fa * &fb), &(&fb * &fa).scale(&e), || {
            format!("a={a} b={b}")
        });
        let f = random_element(&mut rng, n, 3, -2, 3);
        let g = random_element(&mut rng, n, 3, -2, 3);
        let h = random_element(&mut rng, n, 3, -2, 3);
        assoc.check_eq(&(&(&f * &g) * &h), &(&f * &(&g * &h)), || {
            format!("f={f} g={g} h={h}")
        });
    }
    for i in 1..=n {
        for j in 1..=n {
            let (xi, xj) = (
                Element::generator(n, i).unwrap(),
                Element::generator(n, j).unwrap(),
            );
            let rhs = (&xj * &xi).scale(&LaurentScalar::q_pow(j as i64 - i as i64));
            relations.check_eq(&(&xi * &xj), &rhs, || format!("i={i} j={j}"));
        }
    }
    let (x1, inv) = (Element::x1_pow(n, 1), Element::x1_pow(n, -1));
    inverse.check_eq(&(&x1 * &inv), &Element::one(n), || "x1 x1^-1".into());
    inverse.check_eq(&(&inv * &x1), &Element::one(n), || "x1^-1 x1".into());
    vec![merge, commute, assoc, relations, inverse]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicharacter::eta;
    use crate::scalar::int;
    use proptest::prelude::*;

    fn mi(v: &[i64]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    fn x(n: usize, i: usize) -> Element {
        Element::generator(n, i).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let q_inv = LaurentScalar::q_pow(-1);
        assert_eq!(
            &x(2, 2) * &x(2, 1),
            Element::monomial(mi(&[1, 1]), q_inv.clone()).unwrap()
        );
        let f = &x(3, 1) + &x(3, 3);
        assert_eq!(&Element::one(3) * &f, f);
        let x1x2 = Element::basis(mi(&[1, 1])).unwrap();
        assert_eq!(
            &x1x2 * &x1x2,
            Element::monomial(mi(&[2, 2]), q_inv).unwrap()
        );
        assert_eq!(
            Element::one(2).checked_mul(&Element::one(3)),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn swap_oracle_examples() {
        assert_eq!(
            swap_oracle(&mi(&[0, 1]), &mi(&[1, 0])).unwrap(),
            LaurentScalar::q_pow(-1)
        );
        assert!(swap_oracle(&mi(&[2, 3, 1]), &mi(&[0, 0, 0]))
            .unwrap()
            .is_one());
        assert_eq!(
            swap_oracle(&mi(&[0, 2]), &mi(&[1, 0])).unwrap(),
            LaurentScalar::q_pow(-2)
        );
        assert!(swap_oracle(&mi(&[0, -1]), &mi(&[1, 0])).is_err());
    }

    #[test]
    fn linear_space_examples() {
        let f = &x(3, 1) - &x(3, 2).scale(&LaurentScalar::q());
        assert_eq!(&f + &Element::zero(3), f);
        assert!((&f - &f).is_zero());
        let two = LaurentScalar::from_int(2);
        let lhs = (&x(3, 1) + &x(3, 2)).scale(&two);
        assert_eq!(lhs, &x(3, 1).scale(&two) + &x(3, 2).scale(&two));
        assert_eq!(total_degree(&mi(&[2, 1, 0])), 3);
        assert_eq!(total_degree(&mi(&[-1, 1, 0])), 0);
        assert_eq!(total_degree(&MultiIndex::zero(3)), 0);
    }

    #[test]
    fn generator_relations() {
        for n in 1..=4 {
            for i in 1..=n {
                for j in 1..=n {
                    let lhs = &x(n, i) * &x(n, j);
                    let rhs =
                        (&x(n, j) * &x(n, i)).scale(&LaurentScalar::q_pow(j as i64 - i as i64));
                    assert_eq!(lhs, rhs, "i={i} j={j}");
                }
            }
        }
        let inv = Element::x1_pow(3, -1);
        assert_eq!(&x(3, 1) * &inv, Element::one(3));
        assert_eq!(&inv * &x(3, 1).pow(3), &x(3, 1).pow(3) * &inv);
    }

    #[test]
    fn display_examples() {
        assert_eq!((&x(2, 2) * &x(2, 1)).to_string(), "q^-1 x1 x2");
        let f = Element::monomial(mi(&[-3, 0]), LaurentScalar::from_int(-2)).unwrap();
        assert_eq!(f.to_string(), "-2 x1^-3");
        assert_eq!(Element::zero(2).to_string(), "0");
        let g = &Element::one(2).scale(&(LaurentScalar::q() + LaurentScalar::one())) - &x(2, 2);
        assert_eq!(g.to_string(), "(q + 1) - x2");
    }

    #[test]
    fn classical_limit_is_commutative() {
        let mut rng = seeded_rng(5);
        for _ in 0..50 {
            let f = random_element(&mut rng, 3, 3, -2, 3);
            let g = random_element(&mut rng, 3, 3, -2, 3);
            assert_eq!(
                (&f * &g).specialize(&int(1)).unwrap(),
                (&g * &f).specialize(&int(1)).unwrap()
            );
        }
    }

    #[test]
    fn json_rejects_bad_documents() {
        let ok = r#"{"n":2,"terms":[{"alpha":[-1,0],"coeff":[[0,"1/1"]]},{"alpha":[0,1],"coeff":[[1,"2/1"]]}]}"#;
        let e: Element = serde_json::from_str(ok).unwrap();
        assert_eq!(e.len(), 2);
        let unsorted = r#"{"n":2,"terms":[{"alpha":[0,1],"coeff":[[0,"1/1"]]},{"alpha":[-1,0],"coeff":[[0,"1/1"]]}]}"#;
        assert!(serde_json::from_str::<Element>(unsorted).is_err());
        let negative = r#"{"n":2,"terms":[{"alpha":[0,-1],"coeff":[[0,"1/1"]]}]}"#;
        assert!(serde_json::from_str::<Element>(negative).is_err());
    }

    proptest! {
        #[test]
        fn merge_law_matches_swap_oracle(seed in 0u64..10_000) {
            let mut rng = seeded_rng(seed);
            let a = random_alpha(&mut rng, 3, -3, 4);
            let b = random_alpha(&mut rng, 3, -3, 4);
            let (k, _) = merge_monomials(&a, &b);
            prop_assert_eq!(LaurentScalar::q_pow(k), swap_oracle(&a, &b).unwrap());
        }

        #[test]
        fn eta_commutativity_and_associativity(seed in 0u64..10_000) {
            let mut rng = seeded_rng(seed);
            let a = random_alpha(&mut rng, 3, -2, 3);
            let b = random_alpha(&mut rng, 3, -2, 3);
            let (fa, fb) = (Element::basis(a.clone()).unwrap(), Element::basis(b.clone()).unwrap());
            prop_assert_eq!(&fa * &fb, (&fb * &fa).scale(&eta(&a, &b).unwrap()));
            let f = random_element(&mut rng, 3, 3, -2, 2);
            let g = random_element(&mut rng, 3, 3, -2, 2);
            let h = random_element(&mut rng, 3, 3, -2, 2);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        }

        #[test]
        fn json_round_trip(seed in 0u64..10_000) {
            let mut rng = seeded_rng(seed);
            let f = random_element(&mut rng, 3, 4, -2, 3);
            let text = serde_json::to_string(&f).unwrap();
            prop_assert_eq!(serde_json::from_str::<Element>(&text).unwrap(), f);
        }
    }
}
