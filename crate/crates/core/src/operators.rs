//! Twisted derivations `∂_i`, the automorphisms `σ_β` and the algebra
//! `D_q(2n)` they generate, kept in the normal form `σ^γ ∂^β`.
//!
//! Relations used by the normal form:
//! `∂_i ∂_j = q^{j−i} ∂_j ∂_i`, `σ_α σ_β = σ_{α+β}`, `σ_α ∂_i = η(α, ε_i) ∂_i σ_α`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bicharacter::{eta_exponent_raw, star_raw, MultiIndex};
use crate::error::{Error, Result};
use crate::qspace::Element;
use crate::report::Report;
use crate::sample::{
    monomials_in_box, monomials_up_to, random_alpha, random_element, random_scalar, seeded_rng,
};
use crate::scalar::{accumulate, format_sum, int, LaurentScalar};

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

/// `∂_i(x^α) = η(ᾱ_i, ε_i) α_i x^{α−ε_i}` extended linearly.
pub fn apply_partial(i: usize, f: &Element) -> Result<Element> {
    let n = f.n();
    check_index(i, n)?;
    let unit = MultiIndex::unit(n, i);
    let mut out = Element::zero(n);
    for (alpha, c) in f.terms() {
        let a_i = alpha.get(i);
        if a_i == 0 {
            continue;
        }
        let twist = eta_exponent_raw(alpha.truncated_before(i).entries(), unit.entries());
        out.add_term(alpha - &unit, &c.scaled(&int(a_i)).shifted(twist));
    }
    Ok(out)
}

/// `σ_β(x^α) = η(α, β) x^α`.
pub fn apply_sigma(beta: &MultiIndex, f: &Element) -> Result<Element> {
    beta.ensure_dim(f.n())?;
    Ok(f.map_diagonal(|alpha| {
        LaurentScalar::q_pow(eta_exponent_raw(alpha.entries(), beta.entries()))
    }))
}

/// Normal-form word `σ^γ ∂^β` with `γ ∈ Zⁿ`, `β ∈ Z₊ⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DqKey {
    pub gamma: MultiIndex,
    pub beta: MultiIndex,
}

impl DqKey {
    pub fn unit(n: usize) -> Self {
        Self {
            gamma: MultiIndex::zero(n),
            beta: MultiIndex::zero(n),
        }
    }

    /// `(k, key)` with `self · other = q^k key`.
    pub fn mul(&self, other: &Self) -> (i64, Self) {
        let k = eta_exponent_raw(self.beta.entries(), other.gamma.entries())
            + star_raw(self.beta.entries(), other.beta.entries());
        (
            k,
            Self {
                gamma: &self.gamma + &other.gamma,
                beta: &self.beta + &other.beta,
            },
        )
    }

    /// Sum of `|γ_i|` and `β_i`.
    pub fn degree(&self) -> i64 {
        self.gamma.entries().iter().map(|g| g.abs()).sum::<i64>() + self.beta.total()
    }
}

pub(crate) fn format_dq_key(key: &DqKey) -> String {
    let mut parts = Vec::new();
    for (k, e) in key.gamma.entries().iter().enumerate() {
        match *e {
            0 => {}
            1 => parts.push(format!("s{}", k + 1)),
            e => parts.push(format!("s{}^{e}", k + 1)),
        }
    }
    for (k, e) in key.beta.entries().iter().enumerate() {
        match *e {
            0 => {}
            1 => parts.push(format!("d{}", k + 1)),
            e => parts.push(format!("d{}^{e}", k + 1)),
        }
    }
    parts.join(" ")
}

/// Element of `D_q(2n)`: Laurent combination of normal-form words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DqElementJson", into = "DqElementJson")]
pub struct DqElement {
    n: usize,
    terms: BTreeMap<DqKey, LaurentScalar>,
}

impl DqElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::word(
            MultiIndex::zero(n),
            MultiIndex::zero(n),
            LaurentScalar::one(),
        )
        .unwrap()
    }

    /// `c · σ^γ ∂^β`.
    pub fn word(gamma: MultiIndex, beta: MultiIndex, c: LaurentScalar) -> Result<Self> {
        gamma.ensure_dim(beta.dim())?;
        if let Some(k) = (1..=beta.dim()).find(|&k| beta.get(k) < 0) {
            return Err(Error::NegativePartialExponent {
                index: k,
                exponent: beta.get(k),
            });
        }
        let mut out = Self::zero(gamma.dim());
        out.add_term(DqKey { gamma, beta }, &c);
        Ok(out)
    }

    pub fn partial(n: usize, i: usize) -> Result<Self> {
        check_index(i, n)?;
        Self::word(
            MultiIndex::zero(n),
            MultiIndex::unit(n, i),
            LaurentScalar::one(),
        )
    }

    /// `σ_i^k`.
    pub fn sigma(n: usize, i: usize, k: i64) -> Result<Self> {
        check_index(i, n)?;
        Self::word(
            MultiIndex::unit(n, i).scaled(k),
            MultiIndex::zero(n),
            LaurentScalar::one(),
        )
    }

    pub fn sigma_vec(gamma: MultiIndex) -> Self {
        let n = gamma.dim();
        Self::word(gamma, MultiIndex::zero(n), LaurentScalar::one()).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DqKey, &LaurentScalar)> + '_ {
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

    pub fn add_term(&mut self, key: DqKey, c: &LaurentScalar) {
        debug_assert_eq!(key.gamma.dim(), self.n);
        accumulate(&mut self.terms, key, c);
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.n);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (k, key) = a.mul(b);
                out.add_term(key, &(ca * cb).shifted(k));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| &acc * self)
    }

    /// Substitutes `q = v` in every coefficient.
    pub fn specialize(&self, v: &crate::scalar::Rational) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &c.specialize(v)?);
        }
        Ok(out)
    }
}

/// Product in `D_q(2n)`, reduced to normal form.
pub fn dq_mul(u: &DqElement, v: &DqElement) -> Result<DqElement> {
    u.checked_mul(v)
}

/// Action of `D_q(2n)` on `A_q(n)`: for `σ^γ ∂^β`, the `∂`'s act first
/// (rightmost `∂_n` innermost), then `σ_γ`.
pub fn dq_apply(u: &DqElement, f: &Element) -> Result<Element> {
    if u.n() != f.n() {
        return Err(Error::DimensionMismatch {
            left: u.n(),
            right: f.n(),
        });
    }
    let mut out = Element::zero(f.n());
    for (key, c) in u.terms() {
        let mut g = f.clone();
        for i in (1..=f.n()).rev() {
            for _ in 0..key.beta.get(i) {
                g = apply_partial(i, &g)?;
            }
        }
        g = apply_sigma(&key.gamma, &g)?;
        out = &out + &g.scale(c);
    }
    Ok(out)
}

impl fmt::Display for DqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_sum(
            self.terms.iter().map(|(k, c)| (c, format_dq_key(k))),
        ))
    }
}

impl Add for &DqElement {
    type Output = DqElement;
    fn add(self, rhs: &DqElement) -> DqElement {
        assert_eq!(self.n, rhs.n, "dimension mismatch in DqElement addition");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c);
        }
        out
    }
}

impl Sub for &DqElement {
    type Output = DqElement;
    fn sub(self, rhs: &DqElement) -> DqElement {
        self + &-rhs
    }
}

impl Neg for &DqElement {
    type Output = DqElement;
    fn neg(self) -> DqElement {
        self.scale(&LaurentScalar::from_int(-1))
    }
}

impl Mul for &DqElement {
    type Output = DqElement;
    fn mul(self, rhs: &DqElement) -> DqElement {
        self.checked_mul(rhs)
            .expect("dimension mismatch in DqElement multiplication")
    }
}

#[derive(Serialize, Deserialize)]
struct DqTermJson {
    gamma: MultiIndex,
    beta: MultiIndex,
    coeff: LaurentScalar,
}

#[derive(Serialize, Deserialize)]
pub struct DqElementJson {
    n: usize,
    terms: Vec<DqTermJson>,
}

impl From<DqElement> for DqElementJson {
    fn from(u: DqElement) -> Self {
        Self {
            n: u.n,
            terms: u
                .terms
                .into_iter()
                .map(|(k, coeff)| DqTermJson {
                    gamma: k.gamma,
                    beta: k.beta,
                    coeff,
                })
                .collect(),
        }
    }
}

impl TryFrom<DqElementJson> for DqElement {
    type Error = Error;

    fn try_from(json: DqElementJson) -> Result<Self> {
        if json.n == 0 {
            return Err(Error::InvalidDimension);
        }
        let mut out = DqElement::zero(json.n);
        let mut last: Option<DqKey> = None;
        for t in json.terms {
            t.gamma.ensure_dim(json.n)?;
            t.beta.ensure_dim(json.n)?;
            if t.beta.entries().iter().any(|b| *b < 0) {
                return Err(Error::Json(format!(
                    "negative derivative exponent {}",
                    t.beta
                )));
            }
            if t.coeff.is_zero() {
                return Err(Error::Json("zero coefficient stored".into()));
            }
            let key = DqKey {
                gamma: t.gamma,
                beta: t.beta,
            };
            if last.as_ref().is_some_and(|prev| prev >= &key) {
                return Err(Error::Json(
                    "terms must be strictly sorted by (gamma, beta)".into(),
                ));
            }
            last = Some(key.clone());
            out.terms.insert(key, t.coeff);
        }
        Ok(out)
    }
}

/// A single generator letter of a `D_q(2n)` word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    Partial(usize),
    /// `σ_i^{±1}`.
    Sigma(usize, i64),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Partial(i) => write!(f, "d{i}"),
            Letter::Sigma(i, 1) => write!(f, "s{i}"),
            Letter::Sigma(i, s) => write!(f, "s{i}^{s}"),
        }
    }
}

/// Result of one rewrite at position `p`: a scalar exponent and the replacement.
fn rewrite_at(word: &[Letter], p: usize) -> Option<(i64, Vec<Letter>)> {
    use Letter::*;
    match (word[p], word[p + 1]) {
        (Partial(i), Partial(j)) if i > j => {
            Some((j as i64 - i as i64, vec![Partial(j), Partial(i)]))
        }
        (Partial(i), Sigma(j, s)) => {
            Some((s * (j as i64 - i as i64), vec![Sigma(j, s), Partial(i)]))
        }
        (Sigma(i, s), Sigma(j, t)) if i > j => Some((0, vec![Sigma(j, t), Sigma(i, s)])),
        (Sigma(i, s), Sigma(j, t)) if i == j && s == -t => Some((0, vec![])),
        _ => None,
    }
}

/// Reduces a letter word to normal form by adjacent rewrites.
///
/// With `rng = None` the leftmost redex is always taken; otherwise a random
/// redex is chosen at every step, so different seeds follow different
/// rewrite sequences.
pub fn normalize_word<R: Rng>(n: usize, word: &[Letter], mut rng: Option<&mut R>) -> DqElement {
    let mut word = word.to_vec();
    let mut exponent = 0i64;
    loop {
        let redexes: Vec<usize> = (0..word.len().saturating_sub(1))
            .filter(|&p| rewrite_at(&word, p).is_some())
            .collect();
        if redexes.is_empty() {
            break;
        }
        let p = match rng.as_deref_mut() {
            Some(r) => redexes[r.gen_range(0..redexes.len())],
            None => redexes[0],
        };
        let (k, replacement) = rewrite_at(&word, p).unwrap();
        exponent += k;
        word.splice(p..p + 2, replacement);
    }
    let mut key = DqKey::unit(n);
    for letter in word {
        match letter {
            Letter::Partial(i) => key.beta.set(i, key.beta.get(i) + 1),
            Letter::Sigma(i, s) => key.gamma.set(i, key.gamma.get(i) + s),
        }
    }
    let mut out = DqElement::zero(n);
    out.add_term(key, &LaurentScalar::q_pow(exponent));
    out
}

pub fn letter_element(n: usize, letter: Letter) -> DqElement {
    match letter {
        Letter::Partial(i) => DqElement::partial(n, i).unwrap(),
        Letter::Sigma(i, s) => DqElement::sigma(n, i, s).unwrap(),
    }
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=n);
            match rng.gen_range(0..3) {
                0 => Letter::Partial(i),
                1 => Letter::Sigma(i, 1),
                _ => Letter::Sigma(i, -1),
            }
        })
        .collect()
}

fn random_dq_element<R: Rng>(rng: &mut R, n: usize) -> DqElement {
    let mut u = DqElement::zero(n);
    for _ in 0..rng.gen_range(1..=2) {
        let w = random_word(rng, n, 4);
        u = &u + &normalize_word::<R>(n, &w, None).scale(&random_scalar(rng));
    }
    u
}

fn word_text(word: &[Letter]) -> String {
    word.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Twisted Leibniz rule `∂_i(fg) = ∂_i(f) g + σ_i(f) ∂_i(g)` and the
/// automorphism property of `σ_β`, on all basis monomials `f` of degree
/// `≤ deg` (with `g` random) plus `trials` random pairs.
pub fn check_twisted_leibniz(n: usize, deg: i64, trials: usize, seed: u64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut leibniz = Report::new("d_i(fg) = d_i(f) g + s_i(f) d_i(g)");
    let mut automorphism = Report::new("s_b(fg) = s_b(f) s_b(g)");
    let mut unit = Report::new("d_i(1) = 0");
    let mut pairs: Vec<(Element, Element)> = monomials_up_to(n, deg, -deg)
        .into_iter()
        .map(|a| (Element::basis(a).unwrap(), Element::zero(n)))
        .collect();
    for pair in pairs.iter_mut() {
        pair.1 = random_element(&mut rng, n, 3, -2, 3);
    }
    for _ in 0..trials {
        let f = Element::basis(random_alpha(&mut rng, n, -3, 3)).unwrap();
        pairs.push((f, random_element(&mut rng, n, 3, -2, 3)));
    }
    for (f, g) in &pairs {
        for i in 1..=n {
            let lhs = apply_partial(i, &(f * g)).unwrap();
            let sigma_i = MultiIndex::unit(n, i);
            let rhs = &(&apply_partial(i, f).unwrap() * g)
                + &(&apply_sigma(&sigma_i, f).unwrap() * &apply_partial(i, g).unwrap());
            leibniz.check_eq(&lhs, &rhs, || format!("i={i} f={f} g={g}"));
        }
        let b = MultiIndex::new((0..n).map(|_| rng.gen_range(-3..=3)).collect());
        let lhs = apply_sigma(&b, &(f * g)).unwrap();
        let rhs = &apply_sigma(&b, f).unwrap() * &apply_sigma(&b, g).unwrap();
        automorphism.check_eq(&lhs, &rhs, || format!("b={b} f={f} g={g}"));
    }
    for i in 1..=n {
        unit.check(
            apply_partial(i, &Element::one(n)).unwrap().is_zero(),
            || format!("i={i}"),
        );
    }
    vec![leibniz, automorphism, unit]
}

/// Operator identities on basis monomials of degree `≤ deg`:
/// `∂_i∂_j = η(ε_i,ε_j) ∂_j∂_i`, `σ_a∂_i = η(a,ε_i) ∂_iσ_a`,
/// `σ_aσ_b = σ_{a+b}` and `σ_0 = id`.
pub fn check_operator_relations(n: usize, deg: i64, seed: u64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut partials = Report::new("d_i d_j = eta(e_i,e_j) d_j d_i");
    let mut intertwine = Report::new("s_a d_i = eta(a,e_i) d_i s_a");
    let mut sigmas = Report::new("s_a s_b = s_(a+b), s_0 = id");
    for alpha in monomials_up_to(n, deg, -deg) {
        let f = Element::basis(alpha.clone()).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                let lhs = apply_partial(i, &apply_partial(j, &f).unwrap()).unwrap();
                let rhs = apply_partial(j, &apply_partial(i, &f).unwrap())
                    .unwrap()
                    .scale(&LaurentScalar::q_pow(j as i64 - i as i64));
                partials.check_eq(&lhs, &rhs, || format!("i={i} j={j} f={f}"));
            }
            let a = MultiIndex::new((0..n).map(|_| rng.gen_range(-3..=3)).collect());
            let lhs = apply_sigma(&a, &apply_partial(i, &f).unwrap()).unwrap();
            let e = eta_exponent_raw(a.entries(), MultiIndex::unit(n, i).entries());
            let rhs = apply_partial(i, &apply_sigma(&a, &f).unwrap())
                .unwrap()
                .scale(&LaurentScalar::q_pow(e));
            intertwine.check_eq(&lhs, &rhs, || format!("a={a} i={i} f={f}"));
        }
        let a = MultiIndex::new((0..n).map(|_| rng.gen_range(-3..=3)).collect());
        let b = MultiIndex::new((0..n).map(|_| rng.gen_range(-3..=3)).collect());
        let lhs = apply_sigma(&a, &apply_sigma(&b, &f).unwrap()).unwrap();
        sigmas.check_eq(&lhs, &apply_sigma(&(&a + &b), &f).unwrap(), || {
            format!("a={a} b={b} f={f}")
        });
        sigmas.check_eq(&apply_sigma(&MultiIndex::zero(n), &f).unwrap(), &f, || {
            format!("f={f}")
        });
    }
    vec![partials, intertwine, sigmas]
}

/// Rewriting confluence and the representation property on random words.
pub fn check_confluence(n: usize, trials: usize, max_len: usize, seed: u64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut confluence = Report::new("word normal form is independent of rewrite order");
    let mut closed_form = Report::new("rewriting agrees with closed-form dq_mul");
    let mut representation = Report::new("apply(uv, f) = apply(u, apply(v, f))");
    for t in 0..trials {
        let word = random_word(&mut rng, n, max_len);
        let mut r1 = seeded_rng(seed ^ (2 * t as u64 + 1));
        let mut r2 = seeded_rng(seed ^ (2 * t as u64 + 2));
        let a = normalize_word(n, &word, Some(&mut r1));
        let b = normalize_word(n, &word, Some(&mut r2));
        let leftmost = normalize_word::<crate::sample::SampleRng>(n, &word, None);
        confluence.check_eq(&a, &b, || word_text(&word));
        confluence.check_eq(&a, &leftmost, || word_text(&word));
        let product = word
            .iter()
            .fold(DqElement::one(n), |acc, l| &acc * &letter_element(n, *l));
        closed_form.check_eq(&a, &product, || word_text(&word));

        let u = random_dq_element(&mut rng, n);
        let v = random_dq_element(&mut rng, n);
        let f = random_element(&mut rng, n, 3, -2, 4);
        let lhs = dq_apply(&(&u * &v), &f).unwrap();
        let rhs = dq_apply(&u, &dq_apply(&v, &f).unwrap()).unwrap();
        representation.check_eq(&lhs, &rhs, || format!("u={u} v={v} f={f}"));
    }
    vec![confluence, closed_form, representation]
}

/// `∂_i x_j = δ_ij + η(ε_j, ε_i) x_j ∂_i` applied to every `x^α` with `|α_k| ≤ deg_bound`.
pub fn weyl_relation_check(n: usize, deg_bound: i64) -> Vec<Report> {
    let mut report = Report::new("d_i x_j = delta_ij + eta(e_j,e_i) x_j d_i");
    for alpha in monomials_in_box(n, -deg_bound, deg_bound, deg_bound) {
        let f = Element::basis(alpha).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                let xj = Element::generator(n, j).unwrap();
                let lhs = apply_partial(i, &(&xj * &f)).unwrap();
                let mut rhs = (&xj * &apply_partial(i, &f).unwrap())
                    .scale(&LaurentScalar::q_pow(i as i64 - j as i64));
                if i == j {
                    rhs = &rhs + &f;
                }
                report.check_eq(&lhs, &rhs, || format!("i={i} j={j} f={f}"));
            }
        }
    }
    vec![report]
}

/// Ordinary partial derivative of a polynomial whose coefficients are constants.
pub fn classical_partial(i: usize, f: &Element) -> Element {
    let n = f.n();
    let unit = MultiIndex::unit(n, i);
    let mut out = Element::zero(n);
    for (alpha, c) in f.terms() {
        let a = alpha.get(i);
        if a != 0 {
            out.add_term(alpha - &unit, &c.scaled(&int(a)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_ok;

    fn mi(v: &[i64]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn partial_examples() {
        let f = Element::x1_pow(2, -2);
        let expect = Element::monomial(mi(&[-3, 0]), LaurentScalar::from_int(-2)).unwrap();
        assert_eq!(apply_partial(1, &f).unwrap(), expect);
        let x1x2 = Element::basis(mi(&[1, 1])).unwrap();
        let expect = Element::monomial(mi(&[1, 0]), LaurentScalar::q()).unwrap();
        assert_eq!(apply_partial(2, &x1x2).unwrap(), expect);
        assert!(apply_partial(2, &Element::one(3)).unwrap().is_zero());
        assert_eq!(
            apply_partial(4, &Element::one(3)),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
    }

    #[test]
    fn sigma_examples() {
        let x1 = Element::generator(2, 1).unwrap();
        let expect = x1.scale(&LaurentScalar::q());
        assert_eq!(apply_sigma(&MultiIndex::unit(2, 2), &x1).unwrap(), expect);
        let f = Element::basis(mi(&[-1, 2, 1])).unwrap();
        assert_eq!(apply_sigma(&MultiIndex::zero(3), &f).unwrap(), f);
        let b = mi(&[1, -2, 3]);
        let g = Element::basis(mi(&[2, 0, 1])).unwrap();
        assert_eq!(
            apply_sigma(&b, &(&f * &g)).unwrap(),
            &apply_sigma(&b, &f).unwrap() * &apply_sigma(&b, &g).unwrap()
        );
    }

    #[test]
    fn dq_mul_examples() {
        let n = 2;
        let d1 = DqElement::partial(n, 1).unwrap();
        let d2 = DqElement::partial(n, 2).unwrap();
        let d1d2 = DqElement::word(MultiIndex::zero(n), mi(&[1, 1]), LaurentScalar::one()).unwrap();
        assert_eq!(&d2 * &d1, d1d2.scale(&LaurentScalar::q_pow(-1)));
        for i in 1..=n {
            let s = DqElement::sigma(n, i, 1).unwrap();
            let s_inv = DqElement::sigma(n, i, -1).unwrap();
            assert_eq!(&s * &s_inv, DqElement::one(n));
        }
        let s2 = DqElement::sigma(n, 2, 1).unwrap();
        // normal form σ₂∂₁; ∂₁σ₂ = q σ₂∂₁, hence σ₂∂₁ = q^-1 ∂₁σ₂
        let s2d1 = DqElement::word(mi(&[0, 1]), mi(&[1, 0]), LaurentScalar::one()).unwrap();
        assert_eq!(&s2 * &d1, s2d1);
        assert_eq!(&d1 * &s2, s2d1.scale(&LaurentScalar::q()));
        assert_eq!(s2d1.to_string(), "s2 d1");
    }

    #[test]
    fn dq_apply_examples() {
        let x1sq = Element::x1_pow(3, 2);
        let d1 = DqElement::partial(3, 1).unwrap();
        assert_eq!(
            dq_apply(&d1, &x1sq).unwrap(),
            Element::x1_pow(3, 1).scale(&LaurentScalar::from_int(2))
        );
        let f = Element::basis(mi(&[-1, 2, 0])).unwrap();
        assert_eq!(dq_apply(&DqElement::one(3), &f).unwrap(), f);
        let s1d2 = DqElement::word(mi(&[1, 0, 0]), mi(&[0, 1, 0]), LaurentScalar::one()).unwrap();
        assert_eq!(
            dq_apply(&s1d2, &Element::generator(3, 2).unwrap()).unwrap(),
            Element::one(3)
        );
    }

    #[test]
    fn weyl_examples() {
        let x1 = Element::generator(2, 1).unwrap();
        assert_eq!(
            apply_partial(1, &(&x1 * &x1)).unwrap(),
            x1.scale(&LaurentScalar::from_int(2))
        );
        assert!(apply_partial(1, &Element::generator(2, 2).unwrap())
            .unwrap()
            .is_zero());
        assert!(all_ok(&weyl_relation_check(3, 2)));
    }

    #[test]
    fn suites_pass_small() {
        assert!(all_ok(&check_twisted_leibniz(3, 2, 20, 1)));
        assert!(all_ok(&check_operator_relations(3, 2, 2)));
        assert!(all_ok(&check_confluence(3, 40, 6, 3)));
    }

    #[test]
    fn classical_limit_partials() {
        let mut rng = seeded_rng(11);
        let one = int(1);
        for _ in 0..30 {
            let f = random_element(&mut rng, 3, 4, 0, 3);
            for i in 1..=3 {
                let lhs = apply_partial(i, &f).unwrap().specialize(&one).unwrap();
                assert_eq!(lhs, classical_partial(i, &f.specialize(&one).unwrap()));
            }
        }
    }
}
