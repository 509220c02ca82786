//! Hopf structures on `A_q(n)` and `D_q(2n)`.
//!
//! On `A_q(n)`: `Δ(x₁^{±1}) = x₁^{±1}⊗x₁^{±1}`, `Δ(x_i) = x_i⊗x₁ + x₁⊗x_i`,
//! `ε(x₁) = 1`, `ε(x_i) = 0`, `S(x₁) = x₁⁻¹`, `S(x_i) = −x₁⁻¹x_ix₁⁻¹`.
//! On `D_q(2n)`: `Δ(σ_i) = σ_i⊗σ_i`, `Δ(∂_i) = ∂_i⊗1 + σ_i⊗∂_i`,
//! `ε(σ_i) = 1`, `ε(∂_i) = 0`, `S(σ_i) = σ_i⁻¹`, `S(∂_i) = −σ_i⁻¹∂_i`.
//!
//! Tensor powers use the componentwise product `(a⊗b)(c⊗d) = ac⊗bd`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde_json::{json, Value};

use crate::bicharacter::{eta_exponent_raw, MultiIndex};
use crate::error::{Error, Result};
use crate::operators::{dq_apply, letter_element, random_word, DqElement, DqKey, Letter};
use crate::qspace::{format_monomial, merge_monomials, Element};
use crate::report::Report;
use crate::sample::{random_alpha, random_element, seeded_rng};
use crate::scalar::{accumulate, format_sum, LaurentScalar};

/// Basis of an algebra whose basis products are scalar multiples `q^k` of basis elements.
pub trait TensorBasis: Ord + Clone + fmt::Debug {
    fn mul_basis(&self, other: &Self) -> (i64, Self);
    fn unit_like(&self) -> Self;
    fn is_unit(&self) -> bool;
    fn render(&self) -> String;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value, n: usize) -> Result<Self>;
}

fn index_from_json(v: &Value, n: usize) -> Result<MultiIndex> {
    let idx: MultiIndex =
        serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
    idx.ensure_dim(n)?;
    Ok(idx)
}

impl TensorBasis for MultiIndex {
    fn mul_basis(&self, other: &Self) -> (i64, Self) {
        merge_monomials(self, other)
    }
    fn unit_like(&self) -> Self {
        MultiIndex::zero(self.dim())
    }
    fn is_unit(&self) -> bool {
        self.is_zero()
    }
    fn render(&self) -> String {
        format_monomial(self)
    }
    fn to_json(&self) -> Value {
        json!({ "alpha": self })
    }
    fn from_json(v: &Value, n: usize) -> Result<Self> {
        let alpha = index_from_json(&v["alpha"], n)?;
        if !alpha.in_exponent_domain() {
            return Err(Error::Json(format!(
                "exponent {alpha} outside Z x Z+^(n-1)"
            )));
        }
        Ok(alpha)
    }
}

impl TensorBasis for DqKey {
    fn mul_basis(&self, other: &Self) -> (i64, Self) {
        self.mul(other)
    }
    fn unit_like(&self) -> Self {
        DqKey::unit(self.gamma.dim())
    }
    fn is_unit(&self) -> bool {
        self.gamma.is_zero() && self.beta.is_zero()
    }
    fn render(&self) -> String {
        crate::operators::format_dq_key(self)
    }
    fn to_json(&self) -> Value {
        json!({ "gamma": self.gamma, "beta": self.beta })
    }
    fn from_json(v: &Value, n: usize) -> Result<Self> {
        let beta = index_from_json(&v["beta"], n)?;
        if beta.entries().iter().any(|b| *b < 0) {
            return Err(Error::Json(format!("negative derivative exponent {beta}")));
        }
        Ok(DqKey {
            gamma: index_from_json(&v["gamma"], n)?,
            beta,
        })
    }
}

/// Element of a tensor power of a twisted-basis algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor<K> {
    n: usize,
    arity: usize,
    terms: BTreeMap<Vec<K>, LaurentScalar>,
}

/// `A_q(n) ⊗ A_q(n)`.
pub type TensorElement = Tensor<MultiIndex>;
/// `A_q(n)^{⊗3}`, codomain of both coassociativity composites.
pub type TensorElement3 = Tensor<MultiIndex>;
/// `D_q(2n) ⊗ D_q(2n)` (and its higher powers).
pub type DqTensor = Tensor<DqKey>;

impl<K: TensorBasis> Tensor<K> {
    pub fn zero(n: usize, arity: usize) -> Self {
        Self {
            n,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn pure(n: usize, legs: Vec<K>, c: &LaurentScalar) -> Self {
        let mut t = Self::zero(n, legs.len());
        t.add_term(legs, c);
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<K>, &LaurentScalar)> + '_ {
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

    pub fn add_term(&mut self, legs: Vec<K>, c: &LaurentScalar) {
        debug_assert_eq!(legs.len(), self.arity);
        accumulate(&mut self.terms, legs, c);
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        let mut out = self.clone();
        for (legs, c) in &other.terms {
            out.add_term(legs.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&LaurentScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.n, self.arity);
        for (legs, v) in &self.terms {
            out.add_term(legs.clone(), &(v * c));
        }
        out
    }

    /// Componentwise product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        let mut out = Self::zero(self.n, self.arity);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut shift = 0;
                let legs = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| {
                        let (k, z) = x.mul_basis(y);
                        shift += k;
                        z
                    })
                    .collect();
                out.add_term(legs, &(ca * cb).shifted(shift));
            }
        }
        out
    }

    pub fn pow(&self, k: u32, unit: &Self) -> Self {
        (0..k).fold(unit.clone(), |acc, _| acc.mul(self))
    }

    /// Reverses the order of the legs; the flip `τ` for arity 2.
    pub fn flip(&self) -> Self {
        let mut out = Self::zero(self.n, self.arity);
        for (legs, c) in &self.terms {
            out.add_term(legs.iter().rev().cloned().collect(), c);
        }
        out
    }

    /// Replaces leg `slot` by the image of a linear map given on basis
    /// elements as a tensor of arity `out_arity` (0 for scalar-valued maps).
    pub fn map_leg<F>(&self, slot: usize, out_arity: usize, mut f: F) -> Self
    where
        F: FnMut(&K) -> Tensor<K>,
    {
        let mut cache: BTreeMap<K, Tensor<K>> = BTreeMap::new();
        let mut out = Self::zero(self.n, self.arity - 1 + out_arity);
        for (legs, c) in &self.terms {
            let image = cache
                .entry(legs[slot].clone())
                .or_insert_with(|| f(&legs[slot]));
            debug_assert_eq!(image.arity, out_arity);
            for (inner, ci) in &image.terms {
                let mut new_legs = Vec::with_capacity(out.arity);
                new_legs.extend_from_slice(&legs[..slot]);
                new_legs.extend(inner.iter().cloned());
                new_legs.extend_from_slice(&legs[slot + 1..]);
                out.add_term(new_legs, &(c * ci));
            }
        }
        out
    }

    /// Applies a map to every leg independently.
    pub fn map_all_legs<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&K) -> Tensor<K>,
    {
        (0..self.arity).fold(self.clone(), |acc, slot| acc.map_leg(slot, 1, &mut f))
    }

    /// Multiplies all legs together in order (the map `m`), as an arity-1 tensor.
    pub fn contract(&self) -> Self {
        let mut out = Self::zero(self.n, 1);
        for (legs, c) in &self.terms {
            let mut iter = legs.iter();
            let first = iter
                .next()
                .expect("contraction of an arity-0 tensor")
                .clone();
            let mut shift = 0;
            let prod = iter.fold(first, |acc, leg| {
                let (k, z) = acc.mul_basis(leg);
                shift += k;
                z
            });
            out.add_term(vec![prod], &c.shifted(shift));
        }
        out
    }

    /// Value of an arity-0 tensor.
    pub fn scalar_value(&self) -> LaurentScalar {
        debug_assert_eq!(self.arity, 0);
        self.terms.get(&Vec::new()).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(legs, c)| {
                if legs.len() == 2 {
                    json!({ "left": legs[0].to_json(), "right": legs[1].to_json(), "coeff": c })
                } else {
                    json!({ "legs": legs.iter().map(TensorBasis::to_json).collect::<Vec<_>>(), "coeff": c })
                }
            })
            .collect();
        json!({ "n": self.n, "terms": terms })
    }

    pub fn from_json(v: &Value, arity: usize) -> Result<Self> {
        let n = v["n"]
            .as_u64()
            .ok_or_else(|| Error::Json("missing n".into()))? as usize;
        if n == 0 {
            return Err(Error::InvalidDimension);
        }
        let terms = v["terms"]
            .as_array()
            .ok_or_else(|| Error::Json("missing terms".into()))?;
        let mut out = Self::zero(n, arity);
        let mut last: Option<Vec<K>> = None;
        for t in terms {
            let legs: Vec<K> = if arity == 2 {
                vec![K::from_json(&t["left"], n)?, K::from_json(&t["right"], n)?]
            } else {
                t["legs"]
                    .as_array()
                    .ok_or_else(|| Error::Json("missing legs".into()))?
                    .iter()
                    .map(|l| K::from_json(l, n))
                    .collect::<Result<_>>()?
            };
            if legs.len() != arity {
                return Err(Error::Json(format!("expected {arity} legs")));
            }
            let c: LaurentScalar = serde_json::from_value(t["coeff"].clone())
                .map_err(|e| Error::Json(e.to_string()))?;
            if c.is_zero() {
                return Err(Error::Json("zero coefficient stored".into()));
            }
            if last.as_ref().is_some_and(|prev| prev >= &legs) {
                return Err(Error::Json("terms must be strictly sorted".into()));
            }
            last = Some(legs.clone());
            out.terms.insert(legs, c);
        }
        Ok(out)
    }
}

impl<K: TensorBasis> fmt::Display for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |legs: &Vec<K>| {
            legs.iter()
                .map(|l| {
                    if l.is_unit() {
                        "1".to_string()
                    } else {
                        l.render()
                    }
                })
                .collect::<Vec<_>>()
                .join(" ⊗ ")
        };
        f.write_str(&format_sum(
            self.terms.iter().map(|(legs, c)| (c, render(legs))),
        ))
    }
}

impl Tensor<MultiIndex> {
    pub fn from_element(f: &Element) -> Self {
        let mut t = Self::zero(f.n(), 1);
        for (a, c) in f.terms() {
            t.add_term(vec![a.clone()], c);
        }
        t
    }

    /// `f ⊗ g`.
    pub fn pure_tensor(f: &Element, g: &Element) -> Self {
        let mut t = Self::zero(f.n(), 2);
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                t.add_term(vec![a.clone(), b.clone()], &(ca * cb));
            }
        }
        t
    }

    /// Reads back an arity-1 tensor as an element.
    pub fn to_element(&self) -> Element {
        assert_eq!(self.arity, 1);
        let mut out = Element::zero(self.n);
        for (legs, c) in &self.terms {
            out.add_term(legs[0].clone(), c);
        }
        out
    }
}

impl Tensor<DqKey> {
    pub fn from_dq(u: &DqElement) -> Self {
        let mut t = Self::zero(u.n(), 1);
        for (k, c) in u.terms() {
            t.add_term(vec![k.clone()], c);
        }
        t
    }

    pub fn pure_tensor(u: &DqElement, v: &DqElement) -> Self {
        let mut t = Self::zero(u.n(), 2);
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                t.add_term(vec![a.clone(), b.clone()], &(ca * cb));
            }
        }
        t
    }

    pub fn to_dq(&self) -> DqElement {
        assert_eq!(self.arity, 1);
        let mut out = DqElement::zero(self.n);
        for (legs, c) in &self.terms {
            out.add_term(legs[0].clone(), c);
        }
        out
    }
}

fn gen_alpha(n: usize, i: usize) -> MultiIndex {
    MultiIndex::unit(n, i)
}

/// `Δ(x_i)` for `i ≥ 2` (and `Δ(x₁^k)` is grouplike).
fn coproduct_generator_a(n: usize, i: usize) -> TensorElement {
    let (xi, x1) = (gen_alpha(n, i), gen_alpha(n, 1));
    let one = LaurentScalar::one();
    let mut t = Tensor::pure(n, vec![xi.clone(), x1.clone()], &one);
    t.add_term(vec![x1, xi], &one);
    t
}

fn coproduct_basis_a(alpha: &MultiIndex) -> TensorElement {
    let n = alpha.dim();
    let mut x1k = MultiIndex::zero(n);
    x1k.set(1, alpha.get(1));
    let mut acc = Tensor::pure(n, vec![x1k.clone(), x1k], &LaurentScalar::one());
    for i in 2..=n {
        let gi = coproduct_generator_a(n, i);
        for _ in 0..alpha.get(i) {
            acc = acc.mul(&gi);
        }
    }
    acc
}

/// Coproduct of `A_q(n)`, extended as an algebra homomorphism.
pub fn coproduct_a(f: &Element) -> TensorElement {
    let mut out = Tensor::zero(f.n(), 2);
    for (alpha, c) in f.terms() {
        out = out.add(&coproduct_basis_a(alpha).scale(c));
    }
    out
}

fn counit_basis_a(alpha: &MultiIndex) -> LaurentScalar {
    if alpha.entries().iter().skip(1).all(|a| *a == 0) {
        LaurentScalar::one()
    } else {
        LaurentScalar::zero()
    }
}

pub fn counit_a(f: &Element) -> LaurentScalar {
    f.terms().fold(LaurentScalar::zero(), |acc, (a, c)| {
        acc + c * &counit_basis_a(a)
    })
}

fn antipode_generator_a(n: usize, i: usize) -> Element {
    if i == 1 {
        return Element::x1_pow(n, -1);
    }
    let inv = Element::x1_pow(n, -1);
    let xi = Element::generator(n, i).unwrap();
    -&(&(&inv * &xi) * &inv)
}

fn antipode_basis_a(alpha: &MultiIndex) -> Element {
    let n = alpha.dim();
    let mut acc = Element::one(n);
    for i in (2..=n).rev() {
        let s = antipode_generator_a(n, i);
        for _ in 0..alpha.get(i) {
            acc = &acc * &s;
        }
    }
    &acc * &Element::x1_pow(n, -alpha.get(1))
}

/// Antipode of `A_q(n)`: `S(x^α) = S(x_n)^{α_n} ⋯ S(x₁)^{α₁}`.
pub fn antipode_a(f: &Element) -> Element {
    let mut out = Element::zero(f.n());
    for (alpha, c) in f.terms() {
        out = &out + &antipode_basis_a(alpha).scale(c);
    }
    out
}

fn leg_coproduct_a(a: &MultiIndex) -> TensorElement {
    coproduct_basis_a(a)
}

fn leg_counit_a(a: &MultiIndex) -> TensorElement {
    Tensor::pure(a.dim(), vec![], &counit_basis_a(a))
}

fn leg_antipode_a(a: &MultiIndex) -> TensorElement {
    Tensor::from_element(&antipode_basis_a(a))
}

/// Image of the tensor under `S` applied to leg `slot`.
pub fn antipode_on_leg_a(t: &TensorElement, slot: usize) -> TensorElement {
    t.map_leg(slot, 1, leg_antipode_a)
}

pub fn coproduct_on_leg_a(t: &TensorElement, slot: usize) -> TensorElement {
    t.map_leg(slot, 2, leg_coproduct_a)
}

pub fn counit_on_leg_a(t: &TensorElement, slot: usize) -> TensorElement {
    t.map_leg(slot, 0, leg_counit_a)
}

/// Hopf-axiom sweep for `A_q(n)` over the given basis monomials.
pub fn check_hopf_a(n: usize, monomials: &[MultiIndex], seed: u64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut coassoc = Report::new("(D x id) D = (id x D) D");
    let mut counit = Report::new("(e x id) D = id = (id x e) D");
    let mut antipode = Report::new("m (S x id) D = e = m (id x S) D");
    let mut cocomm = Report::new("tau D = D");
    let mut relations = Report::new("D(x_i) D(x_j) = eta(e_i,e_j) D(x_j) D(x_i)");
    let mut hom = Report::new("D(fg) = D(f) D(g), e(fg) = e(f) e(g)");
    let mut anti_hom = Report::new("S(fg) = S(g) S(f)");
    let mut coalgebra_anti = Report::new("tau (S x S) D = D S");
    let mut counit_antipode = Report::new("e S = e");
    let mut involution = Report::new("S^2 = id");
    for alpha in monomials {
        let f = Element::basis(alpha.clone()).unwrap();
        let d = coproduct_a(&f);
        let inputs = || format!("f={f}");
        coassoc.check_eq(
            &coproduct_on_leg_a(&d, 0),
            &coproduct_on_leg_a(&d, 1),
            inputs,
        );
        let f1 = Tensor::from_element(&f);
        counit.check_eq(&counit_on_leg_a(&d, 0), &f1, inputs);
        counit.check_eq(&counit_on_leg_a(&d, 1), &f1, inputs);
        let unit_eps = Element::scalar(n, counit_a(&f));
        antipode.check_eq(
            &antipode_on_leg_a(&d, 0).contract().to_element(),
            &unit_eps,
            inputs,
        );
        antipode.check_eq(
            &antipode_on_leg_a(&d, 1).contract().to_element(),
            &unit_eps,
            inputs,
        );
        cocomm.check_eq(&d.flip(), &d, inputs);
        let s = antipode_a(&f);
        let lhs = d.map_all_legs(leg_antipode_a).flip();
        coalgebra_anti.check_eq(&lhs, &coproduct_a(&s), inputs);
        counit_antipode.check_eq(&counit_a(&s), &counit_a(&f), inputs);
        involution.check_eq(&antipode_a(&s), &f, inputs);

        let g = random_element(&mut rng, n, 3, -2, 2);
        let fg = &f * &g;
        hom.check_eq(&coproduct_a(&fg), &d.mul(&coproduct_a(&g)), || {
            format!("f={f} g={g}")
        });
        hom.check_eq(&counit_a(&fg), &(counit_a(&f) * counit_a(&g)), || {
            format!("f={f} g={g}")
        });
        anti_hom.check_eq(&antipode_a(&fg), &(&antipode_a(&g) * &s), || {
            format!("f={f} g={g}")
        });
    }
    // generators together with x1^-1
    let mut gens: Vec<(String, Element)> = (1..=n)
        .map(|i| (format!("x{i}"), Element::generator(n, i).unwrap()))
        .collect();
    gens.push(("x1^-1".into(), Element::x1_pow(n, -1)));
    for (na, a) in &gens {
        for (nb, b) in &gens {
            let (alpha, beta) = (a.terms().next().unwrap().0, b.terms().next().unwrap().0);
            let e = LaurentScalar::q_pow(eta_exponent_raw(alpha.entries(), beta.entries()));
            let lhs = coproduct_a(a).mul(&coproduct_a(b));
            let rhs = coproduct_a(b).mul(&coproduct_a(a)).scale(&e);
            relations.check_eq(&lhs, &rhs, || format!("{na} {nb}"));
        }
    }
    vec![
        coassoc,
        counit,
        antipode,
        cocomm,
        relations,
        hom,
        anti_hom,
        coalgebra_anti,
        counit_antipode,
        involution,
    ]
}

fn coproduct_partial(n: usize, i: usize) -> DqTensor {
    let one = LaurentScalar::one();
    let unit = DqKey::unit(n);
    let d = DqKey {
        gamma: MultiIndex::zero(n),
        beta: MultiIndex::unit(n, i),
    };
    let s = DqKey {
        gamma: MultiIndex::unit(n, i),
        beta: MultiIndex::zero(n),
    };
    let mut t = Tensor::pure(n, vec![d.clone(), unit], &one);
    t.add_term(vec![s, d], &one);
    t
}

fn coproduct_basis_d(key: &DqKey) -> DqTensor {
    let n = key.gamma.dim();
    let sigma = DqKey {
        gamma: key.gamma.clone(),
        beta: MultiIndex::zero(n),
    };
    let mut acc = Tensor::pure(n, vec![sigma.clone(), sigma], &LaurentScalar::one());
    for i in 1..=n {
        let di = coproduct_partial(n, i);
        for _ in 0..key.beta.get(i) {
            acc = acc.mul(&di);
        }
    }
    acc
}

/// Coproduct of `D_q(2n)`, multiplicative over normal-form words.
pub fn coproduct_d(u: &DqElement) -> DqTensor {
    let mut out = Tensor::zero(u.n(), 2);
    for (k, c) in u.terms() {
        out = out.add(&coproduct_basis_d(k).scale(c));
    }
    out
}

fn counit_basis_d(key: &DqKey) -> LaurentScalar {
    if key.beta.is_zero() {
        LaurentScalar::one()
    } else {
        LaurentScalar::zero()
    }
}

pub fn counit_d(u: &DqElement) -> LaurentScalar {
    u.terms().fold(LaurentScalar::zero(), |acc, (k, c)| {
        acc + c * &counit_basis_d(k)
    })
}

fn antipode_basis_d(key: &DqKey) -> DqElement {
    let n = key.gamma.dim();
    let mut acc = DqElement::one(n);
    for i in (1..=n).rev() {
        // S(∂_i) = -σ_i^{-1} ∂_i
        let s = -&(&DqElement::sigma(n, i, -1).unwrap() * &DqElement::partial(n, i).unwrap());
        for _ in 0..key.beta.get(i) {
            acc = &acc * &s;
        }
    }
    &acc * &DqElement::sigma_vec(-&key.gamma)
}

/// Antipode of `D_q(2n)`, an anti-homomorphism on words.
pub fn antipode_d(u: &DqElement) -> DqElement {
    let mut out = DqElement::zero(u.n());
    for (k, c) in u.terms() {
        out = &out + &antipode_basis_d(k).scale(c);
    }
    out
}

fn leg_coproduct_d(k: &DqKey) -> DqTensor {
    coproduct_basis_d(k)
}

fn leg_counit_d(k: &DqKey) -> DqTensor {
    Tensor::pure(k.gamma.dim(), vec![], &counit_basis_d(k))
}

fn leg_antipode_d(k: &DqKey) -> DqTensor {
    Tensor::from_dq(&antipode_basis_d(k))
}

/// All normal-form words with `Σ|γ_i| + Σβ_i ≤ degree`.
pub fn dq_words(n: usize, degree: i64) -> Vec<DqKey> {
    fn rec(pos: usize, n: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos == 2 * n {
            out.push(cur.clone());
            return;
        }
        let range: Vec<i64> = if pos < n {
            (-budget..=budget).collect()
        } else {
            (0..=budget).collect()
        };
        for v in range {
            cur.push(v);
            rec(pos + 1, n, budget - v.abs(), cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(0, n, degree, &mut Vec::new(), &mut raw);
    let mut keys: Vec<DqKey> = raw
        .into_iter()
        .map(|v| DqKey {
            gamma: MultiIndex::new(v[..n].to_vec()),
            beta: MultiIndex::new(v[n..].to_vec()),
        })
        .collect();
    keys.sort();
    keys
}

fn generator_letters(n: usize) -> Vec<Letter> {
    (1..=n)
        .flat_map(|i| {
            [
                Letter::Partial(i),
                Letter::Sigma(i, 1),
                Letter::Sigma(i, -1),
            ]
        })
        .collect()
}

/// Hopf-axiom sweep for `D_q(2n)` over all words of degree `≤ word_degree`.
pub fn check_hopf_d(n: usize, word_degree: i64) -> Vec<Report> {
    let mut coassoc = Report::new("(D x id) D = (id x D) D");
    let mut counit = Report::new("(e x id) D = id = (id x e) D");
    let mut antipode = Report::new("m (S x id) D = e = m (id x S) D");
    let mut hom = Report::new("D, e multiplicative and S anti-multiplicative on words");
    let mut relations = Report::new("D, e, S preserve d_i d_j, s_i s_j, s_j d_i relations");
    let mut non_cocomm = Report::new("tau D(d_i) != D(d_i)");
    let letters = generator_letters(n);
    for key in dq_words(n, word_degree) {
        let mut w = DqElement::zero(n);
        w.add_term(key.clone(), &LaurentScalar::one());
        let d = coproduct_d(&w);
        let inputs = || format!("w={w}");
        coassoc.check_eq(
            &d.map_leg(0, 2, leg_coproduct_d),
            &d.map_leg(1, 2, leg_coproduct_d),
            inputs,
        );
        let w1 = Tensor::from_dq(&w);
        counit.check_eq(&d.map_leg(0, 0, leg_counit_d), &w1, inputs);
        counit.check_eq(&d.map_leg(1, 0, leg_counit_d), &w1, inputs);
        let unit_eps = DqElement::one(n).scale(&counit_d(&w));
        antipode.check_eq(
            &d.map_leg(0, 1, leg_antipode_d).contract().to_dq(),
            &unit_eps,
            inputs,
        );
        antipode.check_eq(
            &d.map_leg(1, 1, leg_antipode_d).contract().to_dq(),
            &unit_eps,
            inputs,
        );
        for letter in &letters {
            let g = letter_element(n, *letter);
            let (gw, wg) = (&g * &w, &w * &g);
            let dg = coproduct_d(&g);
            let text = || format!("g={letter} w={w}");
            hom.check_eq(&coproduct_d(&gw), &dg.mul(&d), text);
            hom.check_eq(&coproduct_d(&wg), &d.mul(&dg), text);
            hom.check_eq(&counit_d(&gw), &(counit_d(&g) * counit_d(&w)), text);
            hom.check_eq(&antipode_d(&gw), &(&antipode_d(&w) * &antipode_d(&g)), text);
            hom.check_eq(&antipode_d(&wg), &(&antipode_d(&g) * &antipode_d(&w)), text);
        }
    }
    for i in 1..=n {
        let di = DqElement::partial(n, i).unwrap();
        let si = DqElement::sigma(n, i, 1).unwrap();
        let si_inv = DqElement::sigma(n, i, -1).unwrap();
        let unit2 = DqTensor::pure_tensor(&DqElement::one(n), &DqElement::one(n));
        relations.check_eq(&coproduct_d(&si).mul(&coproduct_d(&si_inv)), &unit2, || {
            format!("s{i} s{i}^-1")
        });
        for j in 1..=n {
            let dj = DqElement::partial(n, j).unwrap();
            let sj = DqElement::sigma(n, j, 1).unwrap();
            let qji = LaurentScalar::q_pow(j as i64 - i as i64);
            let qij = LaurentScalar::q_pow(i as i64 - j as i64);
            // d_i d_j - q^{j-i} d_j d_i
            let lhs = coproduct_d(&di).mul(&coproduct_d(&dj));
            let rhs = coproduct_d(&dj).mul(&coproduct_d(&di)).scale(&qji);
            relations.check_eq(&lhs, &rhs, || format!("D: d{i} d{j}"));
            let lhs = &antipode_d(&dj) * &antipode_d(&di);
            let rhs = (&antipode_d(&di) * &antipode_d(&dj)).scale(&qji);
            relations.check_eq(&lhs, &rhs, || format!("S: d{i} d{j}"));
            // s_i s_j - s_j s_i
            let lhs = coproduct_d(&si).mul(&coproduct_d(&sj));
            relations.check_eq(&lhs, &coproduct_d(&sj).mul(&coproduct_d(&si)), || {
                format!("D: s{i} s{j}")
            });
            relations.check_eq(
                &(&antipode_d(&sj) * &antipode_d(&si)),
                &(&antipode_d(&si) * &antipode_d(&sj)),
                || format!("S: s{i} s{j}"),
            );
            // s_j d_i - eta(e_j,e_i) d_i s_j
            let lhs = coproduct_d(&sj).mul(&coproduct_d(&di));
            let rhs = coproduct_d(&di).mul(&coproduct_d(&sj)).scale(&qij);
            relations.check_eq(&lhs, &rhs, || format!("D: s{j} d{i}"));
            let lhs = &antipode_d(&di) * &antipode_d(&sj);
            let rhs = (&antipode_d(&sj) * &antipode_d(&di)).scale(&qij);
            relations.check_eq(&lhs, &rhs, || format!("S: s{j} d{i}"));
            let lhs = counit_d(&sj) * counit_d(&di);
            relations.check_eq(&lhs, &(qij.clone() * counit_d(&di) * counit_d(&sj)), || {
                format!("e: s{j} d{i}")
            });
        }
        let d = coproduct_d(&di);
        non_cocomm.check_ne(&d.flip(), &d, || format!("d{i}"));
    }
    vec![coassoc, counit, antipode, hom, relations, non_cocomm]
}

/// `Σ D₍₁₎(f) D₍₂₎(g) = D(fg)` for generators and short words `D`.
pub fn module_algebra_check(n: usize, samples: usize, seed: u64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut generators = Report::new("m(D(X)(f x g)) = X(fg) for generators X");
    let mut words = Report::new("m(D(X)(f x g)) = X(fg) for random words X");
    let act = |u: &DqElement, f: &Element, g: &Element| -> (Element, Element) {
        let mut lhs = Element::zero(n);
        for (legs, c) in coproduct_d(u).terms() {
            let a =
                DqElement::word(legs[0].gamma.clone(), legs[0].beta.clone(), c.clone()).unwrap();
            let b = DqElement::word(
                legs[1].gamma.clone(),
                legs[1].beta.clone(),
                LaurentScalar::one(),
            )
            .unwrap();
            lhs = &lhs + &(&dq_apply(&a, f).unwrap() * &dq_apply(&b, g).unwrap());
        }
        (lhs, dq_apply(u, &(f * g)).unwrap())
    };
    for _ in 0..samples {
        let f = Element::basis(random_alpha(&mut rng, n, -2, 3)).unwrap();
        let g = random_element(&mut rng, n, 3, -2, 3);
        for letter in generator_letters(n) {
            let (lhs, rhs) = act(&letter_element(n, letter), &f, &g);
            generators.check_eq(&lhs, &rhs, || format!("X={letter} f={f} g={g}"));
        }
        let word = random_word(&mut rng, n, 3);
        let u = word
            .iter()
            .fold(DqElement::one(n), |acc, l| &acc * &letter_element(n, *l));
        let c = LaurentScalar::q_pow(rng.gen_range(-2..=2));
        let (lhs, rhs) = act(&u.scale(&c), &f, &g);
        words.check_eq(&lhs, &rhs, || format!("X={u} f={f} g={g}"));
    }
    vec![generators, words]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_ok;
    use crate::sample::monomials_in_box;

    fn mi(v: &[i64]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn coproduct_examples() {
        let n = 3;
        let d = coproduct_a(&Element::x1_pow(n, -1));
        assert_eq!(
            d,
            TensorElement::pure_tensor(&Element::x1_pow(n, -1), &Element::x1_pow(n, -1))
        );
        assert_eq!(
            coproduct_a(&Element::one(n)),
            TensorElement::pure_tensor(&Element::one(n), &Element::one(n))
        );
    }

    #[test]
    fn coproduct_of_x2_squared() {
        // (x2⊗x1 + x1⊗x2)² expanded by hand with x2x1 = q^-1 x1x2:
        //   x2²⊗x1² + (x2x1)⊗(x1x2) + (x1x2)⊗(x2x1) + x1²⊗x2²
        // = x2²⊗x1² + (q^-1 + q^-1) x1x2⊗x1x2 + x1²⊗x2²
        let n = 2;
        let x2sq = Element::basis(mi(&[0, 2])).unwrap();
        let d = coproduct_a(&x2sq);
        let one = LaurentScalar::one();
        let mut expect = Tensor::pure(n, vec![mi(&[0, 2]), mi(&[2, 0])], &one);
        expect.add_term(
            vec![mi(&[1, 1]), mi(&[1, 1])],
            &LaurentScalar::q_pow(-1).scaled(&crate::scalar::int(2)),
        );
        expect.add_term(vec![mi(&[2, 0]), mi(&[0, 2])], &one);
        assert_eq!(d, expect);
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn counit_examples() {
        let n = 3;
        assert!(counit_a(&Element::x1_pow(n, 3)).is_one());
        assert!(counit_a(&Element::generator(n, 2).unwrap()).is_zero());
        let f = &Element::x1_pow(n, -1)
            + &Element::basis(mi(&[0, 1, 1]))
                .unwrap()
                .scale(&LaurentScalar::from_int(2));
        assert!(counit_a(&f).is_one());
    }

    #[test]
    fn antipode_examples() {
        let n = 2;
        for k in -3..=3 {
            assert_eq!(antipode_a(&Element::x1_pow(n, k)), Element::x1_pow(n, -k));
        }
        // x1^-1 x2 x1^-1 = q x1^-2 x2 (x2 x1^-1 = q x1^-1 x2)
        let expect = Element::monomial(mi(&[-2, 1]), -LaurentScalar::q()).unwrap();
        assert_eq!(antipode_a(&Element::generator(n, 2).unwrap()), expect);
        assert_eq!(antipode_a(&Element::one(n)), Element::one(n));
    }

    #[test]
    fn antipode_law_on_x2() {
        let n = 3;
        let d = coproduct_a(&Element::generator(n, 2).unwrap());
        assert!(antipode_on_leg_a(&d, 0).contract().is_zero());
        assert_eq!(
            antipode_a(&antipode_a(&Element::generator(n, 2).unwrap())),
            Element::generator(n, 2).unwrap()
        );
    }

    #[test]
    fn dq_hopf_examples() {
        let n = 3;
        for i in 1..=n {
            let s = DqElement::sigma(n, i, 1).unwrap();
            assert_eq!(coproduct_d(&s), DqTensor::pure_tensor(&s, &s));
            assert_eq!(antipode_d(&s), DqElement::sigma(n, i, -1).unwrap());
            let d = DqElement::partial(n, i).unwrap();
            let m = coproduct_d(&d).map_leg(0, 1, leg_antipode_d).contract();
            assert!(m.is_zero());
            assert!(counit_d(&(&s * &DqElement::sigma(n, 1, 1).unwrap())).is_one());
        }
        let d1 = DqElement::partial(n, 1).unwrap();
        let d2 = DqElement::partial(n, 2).unwrap();
        assert_eq!(
            coproduct_d(&(&d1 * &d2)),
            coproduct_d(&d1).mul(&coproduct_d(&d2))
        );
        let dd = coproduct_d(&d2);
        assert_ne!(dd.flip(), dd);
    }

    #[test]
    fn module_algebra_example() {
        let n = 2;
        let d2 = DqElement::partial(n, 2).unwrap();
        let (x1, x2) = (
            Element::generator(n, 1).unwrap(),
            Element::generator(n, 2).unwrap(),
        );
        let mut lhs = Element::zero(n);
        for (legs, c) in coproduct_d(&d2).terms() {
            let a =
                DqElement::word(legs[0].gamma.clone(), legs[0].beta.clone(), c.clone()).unwrap();
            let b = DqElement::word(
                legs[1].gamma.clone(),
                legs[1].beta.clone(),
                LaurentScalar::one(),
            )
            .unwrap();
            lhs = &lhs + &(&dq_apply(&a, &x1).unwrap() * &dq_apply(&b, &x2).unwrap());
        }
        assert_eq!(lhs, x1.scale(&LaurentScalar::q()));
    }

    #[test]
    fn small_sweeps_pass() {
        let monomials = monomials_in_box(3, -1, 1, 1);
        assert!(all_ok(&check_hopf_a(3, &monomials, 1)));
        assert!(all_ok(&check_hopf_d(2, 2)));
        assert!(all_ok(&module_algebra_check(3, 10, 4)));
    }

    #[test]
    fn tensor_json_round_trip() {
        let d = coproduct_a(&Element::basis(mi(&[-1, 2, 1])).unwrap());
        let back = TensorElement::from_json(&d.to_json(), 2).unwrap();
        assert_eq!(back, d);
        let dq = coproduct_d(
            &(&DqElement::partial(2, 1).unwrap() * &DqElement::sigma(2, 2, -1).unwrap()),
        );
        assert_eq!(DqTensor::from_json(&dq.to_json(), 2).unwrap(), dq);
    }
}
