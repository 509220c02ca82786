//! Differential forms on `A_q(n)`: the bimodule `Ω¹`, the exterior algebra
//! with its wedge relations, the differential `d`, and the coactions
//! `Δ_L`, `Δ_R` on forms of degree at most one.
//!
//! Forms are stored as `Σ dx_I · f_I` with strictly increasing wedge
//! indices `I` and the algebra coefficient on the right. Coefficients move
//! rightwards through `dx_i` by `f · dx_i = dx_i · σ_i(f)`, and wedges are
//! sorted with `dx_i ∧ dx_j = −q^{j−i} dx_j ∧ dx_i`, `dx_i ∧ dx_i = 0`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bicharacter::{eta_exponent_raw, MultiIndex};
use crate::error::{Error, Result};
use crate::hopf::{coproduct_a, counit_a, TensorElement};
use crate::operators::{apply_partial, apply_sigma};
use crate::qspace::{format_monomial, merge_monomials, Element, ElementJson};
use crate::report::Report;
use crate::sample::{monomials_up_to, random_alpha, random_element, seeded_rng};
use crate::scalar::{accumulate, format_sum, LaurentScalar};

/// Right-side coefficient of `f · dx_i`, namely `σ_i(f)`.
pub fn push_coeff_right(f: &Element, i: usize) -> Result<Element> {
    if i == 0 || i > f.n() {
        return Err(Error::IndexOutOfRange { index: i, n: f.n() });
    }
    apply_sigma(&MultiIndex::unit(f.n(), i), f)
}

fn wedge_weight(n: usize, wedge: &[usize]) -> MultiIndex {
    let mut w = MultiIndex::zero(n);
    for &i in wedge {
        w.set(i, w.get(i) + 1);
    }
    w
}

/// Sorts a word of differentials by adjacent swaps. Returns `None` when a
/// repeated index forces the wedge to vanish, otherwise the sign, the power
/// of `q` and the sorted word.
pub fn canonical_wedge(word: &[usize]) -> Option<(bool, i64, Vec<usize>)> {
    let mut w = word.to_vec();
    let (mut negative, mut shift) = (false, 0);
    for end in (1..w.len()).rev() {
        for k in 0..end {
            let (a, b) = (w[k], w[k + 1]);
            if a == b {
                return None;
            }
            if a > b {
                // dx_a ∧ dx_b = −q^{b−a} dx_b ∧ dx_a
                negative = !negative;
                shift += b as i64 - a as i64;
                w.swap(k, k + 1);
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((negative, shift, w))
}

/// Element of the exterior algebra, `Σ dx_I · f_I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FormJson", into = "FormJson")]
pub struct Form {
    n: usize,
    terms: BTreeMap<Vec<usize>, Element>,
}

impl Form {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_element(f: &Element) -> Self {
        let mut u = Self::zero(f.n());
        u.add_term(Vec::new(), f);
        u
    }

    /// The basic one-form `dx_i`.
    pub fn dx(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut u = Self::zero(n);
        u.add_term(vec![i], &Element::one(n));
        Ok(u)
    }

    /// `dx_I · f` for a strictly increasing `I`.
    pub fn monomial(wedge: Vec<usize>, f: &Element) -> Result<Self> {
        let n = f.n();
        if let Some(&i) = wedge.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        if wedge.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::Parse {
                position: 0,
                message: "wedge indices must increase".into(),
            });
        }
        let mut u = Self::zero(n);
        u.add_term(wedge, f);
        Ok(u)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Element)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `dx_I`.
    pub fn coefficient(&self, wedge: &[usize]) -> Element {
        self.terms
            .get(wedge)
            .cloned()
            .unwrap_or_else(|| Element::zero(self.n))
    }

    /// Largest degree present, `None` for the zero form.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Vec::len);
        match degrees.next() {
            Some(k) => degrees.all(|d| d == k),
            None => true,
        }
    }

    /// Component of the given degree.
    pub fn homogeneous(&self, k: usize) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == k)
                .map(|(w, f)| (w.clone(), f.clone()))
                .collect(),
        }
    }

    /// Degree-zero part as an element.
    pub fn as_element(&self) -> Option<Element> {
        match self.degree() {
            None => Some(Element::zero(self.n)),
            Some(0) => Some(self.coefficient(&[])),
            Some(_) => None,
        }
    }

    fn add_term(&mut self, wedge: Vec<usize>, f: &Element) {
        if f.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&wedge) {
            Some(old) => &old + f,
            None => f.clone(),
        };
        if !sum.is_zero() {
            self.terms.insert(wedge, sum);
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.n);
        for (w, f) in &self.terms {
            out.add_term(w.clone(), &f.scale(c));
        }
        out
    }

    /// `f · u`.
    pub fn left_mul(&self, f: &Element) -> Self {
        let mut out = Self::zero(self.n);
        for (w, g) in &self.terms {
            let moved = apply_sigma(&wedge_weight(self.n, w), f).expect("dimension checked");
            out.add_term(w.clone(), &(&moved * g));
        }
        out
    }

    /// `u · f`.
    pub fn right_mul(&self, f: &Element) -> Self {
        let mut out = Self::zero(self.n);
        for (w, g) in &self.terms {
            out.add_term(w.clone(), &(g * f));
        }
        out
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (w, f) in &other.terms {
            out.add_term(w.clone(), f);
        }
        Ok(out)
    }

    pub fn checked_wedge(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(form_mul(self, other))
    }

    /// Expands into `(wedge, α, c)` triples.
    pub fn expanded(
        &self,
    ) -> impl Iterator<Item = (&Vec<usize>, &MultiIndex, &LaurentScalar)> + '_ {
        self.terms
            .iter()
            .flat_map(|(w, f)| f.terms().map(move |(a, c)| (w, a, c)))
    }

    pub fn specialize(&self, v: &crate::scalar::Rational) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (w, f) in &self.terms {
            out.add_term(w.clone(), &f.specialize(v)?);
        }
        Ok(out)
    }
}

/// Product in the exterior algebra:
/// `(dx_I f) ∧ (dx_J g) = (dx_I ∧ dx_J) σ_J(f) g`.
pub fn form_mul(u: &Form, v: &Form) -> Form {
    assert_eq!(u.n, v.n, "form dimension mismatch");
    let n = u.n;
    let mut out = Form::zero(n);
    for (wu, f) in &u.terms {
        for (wv, g) in &v.terms {
            let word: Vec<usize> = wu.iter().chain(wv).copied().collect();
            let Some((negative, shift, sorted)) = canonical_wedge(&word) else {
                continue;
            };
            let moved = apply_sigma(&wedge_weight(n, wv), f).expect("dimension checked");
            let mut c = LaurentScalar::q_pow(shift);
            if negative {
                c = -c;
            }
            out.add_term(sorted, &(&moved * g).scale(&c));
        }
    }
    out
}

/// `d(f) = Σ_i dx_i ∂_i(f)` on elements.
pub fn d_element(f: &Element) -> Form {
    let n = f.n();
    let mut out = Form::zero(n);
    for i in 1..=n {
        out.add_term(vec![i], &apply_partial(i, f).expect("index in range"));
    }
    out
}

/// Exterior derivative, `d(dx_I f) = (−1)^k dx_I ∧ d(f)` for `|I| = k`.
pub fn d(u: &Form) -> Form {
    let n = u.n;
    let mut out = Form::zero(n);
    for (w, f) in &u.terms {
        let mut head = Form::zero(n);
        head.add_term(w.clone(), &Element::one(n));
        let mut term = form_mul(&head, &d_element(f));
        if w.len() % 2 == 1 {
            term = term.scale(&LaurentScalar::from_int(-1));
        }
        out = out.checked_add(&term).expect("same dimension");
    }
    out
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = |w: &Vec<usize>, a: &MultiIndex| {
            let mut parts = Vec::new();
            if !w.is_empty() {
                parts.push(
                    w.iter()
                        .map(|i| format!("dx{i}"))
                        .collect::<Vec<_>>()
                        .join(" /\\ "),
                );
            }
            if !a.is_zero() {
                parts.push(format_monomial(a));
            }
            parts.join(" ")
        };
        f.write_str(&format_sum(
            self.expanded().map(|(w, a, c)| (c, basis(w, a))),
        ))
    }
}

#[derive(Serialize, Deserialize)]
struct FormTermJson {
    wedge: Vec<usize>,
    coeff: ElementJson,
}

#[derive(Serialize, Deserialize)]
pub struct FormJson {
    n: usize,
    terms: Vec<FormTermJson>,
}

impl From<Form> for FormJson {
    fn from(u: Form) -> Self {
        FormJson {
            n: u.n,
            terms: u
                .terms
                .into_iter()
                .map(|(wedge, f)| FormTermJson {
                    wedge,
                    coeff: f.into(),
                })
                .collect(),
        }
    }
}

impl TryFrom<FormJson> for Form {
    type Error = Error;

    fn try_from(json: FormJson) -> Result<Self> {
        if json.n == 0 {
            return Err(Error::InvalidDimension);
        }
        let mut u = Form::zero(json.n);
        let mut last: Option<Vec<usize>> = None;
        for t in json.terms {
            let f = Element::try_from(t.coeff)?;
            if f.n() != json.n {
                return Err(Error::DimensionMismatch {
                    left: json.n,
                    right: f.n(),
                });
            }
            if f.is_zero() {
                return Err(Error::Json("zero coefficient stored".into()));
            }
            if last.as_ref().is_some_and(|prev| prev >= &t.wedge) {
                return Err(Error::Json("wedge terms must be strictly sorted".into()));
            }
            last = Some(t.wedge.clone());
            let single = Form::monomial(t.wedge, &f).map_err(|e| Error::Json(e.to_string()))?;
            u = u.checked_add(&single)?;
        }
        Ok(u)
    }
}

/// Which leg of a two-fold coaction value carries the form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `A ⊗ Ω`
    Left,
    /// `Ω ⊗ A`
    Right,
}

/// Element of a tensor product of copies of `A_q(n)` with exactly one
/// slot holding a form, e.g. `Ω ⊗ A` or `A ⊗ Ω ⊗ A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedTensor {
    n: usize,
    arity: usize,
    form_slot: usize,
    terms: BTreeMap<(Vec<usize>, Vec<MultiIndex>), LaurentScalar>,
}

impl MixedTensor {
    pub fn zero(n: usize, arity: usize, form_slot: usize) -> Self {
        assert!(form_slot < arity);
        Self {
            n,
            arity,
            form_slot,
            terms: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn form_slot(&self) -> usize {
        self.form_slot
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(
        &self,
    ) -> impl Iterator<Item = (&(Vec<usize>, Vec<MultiIndex>), &LaurentScalar)> + '_ {
        self.terms.iter()
    }

    pub fn add_term(&mut self, wedge: Vec<usize>, legs: Vec<MultiIndex>, c: &LaurentScalar) {
        debug_assert_eq!(legs.len(), self.arity);
        accumulate(&mut self.terms, (wedge, legs), c);
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.arity, self.form_slot),
            (other.arity, other.form_slot),
            "mixed tensor shape mismatch"
        );
        let mut out = self.clone();
        for ((w, legs), c) in &other.terms {
            out.add_term(w.clone(), legs.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.n, self.arity, self.form_slot);
        for ((w, legs), v) in &self.terms {
            out.add_term(w.clone(), legs.clone(), &(v * c));
        }
        out
    }

    /// Embeds an algebra tensor, placing an empty wedge in `form_slot`.
    pub fn from_tensor(t: &TensorElement, form_slot: usize) -> Self {
        let mut out = Self::zero(t.n(), t.arity(), form_slot);
        for (legs, c) in t.terms() {
            out.add_term(Vec::new(), legs.clone(), c);
        }
        out
    }

    /// A single form, as a mixed tensor of arity one.
    pub fn from_form(u: &Form) -> Self {
        let mut out = Self::zero(u.n, 1, 0);
        for (w, a, c) in u.expanded() {
            out.add_term(w.clone(), vec![a.clone()], c);
        }
        out
    }

    pub fn to_form(&self) -> Form {
        assert_eq!(self.arity, 1);
        let mut out = Form::zero(self.n);
        for ((w, legs), c) in &self.terms {
            out.add_term(
                w.clone(),
                &Element::monomial(legs[0].clone(), c.clone()).expect("valid exponent"),
            );
        }
        out
    }

    /// Componentwise product; inside the form slot algebra coefficients
    /// move right through differentials.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            (self.arity, self.form_slot),
            (other.arity, other.form_slot),
            "mixed tensor shape mismatch"
        );
        let (n, slot) = (self.n, self.form_slot);
        let mut out = Self::zero(n, self.arity, slot);
        for ((wa, a), ca) in &self.terms {
            for ((wb, b), cb) in &other.terms {
                let word: Vec<usize> = wa.iter().chain(wb).copied().collect();
                let Some((negative, mut shift, wedge)) = canonical_wedge(&word) else {
                    continue;
                };
                let mut legs = Vec::with_capacity(self.arity);
                for (k, (x, y)) in a.iter().zip(b).enumerate() {
                    if k == slot {
                        shift += eta_exponent_raw(x.entries(), wedge_weight(n, wb).entries());
                    }
                    let (s, z) = merge_monomials(x, y);
                    shift += s;
                    legs.push(z);
                }
                let mut c = (ca * cb).shifted(shift);
                if negative {
                    c = -c;
                }
                out.add_term(wedge, legs, &c);
            }
        }
        out
    }

    /// Replaces the form slot by the image of `(dx_I, x^α)` under `f`.
    pub fn expand_form_slot<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&[usize], &MultiIndex) -> MixedTensor,
    {
        let slot = self.form_slot;
        let mut out: Option<Self> = None;
        for ((w, legs), c) in &self.terms {
            let image = f(w, &legs[slot]);
            let target = out.get_or_insert_with(|| {
                Self::zero(self.n, self.arity - 1 + image.arity, slot + image.form_slot)
            });
            for ((iw, ilegs), ic) in &image.terms {
                let mut new_legs = legs[..slot].to_vec();
                new_legs.extend(ilegs.iter().cloned());
                new_legs.extend_from_slice(&legs[slot + 1..]);
                target.add_term(iw.clone(), new_legs, &(c * ic));
            }
        }
        out.unwrap_or_else(|| Self::zero(self.n, self.arity, self.form_slot))
    }

    /// Replaces an algebra leg by the image of its basis monomial, a tensor
    /// of arity `out_arity` (0 for scalar-valued maps).
    pub fn expand_leg<F>(&self, slot: usize, out_arity: usize, mut f: F) -> Self
    where
        F: FnMut(&MultiIndex) -> TensorElement,
    {
        assert_ne!(slot, self.form_slot, "expand_leg on the form slot");
        let form_slot = if slot < self.form_slot {
            self.form_slot + out_arity - 1
        } else {
            self.form_slot
        };
        let mut out = Self::zero(self.n, self.arity + out_arity - 1, form_slot);
        for ((w, legs), c) in &self.terms {
            for (ilegs, ic) in f(&legs[slot]).terms() {
                let mut new_legs = legs[..slot].to_vec();
                new_legs.extend(ilegs.iter().cloned());
                new_legs.extend_from_slice(&legs[slot + 1..]);
                out.add_term(w.clone(), new_legs, &(c * ic));
            }
        }
        out
    }
}

impl fmt::Display for MixedTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |w: &Vec<usize>, legs: &Vec<MultiIndex>| {
            legs.iter()
                .enumerate()
                .map(|(k, a)| {
                    let mut parts = Vec::new();
                    if k == self.form_slot && !w.is_empty() {
                        parts.push(
                            w.iter()
                                .map(|i| format!("dx{i}"))
                                .collect::<Vec<_>>()
                                .join(" /\\ "),
                        );
                    }
                    if !a.is_zero() {
                        parts.push(format_monomial(a));
                    }
                    if parts.is_empty() {
                        "1".to_string()
                    } else {
                        parts.join(" ")
                    }
                })
                .collect::<Vec<_>>()
                .join(" ⊗ ")
        };
        f.write_str(&format_sum(
            self.terms.iter().map(|((w, legs), c)| (c, render(w, legs))),
        ))
    }
}

fn d_on_leg(t: &TensorElement, slot: usize) -> MixedTensor {
    let n = t.n();
    let mut out = MixedTensor::zero(n, t.arity(), slot);
    for (legs, c) in t.terms() {
        let f = Element::basis(legs[slot].clone()).expect("valid exponent");
        for (w, a, cd) in d_element(&f).expanded() {
            let mut new_legs = legs.clone();
            new_legs[slot] = a.clone();
            out.add_term(w.clone(), new_legs, &(c * cd));
        }
    }
    out
}

fn coaction_dx(n: usize, i: usize, side: Side) -> MixedTensor {
    let delta = coproduct_a(&Element::generator(n, i).expect("index in range"));
    match side {
        Side::Right => d_on_leg(&delta, 0),
        Side::Left => d_on_leg(&delta, 1),
    }
}

fn coaction_monomial(wedge: &[usize], alpha: &MultiIndex, side: Side) -> Result<MixedTensor> {
    let n = alpha.dim();
    let slot = match side {
        Side::Right => 0,
        Side::Left => 1,
    };
    let delta = MixedTensor::from_tensor(&coproduct_a(&Element::basis(alpha.clone())?), slot);
    match wedge {
        [] => Ok(delta),
        [i] => Ok(coaction_dx(n, *i, side).mul(&delta)),
        _ => Err(Error::DegreeTooHigh(wedge.len())),
    }
}

fn coaction(u: &Form, side: Side) -> Result<MixedTensor> {
    let slot = if side == Side::Right { 0 } else { 1 };
    let mut out = MixedTensor::zero(u.n, 2, slot);
    for (w, a, c) in u.expanded() {
        out = out.add(&coaction_monomial(w, a, side)?.scale(c));
    }
    Ok(out)
}

/// Right coaction `Ω → Ω ⊗ A`, `Δ_R(dx_i) = (d ⊗ id) Δ(x_i)`.
pub fn delta_r(u: &Form) -> Result<MixedTensor> {
    coaction(u, Side::Right)
}

/// Left coaction `Ω → A ⊗ Ω`, `Δ_L(dx_i) = (id ⊗ d) Δ(x_i)`.
pub fn delta_l(u: &Form) -> Result<MixedTensor> {
    coaction(u, Side::Left)
}

fn leg_coproduct(a: &MultiIndex) -> TensorElement {
    coproduct_a(&Element::basis(a.clone()).expect("valid exponent"))
}

fn leg_counit(a: &MultiIndex) -> TensorElement {
    let mut t = TensorElement::zero(a.dim(), 0);
    t.add_term(
        Vec::new(),
        &counit_a(&Element::basis(a.clone()).expect("valid exponent")),
    );
    t
}

/// Random form of degree at most `max_degree` with a few terms.
pub fn random_form<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: usize,
    x1_min: i64,
    max: i64,
) -> Form {
    let mut u = Form::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let k = rng.gen_range(0..=max_degree.min(n));
        let mut wedge: Vec<usize> = (1..=n).collect();
        while wedge.len() > k {
            wedge.remove(rng.gen_range(0..wedge.len()));
        }
        u.add_term(wedge, &random_element(rng, n, 2, x1_min, max));
    }
    u
}

/// Leibniz rules and nilpotency of `d`, plus associativity of the wedge product.
pub fn check_calculus(n: usize, deg_bound: i64, samples: usize, seed: u64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut module = Report::new("x_i dx_j = eta(e_i,e_j) dx_j x_i");
    let mut leibniz = Report::new("d(fg) = d(f) g + f d(g)");
    let mut nilpotent = Report::new("d(d(u)) = 0");
    let mut graded = Report::new("d(u /\\ v) = du /\\ v + (-1)^k u /\\ dv");
    let mut assoc = Report::new("(u /\\ v) /\\ w = u /\\ (v /\\ w)");
    let max = deg_bound.max(1);
    for i in 1..=n {
        for j in 1..=n {
            let xi = Element::generator(n, i).unwrap();
            let dxj = Form::dx(n, j).unwrap();
            let lhs = dxj.left_mul(&xi);
            let rhs = dxj
                .right_mul(&xi)
                .scale(&LaurentScalar::q_pow(eta_exponent_raw(
                    MultiIndex::unit(n, i).entries(),
                    MultiIndex::unit(n, j).entries(),
                )));
            module.check_eq(&lhs, &rhs, || format!("i={i} j={j}"));
        }
    }
    for _ in 0..samples {
        let f = random_element(&mut rng, n, 3, -2, max);
        let g = random_element(&mut rng, n, 3, -2, max);
        let lhs = d_element(&(&f * &g));
        let rhs = d_element(&f)
            .right_mul(&g)
            .checked_add(&d_element(&g).left_mul(&f))
            .unwrap();
        leibniz.check_eq(&lhs, &rhs, || format!("f={f} g={g}"));
        nilpotent.check(d(&d_element(&f)).is_zero(), || format!("f={f}"));
    }
    for _ in 0..samples / 2 {
        let u = random_form(&mut rng, n, 1, -2, max).homogeneous(1);
        nilpotent.check(d(&d(&u)).is_zero(), || format!("u={u}"));
        let v = random_form(&mut rng, n, 2, -2, max);
        nilpotent.check(d(&d(&v)).is_zero(), || format!("u={v}"));
    }
    for _ in 0..samples {
        let k = rng.gen_range(0..=2usize);
        let u = random_form(&mut rng, n, 2, -2, max).homogeneous(k.min(n));
        let v = random_form(&mut rng, n, 2, -2, max);
        let sign = LaurentScalar::from_int(if k % 2 == 0 { 1 } else { -1 });
        let lhs = d(&form_mul(&u, &v));
        let rhs = form_mul(&d(&u), &v)
            .checked_add(&form_mul(&u, &d(&v)).scale(&sign))
            .unwrap();
        graded.check_eq(&lhs, &rhs, || format!("u={u} v={v}"));
    }
    for _ in 0..samples / 4 {
        let u = random_form(&mut rng, n, 2, -1, 2);
        let v = random_form(&mut rng, n, 1, -1, 2);
        let w = random_form(&mut rng, n, 1, -1, 2);
        assoc.check_eq(
            &form_mul(&form_mul(&u, &v), &w),
            &form_mul(&u, &form_mul(&v, &w)),
            || format!("u={u} v={v} w={w}"),
        );
    }
    vec![module, leibniz, nilpotent, graded, assoc]
}

/// Coaction axioms: relation preservation, comodule and bicomodule laws.
pub fn check_bicovariance(n: usize, deg_bound: i64, samples: usize, seed: u64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut relations = Report::new("D_L, D_R preserve x_i dx_j = eta(e_i,e_j) dx_j x_i");
    let mut extends = Report::new("D_L = D_R = D on A");
    let mut comodule_r = Report::new("(D_R x id) D_R = (id x D) D_R, (id x e) D_R = id");
    let mut comodule_l = Report::new("(id x D_L) D_L = (D x id) D_L, (e x id) D_L = id");
    let mut bicomodule = Report::new("(id x D_R) D_L = (D_L x id) D_R");
    let mut bimodule = Report::new("D_*(f u g) = D(f) D_*(u) D(g)");
    for side in [Side::Right, Side::Left] {
        let slot = if side == Side::Right { 0 } else { 1 };
        for i in 1..=n {
            for j in 1..=n {
                let xi = MixedTensor::from_tensor(
                    &coproduct_a(&Element::generator(n, i).unwrap()),
                    slot,
                );
                let dxj = coaction_dx(n, j, side);
                let e = LaurentScalar::q_pow(eta_exponent_raw(
                    MultiIndex::unit(n, i).entries(),
                    MultiIndex::unit(n, j).entries(),
                ));
                relations.check_eq(&xi.mul(&dxj), &dxj.mul(&xi).scale(&e), || {
                    format!("{side:?} i={i} j={j}")
                });
            }
        }
    }
    let mut basis: Vec<Form> = Vec::new();
    for alpha in monomials_up_to(n, deg_bound.min(2), -1) {
        let f = Element::basis(alpha).unwrap();
        basis.push(Form::from_element(&f));
        for i in 1..=n {
            basis.push(Form::dx(n, i).unwrap().right_mul(&f));
        }
    }
    for u in &basis {
        let r = delta_r(u).unwrap();
        let l = delta_l(u).unwrap();
        let text = || format!("u={u}");
        if let Some(f) = u.as_element() {
            let delta = coproduct_a(&f);
            extends.check_eq(&r, &MixedTensor::from_tensor(&delta, 0), text);
            extends.check_eq(&l, &MixedTensor::from_tensor(&delta, 1), text);
        }
        let rr = r.expand_form_slot(|w, a| coaction_monomial(w, a, Side::Right).unwrap());
        comodule_r.check_eq(&rr, &r.expand_leg(1, 2, leg_coproduct), text);
        comodule_r.check_eq(&r.expand_leg(1, 0, leg_counit).to_form(), u, text);
        let ll = l.expand_form_slot(|w, a| coaction_monomial(w, a, Side::Left).unwrap());
        comodule_l.check_eq(&ll, &l.expand_leg(0, 2, leg_coproduct), text);
        comodule_l.check_eq(&l.expand_leg(0, 0, leg_counit).to_form(), u, text);
        let lr = l.expand_form_slot(|w, a| coaction_monomial(w, a, Side::Right).unwrap());
        let rl = r.expand_form_slot(|w, a| coaction_monomial(w, a, Side::Left).unwrap());
        bicomodule.check_eq(&lr, &rl, text);
    }
    for _ in 0..samples {
        let f = random_element(&mut rng, n, 2, -1, 2);
        let g = random_element(&mut rng, n, 2, -1, 2);
        let i = rng.gen_range(1..=n);
        let u = Form::dx(n, i)
            .unwrap()
            .right_mul(&Element::basis(random_alpha(&mut rng, n, -1, 2)).unwrap());
        let fug = u.left_mul(&f).right_mul(&g);
        for (side, slot) in [(Side::Right, 0), (Side::Left, 1)] {
            let df = MixedTensor::from_tensor(&coproduct_a(&f), slot);
            let dg = MixedTensor::from_tensor(&coproduct_a(&g), slot);
            let rhs = df.mul(&coaction(&u, side).unwrap()).mul(&dg);
            bimodule.check_eq(&coaction(&fug, side).unwrap(), &rhs, || {
                format!("{side:?} f={f} u={u} g={g}")
            });
        }
    }
    vec![
        relations, extends, comodule_r, comodule_l, bicomodule, bimodule,
    ]
}
