//! Right-invariant Maurer–Cartan forms `ω_f = m((d ⊗ S) Δ(f))` and the
//! vector fields `T₁ = Σ x_i∂_i`, `T_i = x₁∂_i` dual to them.
//!
//! The grading operator `q^{cT₁}` acts by `x^α ↦ q^{c|α|} x^α`, where `|α|`
//! is the signed total degree, so the coproduct
//! `Δ(T_i) = T_i ⊗ 1 + q^{(i−1)T₁} ⊗ T_i` stays inside the Laurent ring.

use std::fmt;

use rand::Rng;

use crate::bicharacter::MultiIndex;
use crate::calculus::{d_element, delta_r, form_mul, random_form, Form, MixedTensor};
use crate::error::{Error, Result};
use crate::hopf::{antipode_a, coproduct_a};
use crate::operators::{apply_partial, apply_sigma, classical_partial};
use crate::qspace::{total_degree, Element};
use crate::report::Report;
use crate::sample::{monomials_up_to, random_alpha, random_element, seeded_rng};
use crate::scalar::{int, LaurentScalar};

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(())
}

/// `ω_f = Σ d(f₍₁₎) S(f₍₂₎)`.
pub fn mc_form(f: &Element) -> Form {
    let n = f.n();
    let mut out = Form::zero(n);
    for (legs, c) in coproduct_a(f).terms() {
        let left = d_element(&Element::basis(legs[0].clone()).expect("valid exponent"));
        let right = antipode_a(&Element::basis(legs[1].clone()).expect("valid exponent"));
        out = out
            .checked_add(&left.right_mul(&right).scale(c))
            .expect("same dimension");
    }
    out
}

/// `ω_i = ω_{x_i}`.
pub fn mc_basis(n: usize, i: usize) -> Result<Form> {
    Ok(mc_form(&Element::generator(n, i)?))
}

/// Coefficients `h_i` with `u = Σ ω_i h_i` for a one-form `u = Σ dx_i g_i`,
/// from `dx₁ = ω₁x₁` and `dx_i = ω₁x_i + ω_ix₁`.
pub fn omega_coefficients_right(u: &Form) -> Result<Vec<Element>> {
    if u.degree().is_some_and(|k| k != 1) || !u.is_homogeneous() {
        return Err(Error::DegreeTooHigh(u.degree().unwrap_or(0)));
    }
    let n = u.n();
    let x1 = Element::generator(n, 1)?;
    let mut h = vec![&x1 * &u.coefficient(&[1])];
    for i in 2..=n {
        let g = u.coefficient(&[i]);
        h[0] = &h[0] + &(&Element::generator(n, i)? * &g);
        h.push(&x1 * &g);
    }
    Ok(h)
}

/// Coefficients `f_i` with `u = Σ f_i ω_i`, moving each right coefficient
/// across `ω_i` by `x^α ω_i = q^{(i−1)|α|} ω_i x^α`.
pub fn omega_coefficients_left(u: &Form) -> Result<Vec<Element>> {
    let right = omega_coefficients_right(u)?;
    Ok(right
        .iter()
        .enumerate()
        .map(|(k, h)| h.map_diagonal(|a| LaurentScalar::q_pow(-(k as i64) * total_degree(a))))
        .collect())
}

fn omega_sum_right(n: usize, coeffs: &[Element]) -> Form {
    coeffs
        .iter()
        .enumerate()
        .fold(Form::zero(n), |acc, (k, h)| {
            acc.checked_add(&mc_basis(n, k + 1).unwrap().right_mul(h))
                .unwrap()
        })
}

fn omega_sum_left(n: usize, coeffs: &[Element]) -> Form {
    coeffs
        .iter()
        .enumerate()
        .fold(Form::zero(n), |acc, (k, f)| {
            acc.checked_add(&mc_basis(n, k + 1).unwrap().left_mul(f))
                .unwrap()
        })
}

/// `ω_f` agrees with the closed forms `dx₁x₁⁻¹` and `dx_ix₁⁻¹ − dx₁x₁⁻¹x_ix₁⁻¹`,
/// and `ω_1` is zero on constants.
pub fn mc_display_check(n: usize) -> Vec<Report> {
    let mut report = Report::new("w_x1 = dx1 x1^-1, w_xi = dx_i x1^-1 - dx1 x1^-1 x_i x1^-1");
    let inv = Element::x1_pow(n, -1);
    let dx1 = Form::dx(n, 1).unwrap();
    report.check_eq(&mc_basis(n, 1).unwrap(), &dx1.right_mul(&inv), || {
        "i=1".into()
    });
    for i in 2..=n {
        let xi = Element::generator(n, i).unwrap();
        let expect = Form::dx(n, i)
            .unwrap()
            .right_mul(&inv)
            .checked_add(
                &dx1.right_mul(&(&(&inv * &xi) * &inv))
                    .scale(&LaurentScalar::from_int(-1)),
            )
            .unwrap();
        report.check_eq(&mc_basis(n, i).unwrap(), &expect, || format!("i={i}"));
    }
    report.check(mc_form(&Element::one(n)).is_zero(), || "f=1".into());
    vec![report]
}

/// Commutation of `ω_i` with coordinates and monomials, and anticommutation
/// of the wedge products `ω_i ∧ ω_j`.
pub fn omega_relations_check(n: usize, trials: usize, seed: u64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut coords = Report::new("x_i w_1 = w_1 x_i, x_i w_j = q^(j-1) w_j x_i");
    let mut wedges = Report::new("w_i /\\ w_j = -(1 - delta_ij) w_j /\\ w_i");
    let mut monomials = Report::new("f w_i = q^lambda_i w_i f, lambda_i = (i-1) sum(alpha)");
    let omegas: Vec<Form> = (1..=n).map(|i| mc_basis(n, i).unwrap()).collect();
    let mut coord_list: Vec<(String, Element)> = (1..=n)
        .map(|i| (format!("x{i}"), Element::generator(n, i).unwrap()))
        .collect();
    coord_list.push(("x1^-1".into(), Element::x1_pow(n, -1)));
    for (name, x) in &coord_list {
        for (j, w) in omegas.iter().enumerate() {
            let e = LaurentScalar::q_pow(j as i64 * total_degree(x.terms().next().unwrap().0));
            coords.check_eq(&w.left_mul(x), &w.right_mul(x).scale(&e), || {
                format!("{name} w{}", j + 1)
            });
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let lhs = form_mul(&omegas[i - 1], &omegas[j - 1]);
            let rhs = if i == j {
                Form::zero(n)
            } else {
                form_mul(&omegas[j - 1], &omegas[i - 1]).scale(&LaurentScalar::from_int(-1))
            };
            wedges.check_eq(&lhs, &rhs, || format!("i={i} j={j}"));
        }
    }
    for _ in 0..trials {
        let alpha = random_alpha(&mut rng, n, -3, 3);
        let f = Element::basis(alpha.clone()).unwrap();
        for (k, w) in omegas.iter().enumerate() {
            let e = LaurentScalar::q_pow(k as i64 * alpha.total());
            monomials.check_eq(&w.left_mul(&f), &w.right_mul(&f).scale(&e), || {
                format!("f={f} i={}", k + 1)
            });
        }
    }
    vec![coords, wedges, monomials]
}

/// `dx₁ = ω₁x₁` and `dx_i = ω₁x_i + ω_ix₁`.
pub fn dx_via_omega_check(n: usize) -> Vec<Report> {
    let mut report = Report::new("dx_1 = w_1 x_1, dx_i = w_1 x_i + w_i x_1");
    let w1 = mc_basis(n, 1).unwrap();
    let x1 = Element::generator(n, 1).unwrap();
    report.check_eq(&w1.right_mul(&x1), &Form::dx(n, 1).unwrap(), || {
        "i=1".into()
    });
    for i in 2..=n {
        let xi = Element::generator(n, i).unwrap();
        let rhs = w1
            .right_mul(&xi)
            .checked_add(&mc_basis(n, i).unwrap().right_mul(&x1))
            .unwrap();
        report.check(rhs.is_homogeneous() && rhs.degree() == Some(1), || {
            format!("degree i={i}")
        });
        report.check_eq(&rhs, &Form::dx(n, i).unwrap(), || format!("i={i}"));
    }
    vec![report]
}

/// `Δ_R(ω_f) = ω_f ⊗ 1`, and `ω_f` together with random one-forms expand
/// in the basis `ω_1, …, ω_n` with coefficients on either side.
pub fn right_invariance_check(
    n: usize,
    monomials: &[MultiIndex],
    trials: usize,
    seed: u64,
) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut invariance = Report::new("D_R(w_f) = w_f (x) 1");
    let mut span = Report::new("u = sum w_i h_i = sum f_i w_i");
    let mut forms = Vec::new();
    for alpha in monomials {
        let f = Element::basis(alpha.clone()).unwrap();
        let w = mc_form(&f);
        let mut expect = MixedTensor::zero(n, 2, 0);
        for (wedge, a, c) in w.expanded() {
            expect.add_term(wedge.clone(), vec![a.clone(), MultiIndex::zero(n)], c);
        }
        invariance.check_eq(&delta_r(&w).unwrap(), &expect, || format!("f={f}"));
        forms.push(w);
    }
    for _ in 0..trials {
        forms.push(random_form(&mut rng, n, 1, -2, 3).homogeneous(1));
    }
    for u in forms.iter().filter(|u| !u.is_zero()) {
        let right = omega_coefficients_right(u).unwrap();
        span.check_eq(&omega_sum_right(n, &right), u, || format!("u={u}"));
        let left = omega_coefficients_left(u).unwrap();
        span.check_eq(&omega_sum_left(n, &left), u, || format!("u={u}"));
    }
    vec![invariance, span]
}

/// `T_i(f)`: `T₁ = Σ_k x_k∂_k`, `T_i = x₁∂_i` for `i ≥ 2`.
pub fn vf_apply(i: usize, f: &Element) -> Result<Element> {
    let n = f.n();
    check_index(i, n)?;
    if i == 1 {
        let mut out = Element::zero(n);
        for k in 1..=n {
            out = &out + &(&Element::generator(n, k)? * &apply_partial(k, f)?);
        }
        Ok(out)
    } else {
        Ok(&Element::generator(n, 1)? * &apply_partial(i, f)?)
    }
}

/// `q^{cT₁}`: `x^α ↦ q^{c|α|} x^α`.
pub fn grading_exp(c: i64, f: &Element) -> Element {
    f.map_diagonal(|a| LaurentScalar::q_pow(c * total_degree(a)))
}

/// Generators of the vector-field Hopf algebra acting on `A_q(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GradedOperator {
    /// `T_i`
    Field(usize),
    /// `q^{cT₁}`
    Grading(i64),
}

impl GradedOperator {
    pub fn apply(&self, f: &Element) -> Result<Element> {
        match *self {
            GradedOperator::Field(i) => vf_apply(i, f),
            GradedOperator::Grading(c) => Ok(grading_exp(c, f)),
        }
    }

    /// `Δ(T_i) = T_i ⊗ 1 + q^{(i−1)T₁} ⊗ T_i`, `Δ(q^{cT₁})` grouplike.
    pub fn coproduct(&self) -> Vec<(LaurentScalar, VfWord, VfWord)> {
        let one = LaurentScalar::one();
        match *self {
            GradedOperator::Field(i) => vec![
                (one.clone(), vec![*self], vec![]),
                (
                    one,
                    vec![GradedOperator::Grading(i as i64 - 1)],
                    vec![*self],
                ),
            ],
            GradedOperator::Grading(_) => vec![(one, vec![*self], vec![*self])],
        }
    }

    pub fn counit(&self) -> LaurentScalar {
        match self {
            GradedOperator::Field(_) => LaurentScalar::zero(),
            GradedOperator::Grading(_) => LaurentScalar::one(),
        }
    }

    /// `S(T_i) = −q^{−(i−1)T₁} T_i`, `S(q^{cT₁}) = q^{−cT₁}`.
    pub fn antipode(&self) -> VfOperator {
        match *self {
            GradedOperator::Field(i) => {
                vec![(
                    LaurentScalar::from_int(-1),
                    vec![GradedOperator::Grading(1 - i as i64), *self],
                )]
            }
            GradedOperator::Grading(c) => {
                vec![(LaurentScalar::one(), vec![GradedOperator::Grading(-c)])]
            }
        }
    }
}

impl fmt::Display for GradedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradedOperator::Field(i) => write!(f, "T{i}"),
            GradedOperator::Grading(c) => write!(f, "q^({c} T1)"),
        }
    }
}

/// Composition of generators; the first letter acts last.
pub type VfWord = Vec<GradedOperator>;
/// Linear combination of words.
pub type VfOperator = Vec<(LaurentScalar, VfWord)>;

pub fn apply_word(word: &[GradedOperator], f: &Element) -> Result<Element> {
    word.iter()
        .rev()
        .try_fold(f.clone(), |acc, g| g.apply(&acc))
}

pub fn apply_operator(op: &VfOperator, f: &Element) -> Result<Element> {
    let mut out = Element::zero(f.n());
    for (c, w) in op {
        out = &out + &apply_word(w, f)?.scale(c);
    }
    Ok(out)
}

/// Coproduct of a word, multiplicative over its letters.
pub fn word_coproduct(word: &[GradedOperator]) -> Vec<(LaurentScalar, VfWord, VfWord)> {
    word.iter()
        .fold(vec![(LaurentScalar::one(), vec![], vec![])], |acc, g| {
            let mut next = Vec::new();
            for (c, a, b) in &acc {
                for (cg, ga, gb) in g.coproduct() {
                    let left = a.iter().chain(&ga).copied().collect();
                    let right = b.iter().chain(&gb).copied().collect();
                    next.push((c * &cg, left, right));
                }
            }
            next
        })
}

pub fn word_counit(word: &[GradedOperator]) -> LaurentScalar {
    word.iter()
        .fold(LaurentScalar::one(), |acc, g| acc * g.counit())
}

/// `S(g₁⋯g_k) = S(g_k)⋯S(g₁)`.
pub fn word_antipode(word: &[GradedOperator]) -> VfOperator {
    word.iter()
        .rev()
        .fold(vec![(LaurentScalar::one(), vec![])], |acc, g| {
            let mut next = Vec::new();
            for (c, w) in &acc {
                for (cg, gw) in g.antipode() {
                    next.push((c * &cg, w.iter().chain(&gw).copied().collect()));
                }
            }
            next
        })
}

/// Commutativity of the fields, their relations with coordinates, and
/// `d = Σ ω_i T_i` on every monomial of degree `≤ deg_bound`.
pub fn vf_structure_check(n: usize, deg_bound: i64, x1_min: i64) -> Vec<Report> {
    let mut commute = Report::new("T_i T_j = T_j T_i");
    let mut coords =
        Report::new("T_1 x_j = x_j + x_j T_1, T_i x_j = delta_ij x_1 + q^(i-1) x_j T_i");
    let mut diagonal = Report::new("T_1(x^a) = sum(a) x^a");
    let mut differential = Report::new("d(f) = sum w_i T_i(f)");
    let omegas: Vec<Form> = (1..=n).map(|i| mc_basis(n, i).unwrap()).collect();
    let x1 = Element::generator(n, 1).unwrap();
    for alpha in monomials_up_to(n, deg_bound, x1_min) {
        let f = Element::basis(alpha.clone()).unwrap();
        let fields: Vec<Element> = (1..=n).map(|i| vf_apply(i, &f).unwrap()).collect();
        for i in 1..=n {
            for j in 1..=n {
                let lhs = vf_apply(i, &fields[j - 1]).unwrap();
                let rhs = vf_apply(j, &fields[i - 1]).unwrap();
                commute.check_eq(&lhs, &rhs, || format!("i={i} j={j} f={f}"));
                let xj = Element::generator(n, j).unwrap();
                let lhs = vf_apply(i, &(&xj * &f)).unwrap();
                let rhs = if i == 1 {
                    &(&xj * &f) + &(&xj * &fields[0])
                } else {
                    let shifted = (&xj * &fields[i - 1]).scale(&LaurentScalar::q_pow(i as i64 - 1));
                    if i == j {
                        &(&x1 * &f) + &shifted
                    } else {
                        shifted
                    }
                };
                coords.check_eq(&lhs, &rhs, || format!("i={i} j={j} f={f}"));
            }
        }
        diagonal.check_eq(
            &fields[0],
            &f.scale(&LaurentScalar::from_int(alpha.total())),
            || format!("f={f}"),
        );
        let sum = omegas
            .iter()
            .zip(&fields)
            .fold(Form::zero(n), |acc, (w, t)| {
                acc.checked_add(&w.right_mul(t)).unwrap()
            });
        differential.check_eq(&sum, &d_element(&f), || format!("f={f}"));
    }
    vec![commute, coords, diagonal, differential]
}

/// Every monomial of degree `≤ deg_bound` with `α₁ ≥ −2`, followed by
/// `samples` random ones.
fn test_monomials<R: Rng>(
    rng: &mut R,
    n: usize,
    deg_bound: i64,
    samples: usize,
) -> Vec<MultiIndex> {
    let mut out = monomials_up_to(n, deg_bound, -2);
    out.extend((0..samples).map(|_| random_alpha(rng, n, -2, 3)));
    out
}

/// `T_i(fg) = T_i(f) g + q^{λ_i} f T_i(g)` for monomials `f` and random `g`.
pub fn vf_leibniz_check(n: usize, deg_bound: i64, samples: usize, seed: u64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut report = Report::new("T_i(fg) = T_i(f) g + q^lambda_i f T_i(g)");
    for alpha in test_monomials(&mut rng, n, deg_bound, samples) {
        let f = Element::basis(alpha.clone()).unwrap();
        let g = random_element(&mut rng, n, 3, -2, 3);
        for i in 1..=n {
            let lhs = vf_apply(i, &(&f * &g)).unwrap();
            let lambda = (i as i64 - 1) * alpha.total();
            let rhs = &(&vf_apply(i, &f).unwrap() * &g)
                + &(&f * &vf_apply(i, &g).unwrap()).scale(&LaurentScalar::q_pow(lambda));
            report.check_eq(&lhs, &rhs, || format!("i={i} f={f} g={g}"));
        }
    }
    vec![report]
}

fn pair_action(word: &[GradedOperator], f: &Element, g: &Element) -> Element {
    word_coproduct(word)
        .iter()
        .fold(Element::zero(f.n()), |acc, (c, a, b)| {
            &acc + &(&apply_word(a, f).unwrap() * &apply_word(b, g).unwrap()).scale(c)
        })
}

fn generator_words(n: usize) -> Vec<VfWord> {
    let mut gens: Vec<GradedOperator> = (1..=n).map(GradedOperator::Field).collect();
    gens.extend((-2..=2).map(GradedOperator::Grading));
    let mut words: Vec<VfWord> = gens.iter().map(|g| vec![*g]).collect();
    for a in &gens {
        for b in (1..=n).map(GradedOperator::Field) {
            words.push(vec![*a, b]);
        }
    }
    words
}

fn word_text(word: &[GradedOperator]) -> String {
    word.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Coproduct, counit and antipode of the vector fields, through their
/// action on `A_q(n)`.
pub fn vf_coproduct_check(n: usize, deg_bound: i64, samples: usize, seed: u64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut coproduct = Report::new("m(D(T_i)(f x g)) = T_i(fg)");
    let mut words = Report::new("m(D(X)(f x g)) = X(fg) for products X");
    let mut antipode = Report::new("m(S x id) D = e = m(id x S) D");
    let mut counit = Report::new("e(T_i) = 0, (e x id) D = id = (id x e) D");
    for alpha in test_monomials(&mut rng, n, deg_bound, samples) {
        let f = Element::basis(alpha).unwrap();
        let g = random_element(&mut rng, n, 3, -2, 3);
        let fg = &f * &g;
        for i in 1..=n {
            let t = [GradedOperator::Field(i)];
            coproduct.check_eq(&pair_action(&t, &f, &g), &vf_apply(i, &fg).unwrap(), || {
                format!("i={i} f={f} g={g}")
            });
        }
        let word: VfWord = (0..2)
            .map(|_| GradedOperator::Field(rng.gen_range(1..=n)))
            .collect();
        words.check_eq(
            &pair_action(&word, &f, &g),
            &apply_word(&word, &fg).unwrap(),
            || format!("X={} f={f} g={g}", word_text(&word)),
        );
    }
    let tests: Vec<Element> = monomials_up_to(n, 2, -1)
        .into_iter()
        .map(|a| Element::basis(a).unwrap())
        .collect();
    for word in generator_words(n) {
        let eps = word_counit(&word);
        let delta = word_coproduct(&word);
        let text = || word_text(&word);
        if word.len() == 1 {
            if let GradedOperator::Field(i) = word[0] {
                counit.check(eps.is_zero(), || format!("T{i}"));
            }
        }
        for h in &tests {
            let mut left = Element::zero(n);
            let mut right = Element::zero(n);
            let mut left_counit = Element::zero(n);
            let mut right_counit = Element::zero(n);
            for (c, a, b) in &delta {
                let inner = apply_word(b, h).unwrap();
                left = &left + &apply_operator(&word_antipode(a), &inner).unwrap().scale(c);
                right = &right
                    + &apply_word(a, &apply_operator(&word_antipode(b), h).unwrap())
                        .unwrap()
                        .scale(c);
                left_counit = &left_counit + &inner.scale(&(c * &word_counit(a)));
                right_counit =
                    &right_counit + &apply_word(a, h).unwrap().scale(&(c * &word_counit(b)));
            }
            let expect = h.scale(&eps);
            let witness = || format!("X={} h={h}", text());
            antipode.check_eq(&left, &expect, witness);
            antipode.check_eq(&right, &expect, witness);
            let direct = apply_word(&word, h).unwrap();
            counit.check_eq(&left_counit, &direct, witness);
            counit.check_eq(&right_counit, &direct, witness);
        }
    }
    vec![coproduct, words, antipode, counit]
}

/// Specialization `q = 1`: commutative multiplication, trivial `σ`, ordinary
/// partial derivatives and primitive vector fields.
pub fn classical_limit_check(n: usize, samples: usize, seed: u64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let one = int(1);
    let mut commutative = Report::new("fg = gf at q = 1");
    let mut sigma = Report::new("s_b = id at q = 1");
    let mut partial = Report::new("d_i = ordinary partial derivative at q = 1");
    let mut primitive = Report::new("D(T_i) = T_i x 1 + 1 x T_i at q = 1");
    for _ in 0..samples {
        let f = random_element(&mut rng, n, 3, 0, 3);
        let g = random_element(&mut rng, n, 3, 0, 3);
        let at_one = |e: &Element| e.specialize(&one).unwrap();
        commutative.check_eq(&at_one(&(&f * &g)), &at_one(&(&g * &f)), || {
            format!("f={f} g={g}")
        });
        let b = MultiIndex::new((0..n).map(|_| rng.gen_range(-3..=3)).collect());
        sigma.check_eq(&at_one(&apply_sigma(&b, &f).unwrap()), &at_one(&f), || {
            format!("b={b} f={f}")
        });
        for i in 1..=n {
            let lhs = at_one(&apply_partial(i, &f).unwrap());
            partial.check_eq(&lhs, &classical_partial(i, &at_one(&f)), || {
                format!("i={i} f={f}")
            });
            let c = i as i64 - 1;
            primitive.check_eq(&at_one(&grading_exp(c, &f)), &at_one(&f), || {
                format!("c={c} f={f}")
            });
            let t = [GradedOperator::Field(i)];
            let lhs = at_one(&pair_action(&t, &f, &g));
            let rhs =
                at_one(&(&(&vf_apply(i, &f).unwrap() * &g) + &(&f * &vf_apply(i, &g).unwrap())));
            primitive.check_eq(&lhs, &rhs, || format!("i={i} f={f} g={g}"));
        }
    }
    vec![commutative, sigma, partial, primitive]
}
