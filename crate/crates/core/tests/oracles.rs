//! Closed-form and word-level oracles, computed independently of the
//! kernel's normal-form formulas.

use num_bigint::BigInt;
use num_rational::BigRational;

use qspace::calculus::{d_element, form_mul, Form};
use qspace::hopf::{antipode_a, coproduct_a, TensorElement};
use qspace::invariants::mc_basis;
use qspace::operators::apply_partial;
use qspace::sample::seeded_rng;
use qspace::{Element, LaurentScalar, MultiIndex};
use rand::Rng;

fn mi(v: &[i64]) -> MultiIndex {
    MultiIndex::new(v.to_vec())
}

fn binomial(k: i64, j: i64) -> i64 {
    (0..j).fold(1, |acc, t| acc * (k - t) / (t + 1))
}

#[test]
fn coproduct_of_x2_power_matches_binomial_expansion() {
    // x2⊗x1 and x1⊗x2 commute, so Δ(x2^k) = Σ_j C(k,j) (x2⊗x1)^j (x1⊗x2)^(k-j)
    // = Σ_j C(k,j) q^(-j(k-j)) x1^(k-j) x2^j ⊗ x1^j x2^(k-j).
    for k in 0..=6 {
        let mut expect = TensorElement::zero(2, 2);
        for j in 0..=k {
            let c = LaurentScalar::monomial(
                BigRational::from_integer(BigInt::from(binomial(k, j))),
                -j * (k - j),
            );
            expect.add_term(vec![mi(&[k - j, j]), mi(&[j, k - j])], &c);
        }
        assert_eq!(
            coproduct_a(&Element::basis(mi(&[0, k])).unwrap()),
            expect,
            "k = {k}"
        );
    }
}

#[test]
fn antipode_of_generators_in_closed_form() {
    // S(x_i) = -x1^-1 x_i x1^-1 = -q^(i-1) x1^-2 x_i
    for n in 2..=5 {
        for i in 2..=n {
            let mut alpha = vec![0; n];
            alpha[0] = -2;
            alpha[i - 1] = 1;
            let expect =
                Element::monomial(MultiIndex::new(alpha), -LaurentScalar::q_pow(i as i64 - 1))
                    .unwrap();
            assert_eq!(antipode_a(&Element::generator(n, i).unwrap()), expect);
        }
    }
}

/// `d` of a word of letters `x_i^{±1}` by the Leibniz rule, with
/// `d(x1^-1) = -x1^-1 dx1 x1^-1` and coefficients moved only through the
/// bimodule rule `f dx_i = dx_i σ_i(f)` implemented by `Form::left_mul`.
fn d_of_word(n: usize, word: &[(usize, i64)]) -> Form {
    let letter = |&(i, s): &(usize, i64)| {
        if s == 1 {
            Element::generator(n, i).unwrap()
        } else {
            Element::x1_pow(n, -1)
        }
    };
    let mut out = Form::zero(n);
    for (k, l) in word.iter().enumerate() {
        let before = word[..k]
            .iter()
            .fold(Element::one(n), |acc, l| &acc * &letter(l));
        let after = word[k + 1..]
            .iter()
            .fold(Element::one(n), |acc, l| &acc * &letter(l));
        let dl = if l.1 == 1 {
            Form::dx(n, l.0).unwrap()
        } else {
            let inv = Element::x1_pow(n, -1);
            Form::dx(n, 1)
                .unwrap()
                .left_mul(&inv)
                .right_mul(&inv)
                .scale(&LaurentScalar::from_int(-1))
        };
        out = out
            .checked_add(&dl.left_mul(&before).right_mul(&after))
            .unwrap();
    }
    out
}

#[test]
fn differential_matches_word_leibniz_expansion() {
    let mut rng = seeded_rng(99);
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let len = rng.gen_range(0..=6);
        let word: Vec<(usize, i64)> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..=n);
                (i, if i == 1 && rng.gen_bool(0.4) { -1 } else { 1 })
            })
            .collect();
        let f = word.iter().fold(Element::one(n), |acc, &(i, s)| {
            &acc * &if s == 1 {
                Element::generator(n, i).unwrap()
            } else {
                Element::x1_pow(n, -1)
            }
        });
        assert_eq!(d_element(&f), d_of_word(n, &word), "word {word:?}");
    }
}

#[test]
fn wedge_of_permuted_differentials() {
    // dx_{p1} ∧ … ∧ dx_{pk} = sign(p) q^(Σ_{a before b, a > b} (b - a)) dx_1 ∧ … ∧ dx_k
    let perms: [&[usize]; 6] = [
        &[1, 2, 3],
        &[2, 1, 3],
        &[1, 3, 2],
        &[3, 1, 2],
        &[2, 3, 1],
        &[3, 2, 1],
    ];
    let n = 3;
    for p in perms {
        let product = p
            .iter()
            .fold(Form::from_element(&Element::one(n)), |acc, &i| {
                form_mul(&acc, &Form::dx(n, i).unwrap())
            });
        let (mut sign, mut shift) = (1, 0);
        for a in 0..p.len() {
            for b in a + 1..p.len() {
                if p[a] > p[b] {
                    sign = -sign;
                    shift += p[b] as i64 - p[a] as i64;
                }
            }
        }
        let c = LaurentScalar::q_pow(shift).scaled(&BigRational::from_integer(BigInt::from(sign)));
        let expect = Form::monomial(vec![1, 2, 3], &Element::one(n))
            .unwrap()
            .scale(&c);
        assert_eq!(product, expect, "{p:?}");
    }
}

#[test]
fn maurer_cartan_basis_in_closed_form() {
    for n in 1..=5 {
        let inv = Element::x1_pow(n, -1);
        assert_eq!(
            mc_basis(n, 1).unwrap(),
            Form::dx(n, 1).unwrap().right_mul(&inv)
        );
        for i in 2..=n {
            let mut alpha = vec![0; n];
            alpha[0] = -2;
            alpha[i - 1] = 1;
            let tail =
                Element::monomial(MultiIndex::new(alpha), -LaurentScalar::q_pow(i as i64 - 1))
                    .unwrap();
            let expect = Form::dx(n, i)
                .unwrap()
                .right_mul(&inv)
                .checked_add(&Form::dx(n, 1).unwrap().right_mul(&tail))
                .unwrap();
            assert_eq!(mc_basis(n, i).unwrap(), expect);
        }
    }
}

#[test]
fn partial_derivative_hand_values() {
    let n = 3;
    // ∂2(x1 x2) = q x1, ∂3(x1 x2 x3) = q^3 x1 x2, ∂1(x1^z) = z x1^(z-1)
    let f = Element::basis(mi(&[1, 1, 0])).unwrap();
    assert_eq!(
        apply_partial(2, &f).unwrap(),
        Element::monomial(mi(&[1, 0, 0]), LaurentScalar::q()).unwrap()
    );
    let g = Element::basis(mi(&[1, 1, 1])).unwrap();
    assert_eq!(
        apply_partial(3, &g).unwrap(),
        Element::monomial(mi(&[1, 1, 0]), LaurentScalar::q_pow(3)).unwrap()
    );
    for z in -4..=4 {
        let h = Element::x1_pow(n, z);
        assert_eq!(
            apply_partial(1, &h).unwrap(),
            Element::x1_pow(n, z - 1).scale(&LaurentScalar::from_int(z))
        );
    }
}
