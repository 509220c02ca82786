//! Randomized algebraic laws across modules.

use proptest::prelude::*;
use rand::SeedableRng;

use qspace::calculus::{d, delta_l, delta_r, form_mul, random_form, Form};
use qspace::hopf::{antipode_a, coproduct_a, counit_a, TensorElement};
use qspace::qspace::ElementJson;
use qspace::sample::{random_element, SampleRng};
use qspace::Element;

fn element(seed: u64, n: usize) -> Element {
    random_element(&mut SampleRng::seed_from_u64(seed), n, 3, -2, 3)
}

fn form(seed: u64, n: usize, max_degree: usize) -> Form {
    random_form(&mut SampleRng::seed_from_u64(seed), n, max_degree, -2, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coproduct_and_counit_are_multiplicative(a in any::<u64>(), b in any::<u64>(), n in 1usize..=3) {
        let (f, g) = (element(a, n), element(b, n));
        prop_assert_eq!(coproduct_a(&(&f * &g)), coproduct_a(&f).mul(&coproduct_a(&g)));
        prop_assert_eq!(counit_a(&(&f * &g)), counit_a(&f) * counit_a(&g));
    }

    #[test]
    fn antipode_reverses_products(a in any::<u64>(), b in any::<u64>(), n in 1usize..=3) {
        let (f, g) = (element(a, n), element(b, n));
        prop_assert_eq!(antipode_a(&(&f * &g)), &antipode_a(&g) * &antipode_a(&f));
    }

    #[test]
    fn differential_squares_to_zero(a in any::<u64>(), n in 1usize..=3) {
        prop_assert!(d(&d(&form(a, n, 2))).is_zero());
    }

    #[test]
    fn wedge_is_associative(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (u, v, w) = (form(a, 3, 1), form(b, 3, 1), form(c, 3, 1));
        prop_assert_eq!(form_mul(&form_mul(&u, &v), &w), form_mul(&u, &form_mul(&v, &w)));
    }

    #[test]
    fn coactions_extend_the_coproduct(a in any::<u64>(), n in 1usize..=3) {
        let f = element(a, n);
        let u = Form::from_element(&f);
        let delta = coproduct_a(&f);
        let as_tensor = |m: &qspace::calculus::MixedTensor| {
            let mut t = TensorElement::zero(n, 2);
            for ((wedge, legs), c) in m.terms() {
                assert!(wedge.is_empty());
                t.add_term(legs.clone(), c);
            }
            t
        };
        prop_assert_eq!(as_tensor(&delta_r(&u).unwrap()), delta.clone());
        prop_assert_eq!(as_tensor(&delta_l(&u).unwrap()), delta);
    }

    #[test]
    fn json_round_trips(a in any::<u64>(), n in 1usize..=3) {
        let f = element(a, n);
        let text = serde_json::to_string(&f).unwrap();
        let back: Element = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &f);
        let _: ElementJson = serde_json::from_str(&text).unwrap();
        let u = form(a, n, 2);
        let back: Form = serde_json::from_str(&serde_json::to_string(&u).unwrap()).unwrap();
        prop_assert_eq!(back, u);
        let t = coproduct_a(&f);
        prop_assert_eq!(TensorElement::from_json(&t.to_json(), 2).unwrap(), t);
    }
}
