//! Seeded random inputs for the property checkers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bicharacter::MultiIndex;
use crate::qspace::Element;
use crate::scalar::{int, LaurentScalar};

pub type SampleRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Exponent in the algebra's domain: `α₁ ∈ [x1_min, max]`, `α_i ∈ [0, max]` for `i ≥ 2`.
pub fn random_alpha<R: Rng>(rng: &mut R, n: usize, x1_min: i64, max: i64) -> MultiIndex {
    MultiIndex::new(
        (0..n)
            .map(|k| {
                if k == 0 {
                    rng.gen_range(x1_min..=max)
                } else {
                    rng.gen_range(0..=max)
                }
            })
            .collect(),
    )
}

/// A small nonzero coefficient `c q^k` or a two-term Laurent polynomial.
pub fn random_scalar<R: Rng>(rng: &mut R) -> LaurentScalar {
    let mut s = LaurentScalar::zero();
    let terms = rng.gen_range(1..=2);
    while s.is_zero() {
        for _ in 0..terms {
            let c = rng.gen_range(-3..=3);
            s.add_term(rng.gen_range(-2..=2), &int(c));
        }
    }
    s
}

/// An element with up to `max_terms` monomials.
pub fn random_element<R: Rng>(
    rng: &mut R,
    n: usize,
    max_terms: usize,
    x1_min: i64,
    max: i64,
) -> Element {
    let mut f = Element::zero(n);
    let terms = rng.gen_range(1..=max_terms);
    for _ in 0..terms {
        let alpha = random_alpha(rng, n, x1_min, max);
        f.add_term(alpha, &random_scalar(rng));
    }
    f
}

/// Every exponent with `α₁ ∈ [x1_min, deg]`, `α_i ≥ 0` and `|α₁| + Σ_{i≥2} α_i ≤ deg`.
pub fn monomials_up_to(n: usize, deg: i64, x1_min: i64) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut current = vec![0i64; n];
    fn rec(k: usize, budget: i64, current: &mut Vec<i64>, out: &mut Vec<MultiIndex>) {
        if k == current.len() {
            out.push(MultiIndex::new(current.clone()));
            return;
        }
        for a in 0..=budget {
            current[k] = a;
            rec(k + 1, budget - a, current, out);
        }
        current[k] = 0;
    }
    for a1 in x1_min.max(-deg)..=deg {
        current[0] = a1;
        rec(1, deg - a1.abs(), &mut current, &mut out);
    }
    out.sort();
    out
}

/// Every exponent in the box `α₁ ∈ [x1_lo, x1_hi]`, `α_i ∈ [0, hi]` for `i ≥ 2`.
pub fn monomials_in_box(n: usize, x1_lo: i64, x1_hi: i64, hi: i64) -> Vec<MultiIndex> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        let range: Vec<i64> = if k == 0 {
            (x1_lo..=x1_hi).collect()
        } else {
            (0..=hi).collect()
        };
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                range.iter().map(move |a| {
                    let mut v = prefix.clone();
                    v.push(*a);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(MultiIndex::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerations_have_expected_sizes() {
        assert_eq!(monomials_in_box(3, -2, 2, 3).len(), 5 * 4 * 4);
        let small = monomials_up_to(2, 1, -1);
        let expect: Vec<MultiIndex> = [[-1, 0], [0, 0], [0, 1], [1, 0]]
            .iter()
            .map(|v| MultiIndex::new(v.to_vec()))
            .collect();
        assert_eq!(small, expect);
        assert!(monomials_up_to(3, 4, -2)
            .iter()
            .all(|a| a.get(1) >= -2 && a.in_exponent_domain()));
    }

    #[test]
    fn rng_is_deterministic() {
        let mut a = seeded_rng(9);
        let mut b = seeded_rng(9);
        assert_eq!(
            random_alpha(&mut a, 3, -2, 3),
            random_alpha(&mut b, 3, -2, 3)
        );
    }
}
