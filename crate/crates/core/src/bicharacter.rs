//! Integer exponent vectors, the pairing `∗` on `Zⁿ` and the bicharacter
//! `η(α, β) = q^{α∗β − β∗α}` together with randomized property checkers.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::Report;
use crate::sample::seeded_rng;
use crate::scalar::LaurentScalar;

/// Exponent vector `(α₁, …, α_n)`; ordered lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<i64>);

impl MultiIndex {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// Basis vector `ε_i`, 1-based.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Entry `α_i`, 1-based.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn set(&mut self, i: usize, value: i64) {
        self.0[i - 1] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn scaled(&self, c: i64) -> Self {
        Self(self.0.iter().map(|a| a * c).collect())
    }

    /// `ᾱ_i = (α₁, …, α_{i−1}, 0, …, 0)`.
    pub fn truncated_before(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        for entry in v.iter_mut().skip(i - 1) {
            *entry = 0;
        }
        Self(v)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// True when α₂, …, α_n are all nonnegative.
    pub fn in_exponent_domain(&self) -> bool {
        self.0.iter().skip(1).all(|&a| a >= 0)
    }

    pub fn ensure_dim(&self, n: usize) -> Result<()> {
        if self.dim() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: n,
                right: self.dim(),
            })
        }
    }
}

impl Add for &MultiIndex {
    type Output = MultiIndex;
    fn add(self, rhs: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.dim(), rhs.dim());
        MultiIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &MultiIndex {
    type Output = MultiIndex;
    fn sub(self, rhs: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.dim(), rhs.dim());
        MultiIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &MultiIndex {
    type Output = MultiIndex;
    fn neg(self) -> MultiIndex {
        self.scaled(-1)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    /// `[a1,a2,...,an]`, whitespace allowed.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |position: usize, message: &str| Error::Parse {
            position,
            message: message.into(),
        };
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad(0, "expected [a1,...,an]"))?;
        if inner.trim().is_empty() {
            return Err(bad(1, "empty multi-index"));
        }
        inner
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<i64>()
                    .map_err(|_| bad(1, "expected an integer entry"))
            })
            .collect::<Result<Vec<_>>>()
            .map(MultiIndex)
    }
}

pub(crate) fn star_raw(a: &[i64], b: &[i64]) -> i64 {
    let mut acc = 0;
    for (i, ai) in a.iter().enumerate() {
        if *ai == 0 {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(i) {
            acc += (j as i64 - i as i64) * ai * bj;
        }
    }
    acc
}

pub(crate) fn eta_exponent_raw(a: &[i64], b: &[i64]) -> i64 {
    star_raw(a, b) - star_raw(b, a)
}

fn same_dim(a: &MultiIndex, b: &MultiIndex) -> Result<()> {
    if a.dim() == b.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        })
    }
}

/// `α ∗ β = Σ_{j<i} (j − i) α_i β_j`.
pub fn star(a: &MultiIndex, b: &MultiIndex) -> Result<i64> {
    same_dim(a, b)?;
    Ok(star_raw(a.entries(), b.entries()))
}

/// Exponent `k` with `η(α, β) = q^k`.
pub fn eta_exponent(a: &MultiIndex, b: &MultiIndex) -> Result<i64> {
    same_dim(a, b)?;
    Ok(eta_exponent_raw(a.entries(), b.entries()))
}

pub fn eta(a: &MultiIndex, b: &MultiIndex) -> Result<LaurentScalar> {
    eta_exponent(a, b).map(LaurentScalar::q_pow)
}

fn random_index<R: Rng>(rng: &mut R, n: usize, bound: i64) -> MultiIndex {
    MultiIndex((0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
}

fn eta_unchecked(a: &MultiIndex, b: &MultiIndex) -> LaurentScalar {
    LaurentScalar::q_pow(eta_exponent_raw(a.entries(), b.entries()))
}

/// Checks the bicharacter laws (additivity in each slot, normalization,
/// skew-symmetry) on random triples, plus `η(ε_i, ε_j) = q^{j−i}` for all `i, j`.
pub fn check_bicharacter(n: usize, trials: usize, seed: u64, bound: i64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut left_additive = Report::new("eta(a+b,c) = eta(a,c) eta(b,c)");
    let mut right_additive = Report::new("eta(a,b+c) = eta(a,b) eta(a,c)");
    let mut normalized = Report::new("eta(a,0) = 1 = eta(0,a)");
    let mut skew = Report::new("eta(a,b) eta(b,a) = 1 = eta(a,a)");
    let mut basis = Report::new("eta(e_i,e_j) = q^(j-i)");
    let mut bilinear = Report::new("star is bi-additive");
    let zero = MultiIndex::zero(n);
    let one = LaurentScalar::one();
    for _ in 0..trials {
        let a = random_index(&mut rng, n, bound);
        let b = random_index(&mut rng, n, bound);
        let c = random_index(&mut rng, n, bound);
        let inputs = || format!("a={a} b={b} c={c}");
        left_additive.check_eq(
            &eta_unchecked(&(&a + &b), &c),
            &(eta_unchecked(&a, &c) * eta_unchecked(&b, &c)),
            inputs,
        );
        right_additive.check_eq(
            &eta_unchecked(&a, &(&b + &c)),
            &(eta_unchecked(&a, &b) * eta_unchecked(&a, &c)),
            inputs,
        );
        normalized.check_eq(&eta_unchecked(&a, &zero), &one, inputs);
        normalized.check_eq(&eta_unchecked(&zero, &a), &one, inputs);
        skew.check_eq(
            &(eta_unchecked(&a, &b) * eta_unchecked(&b, &a)),
            &one,
            inputs,
        );
        skew.check_eq(&eta_unchecked(&a, &a), &one, inputs);
        let (s_ab_c, s_a_c, s_b_c) = (
            star_raw((&a + &b).entries(), c.entries()),
            star_raw(a.entries(), c.entries()),
            star_raw(b.entries(), c.entries()),
        );
        bilinear.check_eq(&s_ab_c, &(s_a_c + s_b_c), inputs);
        let (s_a_bc, s_a_b) = (
            star_raw(a.entries(), (&b + &c).entries()),
            star_raw(a.entries(), b.entries()),
        );
        bilinear.check_eq(&s_a_bc, &(s_a_b + s_a_c), inputs);
    }
    for i in 1..=n {
        for j in 1..=n {
            let lhs = eta_unchecked(&MultiIndex::unit(n, i), &MultiIndex::unit(n, j));
            basis.check_eq(&lhs, &LaurentScalar::q_pow(j as i64 - i as i64), || {
                format!("i={i} j={j}")
            });
        }
    }
    vec![
        left_additive,
        right_additive,
        normalized,
        skew,
        basis,
        bilinear,
    ]
}

/// Checks `η(α,β) η(α+β,γ) = η(β,γ) η(α,β+γ)` on random triples.
pub fn check_cocycle(n: usize, trials: usize, seed: u64, bound: i64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut report = Report::new("eta(a,b) eta(a+b,c) = eta(b,c) eta(a,b+c)");
    for _ in 0..trials {
        let a = random_index(&mut rng, n, bound);
        let b = random_index(&mut rng, n, bound);
        let c = random_index(&mut rng, n, bound);
        let lhs = eta_unchecked(&a, &b) * eta_unchecked(&(&a + &b), &c);
        let rhs = eta_unchecked(&b, &c) * eta_unchecked(&a, &(&b + &c));
        report.check_eq(&lhs, &rhs, || format!("a={a} b={b} c={c}"));
    }
    vec![report]
}

/// Checks the closed forms of `ε_i ∗ β`, `β ∗ ε_i`, `(ε_i − ε_{i+1}) ∗ β`
/// and `β ∗ (ε_i − ε_{i+1})` against direct evaluation of `∗`.
pub fn eps_identities_check(n: usize, trials: usize, seed: u64, bound: i64) -> Vec<Report> {
    let mut rng = seeded_rng(seed);
    let mut left = Report::new("e_i * b = sum_{s<i} (s-i) b_s");
    let mut right = Report::new("b * e_i = sum_{s>i} (i-s) b_s");
    let mut left_diff = Report::new("(e_i - e_{i+1}) * b = sum_{s<=i} b_s");
    let mut right_diff = Report::new("b * (e_i - e_{i+1}) = -sum_{s>i} b_s");
    for _ in 0..trials {
        let b = random_index(&mut rng, n, bound);
        let bs = |s: usize| b.get(s);
        for i in 1..=n {
            let e_i = MultiIndex::unit(n, i);
            let expected: i64 = (1..i).map(|s| (s as i64 - i as i64) * bs(s)).sum();
            left.check_eq(&star_raw(e_i.entries(), b.entries()), &expected, || {
                format!("i={i} b={b}")
            });
            let expected: i64 = (i + 1..=n).map(|s| (i as i64 - s as i64) * bs(s)).sum();
            right.check_eq(&star_raw(b.entries(), e_i.entries()), &expected, || {
                format!("i={i} b={b}")
            });
            if i < n {
                let diff = &e_i - &MultiIndex::unit(n, i + 1);
                let expected: i64 = (1..=i).map(bs).sum();
                left_diff.check_eq(&star_raw(diff.entries(), b.entries()), &expected, || {
                    format!("i={i} b={b}")
                });
                let expected: i64 = -(i + 1..=n).map(bs).sum::<i64>();
                right_diff.check_eq(&star_raw(b.entries(), diff.entries()), &expected, || {
                    format!("i={i} b={b}")
                });
            }
        }
    }
    vec![left, right, left_diff, right_diff]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_ok;

    fn mi(v: &[i64]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&mi(&[0, 1]), &mi(&[1, 0])).unwrap(), -1);
        assert_eq!(star(&mi(&[1, 0]), &mi(&[0, 1])).unwrap(), 0);
        assert_eq!(star(&mi(&[3, -2, 5]), &mi(&[0, 0, 0])).unwrap(), 0);
        assert_eq!(
            star(&mi(&[1, 0]), &mi(&[1, 0, 0])),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn eta_examples() {
        for n in 1..=4 {
            for i in 1..=n {
                for j in 1..=n {
                    let e = eta(&MultiIndex::unit(n, i), &MultiIndex::unit(n, j)).unwrap();
                    assert_eq!(e, LaurentScalar::q_pow(j as i64 - i as i64));
                }
            }
        }
        let a = mi(&[2, -1, 3]);
        assert!(eta(&a, &a).unwrap().is_one());
        // star((1,1),(0,2)) = 0 and star((0,2),(1,1)) = -2
        assert_eq!(
            eta(&mi(&[1, 1]), &mi(&[0, 2])).unwrap(),
            LaurentScalar::q_pow(2)
        );
    }

    #[test]
    fn cocycle_on_basis_triple() {
        let (a, b, c) = (mi(&[1, 0, 0]), mi(&[0, 1, 0]), mi(&[0, 0, 1]));
        let lhs = eta(&a, &b).unwrap() * eta(&(&a + &b), &c).unwrap();
        let rhs = eta(&b, &c).unwrap() * eta(&a, &(&b + &c)).unwrap();
        // η(ε1,ε2)=q, η(ε1+ε2,ε3)=q^3: both sides are q^4
        assert_eq!(lhs, LaurentScalar::q_pow(4));
        assert_eq!(lhs, rhs);
        let z = MultiIndex::zero(3);
        assert!((eta(&z, &z).unwrap() * eta(&z, &z).unwrap()).is_one());
    }

    #[test]
    fn eps_identity_examples() {
        let b = mi(&[3, 1, 2]);
        assert_eq!(star(&MultiIndex::unit(3, 1), &b).unwrap(), 0);
        let diff = &MultiIndex::unit(3, 1) - &MultiIndex::unit(3, 2);
        assert_eq!(star(&diff, &b).unwrap(), 3);
        assert_eq!(star(&b, &MultiIndex::unit(3, 3)).unwrap(), 0);
    }

    #[test]
    fn randomized_checks_pass() {
        for n in 1..=4 {
            assert!(all_ok(&check_bicharacter(n, 100, 1, 5)));
            assert!(all_ok(&check_cocycle(n, 100, 2, 4)));
            assert!(all_ok(&eps_identities_check(n, 50, 3, 6)));
        }
    }

    #[test]
    fn multi_index_text_syntax() {
        let a: MultiIndex = "[ -1, 2,0]".parse().unwrap();
        assert_eq!(a, mi(&[-1, 2, 0]));
        assert_eq!(a.to_string(), "[-1,2,0]");
        assert!("1,2".parse::<MultiIndex>().is_err());
        assert!("[]".parse::<MultiIndex>().is_err());
    }
}
