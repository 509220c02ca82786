//! Exact symbolic kernel for the quantum n-space `A_q(n)`.
//!
//! - [`scalar`]: rationals and Laurent polynomials in `q`
//! - [`bicharacter`]: the pairing `∗` on `Zⁿ` and the bicharacter `η`
//! - [`qspace`]: PBW-ordered elements of `A_q(n)` localized at `x₁`
//! - [`operators`]: twisted derivations `∂_i`, automorphisms `σ_β` and the word algebra `D_q(2n)`
//! - [`hopf`]: coproducts, counits and antipodes of `A_q(n)` and `D_q(2n)`
//! - [`calculus`]: the bicovariant differential calculus and its exterior algebra
//! - [`invariants`]: Maurer–Cartan forms and the vector fields `T_i`
//! - [`cli`]: expression parser, suites and command dispatch behind the `qspace` binary

pub mod bicharacter;
pub mod calculus;
pub mod cli;
pub mod error;
pub mod hopf;
pub mod invariants;
pub mod operators;
pub mod qspace;
pub mod report;
pub mod sample;
pub mod scalar;

pub use bicharacter::MultiIndex;
pub use error::{Error, Result};
pub use qspace::Element;
pub use report::Report;
pub use scalar::{LaurentScalar, Rational};
