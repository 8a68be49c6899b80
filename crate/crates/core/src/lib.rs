//! Exact arithmetic and combinatorics for deciding whether the Verma
//! monomial `X_λ` of `U⁺` is tight, semitight, or neither.
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! * [`qlaurent`]: Laurent polynomials and rational functions in `v` over
//!   big integers, quantum integers, braces, and evaluation at `v⁻¹ = 0`.
//! * [`rootdata`]: Cartan data, weights, Weyl group action, reduced words
//!   of the longest element, and construction of `X_λ`.
//! * [`formoracle`]: Kashiwara's bilinear form on divided-power monomials
//!   and the classifier built on it.
//! * [`a5closed`]: the type `A5` constraint domain, the quadratic form `ξ`
//!   and its zero count.
#![no_std]

extern crate alloc;

pub mod a5closed;
pub mod formoracle;
pub mod qlaurent;
pub mod rootdata;

pub use a5closed::{A5Report, SosDecomp, ZTuple};
pub use formoracle::{Combination, Verdict, VerdictKind, VerdictSource, Word};
pub use qlaurent::{LaurentPoly, RatFunc, Regularity};
pub use rootdata::{CartanKind, CartanSpec, Monomial, ReducedWord, RootVec, Weight};
