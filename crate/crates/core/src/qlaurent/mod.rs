//! Exact arithmetic in the indeterminate `v`.
//!
//! [`LaurentPoly`] is `ℤ[v, v⁻¹]` with big-integer coefficients, [`RatFunc`]
//! its fraction field. The free functions build the quantum integers
//! `[n] = (vⁿ - v⁻ⁿ)/(v - v⁻¹)`, their factorials, and the brace numbers
//! `{a} = (1 - v⁻²ᵃ)/(1 - v⁻²)` with the associated factorials and binomials.

mod dense;
mod laurent;
mod ratfunc;

use core::fmt;

pub use laurent::LaurentPoly;
pub use ratfunc::{RatFunc, Regularity};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QError {
    DivisionByZero,
}

impl fmt::Display for QError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QError::DivisionByZero => f.write_str("division by the zero rational function"),
        }
    }
}

impl core::error::Error for QError {}

/// `[n] = v^(n-1) + v^(n-3) + ... + v^(1-n)`; `[0] = 0`.
pub fn qint(n: u32) -> LaurentPoly {
    let n = i64::from(n);
    LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, 1)))
}

/// `[n]! = [1][2]...[n]`; `[0]! = 1`.
pub fn qfact(n: u32) -> LaurentPoly {
    (1..=n).map(qint).product()
}

/// `{a} = (1 - v^(-2a)) / (1 - v^(-2))` for any integer `a`; `{0} = 0`.
pub fn brace(a: i64) -> RatFunc {
    if a >= 0 {
        // 1 + v^-2 + ... + v^(-2(a-1))
        LaurentPoly::from_terms((0..a).map(|k| (-2 * k, 1))).into()
    } else {
        // {-b} = -v^(2b) {b}
        let b = -a;
        let p = LaurentPoly::from_terms((0..b).map(|k| (2 * b - 2 * k, -1)));
        p.into()
    }
}

/// `{b}! = {b}{b-1}...{1}` for `b ≥ 0`, and `{-b}! = (-1)^b {b}!`.
pub fn brace_fact(b: i64) -> RatFunc {
    let m = b.unsigned_abs() as i64;
    let f: RatFunc = (1..=m).map(brace).product();
    if b < 0 && m % 2 == 1 {
        -f
    } else {
        f
    }
}

/// `∏_{h=1}^{b} (1 - v^(-2(a-h+1))) / (1 - v^(-2h))`, with the empty product
/// `1` for `b = 0`.
pub fn brace_binom(a: i64, b: u32) -> RatFunc {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for h in 1..=i64::from(b) {
        num = &num * &LaurentPoly::from_terms([(0, 1), (-2 * (a - h + 1), -1)]);
        den = &den * &LaurentPoly::from_terms([(0, 1), (-2 * h, -1)]);
    }
    RatFunc::new(num, den).expect("1 - v^(-2h) is nonzero for h ≥ 1")
}
