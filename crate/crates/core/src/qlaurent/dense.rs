//! Dense univariate polynomial helpers over `ℤ`, coefficients in ascending
//! order with no trailing zeros. Used only for rational-function reduction.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Dense = Vec<BigInt>;

fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive_part(p: &[BigInt]) -> Dense {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if p.last().is_some_and(|l| l.is_negative()) { -BigInt::one() } else { BigInt::one() };
    let c = c * sign;
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut r: Dense = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let lr = r.last().cloned().unwrap();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (k, bc) in b.iter().enumerate() {
            r[k + shift] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Primitive GCD in `ℤ[v]` with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if x.is_empty() {
        return y;
    }
    if y.is_empty() {
        return x;
    }
    if x.len() < y.len() {
        core::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    x
}

/// Exact quotient `a / b`; panics if `b` does not divide `a` over `ℤ`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Dense {
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Dense = a.to_vec();
    let mut q = alloc::vec![BigInt::zero(); a.len().saturating_sub(db)];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let (qc, rem) = r.last().unwrap().div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        for (k, bc) in b.iter().enumerate() {
            r[k + shift] -= &qc * bc;
        }
        q[shift] = qc;
        trim(&mut r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    trim(&mut q);
    q
}
