//! Closed-form tightness test for `X_λ` in type `A5`.
//!
//! For `λ = (a₁, …, a₅)` the value `(X_λ, X_λ)` is a sum of `v^(-ξ) H_ξ`
//! over ten integer variables `z21, …, z43` in a polytope cut out by linear
//! inequalities, where every `H_ξ` is `1` at `v⁻¹ = 0` and `ξ ≥ 0` is an
//! integer quadratic form. The constant term `(X_λ, X_λ)₀` is therefore the
//! number of lattice points of the polytope on which `ξ` vanishes.
//!
//! The inequalities split into three independent blocks, `(z21, z22, z23)`,
//! `(z31, z32, z33, z34)` and `(z41, z42, z43)`, so the domain is the
//! product of three small lists. Each list is built with every bound
//! applied as soon as the variables it mentions are fixed.

use alloc::vec::Vec;
use core::fmt;

use crate::formoracle::{Verdict, VerdictKind, VerdictSource};
use crate::rootdata::Weight;

/// Zero sets larger than this are left out of [`A5Report`].
pub const ZERO_SET_REPORT_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum A5Error {
    NotA5Weight(Weight),
    ConditionMismatch { lambda: [i64; 5], zero_count: u64, conditions_tight: bool },
}

impl fmt::Display for A5Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotA5Weight(w) => write!(f, "({w}) is not a dominant weight of rank 5"),
            Self::ConditionMismatch { lambda, zero_count, conditions_tight } => write!(
                f,
                "lambda {lambda:?}: zero count {zero_count} disagrees with the tightness conditions ({conditions_tight})"
            ),
        }
    }
}

impl core::error::Error for A5Error {}

/// Checks rank and dominance and returns the coordinates.
pub fn a5_lambda(w: &Weight) -> Result<[i64; 5], A5Error> {
    match <[i64; 5]>::try_from(w.coords()) {
        Ok(a) if w.is_dominant() => Ok(a),
        _ => Err(A5Error::NotA5Weight(w.clone())),
    }
}

/// A point `(z21, z22, z23, z31, z32, z33, z34, z41, z42, z43)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZTuple {
    pub z21: i64,
    pub z22: i64,
    pub z23: i64,
    pub z31: i64,
    pub z32: i64,
    pub z33: i64,
    pub z34: i64,
    pub z41: i64,
    pub z42: i64,
    pub z43: i64,
}

impl ZTuple {
    /// From the ten values in the order `z21 z22 z23 z31 z32 z33 z34 z41 z42 z43`.
    pub fn from_array(z: [i64; 10]) -> Self {
        let [z21, z22, z23, z31, z32, z33, z34, z41, z42, z43] = z;
        Self { z21, z22, z23, z31, z32, z33, z34, z41, z42, z43 }
    }

    pub fn to_array(&self) -> [i64; 10] {
        [self.z21, self.z22, self.z23, self.z31, self.z32, self.z33, self.z34, self.z41, self.z42, self.z43]
    }

    fn from_blocks(b2: &[i64; 3], b3: &[i64; 4], b4: &[i64; 3]) -> Self {
        let [z21, z22, z23] = *b2;
        let [z31, z32, z33, z34] = *b3;
        let [z41, z42, z43] = *b4;
        Self { z21, z22, z23, z31, z32, z33, z34, z41, z42, z43 }
    }
}

/// The terms of `ξ = Σ x_i² + y₁² + y₂² − A²`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SosDecomp {
    pub x: [i64; 8],
    pub y: [i64; 2],
    pub a: i64,
}

impl SosDecomp {
    pub fn value(&self) -> i64 {
        self.x.iter().chain(&self.y).map(|t| t * t).sum::<i64>() - self.a * self.a
    }
}

/// Membership in the summation domain for `λ`.
pub fn in_domain(lambda: [i64; 5], z: &ZTuple) -> bool {
    let [a1, a2, a3, a4, a5] = lambda;
    let ZTuple { z21, z22, z23, z31, z32, z33, z34, z41, z42, z43 } = *z;
    let nonneg = z.to_array().iter().all(|&v| v >= 0);
    let block2 = z21 <= a4 + a5
        && z22 <= (a2 + a3 + a4 + a5 - z21).min(a3 + a4)
        && z23 <= (a2 + a3 + a4 + a5 - z21 - z22).min(a2 + a3)
        && a1 - a3 - a4 - a5 + z21 + z22 + z23 >= 0;
    let block3 = z31 <= a3 + a4 + a5
        && z32 <= (a3 + a4 + a5 - z31).min(a2 + a3 + a4)
        && a4 + a5 - z31 - z32 <= a1 + a2
        && z33 <= (a3 + a4 + a5 - z31).min(a2 + a3 + a4)
        && z34 <= (a2 + a3 + a4 - z33).min(a2 + a3 + a4 - z32)
        && a1 - a3 - 2 * a4 - a5 + z31 + z32 + z33 + z34 >= 0;
    let block4 = z41 <= a4 + a5
        && a5 - z41 <= a1 + a2 + a3
        && z42 <= (a2 + a3 + a4 + a5 - z41).min(a3 + a4)
        && a1 + a2 - a4 - a5 + z41 + z42 >= 0
        && z43 <= (a2 + a3 + a4 + a5 - z41 - z42).min(a2 + a3)
        && a1 - a3 - a4 - a5 + z41 + z42 + z43 >= 0;
    nonneg && block2 && block3 && block4
}

/// Per-variable upper bounds of the domain, in [`ZTuple`] order; every
/// in-domain tuple lies in `[0, b_k]` coordinatewise.
pub fn bounding_box(lambda: [i64; 5]) -> [i64; 10] {
    let [_, a2, a3, a4, a5] = lambda;
    let (b1, b2, b3) = (a4 + a5, a3 + a4, a2 + a3);
    let mid = a2 + a3 + a4;
    [b1, b2, b3, a3 + a4 + a5, mid, mid, mid, b1, b2, b3]
}

/// `ξ` as the sum of products read off the bracket expansion of
/// `X_λ Ω'(X'_λ)`.
pub fn xi_raw(lambda: [i64; 5], z: &ZTuple) -> i64 {
    let [_a1, a2, a3, a4, a5] = lambda;
    let ZTuple { z21, z22, z23, z31, z32, z33, z34, z41, z42, z43 } = *z;
    (a4 + a5 - z41) * (a5 - z41)
        + a4 * (z41 - a5)
        + (a3 + a4 + a5 - z31 - z32) * (a4 + a5 - z31 - z32)
        + z32 * (z41 - z31)
        + (a3 + a4 - z42) * (z31 + z32 - z41 - z42)
        + z42 * (z31 - z41)
        + a3 * (z41 + z42 - a4 - a5)
        + (a2 + a3 + a4 + a5 - z21 - z22 - z23) * (a3 + a4 + a5 - z21 - z22 - z23)
        + z23 * (z31 + z32 - z21 - z22)
        + z22 * (z31 - z21)
        + (a2 + a3 + a4 - z33 - z34) * (a4 + z21 + z22 + z23 - z31 - z32 - z33 - z34)
        + z34 * (z21 + z22 + z41 + z42 - 2 * z31 - z32 - z33)
        + z33 * (z21 - z31)
        + (a2 + a3 - z43) * (z31 + z32 + z33 + z34 - a4 - z41 - z42 - z43)
        + z43 * (z31 + z33 - z41 - z42)
        + a2 * (z41 + z42 + z43 - a3 - a4 - a5)
        + a2 * (z21 + z22 + z23 - a3 - a4 - a5)
        + a3 * (z21 + z22 - a4 - a5)
        + a4 * (z21 - a5)
        + (a2 + a3 - z23) * (z31 + z32 + z33 + z34 - (a4 + z21 + z22 + z23))
        + (a3 + a4 - z22) * (z31 + z33 - z21 - z22)
        + (a4 + a5 - z21) * (a5 - z21)
        + (a2 + a3 + a4 - z32 - z34) * (a4 + z41 + z42 + z43 - (z31 + z32 + z33 + z34))
        + (a3 + a4 + a5 - z31 - z33) * (a4 + a5 - z31 - z33)
        + (a2 + a3 + a4 + a5 - z41 - z42 - z43) * (a3 + a4 + a5 - z41 - z42 - z43)
}

/// The decomposition with `x₁ + ⋯ + x₈ = 2A` and `y₁ + y₂ = A`.
pub fn sos_decomp(lambda: [i64; 5], z: &ZTuple) -> SosDecomp {
    let [_a1, _a2, a3, a4, a5] = lambda;
    let ZTuple { z21, z22, z23, z31, z32, z33, z34, z41, z42, z43 } = *z;
    SosDecomp {
        x: [
            (a3 + a4 + a5) - (z21 + z22 + z23),
            (z41 + z42 + z43) - (a3 + a4 + a5),
            z32 + z34 - z43 - a4,
            z23 + a4 - z33 - z34,
            a5 - z41,
            z21 - a5,
            z22 - z33,
            z32 - z42,
        ],
        y: [z31 + z32 - a4 - a5, a4 + a5 - z31 - z33],
        a: z32 - z33,
    }
}

/// `ξ` through its sum-of-squares form.
pub fn xi_sos(lambda: [i64; 5], z: &ZTuple) -> (i64, SosDecomp) {
    let d = sos_decomp(lambda, z);
    (d.value(), d)
}

/// The domain for one `λ`, stored block by block.
#[derive(Clone, Debug)]
pub struct A5Domain {
    lambda: [i64; 5],
    block2: Vec<[i64; 3]>,
    block3: Vec<[i64; 4]>,
    block4: Vec<[i64; 3]>,
}

impl A5Domain {
    pub fn new(lambda: [i64; 5]) -> Self {
        let [a1, a2, a3, a4, a5] = lambda;

        let mut block4 = Vec::new();
        for z41 in 0..=a4 + a5 {
            if a5 - z41 > a1 + a2 + a3 {
                continue;
            }
            for z42 in 0..=(a2 + a3 + a4 + a5 - z41).min(a3 + a4) {
                if z41 + z42 < a4 + a5 - a1 - a2 {
                    continue;
                }
                for z43 in 0..=(a2 + a3 + a4 + a5 - z41 - z42).min(a2 + a3) {
                    if z41 + z42 + z43 >= a3 + a4 + a5 - a1 {
                        block4.push([z41, z42, z43]);
                    }
                }
            }
        }

        let mut block3 = Vec::new();
        for z31 in 0..=a3 + a4 + a5 {
            for z32 in 0..=(a3 + a4 + a5 - z31).min(a2 + a3 + a4) {
                if a4 + a5 - z31 - z32 > a1 + a2 {
                    continue;
                }
                for z33 in 0..=(a3 + a4 + a5 - z31).min(a2 + a3 + a4) {
                    for z34 in 0..=(a2 + a3 + a4 - z33).min(a2 + a3 + a4 - z32) {
                        if z31 + z32 + z33 + z34 >= a3 + 2 * a4 + a5 - a1 {
                            block3.push([z31, z32, z33, z34]);
                        }
                    }
                }
            }
        }

        let mut block2 = Vec::new();
        for z21 in 0..=a4 + a5 {
            for z22 in 0..=(a2 + a3 + a4 + a5 - z21).min(a3 + a4) {
                for z23 in 0..=(a2 + a3 + a4 + a5 - z21 - z22).min(a2 + a3) {
                    if z21 + z22 + z23 >= a3 + a4 + a5 - a1 {
                        block2.push([z21, z22, z23]);
                    }
                }
            }
        }

        Self { lambda, block2, block3, block4 }
    }

    pub fn lambda(&self) -> [i64; 5] {
        self.lambda
    }

    pub fn size(&self) -> u64 {
        (self.block2.len() as u64) * (self.block3.len() as u64) * (self.block4.len() as u64)
    }

    /// The distinct values of `z41` occurring in the domain, for splitting
    /// the enumeration across workers.
    pub fn z41_values(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.block4.iter().map(|b| b[0]).collect();
        v.dedup();
        v
    }

    /// Every point, in the order `z4` block, `z3` block, `z2` block.
    pub fn iter(&self) -> impl Iterator<Item = ZTuple> + '_ {
        self.block4.iter().flat_map(move |b4| {
            self.block3.iter().flat_map(move |b3| self.block2.iter().map(move |b2| ZTuple::from_blocks(b2, b3, b4)))
        })
    }

    /// Calls `visit(z, ξ(z))` on every point with the given `z41`, or on
    /// every point when `z41` is `None`.
    pub fn for_each_xi(&self, z41: Option<i64>, mut visit: impl FnMut(&ZTuple, i64)) {
        let [_a1, _a2, a3, a4, a5] = self.lambda;
        let s345 = a3 + a4 + a5;
        // z2-only part: x1² + x6², plus the pieces of x4, x7 that need z3
        let part2: Vec<i64> = self
            .block2
            .iter()
            .map(|&[z21, z22, z23]| {
                let x1 = s345 - (z21 + z22 + z23);
                let x6 = z21 - a5;
                x1 * x1 + x6 * x6
            })
            .collect();
        for b4 in self.block4.iter().filter(|b| z41.is_none_or(|v| b[0] == v)) {
            let [z41v, z42, z43] = *b4;
            let x2 = (z41v + z42 + z43) - s345;
            let x5 = a5 - z41v;
            let part4 = x2 * x2 + x5 * x5;
            for b3 in &self.block3 {
                let [z31, z32, z33, z34] = *b3;
                let x3 = z32 + z34 - z43 - a4;
                let x8 = z32 - z42;
                let y1 = z31 + z32 - a4 - a5;
                let y2 = a4 + a5 - z31 - z33;
                let a = z32 - z33;
                let base = part4 + x3 * x3 + x8 * x8 + y1 * y1 + y2 * y2 - a * a;
                for (b2, p2) in self.block2.iter().zip(&part2) {
                    let [_, z22, z23] = *b2;
                    let x4 = z23 + a4 - z33 - z34;
                    let x7 = z22 - z33;
                    let xi = base + p2 + x4 * x4 + x7 * x7;
                    visit(&ZTuple::from_blocks(b2, b3, b4), xi);
                }
            }
        }
    }

    /// Counts over the points with the given `z41` (all points for `None`).
    pub fn stats(&self, z41: Option<i64>) -> ZeroStats {
        let mut s = ZeroStats::default();
        self.for_each_xi(z41, |_, xi| {
            s.domain_size += 1;
            s.zero_count += u64::from(xi == 0);
            s.min_xi = s.min_xi.min(xi);
        });
        s
    }

    /// The points where `ξ = 0`, in enumeration order.
    pub fn zero_set(&self) -> Vec<ZTuple> {
        let mut out = Vec::new();
        self.for_each_xi(None, |z, xi| {
            if xi == 0 {
                out.push(*z);
            }
        });
        out
    }
}

/// Aggregate of an enumeration pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroStats {
    pub domain_size: u64,
    pub zero_count: u64,
    /// `i64::MAX` for an empty range.
    pub min_xi: i64,
}

impl Default for ZeroStats {
    fn default() -> Self {
        Self { domain_size: 0, zero_count: 0, min_xi: i64::MAX }
    }
}

impl ZeroStats {
    pub fn merge(self, other: Self) -> Self {
        Self {
            domain_size: self.domain_size + other.domain_size,
            zero_count: self.zero_count + other.zero_count,
            min_xi: self.min_xi.min(other.min_xi),
        }
    }
}

/// `(X_λ, X_λ)₀`, the number of domain points with `ξ = 0`.
pub fn count_xi_zero(lambda: [i64; 5]) -> u64 {
    A5Domain::new(lambda).stats(None).zero_count
}

/// Indices (1 to 8) of the tightness conditions satisfied by `λ`.
pub fn tightness_conditions(lambda: [i64; 5]) -> Vec<u8> {
    let [a1, a2, a3, a4, a5] = lambda;
    let conds = [
        a1 == 0 && a2 == 0,
        a1 == 0 && a4 == 0,
        a2 == 0 && a3 == 0,
        a2 == 0 && a5 == 0,
        a3 == 0 && a4 == 0,
        a4 == 0 && a5 == 0,
        a2 == 0 && a3 == 1,
        a4 == 0 && a3 == 1,
    ];
    (1u8..).zip(conds).filter(|(_, c)| *c).map(|(k, _)| k).collect()
}

/// `X_λ` is tight iff one of the eight conditions holds.
pub fn conditions_tight(lambda: [i64; 5]) -> bool {
    !tightness_conditions(lambda).is_empty()
}

/// Solutions of `ξ = 0` from the two free variables `z32`, `z33`.
///
/// Equality in the bound `ξ ≥ 0` forces `x_i = A/4` and `y_j = A/2`, which
/// determines the other eight coordinates once `A = z32 − z33` is a multiple
/// of four.
pub fn xi_zero_family(lambda: [i64; 5]) -> Vec<ZTuple> {
    let [_a1, a2, a3, a4, a5] = lambda;
    let hi = (a3 + a4 + a5).min(a2 + a3 + a4);
    let mut out = Vec::new();
    for z32 in 0..=hi {
        for z33 in 0..=hi {
            let a = z32 - z33;
            if a % 4 != 0 {
                continue;
            }
            let q = a / 4;
            let z = ZTuple {
                z21: q + a5,
                z22: q + z33,
                z23: a3 + a4 - 3 * q - z33,
                z31: 2 * q + a4 + a5 - z32,
                z32,
                z33,
                z34: a3 + 2 * a4 - a - 2 * z33,
                z41: a5 - q,
                z42: z32 - q,
                z43: a3 + a4 - 5 * q + z32 - 2 * z33,
            };
            if in_domain(lambda, &z) {
                out.push(z);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A5Report {
    pub lambda: Weight,
    pub domain_size: u64,
    pub zero_count: u64,
    pub verdict: Verdict,
    pub conditions_tight: bool,
    /// Present when the zero set has at most [`ZERO_SET_REPORT_CAP`] points.
    pub zero_set: Option<Vec<ZTuple>>,
}

/// Builds the report from enumeration statistics, checking the zero count
/// against the eight tightness conditions.
pub fn report_from_stats(
    lambda: [i64; 5],
    stats: ZeroStats,
    zero_set: Option<Vec<ZTuple>>,
) -> Result<A5Report, A5Error> {
    let conditions_tight = conditions_tight(lambda);
    if (stats.zero_count == 1) != conditions_tight || stats.zero_count == 0 {
        return Err(A5Error::ConditionMismatch { lambda, zero_count: stats.zero_count, conditions_tight });
    }
    let zero_set = zero_set.filter(|z| z.len() <= ZERO_SET_REPORT_CAP);
    let verdict = Verdict::from_count(stats.zero_count, VerdictSource::ClosedForm);
    debug_assert!(verdict.kind != VerdictKind::NotSemitight);
    Ok(A5Report {
        lambda: Weight::new(lambda.to_vec()),
        domain_size: stats.domain_size,
        zero_count: stats.zero_count,
        verdict,
        conditions_tight,
        zero_set,
    })
}

pub fn classify_a5(lambda: &Weight) -> Result<A5Report, A5Error> {
    let a = a5_lambda(lambda)?;
    let domain = A5Domain::new(a);
    let stats = domain.stats(None);
    let zero_set = (stats.zero_count as usize <= ZERO_SET_REPORT_CAP).then(|| domain.zero_set());
    report_from_stats(a, stats, zero_set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const ONES: [i64; 5] = [1, 1, 1, 1, 1];

    fn family_point() -> ZTuple {
        ZTuple::from_array([1, 0, 2, 2, 0, 0, 3, 1, 0, 2])
    }

    #[test]
    fn domain_membership() {
        assert!(in_domain([0; 5], &ZTuple::default()));
        assert!(in_domain(ONES, &family_point()));
        let mut z = ZTuple::default();
        z.z21 = 1;
        assert!(!in_domain([0; 5], &z));
        z.z21 = -1;
        assert!(!in_domain([3; 5], &z));
    }

    #[test]
    fn corrected_constraints_are_used() {
        // a5 - z41 ≤ a1 + a2 + a3
        let lam = [0, 0, 0, 0, 1];
        let inside = ZTuple::from_array([1, 0, 0, 1, 0, 0, 0, 1, 0, 0]);
        assert!(in_domain(lam, &inside));
        assert!(!in_domain(lam, &ZTuple { z41: 0, ..inside }));
        // z43 ≤ min(a2+a3+a4+a5-z41-z42, a2+a3) in the z4 block
        let lam = [3, 0, 0, 1, 0];
        let inside = ZTuple::from_array([1, 0, 0, 0, 0, 0, 0, 1, 0, 0]);
        assert!(in_domain(lam, &inside));
        assert!(!in_domain(lam, &ZTuple { z43: 1, ..inside }));
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi_raw([0; 5], &ZTuple::default()), 0);
        assert_eq!(xi_raw(ONES, &family_point()), 0);
        let (xi, d) = xi_sos(ONES, &family_point());
        assert_eq!(xi, 0);
        assert_eq!(d, SosDecomp::default());
        assert_eq!(xi_sos([0; 5], &ZTuple::default()), (0, SosDecomp::default()));
    }

    #[test]
    fn xi_at_origin_for_ones() {
        // x = (3,-3,-1,1,1,-1,0,0), y = (-2,2), A = 0
        let (xi, _) = xi_sos(ONES, &ZTuple::default());
        assert_eq!(xi, 30);
        assert_eq!(xi_raw(ONES, &ZTuple::default()), 30);
    }

    #[test]
    fn domain_lists_match_membership() {
        for lam in [[1, 0, 1, 0, 1], [0, 1, 0, 1, 0], [1, 1, 0, 0, 1], [0, 0, 1, 1, 0]] {
            let dom = A5Domain::new(lam);
            let listed: Vec<ZTuple> = dom.iter().collect();
            let bound = lam.iter().sum::<i64>();
            let mut brute = 0u64;
            let mut z = [0i64; 10];
            loop {
                let t = ZTuple::from_array(z);
                if in_domain(lam, &t) {
                    brute += 1;
                    assert!(listed.contains(&t));
                }
                let mut k = 0;
                while k < 10 {
                    z[k] += 1;
                    if z[k] <= bound {
                        break;
                    }
                    z[k] = 0;
                    k += 1;
                }
                if k == 10 {
                    break;
                }
            }
            assert_eq!(brute, dom.size(), "{lam:?}");
            assert!(listed.iter().all(|t| in_domain(lam, t)));
        }
    }

    #[test]
    fn domain_lies_in_bounding_box() {
        for lam in [[1, 1, 1, 1, 1], [2, 0, 1, 2, 1], [0, 3, 0, 0, 2], [3, 0, 0, 1, 0]] {
            let b = bounding_box(lam);
            for z in A5Domain::new(lam).iter() {
                assert!(z.to_array().iter().zip(b).all(|(&v, hi)| (0..=hi).contains(&v)), "{lam:?} {z:?}");
            }
        }
    }

    #[test]
    fn streamed_xi_matches_direct_evaluation() {
        let dom = A5Domain::new([1, 2, 0, 1, 1]);
        let mut seen = 0;
        dom.for_each_xi(None, |z, xi| {
            assert_eq!(xi, xi_raw(dom.lambda(), z));
            seen += 1;
        });
        assert_eq!(seen, dom.size());
    }

    #[test]
    fn zero_counts() {
        assert_eq!(count_xi_zero(ONES), 2);
        assert_eq!(count_xi_zero([0; 5]), 1);
        assert_eq!(count_xi_zero([1, 0, 0, 0, 0]), 1);
    }

    #[test]
    fn partitions_sum_to_the_whole() {
        let dom = A5Domain::new([2, 1, 1, 2, 1]);
        let total = dom.stats(None);
        let parts =
            dom.z41_values().into_iter().map(|v| dom.stats(Some(v))).fold(ZeroStats::default(), ZeroStats::merge);
        assert_eq!(parts, total);
    }

    #[test]
    fn condition_examples() {
        assert!(!conditions_tight(ONES));
        assert_eq!(tightness_conditions([3, 0, 1, 2, 5]), vec![7]);
        assert_eq!(tightness_conditions([0, 0, 7, 0, 0]), vec![1, 2, 4, 6]);
        assert!(conditions_tight([0, 0, 1, 0, 0]));
    }

    #[test]
    fn family_examples() {
        let fam = xi_zero_family(ONES);
        assert_eq!(fam.len(), 2);
        assert!(fam.contains(&family_point()));
        assert!(fam.iter().any(|z| z.z32 == 1 && z.z33 == 1));
        assert_eq!(xi_zero_family([0; 5]), vec![ZTuple::default()]);
    }

    #[test]
    fn classification() {
        let r = classify_a5(&Weight::new(ONES.to_vec())).unwrap();
        assert_eq!(r.verdict.kind, VerdictKind::Semitight(2));
        assert_eq!(r.zero_set.as_ref().map(Vec::len), Some(2));
        assert!(!r.conditions_tight);
        let r = classify_a5(&Weight::new(vec![0, 0, 1, 0, 0])).unwrap();
        assert_eq!(r.verdict.kind, VerdictKind::Tight);
        let r = classify_a5(&Weight::new(vec![0, 1, 1, 1, 0])).unwrap();
        assert!(matches!(r.verdict.kind, VerdictKind::Semitight(k) if k >= 2));
    }

    #[test]
    fn classification_rejects_bad_weights() {
        assert!(matches!(classify_a5(&Weight::new(vec![1, 1])), Err(A5Error::NotA5Weight(_))));
        assert!(matches!(classify_a5(&Weight::new(vec![1, -1, 0, 0, 0])), Err(A5Error::NotA5Weight(_))));
    }

    #[test]
    fn mismatch_is_reported() {
        let stats = ZeroStats { domain_size: 10, zero_count: 2, min_xi: 0 };
        assert!(matches!(
            report_from_stats([1, 0, 0, 0, 0], stats, None),
            Err(A5Error::ConditionMismatch { zero_count: 2, conditions_tight: true, .. })
        ));
    }
}
