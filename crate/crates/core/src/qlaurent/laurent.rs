use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of `ℤ[v, v⁻¹]`.
///
/// Coefficients are stored by exponent and zero coefficients are never
/// kept, so structural equality is ring equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// `c · v^e`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Self { coeffs }
    }

    /// `v^e`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense coefficients starting at `v^low`.
    pub(crate) fn from_dense(low: i64, dense: Vec<BigInt>) -> Self {
        let coeffs =
            dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (low + k as i64, c)).collect();
        Self { coeffs }
    }

    /// Dense coefficients from the lowest to the highest exponent, or an
    /// empty vector for zero.
    pub(crate) fn to_dense(&self) -> (i64, Vec<BigInt>) {
        match (self.low_degree(), self.degree()) {
            (Some(lo), Some(hi)) => {
                let mut out = alloc::vec![BigInt::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.coeffs {
                    out[(e - lo) as usize] = c.clone();
                }
                (lo, out)
            }
            _ => (0, Vec::new()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Highest exponent, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent, `None` for zero.
    pub fn low_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitutes `v ↦ v⁻¹`.
    pub fn invert_variable(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub(crate) fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// `self += coeff · v^shift · other`, without intermediate allocation.
    pub fn add_shifted(&mut self, other: &Self, shift: i64) {
        for (e, c) in &other.coeffs {
            self.add_term(e + shift, c.clone());
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending powers of `v` with explicit signs, e.g. `v^3 + 2*v - 1 + v^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("v")?,
                1 => write!(f, "{mag}*v")?,
                _ if unit => write!(f, "v^{e}")?,
                _ => write!(f, "{mag}*v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_shifted(rhs, 0);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl core::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl core::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn v() -> LaurentPoly {
        LaurentPoly::v_pow(1)
    }

    fn vinv() -> LaurentPoly {
        LaurentPoly::v_pow(-1)
    }

    #[test]
    fn add_cancels_terms() {
        assert_eq!(&(&v() + &vinv()) + &(-vinv()), v());
    }

    #[test]
    fn difference_of_squares() {
        let lhs = (&v() - &vinv()) * (&v() + &vinv());
        assert_eq!(lhs, LaurentPoly::from_terms([(2, 1), (-2, -1)]));
    }

    #[test]
    fn zero_absorbs() {
        let p = LaurentPoly::from_terms([(5, 3), (-4, -7), (0, 1)]);
        assert!((&p * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn no_zero_coefficients_are_stored() {
        let p = LaurentPoly::from_terms([(1, 2), (1, -2), (0, 0)]);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(p.degree(), None);
    }

    #[test]
    fn rendering_is_descending_with_signs() {
        let p = LaurentPoly::from_terms([(3, 1), (1, 2), (0, -1), (-2, 1), (-3, -4)]);
        assert_eq!(p.to_string(), "v^3 + 2*v - 1 + v^-2 - 4*v^-3");
        assert_eq!(LaurentPoly::from_terms([(1, -1)]).to_string(), "-v");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn dense_round_trip() {
        let p = LaurentPoly::from_terms([(-3, 2), (1, -5)]);
        let (lo, d) = p.to_dense();
        assert_eq!(lo, -3);
        assert_eq!(d.len(), 5);
        assert_eq!(LaurentPoly::from_dense(lo, d), p);
    }
}
