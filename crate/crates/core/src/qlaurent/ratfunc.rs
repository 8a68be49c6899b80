use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense;
use super::LaurentPoly;
use super::QError;

/// An element of `ℚ(v)` kept in canonical form.
///
/// The canonical form has a denominator whose lowest exponent is `0` and
/// whose leading coefficient is positive, numerator and denominator coprime
/// over `ℚ[v, v⁻¹]`, and joint integer content `1`. Equality is therefore
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Behaviour of a rational function at `v⁻¹ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regularity {
    /// Value at `v⁻¹ = 0`, present iff the function is regular there.
    pub value: Option<BigRational>,
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        self.value.is_some()
    }
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The function as a Laurent polynomial, if it is one.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num_low, n0) = num.to_dense();
        let (den_low, d0) = den.to_dense();
        let g = dense::gcd(&n0, &d0);
        let (mut n1, mut d1) =
            if g.len() > 1 { (dense::div_exact(&n0, &g), dense::div_exact(&d0, &g)) } else { (n0, d0) };
        let c = dense::content(&n1).gcd(&dense::content(&d1));
        let c = if d1.last().is_some_and(|l| l.is_negative()) { -c } else { c };
        if !c.is_one() {
            for x in n1.iter_mut().chain(d1.iter_mut()) {
                *x = &*x / &c;
            }
        }
        Self { num: LaurentPoly::from_dense(num_low - den_low, n1), den: LaurentPoly::from_dense(0, d1) }
    }

    pub fn recip(&self) -> Result<Self, QError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, QError> {
        if rhs.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Value at `v⁻¹ = 0`, i.e. the limit `v → ∞`.
    pub fn eval_at_vinv0(&self) -> Regularity {
        let (Some(top_num), Some(top_den)) = (self.num.degree(), self.den.degree()) else {
            return Regularity { value: Some(BigRational::zero()) };
        };
        let value = match top_num.cmp(&top_den) {
            Ordering::Greater => None,
            Ordering::Less => Some(BigRational::zero()),
            Ordering::Equal => Some(BigRational::new(
                self.num.leading_coeff().cloned().unwrap(),
                self.den.leading_coeff().cloned().unwrap(),
            )),
        };
        Regularity { value }
    }

    /// Coefficient-wise numerator and denominator renderings.
    pub fn render_parts(&self) -> (alloc::string::String, alloc::string::String) {
        use alloc::string::ToString;
        (self.num.to_string(), self.den.to_string())
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c).into()
    }
}

impl From<BigInt> for RatFunc {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c).into()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl core::ops::Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl core::ops::Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl core::ops::Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl core::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl core::ops::Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl core::ops::$tr for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl core::iter::Product for RatFunc {
    fn product<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::one(), |acc, x| acc * x)
    }
}
