//! The one-parameter extension `F(t)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::Field;
use super::poly::Poly;

/// A reduced fraction `num / den` of polynomials in the formal symbol `t`,
/// with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq)]
pub struct RationalFunction<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn constant(c: F) -> Self {
        RationalFunction { num: Poly::constant(c), den: Poly::one() }
    }

    /// The transcendental parameter `t`.
    pub fn parameter() -> Self {
        RationalFunction { num: Poly::monomial(F::one(), 1), den: Poly::one() }
    }

    pub fn from_polys(num: Poly<F>, den: Poly<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead_inv = den.leading()?.inv()?;
        Some(RationalFunction { num: num.scale(&lead_inv), den: den.scale(&lead_inv) })
    }

    pub fn numerator(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<F> {
        &self.den
    }

    /// `Some(c)` when the function is the constant `c`.
    pub fn as_constant(&self) -> Option<F> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }
}

impl<F: Field> Zero for RationalFunction<F> {
    fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RationalFunction<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> Field for RationalFunction<F> {
    fn add_ref(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return RationalFunction { num: self.num.add(&other.num), den: Poly::one() };
        }
        if self.den == other.den {
            return Self::from_polys(self.num.add(&other.num), self.den.clone()).expect("nonzero den");
        }
        Self::from_polys(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
            .expect("nonzero den")
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return RationalFunction { num: self.num.mul(&other.num), den: Poly::one() };
        }
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = other.as_constant() {
            return RationalFunction { num: self.num.scale(&c), den: self.den.clone() };
        }
        if let Some(c) = self.as_constant() {
            return RationalFunction { num: other.num.scale(&c), den: other.den.clone() };
        }
        Self::from_polys(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero den")
    }

    fn neg_ref(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        if let Some(c) = self.as_constant() {
            return Some(Self::constant(c.inv()?));
        }
        Self::from_polys(self.den.clone(), self.num.clone())
    }

    fn from_i64(v: i64) -> Self {
        Self::constant(F::from_i64(v))
    }

    fn from_rational(r: &BigRational) -> Self {
        Self::constant(F::from_rational(r))
    }
}

impl<F: Field + fmt::Display> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_constant() {
            return write!(f, "{c}");
        }
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<F: Field> fmt::Debug for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.num, self.den)
    }
}

impl<F: Field> Add for RationalFunction<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}
impl<F: Field> Sub for RationalFunction<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
}
impl<F: Field> Mul for RationalFunction<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}
impl<F: Field> Div for RationalFunction<F> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self.div_ref(&o).expect("division by zero")
    }
}
impl<F: Field> Neg for RationalFunction<F> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}
impl<'a, F: Field> Add<&'a RationalFunction<F>> for &'a RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn add(self, o: Self) -> RationalFunction<F> {
        self.add_ref(o)
    }
}
impl<'a, F: Field> Sub<&'a RationalFunction<F>> for &'a RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn sub(self, o: Self) -> RationalFunction<F> {
        self.sub_ref(o)
    }
}
impl<'a, F: Field> Mul<&'a RationalFunction<F>> for &'a RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn mul(self, o: Self) -> RationalFunction<F> {
        self.mul_ref(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::field::rat_int;

    type Q = BigRational;

    #[test]
    fn reduces_common_factors() {
        let t = RationalFunction::<Q>::parameter();
        let one = RationalFunction::<Q>::one();
        let a = (&t * &t) - one.clone(); // t^2 - 1
        let b = &t - &one;
        let q = a.div_ref(&b).unwrap();
        assert_eq!(q, &t + &one);
        assert!(q.denominator().is_one());
    }

    #[test]
    fn constants_collapse() {
        let t = RationalFunction::<Q>::parameter();
        let x = t.div_ref(&t).unwrap();
        assert_eq!(x.as_constant(), Some(rat_int(1)));
        assert!(!t.is_constant());
    }
}
