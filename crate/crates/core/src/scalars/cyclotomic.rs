//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! An element of conductor `N` is stored in the power basis
//! `1, ζ, …, ζ^{φ(N)-1}` reduced modulo Φ_N, as an integer numerator vector
//! over one positive common denominator. Binary operations lift both
//! operands to the lcm of their conductors. Conductors `N ≡ 2 (mod 4)` are
//! never produced: ℚ(ζ_{2h}) = ℚ(ζ_h) for odd `h`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use super::field::{format_rational, Field};
use super::poly::Poly;
use crate::arith;

static PHI_CACHE: Lazy<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Φ_N with integer coefficients, low degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    phi_poly(n).as_ref().clone()
}

fn phi_poly(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial needs N >= 1");
    if let Some(p) = PHI_CACHE.read().unwrap().get(&n) {
        return p.clone();
    }
    // Φ_N = ∏_{d | N} (t^d - 1)^{μ(N/d)}: multiply first, then divide.
    let divs = arith::divisors(n);
    let mut poly: Vec<i128> = vec![1];
    for &d in &divs {
        if arith::mobius(n / d) == 1 {
            let mut next = vec![0i128; poly.len() + d as usize];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d as usize] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divs {
        if arith::mobius(n / d) == -1 {
            // exact division by t^d - 1
            let d = d as usize;
            let deg = poly.len() - 1;
            let mut q = vec![0i128; deg - d + 1];
            let mut rem = poly.clone();
            for k in (d..=deg).rev() {
                let c = rem[k];
                q[k - d] = c;
                rem[k] -= c;
                rem[k - d] += c;
            }
            debug_assert!(rem.iter().all(|&c| c == 0));
            poly = q;
        }
    }
    let out: Vec<i64> = poly.into_iter().map(|c| i64::try_from(c).expect("Φ_N coefficient overflow")).collect();
    let out = Arc::new(out);
    PHI_CACHE.write().unwrap().insert(n, out.clone());
    out
}

/// Result of a root-of-unity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootOrder {
    Finite(u64),
    NotRootOfUnity,
}

#[derive(Clone)]
pub struct Cyclotomic {
    n: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

fn canonical_conductor(n: u64) -> u64 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

/// Reduces `v` (power-basis coefficients of any length) modulo Φ_n in place.
fn reduce_mod_phi(v: &mut Vec<BigInt>, n: u64) {
    let phi = phi_poly(n);
    let deg = phi.len() - 1;
    if v.len() > deg {
        for k in (deg..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[k]);
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                if pj != 0 {
                    v[k - deg + j] -= &c * pj;
                }
            }
        }
        v.truncate(deg);
    }
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl Cyclotomic {
    fn build(n: u64, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        reduce_mod_phi(&mut num, n);
        if num.is_empty() {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den /= &g;
        }
        let n = if num.len() == 1 { 1 } else { n };
        Cyclotomic { n, num, den }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::build(1, vec![r.numer().clone()], r.denom().clone())
    }

    pub fn from_integer(v: i64) -> Self {
        Self::build(1, vec![BigInt::from(v)], BigInt::one())
    }

    /// ζ_N^k for any integer `k`.
    pub fn zeta_pow(n: u64, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let k = k.rem_euclid(n as i64) as u64;
        if n % 4 == 2 {
            // ζ_{2h} = -ζ_h^{(h+1)/2} for odd h.
            let h = n / 2;
            let e = (k * h.div_ceil(2)) % h.max(1);
            let base = Self::zeta_pow(h, e as i64);
            return if k % 2 == 1 { -base } else { base };
        }
        let mut v = vec![BigInt::zero(); k as usize + 1];
        v[k as usize] = BigInt::one();
        Self::build(n, v, BigInt::one())
    }

    pub fn zeta(n: u64) -> Self {
        Self::zeta_pow(n, 1)
    }

    /// Current conductor (1 for rationals).
    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn is_rational(&self) -> bool {
        self.num.len() <= 1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.num.len() {
            0 => Some(BigRational::zero()),
            1 => Some(BigRational::new(self.num[0].clone(), self.den.clone())),
            _ => None,
        }
    }

    /// Power-basis coefficients (length φ(conductor), zero padded).
    pub fn coefficients(&self) -> Vec<BigRational> {
        let phi = arith::euler_phi(self.n) as usize;
        (0..phi).map(|i| BigRational::new(self.num.get(i).cloned().unwrap_or_default(), self.den.clone())).collect()
    }

    /// Power-basis coefficients in ℚ(ζ_m), `conductor | m`.
    fn coefficients_in(&self, m: u64) -> Vec<BigRational> {
        let e = self.embed_any(canonical_conductor(m));
        let phi = arith::euler_phi(m) as usize;
        (0..phi).map(|i| BigRational::new(e.num.get(i).cloned().unwrap_or_default(), e.den.clone())).collect()
    }

    /// Re-expresses the element in ℚ(ζ_m); requires `conductor | m`.
    pub fn embed(&self, m: u64) -> Self {
        let m = canonical_conductor(m);
        assert!(m.is_multiple_of(self.n), "conductor {} does not divide {}", self.n, m);
        if m == self.n || self.num.len() <= 1 {
            let mut out = self.clone();
            if self.num.len() > 1 {
                out.n = m;
            }
            return out;
        }
        let step = (m / self.n) as usize;
        let mut v = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            v[i * step] = c.clone();
        }
        reduce_mod_phi(&mut v, m);
        Cyclotomic { n: m, num: v, den: self.den.clone() }
    }

    fn common(&self, other: &Self) -> u64 {
        if self.num.len() <= 1 {
            other.n
        } else if other.num.len() <= 1 {
            self.n
        } else {
            canonical_conductor(arith::lcm(self.n, other.n))
        }
    }

    fn unify(&self, other: &Self) -> (Self, Self, u64) {
        let m = self.common(other);
        (self.embed_any(m), other.embed_any(m), m)
    }

    fn embed_any(&self, m: u64) -> Self {
        if self.num.len() <= 1 {
            self.clone()
        } else {
            self.embed(m)
        }
    }

    /// Multiplies by ζ_n (the conductor generator) without a full product.
    fn times_zeta(&self) -> Self {
        let mut v = Vec::with_capacity(self.num.len() + 1);
        v.push(BigInt::zero());
        v.extend(self.num.iter().cloned());
        let mut v = v;
        reduce_mod_phi(&mut v, self.n);
        Cyclotomic { n: self.n, num: v, den: self.den.clone() }
    }

    /// Multiplicative order, or [`RootOrder::NotRootOfUnity`]. `None` for zero.
    pub fn root_order(&self) -> Option<RootOrder> {
        if self.is_zero() {
            return None;
        }
        if !self.den.is_one() {
            return Some(RootOrder::NotRootOfUnity);
        }
        let n = self.n;
        // Roots of unity in ℚ(ζ_n) are ±ζ_n^k.
        let mut p = Cyclotomic::build(n, vec![BigInt::one()], BigInt::one());
        p.n = n;
        for k in 0..n {
            if p.num == self.num {
                return Some(RootOrder::Finite(n / arith::gcd(n, k)));
            }
            if p.num.len() == self.num.len() && p.num.iter().zip(&self.num).all(|(a, b)| *a == -b) {
                let nn = 2 * n;
                let e = (2 * k + n) % nn;
                return Some(RootOrder::Finite(nn / arith::gcd(nn, e)));
            }
            p = p.times_zeta();
            p.n = n;
        }
        Some(RootOrder::NotRootOfUnity)
    }

    /// Same element expressed over the smallest possible conductor.
    pub fn minimal_conductor(&self) -> Self {
        if self.num.len() <= 1 {
            return self.clone();
        }
        let n = self.n;
        let target = self.coefficients();
        let phi_n = target.len();
        for d in arith::divisors(n) {
            if d == n {
                break;
            }
            if d % 4 == 2 {
                continue;
            }
            let phi_d = arith::euler_phi(d) as usize;
            let cols: Vec<Vec<BigRational>> =
                (0..phi_d).map(|i| Cyclotomic::zeta_pow(d, i as i64).coefficients_in(n)).collect();
            let a: Vec<Vec<BigRational>> = (0..phi_n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
            if let Some(x) = crate::linalg::solve_dense(a, target.clone()) {
                let l = x.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                let num = x.iter().map(|c| c.numer() * (&l / c.denom())).collect();
                return Cyclotomic::build(d, num, l);
            }
        }
        self.clone()
    }

    /// Complex approximation (diagnostics only).
    pub fn to_complex(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.num.iter().enumerate() {
            let ang = 2.0 * std::f64::consts::PI * k as f64 / self.n as f64;
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            re += c * ang.cos();
            im += c * ang.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n || self.num.len() <= 1 || other.num.len() <= 1 {
            return self.num == other.num && self.den == other.den;
        }
        let (a, b, _) = self.unify(other);
        a.num == b.num && a.den == b.den
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.minimal_conductor();
        if s.num.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, c) in s.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = BigRational::new(c.clone(), s.den.clone());
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let root = match k {
                0 => None,
                1 => Some(format!("zeta({})", s.n)),
                _ => Some(format!("zeta({})^{}", s.n, k)),
            };
            match root {
                None => out.push_str(&format_rational(&mag)),
                Some(r) if mag.is_one() => out.push_str(&r),
                Some(r) => {
                    out.push_str(&format_rational(&mag));
                    out.push('*');
                    out.push_str(&r);
                }
            }
        }
        write!(f, "{out}")
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic { n: 1, num: Vec::new(), den: BigInt::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::from_integer(1)
    }
}

impl Field for Cyclotomic {
    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, m) = self.unify(other);
        let len = a.num.len().max(b.num.len());
        let num = (0..len)
            .map(|i| {
                let x = a.num.get(i).map(|c| c * &b.den).unwrap_or_default();
                let y = b.num.get(i).map(|c| c * &a.den).unwrap_or_default();
                x + y
            })
            .collect();
        Self::build(m, num, &a.den * &b.den)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.num.len() == 1 || other.num.len() == 1 {
            let (s, v) = if self.num.len() == 1 { (self, other) } else { (other, self) };
            let c = &s.num[0];
            let num = v.num.iter().map(|x| x * c).collect();
            return Self::build(v.n, num, &s.den * &v.den);
        }
        let (a, b, m) = self.unify(other);
        let mut prod = vec![BigInt::zero(); a.num.len() + b.num.len() - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::build(m, prod, &a.den * &b.den)
    }

    fn neg_ref(&self) -> Self {
        Cyclotomic { n: self.n, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.num.len() == 1 {
            return Some(Self::build(1, vec![self.den.clone()], self.num[0].clone()));
        }
        let to_q = |v: &[BigInt]| -> Poly<BigRational> {
            Poly::from_coeffs(v.iter().map(|c| BigRational::from_integer(c.clone())).collect())
        };
        let a = to_q(&self.num);
        let phi: Vec<BigInt> = phi_poly(self.n).iter().map(|&c| BigInt::from(c)).collect();
        let (g, s, _) = a.xgcd(&to_q(&phi));
        debug_assert!(g.is_one(), "Φ_N is irreducible");
        // (num/den)^{-1} = den * s
        let l = s.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = s.coeffs().iter().map(|c| c.numer() * (&l / c.denom()) * &self.den).collect();
        Some(Self::build(self.n, num, l))
    }

    fn from_i64(v: i64) -> Self {
        Self::from_integer(v)
    }

    fn from_rational(r: &BigRational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                self.add_ref(&o)
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                self.sub_ref(&o)
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                self.mul_ref(&o)
            }
        }
        impl Div for $t {
            type Output = $t;
            fn div(self, o: $t) -> $t {
                self.div_ref(&o).expect("division by zero")
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl<'a> Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                self.add_ref(o)
            }
        }
        impl<'a> Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                self.sub_ref(o)
            }
        }
        impl<'a> Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                self.mul_ref(o)
            }
        }
    };
}

forward_ops!(Cyclotomic);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::field::rat;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105).iter().filter(|&&c| c == -2).count(), 2);
        for n in 1..60u64 {
            assert_eq!(cyclotomic_polynomial(n).len() as u64 - 1, arith::euler_phi(n));
        }
    }

    #[test]
    fn zeta_relations() {
        let z3 = Cyclotomic::zeta(3);
        assert_eq!(z3.pow_i64(3).unwrap(), Cyclotomic::one());
        assert_eq!(&(&z3 * &z3) + &z3, -Cyclotomic::one());
        // ζ_6 = -ζ_3^2
        assert_eq!(Cyclotomic::zeta(6), -(z3.pow_i64(2).unwrap()));
        assert_eq!(Cyclotomic::zeta(2), Cyclotomic::from_integer(-1));
        assert_eq!(Cyclotomic::zeta(4).pow_i64(2).unwrap(), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn mixed_conductors() {
        let a = Cyclotomic::zeta(4) + Cyclotomic::zeta(3);
        let b = a.clone() * Cyclotomic::zeta(5);
        assert_eq!(b.conductor(), 60);
        assert_eq!(b.div_ref(&Cyclotomic::zeta(5)).unwrap(), a);
        let z12 = Cyclotomic::zeta(12);
        assert_eq!(z12.pow_i64(4).unwrap(), Cyclotomic::zeta(3));
        assert_eq!(z12.pow_i64(3).unwrap(), Cyclotomic::zeta(4));
    }

    #[test]
    fn inverse() {
        let x = Cyclotomic::from_rational(&rat(3, 2)) + Cyclotomic::zeta(7) - Cyclotomic::zeta_pow(7, 3);
        let y = x.inv().unwrap();
        assert_eq!(x * y, Cyclotomic::one());
        assert!(Cyclotomic::zero().inv().is_none());
    }

    #[test]
    fn root_orders() {
        assert_eq!(Cyclotomic::from_integer(-1).root_order(), Some(RootOrder::Finite(2)));
        assert_eq!(Cyclotomic::zeta(6).root_order(), Some(RootOrder::Finite(6)));
        assert_eq!(Cyclotomic::zeta_pow(12, 9).root_order(), Some(RootOrder::Finite(4)));
        assert_eq!((-Cyclotomic::zeta(3)).root_order(), Some(RootOrder::Finite(6)));
        assert_eq!(Cyclotomic::from_integer(2).root_order(), Some(RootOrder::NotRootOfUnity));
        assert_eq!((Cyclotomic::zeta(5) + Cyclotomic::one()).root_order(), Some(RootOrder::NotRootOfUnity));
        assert_eq!(Cyclotomic::zero().root_order(), None);
    }

    #[test]
    fn display_uses_minimal_conductor() {
        let z3 = Cyclotomic::zeta(3).embed(12);
        assert_eq!(z3.conductor(), 12);
        assert_eq!(z3.to_string(), "zeta(3)");
        assert_eq!((-Cyclotomic::zeta(3)).to_string(), "-zeta(3)");
        assert_eq!(Cyclotomic::zeta(3).pow_i64(2).unwrap().to_string(), "-1-zeta(3)");
        let h = Cyclotomic::from_rational(&rat(1, 2)) * Cyclotomic::zeta(4);
        assert_eq!(h.to_string(), "1/2*zeta(4)");
    }
}
