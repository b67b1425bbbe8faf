use std::collections::BTreeMap;
use std::fmt;

use super::{exp, Exp};
use crate::arith;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SteinitzExponent {
    Finite(u32),
    Infinite,
}

impl SteinitzExponent {
    fn allows(self, k: u32) -> bool {
        match self {
            SteinitzExponent::Finite(e) => k <= e,
            SteinitzExponent::Infinite => true,
        }
    }

    fn cap(self, n: u32) -> u32 {
        match self {
            SteinitzExponent::Finite(e) => e.min(n),
            SteinitzExponent::Infinite => n,
        }
    }
}

/// A subgroup of (ℚ,+) containing ℤ, given by the largest allowed power of
/// each prime in a denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSubgroup {
    steinitz: BTreeMap<u64, SteinitzExponent>,
}

impl RationalSubgroup {
    /// Zero exponents are dropped; keys must be primes.
    pub fn new(steinitz: BTreeMap<u64, SteinitzExponent>) -> crate::Result<Self> {
        for &p in steinitz.keys() {
            if !arith::is_prime(p) {
                return Err(crate::HopfError::InvalidData(format!("steinitz key {p} is not prime")));
            }
        }
        let steinitz = steinitz.into_iter().filter(|(_, e)| *e != SteinitzExponent::Finite(0)).collect();
        Ok(RationalSubgroup { steinitz })
    }

    pub fn integers() -> Self {
        RationalSubgroup { steinitz: BTreeMap::new() }
    }

    /// ℤ(1/d), the cyclic group generated by `1/d`.
    pub fn cyclic(d: u64) -> Self {
        let steinitz = arith::factorize(d).into_iter().map(|(p, e)| (p, SteinitzExponent::Finite(e))).collect();
        RationalSubgroup { steinitz }
    }

    /// ℤ[1/d]: every power of each prime of `d` is allowed.
    pub fn localization(d: u64) -> Self {
        let steinitz = arith::factorize(d).into_iter().map(|(p, _)| (p, SteinitzExponent::Infinite)).collect();
        RationalSubgroup { steinitz }
    }

    pub fn steinitz(&self) -> &BTreeMap<u64, SteinitzExponent> {
        &self.steinitz
    }

    pub fn contains(&self, a: &Exp) -> bool {
        let d = a.denom().unsigned_abs();
        arith::factorize(d).into_iter().all(|(p, k)| self.steinitz.get(&p).is_some_and(|e| e.allows(k)))
    }

    /// `d_n`, so that the n-th stage is ℤ(1/d_n).
    pub fn stage_denominator(&self, n: u32) -> u64 {
        self.steinitz.iter().map(|(&p, e)| p.checked_pow(e.cap(n)).expect("stage denominator overflow")).product()
    }

    /// Generator `1/d_n` of the n-th stage.
    pub fn stage_group(&self, n: u32) -> Exp {
        exp(1, self.stage_denominator(n) as i64)
    }

    pub fn is_cyclic(&self) -> bool {
        self.steinitz.values().all(|e| matches!(e, SteinitzExponent::Finite(_)))
    }

    /// For cyclic G = ℤ(1/d), the generator `1/d`.
    pub fn generator(&self) -> Option<Exp> {
        if !self.is_cyclic() {
            return None;
        }
        Some(self.stage_group(u32::MAX))
    }

    pub fn is_subgroup_of(&self, other: &RationalSubgroup) -> bool {
        self.steinitz.iter().all(|(p, e)| match (e, other.steinitz.get(p)) {
            (_, Some(SteinitzExponent::Infinite)) => true,
            (SteinitzExponent::Finite(a), Some(SteinitzExponent::Finite(b))) => a <= b,
            _ => false,
        })
    }

    /// Smallest stage containing `a`, if any.
    pub fn stage_of(&self, a: &Exp) -> Option<u32> {
        if !self.contains(a) {
            return None;
        }
        let need = arith::factorize(a.denom().unsigned_abs()).into_iter().map(|(_, k)| k).max().unwrap_or(0);
        Some(need.max(1))
    }
}

impl fmt::Display for RationalSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steinitz.is_empty() {
            return write!(f, "Z");
        }
        let parts: Vec<String> = self
            .steinitz
            .iter()
            .map(|(p, e)| match e {
                SteinitzExponent::Finite(k) => format!("{p}^{k}"),
                SteinitzExponent::Infinite => format!("{p}^inf"),
            })
            .collect();
        write!(f, "Z<{}>", parts.join(","))
    }
}
