use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{exp_quotient, exp_to_rational, Exp};
use crate::arith;
use crate::scalars::{Field, Scalar};
use crate::{HopfError, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum CharacterKind {
    Trivial,
    /// Defined on ℤ·g₀ by `g₀ ↦ value`.
    Cyclic {
        generator: Exp,
        value: Scalar,
    },
    /// Defined on ℤ + Σ ℤ/p_i² by `1/p_i² ↦ β_i` and `ℤ ↦ 1`.
    Crt {
        roots: BTreeMap<u64, Scalar>,
    },
}

/// A homomorphism from a subgroup of ℚ into the units of the scalar field.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicativeCharacter {
    kind: CharacterKind,
}

impl MultiplicativeCharacter {
    pub fn trivial() -> Self {
        MultiplicativeCharacter { kind: CharacterKind::Trivial }
    }

    pub fn cyclic(generator: Exp, value: Scalar) -> Result<Self> {
        if generator == Exp::zero() {
            return Err(HopfError::InvalidData("cyclic character needs a nonzero generator".into()));
        }
        if value.is_zero() {
            return Err(HopfError::InvalidData("character values must be units".into()));
        }
        if value.is_one() {
            return Ok(Self::trivial());
        }
        // normalize to a positive generator
        let (generator, value) =
            if generator < Exp::zero() { (-generator, value.inv().expect("unit")) } else { (generator, value) };
        Ok(MultiplicativeCharacter { kind: CharacterKind::Cyclic { generator, value } })
    }

    pub fn crt(roots: BTreeMap<u64, Scalar>) -> Result<Self> {
        let keys: Vec<u64> = roots.keys().copied().collect();
        for (i, &p) in keys.iter().enumerate() {
            if p < 2 {
                return Err(HopfError::InvalidData(format!("crt modulus must be at least 2, got {p}")));
            }
            if keys[..i].iter().any(|&q| arith::gcd(p, q) != 1) {
                return Err(HopfError::InvalidData(format!("crt moduli not pairwise coprime at {p}")));
            }
        }
        if roots.values().any(Zero::is_zero) {
            return Err(HopfError::InvalidData("character values must be units".into()));
        }
        Ok(MultiplicativeCharacter { kind: CharacterKind::Crt { roots } })
    }

    pub fn kind(&self) -> &CharacterKind {
        &self.kind
    }

    pub fn in_domain(&self, a: &Exp) -> bool {
        match &self.kind {
            CharacterKind::Trivial => true,
            CharacterKind::Cyclic { generator, .. } => exp_quotient(a, generator).is_some(),
            CharacterKind::Crt { roots } => {
                let big: i128 = roots.keys().map(|&p| (p as i128) * (p as i128)).product();
                big % (*a.denom() as i128) == 0
            }
        }
    }

    pub fn evaluate(&self, a: &Exp) -> Result<Scalar> {
        match &self.kind {
            CharacterKind::Trivial => Ok(Scalar::one()),
            CharacterKind::Cyclic { generator, value } => {
                let n = exp_quotient(a, generator)
                    .ok_or_else(|| HopfError::NotInGroup(format!("{a} is not a multiple of {generator}")))?;
                Ok(value.pow_i64(n).expect("unit"))
            }
            CharacterKind::Crt { roots } => {
                let big: i128 = roots.keys().map(|&p| (p as i128) * (p as i128)).product();
                let den = *a.denom() as i128;
                if big % den != 0 {
                    return Err(HopfError::NotInGroup(format!("{a} is outside Z + sum Z/p_i^2")));
                }
                let total = *a.numer() as i128 * (big / den);
                let mut out = Scalar::one();
                for (&p, beta) in roots {
                    let sq = (p as i128) * (p as i128);
                    let cofactor = big / sq;
                    let inv = arith::mod_inverse(cofactor % sq, sq).ok_or_else(|| {
                        HopfError::InvalidData("crt decomposition infeasible: moduli not coprime".into())
                    })?;
                    let c = (total.rem_euclid(sq) * inv).rem_euclid(sq);
                    if c != 0 {
                        out = out.mul_ref(&beta.pow_i64(c as i64).expect("unit"));
                    }
                }
                Ok(out)
            }
        }
    }
}

/// a ↦ λa.
#[derive(Clone, Debug, PartialEq)]
pub struct AdditiveCharacter {
    lambda: Scalar,
}

impl AdditiveCharacter {
    pub fn new(lambda: Scalar) -> Self {
        AdditiveCharacter { lambda }
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn evaluate(&self, a: &Exp) -> Scalar {
        self.lambda.mul_ref(&Scalar::from_rational(&exp_to_rational(a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{exp, exp_int};
    use crate::scalars::parse_scalar;

    fn golden() -> MultiplicativeCharacter {
        MultiplicativeCharacter::crt(BTreeMap::from([
            (2, parse_scalar("-1").unwrap()),
            (3, parse_scalar("zeta(3)").unwrap()),
        ]))
        .unwrap()
    }

    #[test]
    fn crt_values() {
        let chi = golden();
        assert_eq!(chi.evaluate(&exp_int(1)).unwrap(), Scalar::one());
        assert_eq!(chi.evaluate(&exp(1, 6)).unwrap(), Scalar::one());
        assert_eq!(chi.evaluate(&exp(1, 36)).unwrap(), parse_scalar("-zeta(3)").unwrap());
        assert_eq!(chi.evaluate(&exp(1, 9)).unwrap(), parse_scalar("zeta(3)").unwrap());
        assert_eq!(chi.evaluate(&exp(1, 4)).unwrap(), parse_scalar("-1").unwrap());
        assert!(chi.evaluate(&exp(1, 8)).is_err());
    }

    #[test]
    fn cyclic_values() {
        let q = parse_scalar("zeta(5)").unwrap();
        let chi = MultiplicativeCharacter::cyclic(exp(1, 3), q.clone()).unwrap();
        assert_eq!(chi.evaluate(&exp(2, 3)).unwrap(), q.mul_ref(&q));
        assert_eq!(chi.evaluate(&exp(-1, 3)).unwrap(), q.inv().unwrap());
        assert!(chi.evaluate(&exp(1, 2)).is_err());
        let flipped = MultiplicativeCharacter::cyclic(exp(-1, 3), q.inv().unwrap()).unwrap();
        assert_eq!(flipped, chi);
    }

    #[test]
    fn additive() {
        let tau = AdditiveCharacter::new(parse_scalar("2").unwrap());
        assert_eq!(tau.evaluate(&exp(3, 4)), parse_scalar("3/2").unwrap());
    }
}
