use std::sync::Arc;

use num_traits::One;

use crate::families::{Family, HopfInstance};
use crate::groups::{exp, exp_scale, Exp};
use crate::hopf::{Element, MonomialKey, SkewPrimitiveSpace};
use crate::scalars::{root_order, Field, RootOrder};
use crate::{HopfError, Result};

/// Predicted (1, g)-skew primitives: the nontrivial generators of weight
/// g together with 1 − g.
pub fn expected_skew_primitives(inst: &Arc<HopfInstance>, g: &MonomialKey) -> Result<SkewPrimitiveSpace> {
    inst.validate_key(g)?;
    if !inst.is_grouplike_key(g) {
        return Err(HopfError::Domain("weight is not grouplike".into()));
    }
    let mono = |k: MonomialKey| Element::monomial(inst, k);
    let one = Element::one(inst);
    let mut basis = Vec::new();
    let is_one = *g == inst.one_key();
    if !is_one {
        basis.push(&one - &mono(g.clone())?);
    }
    let zero = Exp::from_integer(0);
    match inst.family() {
        Family::GroupQ(_) | Family::GroupQ2(_) | Family::Semidirect(_) => {}
        Family::Enveloping(_) => {
            if !is_one {
                return Err(HopfError::Domain("enveloping algebras only have weight 1".into()));
            }
            basis.push(mono(MonomialKey::Pbw(1, 0))?);
            basis.push(mono(MonomialKey::Pbw(0, 1))?);
        }
        Family::TypeA { e, chi, .. } => {
            // Δ(z^d) is (1, x^{de})-skew primitive iff r = χ(e)⁻¹ is a primitive d-th root
            let r = inst.chi_value(chi, e).inv().expect("unit");
            let d = match root_order(&r)? {
                RootOrder::Finite(d) if d > 1 => Some(d),
                _ => None,
            };
            if *g == MonomialKey::Ore(*e, 0) {
                basis.push(mono(MonomialKey::Ore(zero, 1))?);
            }
            if let Some(d) = d {
                if *g == MonomialKey::Ore(exp_scale(e, d as i64), 0) {
                    basis.push(mono(MonomialKey::Ore(zero, d as u32))?);
                }
            }
        }
        Family::TypeC { e0, .. } => {
            if *g == MonomialKey::Ore(*e0, 0) {
                basis.push(mono(MonomialKey::Ore(zero, 1))?);
            }
        }
        Family::TypeB { monoid, .. } => {
            for &p in monoid.primes() {
                let step = exp(1, p as i64);
                if *g == MonomialKey::Smash(step, zero) {
                    basis.push(mono(MonomialKey::Smash(zero, step))?);
                }
            }
            if *g == MonomialKey::Smash(Exp::one(), zero) {
                basis.push(mono(MonomialKey::Smash(zero, Exp::one()))?);
            }
        }
    }
    Ok(SkewPrimitiveSpace { weight: g.clone(), basis, box_size: 0 })
}
