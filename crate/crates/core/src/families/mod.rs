//! Validated constructors for every family, stage towers, recognition of
//! affine stages and the isomorphism test for type B.

mod instance;
mod presentation;
mod recognize;
mod sample;

use std::sync::Arc;

use num_traits::One;

pub use instance::{AffineLabel, Family, HopfInstance, LieKind};
pub(crate) use instance::{DeltaTerms, Terms};
pub use presentation::{presentation, Presentation, Relation};
pub use recognize::{is_isomorphic, recognize_affine, recognize_data, AffineRecognition, IsoResult};
pub use sample::{box_keys, random_element};

use crate::arith;
use crate::groups::{
    exp, exp_int, validate_bdata, AdditiveCharacter, CharacterKind, Exp, MultiplicativeCharacter, RankTwoGroup,
    RationalSubgroup, SemidirectGroup, SubmonoidM,
};
use crate::scalars::{root_order, Cyclotomic, Field, RootOrder, Scalar};
use crate::{HopfError, Result};

/// Group data accepted by [`make_group_algebra`].
#[derive(Clone, Debug, PartialEq)]
pub enum GroupData {
    Q(RationalSubgroup),
    Q2(RankTwoGroup),
    Semidirect(SemidirectGroup),
}

pub fn make_group_algebra(g: GroupData) -> Arc<HopfInstance> {
    let family = match g {
        GroupData::Q(g) => Family::GroupQ(g),
        GroupData::Q2(g) => Family::GroupQ2(g),
        GroupData::Semidirect(g) => Family::Semidirect(g),
    };
    HopfInstance::new(family, None)
}

pub fn make_enveloping(kind: LieKind) -> Arc<HopfInstance> {
    HopfInstance::new(Family::Enveloping(kind), None)
}

/// Whether χ is defined on all of G.
fn check_domain(g: &RationalSubgroup, chi: &MultiplicativeCharacter) -> Result<()> {
    if matches!(chi.kind(), CharacterKind::Trivial) {
        return Ok(());
    }
    match g.generator() {
        Some(gen) if chi.in_domain(&gen) => Ok(()),
        Some(gen) => Err(HopfError::InvalidData(format!("chi is not defined on the generator {gen} of G"))),
        None => Err(HopfError::InvalidData(format!("a nontrivial finitely specified chi cannot be defined on {g}"))),
    }
}

pub fn make_a(group: RationalSubgroup, e: Exp, chi: MultiplicativeCharacter) -> Result<Arc<HopfInstance>> {
    if !group.contains(&e) {
        return Err(HopfError::NotInGroup(format!("e = {e} is not in G = {group}")));
    }
    check_domain(&group, &chi)?;
    Ok(HopfInstance::new(Family::TypeA { group, e, chi }, None))
}

pub fn make_c(group: RationalSubgroup, e0: Exp, tau: AdditiveCharacter) -> Result<Arc<HopfInstance>> {
    if !group.contains(&e0) {
        return Err(HopfError::NotInGroup(format!("e0 = {e0} is not in G = {group}")));
    }
    Ok(HopfInstance::new(Family::TypeC { group, e0, tau }, None))
}

/// B_G({p_i}, χ); any failed data condition is reported verbatim.
pub fn make_b(group: RationalSubgroup, monoid: SubmonoidM, chi: MultiplicativeCharacter) -> Result<Arc<HopfInstance>> {
    let report = validate_bdata(&group, &monoid, &chi);
    if let Some(f) = report.failure() {
        return Err(HopfError::InvalidData(format!("{}: {}", f.name, f.detail)));
    }
    Ok(HopfInstance::new(Family::TypeB { group, monoid, chi }, None))
}

/// Skips validation, for exercising the verifier on broken data. Keys are
/// still membership checked, so the character must cover GM.
pub fn make_b_unchecked(
    group: RationalSubgroup,
    monoid: SubmonoidM,
    chi: MultiplicativeCharacter,
) -> Arc<HopfInstance> {
    HopfInstance::new(Family::TypeB { group, monoid, chi }, None)
}

/// A(n, q): xz = qzx, x grouplike, z (1, xⁿ)-skew primitive.
pub fn make_affine_a(n: i64, q: Scalar) -> Result<Arc<HopfInstance>> {
    if n < 0 {
        return Err(HopfError::InvalidData(format!("A(n, q) needs n >= 0, got {n}")));
    }
    let q_inv = q.inv().ok_or_else(|| HopfError::InvalidData("q must be nonzero".into()))?;
    let chi = MultiplicativeCharacter::cyclic(exp_int(1), q_inv)?;
    let group = RationalSubgroup::integers();
    let family = Family::TypeA { group, e: exp_int(n), chi };
    Ok(HopfInstance::new(family, Some(AffineLabel::A { n, q })))
}

/// B(n, p₀, p₁, …, p_s, q) realized over ℤ(1/mn) with χ(1/m²n) = q.
pub fn make_affine_b(n: u64, p0: u64, primes: Vec<u64>, q: Scalar) -> Result<Arc<HopfInstance>> {
    if primes.len() < 2 {
        return Err(HopfError::InvalidData("B(n, p0, ..., q) needs s >= 2; use A(n, q) for s = 1".into()));
    }
    if n == 0 || p0 == 0 {
        return Err(HopfError::InvalidData("n and p0 must be positive".into()));
    }
    let monoid = SubmonoidM::new(primes.clone())?;
    let m = monoid.modulus();
    if !n.is_multiple_of(p0) {
        return Err(HopfError::InvalidData(format!("p0 = {p0} does not divide n = {n}")));
    }
    if let Some(&p) = primes.iter().find(|&&p| arith::gcd(p, p0) != 1) {
        return Err(HopfError::InvalidData(format!("p0 = {p0} is not coprime to {p}")));
    }
    let ell = m * n / p0;
    match root_order(&q)? {
        RootOrder::Finite(o) if o == ell => {}
        _ => return Err(HopfError::InvalidData(format!("q must be a primitive {ell}-th root of unity"))),
    }
    let group = RationalSubgroup::cyclic(m * n);
    let chi = MultiplicativeCharacter::cyclic(exp(1, (m * m * n) as i64), q.clone())?;
    let report = validate_bdata(&group, &monoid, &chi);
    if let Some(f) = report.failure() {
        return Err(HopfError::InvalidData(format!("{}: {}", f.name, f.detail)));
    }
    let label = AffineLabel::B { n, p0, primes, q };
    Ok(HopfInstance::new(Family::TypeB { group, monoid, chi }, Some(label)))
}

/// C(n): zx = xz + (x^{2−n} − x), z (1, x^{1−n})-skew primitive.
pub fn make_affine_c(n: i64) -> Result<Arc<HopfInstance>> {
    if n < 2 {
        return Err(HopfError::InvalidData(format!("C(n) needs n >= 2, got {n}")));
    }
    let family = Family::TypeC {
        group: RationalSubgroup::integers(),
        e0: exp_int(1 - n),
        tau: AdditiveCharacter::new(Scalar::one()),
    };
    Ok(HopfInstance::new(family, Some(AffineLabel::C { n })))
}

/// χ with χ(1/p²) = ζ_p for each listed p, on ℤ(1/∏p): a finite piece of
/// the prime-indexed towers.
pub fn prime_tower(primes: &[u64]) -> Result<Arc<HopfInstance>> {
    let monoid = SubmonoidM::new(primes.to_vec())?;
    let roots = primes.iter().map(|&p| (p, Scalar::constant(Cyclotomic::zeta(p)))).collect();
    let chi = MultiplicativeCharacter::crt(roots)?;
    make_b(RationalSubgroup::cyclic(monoid.modulus()), monoid, chi)
}

/// The affine Hopf subalgebra B⟨n⟩ generated by x^{±1/t} and the first
/// min(n+1, s) of the y_i, where ℤ(1/t) is the n-th stage of G enlarged to
/// contain every 1/p_i used.
pub fn chain_stage(b: &HopfInstance, n: u32) -> Result<Arc<HopfInstance>> {
    let Family::TypeB { group, monoid, chi } = b.family() else {
        return Err(HopfError::Domain(format!("chain_stage needs a type B instance, got {}", b.tag())));
    };
    let n = n.max(1);
    let sub = monoid.truncate(n as usize + 1);
    let mut t = group.stage_denominator(n);
    for &p in sub.primes() {
        t = arith::lcm(t, p);
    }
    let stage_group = RationalSubgroup::cyclic(t);
    let out = make_b(stage_group, sub, chi.clone())?;
    Ok(out.with_stage(n))
}

#[cfg(test)]
mod tests;
