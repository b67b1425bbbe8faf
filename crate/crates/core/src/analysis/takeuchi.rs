use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::families::{Family, HopfInstance};
use crate::groups::{exp_add, Exp, RationalSubgroup};
use crate::hopf::{Element, MonomialKey};
use crate::scalars::{Field, Scalar};
use crate::{HopfError, Result};

/// Σ c · (x^a ⊗ h) in K ⊗ H, keyed by (a, h).
pub type PairSum = BTreeMap<(Exp, MonomialKey), Scalar>;
/// Σ c · (ā ⊗ h) in (K/K(K'⁺)) ⊗ H, keyed by the coset representative.
pub type CanonicalSum = BTreeMap<(Exp, MonomialKey), Scalar>;

fn add_to<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    let v = match map.remove(&k) {
        Some(old) => old.add_ref(&c),
        None => c,
    };
    if !num_traits::Zero::is_zero(&v) {
        map.insert(k, v);
    }
}

/// G/G' for G' = ℤ(1/d') cyclic: a + G' is represented by the unique
/// element of [0, 1/d') congruent to a.
#[derive(Clone, Debug, PartialEq)]
pub struct CosetQuotient {
    pub sub: RationalSubgroup,
    pub group: RationalSubgroup,
    step: Exp,
}

impl CosetQuotient {
    pub fn representative(&self, a: &Exp) -> Exp {
        let k = (a / self.step).floor();
        a - k * self.step
    }

    /// Representatives of the cosets meeting the n-th stage of G.
    pub fn stage_basis(&self, n: u32) -> Vec<Exp> {
        let g = self.group.stage_group(n);
        let count = (self.step / g).to_integer();
        (0..count).map(|j| g * Exp::from_integer(j)).collect()
    }
}

/// τ: K ⊗_{K'} H → (K/K(K'⁺)) ⊗ H and μ in the other direction.
pub struct TakeuchiMaps {
    pub quotient: CosetQuotient,
    h: Arc<HopfInstance>,
}

fn group_of(inst: &HopfInstance) -> Option<&RationalSubgroup> {
    match inst.family() {
        Family::GroupQ(g) => Some(g),
        Family::TypeA { group, .. } | Family::TypeC { group, .. } | Family::TypeB { group, .. } => Some(group),
        _ => None,
    }
}

pub fn takeuchi_maps(k_prime: &HopfInstance, k: &HopfInstance, h: &Arc<HopfInstance>) -> Result<TakeuchiMaps> {
    let (Family::GroupQ(gp), Family::GroupQ(g)) = (k_prime.family(), k.family()) else {
        return Err(HopfError::Domain("K' and K must be group algebras over subgroups of Q".into()));
    };
    if !gp.is_subgroup_of(g) {
        return Err(HopfError::Domain(format!("K' = k[{gp}] is not contained in K = k[{g}]")));
    }
    let step = gp
        .generator()
        .ok_or_else(|| HopfError::Unsupported(format!("coset representatives need a cyclic G', got {gp}")))?;
    match group_of(h) {
        Some(gh) if g.is_subgroup_of(gh) => {}
        _ => return Err(HopfError::Domain("K is not contained in the grouplike span of H".into())),
    }
    Ok(TakeuchiMaps { quotient: CosetQuotient { sub: gp.clone(), group: g.clone(), step }, h: h.clone() })
}

impl TakeuchiMaps {
    fn x(&self, a: Exp) -> MonomialKey {
        self.h.x_key(a).expect("H has grouplikes x^a")
    }

    fn mul_into(
        &self,
        acc: &mut BTreeMap<(Exp, MonomialKey), Scalar>,
        tag: Exp,
        left: &MonomialKey,
        right: &MonomialKey,
        c: &Scalar,
    ) {
        for (k, d) in self.h.mul_keys(left, right) {
            add_to(acc, (tag, k), c.mul_ref(&d));
        }
    }

    /// τ(x^a ⊗ h) = x̄^a ⊗ x^a h.
    pub fn tau(&self, pairs: &PairSum) -> CanonicalSum {
        let mut out = BTreeMap::new();
        for ((a, hk), c) in pairs {
            self.mul_into(&mut out, self.quotient.representative(a), &self.x(*a), hk, c);
        }
        out
    }

    /// μ(ā ⊗ v) = x^ā ⊗ S(x^ā) v, with ā the coset representative.
    pub fn mu(&self, canon: &CanonicalSum) -> PairSum {
        let mut out = BTreeMap::new();
        for ((a, v), c) in canon {
            let r = self.quotient.representative(a);
            self.mul_into(&mut out, r, &self.x(-r), v, c);
        }
        out
    }

    /// x^a ⊗ h for a grouplike of K and an element of H.
    pub fn pure(&self, a: Exp, h: &Element) -> PairSum {
        h.terms().iter().map(|(k, c)| ((a, k.clone()), c.clone())).collect()
    }

    /// (Σ x^a ⊗ h)·v = Σ x^a ⊗ hv.
    pub fn right_mul_pairs(&self, pairs: &PairSum, v: &Element) -> PairSum {
        let mut out = BTreeMap::new();
        for ((a, hk), c) in pairs {
            for (vk, d) in v.terms() {
                self.mul_into(&mut out, *a, hk, vk, &c.mul_ref(d));
            }
        }
        out
    }

    pub fn right_mul_canonical(&self, canon: &CanonicalSum, v: &Element) -> CanonicalSum {
        self.right_mul_pairs(canon, v)
    }

    /// (x^a·x^b) ⊗ h versus x^a ⊗ (x^b·h) for x^b in K'.
    pub fn balanced_pair(&self, a: Exp, b: Exp, h: &Element) -> (PairSum, PairSum) {
        let left = self.pure(exp_add(&a, &b), h);
        let mut right = BTreeMap::new();
        for (hk, c) in h.terms() {
            self.mul_into(&mut right, a, &self.x(b), hk, c);
        }
        (left, right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelEntry {
    pub a: String,
    pub in_sub: bool,
    /// Whether x^a ⊗ 1 and 1 ⊗ x^a agree in A ⊗_B A.
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub entries: Vec<KernelEntry>,
    pub passed: bool,
}

/// Tests x^a ⊗ 1 = 1 ⊗ x^a in A ⊗_B A by transporting both sides along τ,
/// for each sampled exponent, against membership of a in B.
pub fn kernel_of_difference(b: &HopfInstance, a: &Arc<HopfInstance>, samples: &[Exp]) -> Result<KernelReport> {
    let maps = takeuchi_maps(b, a, a)?;
    let Family::GroupQ(gb) = b.family() else { unreachable!("checked by takeuchi_maps") };
    let Family::GroupQ(ga) = a.family() else { unreachable!("checked by takeuchi_maps") };
    let one = Element::one(a);
    let zero = Exp::from_integer(0);
    let mut entries = Vec::new();
    for s in samples {
        if !ga.contains(s) {
            return Err(HopfError::NotInGroup(format!("{s} is not in A's group {ga}")));
        }
        let g = Element::monomial(a, MonomialKey::Group(*s))?;
        let lhs = maps.tau(&maps.pure(*s, &one));
        let rhs = maps.tau(&maps.pure(zero, &g));
        entries.push(KernelEntry { a: s.to_string(), in_sub: gb.contains(s), equal: lhs == rhs });
    }
    let passed = entries.iter().all(|e| e.in_sub == e.equal);
    Ok(KernelReport { entries, passed })
}
