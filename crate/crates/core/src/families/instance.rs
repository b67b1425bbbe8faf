use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::groups::{
    exp, AdditiveCharacter, Exp, MultiplicativeCharacter, RankTwoGroup, RationalSubgroup, SemidirectGroup, SubmonoidM,
};
use crate::hopf::MonomialKey;
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LieKind {
    Abelian,
    /// [x, y] = y.
    Nonabelian,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    GroupQ(RationalSubgroup),
    GroupQ2(RankTwoGroup),
    Semidirect(SemidirectGroup),
    Enveloping(LieKind),
    /// A_G(e, χ): z x^a = χ(a) x^a z, Δz = z⊗1 + x^e⊗z.
    TypeA {
        group: RationalSubgroup,
        e: Exp,
        chi: MultiplicativeCharacter,
    },
    /// C_G(e₀, τ): z x^a = x^a z + τ(a)(x^{a+e₀} − x^a), Δz = z⊗1 + x^{e₀}⊗z.
    TypeC {
        group: RationalSubgroup,
        e0: Exp,
        tau: AdditiveCharacter,
    },
    /// B_G({p_i}, χ) = kM # kG.
    TypeB {
        group: RationalSubgroup,
        monoid: SubmonoidM,
        chi: MultiplicativeCharacter,
    },
}

/// Names under which an instance was built from the affine presentations.
#[derive(Clone, Debug, PartialEq)]
pub enum AffineLabel {
    A { n: i64, q: Scalar },
    B { n: u64, p0: u64, primes: Vec<u64>, q: Scalar },
    C { n: i64 },
}

pub(crate) type DeltaTerms = Arc<Vec<((MonomialKey, MonomialKey), Scalar)>>;
pub(crate) type Terms = Arc<Vec<(MonomialKey, Scalar)>>;

#[derive(Default)]
pub(crate) struct Caches {
    pub delta: Mutex<HashMap<MonomialKey, DeltaTerms>>,
    pub antipode: Mutex<HashMap<MonomialKey, Terms>>,
    pub chi: Mutex<HashMap<Exp, Scalar>>,
    /// z^n x^a for the C family.
    pub z_past_x: Mutex<HashMap<(u32, Exp), Terms>>,
}

/// A validated family descriptor together with its current stage.
pub struct HopfInstance {
    pub(crate) family: Family,
    pub(crate) stage: u32,
    pub(crate) alias: Option<AffineLabel>,
    pub(crate) cache: Caches,
}

impl Clone for HopfInstance {
    fn clone(&self) -> Self {
        HopfInstance {
            family: self.family.clone(),
            stage: self.stage,
            alias: self.alias.clone(),
            cache: Caches::default(),
        }
    }
}

impl PartialEq for HopfInstance {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.stage == other.stage
    }
}

impl fmt::Debug for HopfInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfInstance")
            .field("family", &self.family)
            .field("stage", &self.stage)
            .field("alias", &self.alias)
            .finish()
    }
}

impl HopfInstance {
    pub(crate) fn new(family: Family, alias: Option<AffineLabel>) -> Arc<Self> {
        Arc::new(HopfInstance { family, stage: 1, alias, cache: Caches::default() })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn stage(&self) -> u32 {
        self.stage
    }

    pub fn alias(&self) -> Option<&AffineLabel> {
        self.alias.as_ref()
    }

    /// Same data at another stage of its tower.
    pub fn with_stage(&self, n: u32) -> Arc<Self> {
        let mut out = self.clone();
        out.stage = n.max(1);
        Arc::new(out)
    }

    pub fn tag(&self) -> &'static str {
        match (&self.family, &self.alias) {
            (_, Some(AffineLabel::A { .. })) => "affineA",
            (_, Some(AffineLabel::B { .. })) => "affineB",
            (_, Some(AffineLabel::C { .. })) => "affineC",
            (Family::GroupQ(_), _) => "groupQ",
            (Family::GroupQ2(_), _) => "groupQ2",
            (Family::Semidirect(_), _) => "semidirect",
            (Family::Enveloping(_), _) => "enveloping",
            (Family::TypeA { .. }, _) => "typeA",
            (Family::TypeC { .. }, _) => "typeC",
            (Family::TypeB { .. }, _) => "typeB",
        }
    }

    /// Generator `1/d` of the cyclic group of x-exponents used at this
    /// stage, for families built on a subgroup of ℚ.
    pub fn stage_generator(&self) -> Option<Exp> {
        let with = |g: &RationalSubgroup, extra: &[Exp]| {
            let mut d = match g.generator() {
                Some(gen) => *gen.denom(),
                None => g.stage_denominator(self.stage) as i64,
            };
            for e in extra {
                d = num_integer::lcm(d, *e.denom());
            }
            exp(1, d)
        };
        match &self.family {
            Family::GroupQ(g) => Some(with(g, &[])),
            Family::TypeA { group, e, .. } => Some(with(group, &[*e])),
            Family::TypeC { group, e0, .. } => Some(with(group, &[*e0])),
            Family::TypeB { group, monoid, .. } => {
                let extra: Vec<Exp> = monoid.primes().iter().map(|&p| exp(1, p as i64)).collect();
                Some(with(group, &extra))
            }
            _ => None,
        }
    }

    pub(crate) fn chi_value(&self, chi: &MultiplicativeCharacter, a: &Exp) -> Scalar {
        if let Some(v) = self.cache.chi.lock().unwrap().get(a) {
            return v.clone();
        }
        let v = chi.evaluate(a).unwrap_or_else(|e| panic!("character evaluation outside its domain: {e}"));
        self.cache.chi.lock().unwrap().insert(*a, v.clone());
        v
    }

    pub fn describe(&self) -> String {
        match (&self.alias, &self.family) {
            (Some(AffineLabel::A { n, q }), _) => format!("A({n}, {q})"),
            (Some(AffineLabel::B { n, p0, primes, q }), _) => {
                let ps: Vec<String> = primes.iter().map(u64::to_string).collect();
                format!("B({n}, {p0}, {}, {q})", ps.join(", "))
            }
            (Some(AffineLabel::C { n }), _) => format!("C({n})"),
            (None, Family::GroupQ(g)) => format!("kG, G = {g}"),
            (None, Family::GroupQ2(_)) => "kG, G inside Q^2".to_string(),
            (None, Family::Semidirect(s)) => format!("k(L x R), L = {}, R = {}", s.l(), s.r()),
            (None, Family::Enveloping(LieKind::Abelian)) => "U(g), g abelian".to_string(),
            (None, Family::Enveloping(LieKind::Nonabelian)) => "U(g), [x,y] = y".to_string(),
            (None, Family::TypeA { group, e, .. }) => format!("A_G(e, chi), G = {group}, e = {e}"),
            (None, Family::TypeC { group, e0, tau }) => {
                format!("C_G(e0, tau), G = {group}, e0 = {e0}, lambda = {}", tau.lambda())
            }
            (None, Family::TypeB { group, monoid, .. }) => {
                let ps: Vec<String> = monoid.primes().iter().map(u64::to_string).collect();
                format!("B_G(p, chi), G = {group}, p = {{{}}}", ps.join(", "))
            }
        }
    }
}
