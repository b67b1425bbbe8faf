//! Structure maps on single monomials, dispatched per family.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{accumulate, MonomialKey};
use crate::families::{AffineLabel, DeltaTerms, Family, HopfInstance, LieKind, Terms};
use crate::groups::{exp, exp_add, exp_mul, monoid_contains, semidirect_multiply, Exp, SemidirectGroup};
use crate::scalars::{Field, Scalar};
use crate::{HopfError, Result};

fn zero() -> Exp {
    Exp::from_integer(0)
}

fn int_scalar(v: BigInt) -> Scalar {
    Scalar::from_rational(&crate::Rational::from_integer(v))
}

impl HopfInstance {
    pub fn one_key(&self) -> MonomialKey {
        match &self.family {
            Family::GroupQ(_) => MonomialKey::Group(zero()),
            Family::GroupQ2(_) | Family::Semidirect(_) => MonomialKey::Pair(zero(), zero()),
            Family::Enveloping(_) => MonomialKey::Pbw(0, 0),
            Family::TypeA { .. } | Family::TypeC { .. } => MonomialKey::Ore(zero(), 0),
            Family::TypeB { .. } => MonomialKey::Smash(zero(), zero()),
        }
    }

    /// The grouplike x^a (for families whose grouplikes are indexed by ℚ).
    pub fn x_key(&self, a: Exp) -> Option<MonomialKey> {
        match &self.family {
            Family::GroupQ(_) => Some(MonomialKey::Group(a)),
            Family::TypeA { .. } | Family::TypeC { .. } => Some(MonomialKey::Ore(a, 0)),
            Family::TypeB { .. } => Some(MonomialKey::Smash(a, zero())),
            _ => None,
        }
    }

    pub fn validate_key(&self, k: &MonomialKey) -> Result<()> {
        let bad = |why: String| Err(HopfError::NotInGroup(why));
        match (&self.family, k) {
            (Family::GroupQ(g), MonomialKey::Group(a)) => {
                if g.contains(a) {
                    Ok(())
                } else {
                    bad(format!("{a} is not in G"))
                }
            }
            (Family::GroupQ2(g), MonomialKey::Pair(a, b)) => {
                if g.contains(&[*a, *b]) {
                    Ok(())
                } else {
                    bad(format!("({a}, {b}) is not in G"))
                }
            }
            (Family::Semidirect(g), MonomialKey::Pair(l, r)) => {
                if g.contains(&(*l, *r)) {
                    Ok(())
                } else {
                    bad(format!("({l}, {r}) is not in L x R"))
                }
            }
            (Family::Enveloping(_), MonomialKey::Pbw(..)) => Ok(()),
            (Family::TypeA { group, .. } | Family::TypeC { group, .. }, MonomialKey::Ore(a, _)) => {
                if group.contains(a) {
                    Ok(())
                } else {
                    bad(format!("{a} is not in G"))
                }
            }
            (Family::TypeB { group, monoid, .. }, MonomialKey::Smash(a, b)) => {
                if !group.contains(a) {
                    return bad(format!("{a} is not in G"));
                }
                match monoid_contains(monoid, b) {
                    Ok(Some(_)) => Ok(()),
                    _ => bad(format!("{b} is not in M")),
                }
            }
            _ => Err(HopfError::InvalidData(format!("key {k:?} does not belong to family {}", self.tag()))),
        }
    }

    pub fn counit_key(&self, k: &MonomialKey) -> Scalar {
        let unit = match k {
            MonomialKey::Group(_) | MonomialKey::Pair(..) => true,
            MonomialKey::Ore(_, n) => *n == 0,
            MonomialKey::Smash(_, b) => *b == zero(),
            MonomialKey::Pbw(i, j) => *i == 0 && *j == 0,
        };
        if unit {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    /// Whether the monomial itself is grouplike.
    pub fn is_grouplike_key(&self, k: &MonomialKey) -> bool {
        match k {
            MonomialKey::Group(_) | MonomialKey::Pair(..) => true,
            MonomialKey::Ore(_, n) => *n == 0,
            MonomialKey::Smash(_, b) => *b == zero(),
            MonomialKey::Pbw(i, j) => *i == 0 && *j == 0,
        }
    }

    fn inverse_grouplike(&self, k: &MonomialKey) -> MonomialKey {
        match (&self.family, k) {
            (Family::Semidirect(_), MonomialKey::Pair(l, r)) => {
                let (l, r) = (-l * Exp::from_integer(SemidirectGroup::phi(r)), -r);
                MonomialKey::Pair(l, r)
            }
            (_, MonomialKey::Group(a)) => MonomialKey::Group(-a),
            (_, MonomialKey::Pair(a, b)) => MonomialKey::Pair(-a, -b),
            (_, MonomialKey::Ore(a, 0)) => MonomialKey::Ore(-a, 0),
            (_, MonomialKey::Smash(a, _)) => MonomialKey::Smash(-a, zero()),
            (_, k @ MonomialKey::Pbw(0, 0)) => k.clone(),
            _ => unreachable!("not a grouplike key: {k:?}"),
        }
    }

    /// Writes a non-grouplike key as `prefix · generator`, exactly.
    fn split_last(&self, k: &MonomialKey) -> Option<(MonomialKey, MonomialKey)> {
        match (&self.family, k) {
            (_, MonomialKey::Ore(a, n)) if *n > 0 => Some((MonomialKey::Ore(*a, n - 1), MonomialKey::Ore(zero(), 1))),
            (Family::TypeB { monoid, .. }, MonomialKey::Smash(a, b)) if *b != zero() => {
                let d = monoid_contains(monoid, b).ok().flatten().expect("validated monoid exponent");
                let (&p, _) = d.iter().next().expect("positive exponent");
                let step = exp(1, p as i64);
                Some((MonomialKey::Smash(*a, b - step), MonomialKey::Smash(zero(), step)))
            }
            (_, MonomialKey::Pbw(i, j)) if *j > 0 => Some((MonomialKey::Pbw(*i, j - 1), MonomialKey::Pbw(0, 1))),
            (_, MonomialKey::Pbw(i, 0)) if *i > 0 => Some((MonomialKey::Pbw(i - 1, 0), MonomialKey::Pbw(1, 0))),
            _ => None,
        }
    }

    /// The grouplike `w` with Δ(gen) = gen⊗1 + w⊗gen.
    fn generator_weight(&self, gen: &MonomialKey) -> MonomialKey {
        match (&self.family, gen) {
            (Family::TypeA { e, .. }, MonomialKey::Ore(..)) => MonomialKey::Ore(*e, 0),
            (Family::TypeC { e0, .. }, MonomialKey::Ore(..)) => MonomialKey::Ore(*e0, 0),
            (Family::TypeB { .. }, MonomialKey::Smash(_, b)) => MonomialKey::Smash(*b, zero()),
            (_, MonomialKey::Pbw(..)) => MonomialKey::Pbw(0, 0),
            _ => unreachable!("not a generator: {gen:?}"),
        }
    }

    fn z_past_x(&self, n: u32, a: &Exp) -> Terms {
        if let Some(t) = self.cache.z_past_x.lock().unwrap().get(&(n, *a)) {
            return t.clone();
        }
        let Family::TypeC { e0, tau, .. } = &self.family else { unreachable!("z_past_x outside the C family") };
        let out: Terms = if n == 0 {
            Arc::new(vec![(MonomialKey::Ore(*a, 0), Scalar::one())])
        } else {
            let prev = self.z_past_x(n - 1, a);
            let mut acc = BTreeMap::new();
            for (k, s) in prev.iter() {
                let MonomialKey::Ore(c, m) = k else { unreachable!() };
                accumulate(&mut acc, MonomialKey::Ore(*c, m + 1), s.clone());
                let t = tau.evaluate(c);
                if !t.is_zero() {
                    let st = s.mul_ref(&t);
                    accumulate(&mut acc, MonomialKey::Ore(exp_add(c, e0), *m), st.clone());
                    accumulate(&mut acc, MonomialKey::Ore(*c, *m), st.neg_ref());
                }
            }
            Arc::new(acc.into_iter().collect())
        };
        self.cache.z_past_x.lock().unwrap().insert((n, *a), out.clone());
        out
    }

    /// Product of two normal-form monomials.
    pub fn mul_keys(&self, u: &MonomialKey, v: &MonomialKey) -> Vec<(MonomialKey, Scalar)> {
        use MonomialKey::*;
        match (&self.family, u, v) {
            (Family::GroupQ(_), Group(a), Group(b)) => vec![(Group(exp_add(a, b)), Scalar::one())],
            (Family::GroupQ2(_), Pair(a1, a2), Pair(b1, b2)) => {
                vec![(Pair(exp_add(a1, b1), exp_add(a2, b2)), Scalar::one())]
            }
            (Family::Semidirect(g), Pair(l, r), Pair(l2, r2)) => {
                let (l, r) = semidirect_multiply(g, &(*l, *r), &(*l2, *r2)).expect("validated keys");
                vec![(Pair(l, r), Scalar::one())]
            }
            (Family::Enveloping(kind), Pbw(i, j), Pbw(i2, j2)) => {
                if *kind == LieKind::Abelian || *j == 0 || *i2 == 0 {
                    return vec![(Pbw(i + i2, j + j2), Scalar::one())];
                }
                // y^j x^{i2} = (x - j)^{i2} y^j
                let shift = BigInt::from(-(*j as i64));
                let mut binom = BigInt::one();
                let mut out = Vec::with_capacity(*i2 as usize + 1);
                for k in 0..=*i2 {
                    if k > 0 {
                        binom = binom * BigInt::from(i2 - k + 1) / BigInt::from(k);
                    }
                    let c = &binom * shift.pow(i2 - k);
                    out.push((Pbw(i + k, j + j2), int_scalar(c)));
                }
                out
            }
            (Family::TypeA { chi, .. }, Ore(a, n), Ore(a2, n2)) => {
                let key = Ore(exp_add(a, a2), n + n2);
                if *n == 0 {
                    return vec![(key, Scalar::one())];
                }
                let c = match &self.alias {
                    Some(AffineLabel::A { q, .. }) => {
                        // direct rule xz = qzx, so z^n x^{a2} = q^{-a2 n} x^{a2} z^n
                        let k = a2.to_integer() * *n as i64;
                        q.pow_i64(-k).expect("unit")
                    }
                    _ => self.chi_value(chi, a2).pow_i64(*n as i64).expect("unit"),
                };
                vec![(key, c)]
            }
            (Family::TypeC { .. }, Ore(a, n), Ore(a2, n2)) => {
                if *n == 0 {
                    return vec![(Ore(exp_add(a, a2), n + n2), Scalar::one())];
                }
                self.z_past_x(*n, a2)
                    .iter()
                    .map(|(k, s)| {
                        let Ore(c, m) = k else { unreachable!() };
                        (Ore(exp_add(a, c), m + n2), s.clone())
                    })
                    .collect()
            }
            (Family::TypeB { chi, .. }, Smash(a, b), Smash(a2, b2)) => {
                let key = Smash(exp_add(a, a2), exp_add(b, b2));
                if *b == zero() || *a2 == zero() {
                    return vec![(key, Scalar::one())];
                }
                let c = self.chi_value(chi, &exp_mul(a2, b)).inv().expect("unit");
                vec![(key, c)]
            }
            _ => panic!("monomials {u:?} and {v:?} do not belong to family {}", self.tag()),
        }
    }

    pub(crate) fn mul_terms(
        &self,
        left: &[(MonomialKey, Scalar)],
        right: &[(MonomialKey, Scalar)],
    ) -> BTreeMap<MonomialKey, Scalar> {
        let mut acc = BTreeMap::new();
        for (a, s) in left {
            for (b, t) in right {
                let st = s.mul_ref(t);
                for (k, c) in self.mul_keys(a, b) {
                    accumulate(&mut acc, k, st.mul_ref(&c));
                }
            }
        }
        acc
    }

    pub(crate) fn tensor_mul_terms(
        &self,
        left: &[((MonomialKey, MonomialKey), Scalar)],
        right: &[((MonomialKey, MonomialKey), Scalar)],
    ) -> BTreeMap<(MonomialKey, MonomialKey), Scalar> {
        let mut acc = BTreeMap::new();
        for ((a, b), s) in left {
            for ((c, d), t) in right {
                let st = s.mul_ref(t);
                let ac = self.mul_keys(a, c);
                let bd = self.mul_keys(b, d);
                for (k1, c1) in &ac {
                    let sc = st.mul_ref(c1);
                    for (k2, c2) in &bd {
                        accumulate(&mut acc, (k1.clone(), k2.clone()), sc.mul_ref(c2));
                    }
                }
            }
        }
        acc
    }

    /// Δ of a monomial: grouplikes go to g⊗g, everything else is peeled
    /// into `prefix · generator` and multiplied out in the tensor square.
    pub fn delta_key(&self, k: &MonomialKey) -> DeltaTerms {
        if let Some(d) = self.cache.delta.lock().unwrap().get(k) {
            return d.clone();
        }
        let out: DeltaTerms = match self.split_last(k) {
            None => Arc::new(vec![((k.clone(), k.clone()), Scalar::one())]),
            Some((prefix, gen)) => {
                let w = self.generator_weight(&gen);
                let dg = vec![((gen.clone(), self.one_key()), Scalar::one()), ((w, gen), Scalar::one())];
                let dp = self.delta_key(&prefix);
                Arc::new(self.tensor_mul_terms(&dp, &dg).into_iter().collect())
            }
        };
        self.cache.delta.lock().unwrap().insert(k.clone(), out.clone());
        out
    }

    /// S of a monomial, extended anti-multiplicatively from
    /// S(g) = g⁻¹ and S(v) = −w⁻¹v for a (1,w)-skew primitive generator v.
    pub fn antipode_key(&self, k: &MonomialKey) -> Terms {
        if let Some(d) = self.cache.antipode.lock().unwrap().get(k) {
            return d.clone();
        }
        let out: Terms = match self.split_last(k) {
            None => Arc::new(vec![(self.inverse_grouplike(k), Scalar::one())]),
            Some((prefix, gen)) => {
                let w_inv = self.inverse_grouplike(&self.generator_weight(&gen));
                let sg: Vec<_> = self.mul_keys(&w_inv, &gen).into_iter().map(|(k, c)| (k, c.neg_ref())).collect();
                let sp = self.antipode_key(&prefix);
                Arc::new(self.mul_terms(&sg, &sp).into_iter().collect())
            }
        };
        self.cache.antipode.lock().unwrap().insert(k.clone(), out.clone());
        out
    }
}
