use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{accumulate, antipode, comultiply, counit, Element, MonomialKey, TensorElement};
use crate::families::{box_keys, presentation, random_element, Family, HopfInstance};
use crate::groups::{exp, Exp};
use crate::linalg::rank;
use crate::scalars::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub instance: String,
    pub samples: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name.to_string(),
            passed: self.witness.is_none(),
            cases: self.cases,
            witness: self.witness,
        }
    }
}

type Triple = BTreeMap<(MonomialKey, MonomialKey, MonomialKey), Scalar>;

fn delta_left(t: &TensorElement) -> Triple {
    let inst = t.instance();
    let mut out = BTreeMap::new();
    for ((a, b), c) in t.terms() {
        for ((a1, a2), d) in inst.delta_key(a).iter() {
            accumulate(&mut out, (a1.clone(), a2.clone(), b.clone()), c.mul_ref(d));
        }
    }
    out
}

fn delta_right(t: &TensorElement) -> Triple {
    let inst = t.instance();
    let mut out = BTreeMap::new();
    for ((a, b), c) in t.terms() {
        for ((b1, b2), d) in inst.delta_key(b).iter() {
            accumulate(&mut out, (a.clone(), b1.clone(), b2.clone()), c.mul_ref(d));
        }
    }
    out
}

/// Σ ε(u₁)u₂ (left) or Σ u₁ε(u₂) (right).
fn counit_contract(t: &TensorElement, left: bool) -> Element {
    let inst = t.instance();
    let mut map = BTreeMap::new();
    for ((a, b), c) in t.terms() {
        let (drop, keep) = if left { (a, b) } else { (b, a) };
        accumulate(&mut map, keep.clone(), c.mul_ref(&inst.counit_key(drop)));
    }
    Element::from_map(inst, map)
}

/// Σ S(u₁)u₂ (left) or Σ u₁S(u₂) (right).
fn antipode_contract(t: &TensorElement, left: bool) -> Element {
    let inst = t.instance();
    let mut map = BTreeMap::new();
    for ((a, b), c) in t.terms() {
        let (l, r): (Vec<_>, Vec<_>) = if left {
            (inst.antipode_key(a).to_vec(), vec![(b.clone(), Scalar::one())])
        } else {
            (vec![(a.clone(), Scalar::one())], inst.antipode_key(b).to_vec())
        };
        for (k, d) in inst.mul_terms(&l, &r) {
            accumulate(&mut map, k, c.mul_ref(&d));
        }
    }
    Element::from_map(inst, map)
}

/// Exact check of the Hopf axioms on the stage generators and
/// `sample_count` random elements drawn from `seed`.
pub fn verify_axioms(inst: &Arc<HopfInstance>, sample_count: usize, seed: u64) -> AxiomReport {
    let pres = presentation(inst).ok();
    let gens: Vec<Element> = match &pres {
        Some(p) => p.generators.iter().map(|(_, g)| g.clone()).collect(),
        None => Vec::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<Element> = (0..sample_count).map(|_| random_element(inst, &mut rng)).collect();
    let singles: Vec<&Element> = gens.iter().chain(samples.iter()).collect();
    let mut pairs: Vec<(&Element, &Element)> = Vec::new();
    for a in &gens {
        for b in &gens {
            pairs.push((a, b));
        }
    }
    for w in samples.windows(2) {
        pairs.push((&w[0], &w[1]));
    }

    let mut coassoc = Tally::new("coassociativity");
    let mut counit_l = Tally::new("counit_left");
    let mut counit_r = Tally::new("counit_right");
    let mut anti_l = Tally::new("antipode_left");
    let mut anti_r = Tally::new("antipode_right");
    for u in &singles {
        let d = comultiply(u);
        coassoc.record(delta_left(&d) == delta_right(&d), || u.to_string());
        counit_l.record(counit_contract(&d, true) == **u, || u.to_string());
        counit_r.record(counit_contract(&d, false) == **u, || u.to_string());
        let unit = Element::scalar(inst, counit(u));
        anti_l.record(antipode_contract(&d, true) == unit, || u.to_string());
        anti_r.record(antipode_contract(&d, false) == unit, || u.to_string());
    }

    let mut delta_mul = Tally::new("delta_multiplicative");
    let mut eps_mul = Tally::new("counit_multiplicative");
    let mut s_anti = Tally::new("antipode_antimultiplicative");
    for (u, v) in &pairs {
        let uv = *u * *v;
        let w = || format!("({u}, {v})");
        delta_mul.record(comultiply(&uv) == &comultiply(u) * &comultiply(v), w);
        eps_mul.record(counit(&uv) == counit(u).mul_ref(&counit(v)), w);
        s_anti.record(antipode(&uv) == &antipode(v) * &antipode(u), w);
    }

    let mut checks: Vec<CheckResult> = [coassoc, counit_l, counit_r, anti_l, anti_r, delta_mul, eps_mul, s_anti]
        .into_iter()
        .map(Tally::finish)
        .collect();

    let mut rel = Tally::new("relations");
    if let Some(p) = &pres {
        for r in &p.relations {
            rel.record(r.evaluate(&p.generators).is_zero(), || r.name.clone());
        }
    }
    checks.push(rel.finish());
    checks.push(antipode_injectivity(inst));

    if let Family::TypeB { monoid, .. } = inst.family() {
        checks.extend(b_power_checks(inst, monoid.primes()));
    }

    AxiomReport { instance: inst.describe(), samples: sample_count, seed, checks }
}

/// S is injective on the span of the box monomials, the stage-wise form
/// of bijectivity.
fn antipode_injectivity(inst: &Arc<HopfInstance>) -> CheckResult {
    let keys = box_keys(inst, INJECTIVITY_BOX);
    let images = keys.iter().map(|k| antipode(&Element::monomial(inst, k.clone()).expect("box key")).terms().clone());
    let r = rank(images);
    let mut t = Tally::new("antipode_injective");
    t.record(r == keys.len(), || format!("rank {r} on {} box monomials", keys.len()));
    t.finish()
}

const INJECTIVITY_BOX: u32 = 3;

/// δ_i^{p_i} = y⊗1 + x⊗y and (−x_i⁻¹y_i)^{p_i} = −y x⁻¹ for every i: the
/// relation y_i^{p_i} = y_j^{p_j} is respected by Δ and S.
fn b_power_checks(inst: &Arc<HopfInstance>, primes: &[u64]) -> Vec<CheckResult> {
    let zero = Exp::from_integer(0);
    let one = Exp::from_integer(1);
    let mono = |a: Exp, b: Exp| Element::monomial(inst, MonomialKey::Smash(a, b)).expect("stage monomial");
    let y = mono(zero, one);
    let x = mono(one, zero);
    let x_inv = mono(-one, zero);
    let unit = Element::one(inst);
    let target_delta = &TensorElement::pure(&y, &unit).expect("same") + &TensorElement::pure(&x, &y).expect("same");
    let target_s = -&(&y * &x_inv);

    let mut dp = Tally::new("delta_power_consistency");
    let mut sp = Tally::new("antipode_power_consistency");
    for &p in primes {
        let step = exp(1, p as i64);
        let yi = mono(zero, step);
        let delta_i = TensorElement::pure(&yi, &unit)
            .expect("same")
            .try_add(&TensorElement::pure(&mono(step, zero), &yi).expect("same"))
            .expect("same");
        dp.record(delta_i.pow(p as u32) == target_delta, || format!("p = {p}"));
        let si = -&(&mono(-step, zero) * &yi);
        sp.record(si.pow(p as u32) == target_s, || format!("p = {p}"));
    }
    vec![dp.finish(), sp.finish()]
}
