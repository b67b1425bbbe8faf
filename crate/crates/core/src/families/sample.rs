use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;

use super::{Family, HopfInstance};
use crate::groups::{exp, exp_add, exp_scale, Exp};
use crate::hopf::{Element, MonomialKey};
use crate::scalars::{Field, Scalar};

fn zero() -> Exp {
    Exp::from_integer(0)
}

/// Elements Σ c_i/p_i of M with Σ c_i ≤ bound, ascending.
fn monoid_ball(primes: &[u64], bound: u32) -> Vec<Exp> {
    let mut out = BTreeSet::from([zero()]);
    let mut frontier = vec![zero()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for b in &frontier {
            for &p in primes {
                let c = exp_add(b, &exp(1, p as i64));
                if out.insert(c) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    out.into_iter().collect()
}

/// Stage monomials with every exponent coordinate bounded by `box_size`
/// (in units of the stage generators; monoid part by generator count).
pub fn box_keys(inst: &HopfInstance, box_size: u32) -> Vec<MonomialKey> {
    let r = box_size as i64;
    let span = || -r..=r;
    let mut out = Vec::new();
    match inst.family() {
        Family::GroupQ(_) => {
            let g = inst.stage_generator().expect("rational family");
            out.extend(span().map(|j| MonomialKey::Group(exp_scale(&g, j))));
        }
        Family::GroupQ2(grp) => {
            let [r1, r2] = grp.stage(inst.stage());
            for i in span() {
                for j in span() {
                    let a = exp_add(&exp_scale(&r1[0], i), &exp_scale(&r2[0], j));
                    let b = exp_add(&exp_scale(&r1[1], i), &exp_scale(&r2[1], j));
                    out.push(MonomialKey::Pair(a, b));
                }
            }
        }
        Family::Semidirect(g) => {
            let (gl, gr) = (g.l().stage_group(inst.stage()), g.r().stage_group(inst.stage()));
            for i in span() {
                for j in span() {
                    out.push(MonomialKey::Pair(exp_scale(&gl, i), exp_scale(&gr, j)));
                }
            }
        }
        Family::Enveloping(_) => {
            for i in 0..=box_size {
                for j in 0..=box_size {
                    out.push(MonomialKey::Pbw(i, j));
                }
            }
        }
        Family::TypeA { .. } | Family::TypeC { .. } => {
            let g = inst.stage_generator().expect("rational family");
            for j in span() {
                for k in 0..=box_size {
                    out.push(MonomialKey::Ore(exp_scale(&g, j), k));
                }
            }
        }
        Family::TypeB { monoid, .. } => {
            let g = inst.stage_generator().expect("rational family");
            let ball = monoid_ball(monoid.primes(), box_size);
            for j in span() {
                for b in &ball {
                    out.push(MonomialKey::Smash(exp_scale(&g, j), *b));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn random_key<R: Rng>(inst: &HopfInstance, rng: &mut R) -> MonomialKey {
    let mut coord = || rng.gen_range(-3i64..=3);
    match inst.family() {
        Family::GroupQ(_) => MonomialKey::Group(exp_scale(&inst.stage_generator().expect("rational"), coord())),
        Family::GroupQ2(grp) => {
            let [r1, r2] = grp.stage(inst.stage());
            let (i, j) = (coord(), coord());
            MonomialKey::Pair(
                exp_add(&exp_scale(&r1[0], i), &exp_scale(&r2[0], j)),
                exp_add(&exp_scale(&r1[1], i), &exp_scale(&r2[1], j)),
            )
        }
        Family::Semidirect(g) => {
            let (i, j) = (coord(), coord());
            MonomialKey::Pair(
                exp_scale(&g.l().stage_group(inst.stage()), i),
                exp_scale(&g.r().stage_group(inst.stage()), j),
            )
        }
        Family::Enveloping(_) => MonomialKey::Pbw(rng.gen_range(0..=2), rng.gen_range(0..=2)),
        Family::TypeA { .. } | Family::TypeC { .. } => {
            let j = coord();
            MonomialKey::Ore(exp_scale(&inst.stage_generator().expect("rational"), j), rng.gen_range(0..=2))
        }
        Family::TypeB { monoid, .. } => {
            let j = coord();
            let mut b = zero();
            for _ in 0..rng.gen_range(0..=3) {
                let p = monoid.primes()[rng.gen_range(0..monoid.primes().len())];
                b = exp_add(&b, &exp(1, p as i64));
            }
            MonomialKey::Smash(exp_scale(&inst.stage_generator().expect("rational"), j), b)
        }
    }
}

/// A sum of one to three stage monomials with small nonzero integer
/// coefficients.
pub fn random_element<R: Rng>(inst: &Arc<HopfInstance>, rng: &mut R) -> Element {
    let terms = rng.gen_range(1..=3);
    let mut out = Element::zero(inst);
    for _ in 0..terms {
        let k = random_key(inst, rng);
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        out = &out + &Element::term(inst, k, Scalar::from_i64(c)).expect("stage monomial");
    }
    out
}
