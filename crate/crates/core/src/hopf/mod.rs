//! Elements, tensor squares and the Hopf structure maps, with exact axiom
//! checks and linear solvers for grouplikes and skew primitives.

mod element;
mod key;
mod literal;
mod solve;
mod structure;
mod verify;

use std::collections::BTreeMap;

use num_traits::Zero;

pub use element::{Element, TensorElement};
pub use key::{KeyDisplay, MonomialKey};
pub use literal::{parse_element, parse_key};
pub use solve::{find_grouplikes, find_skew_primitives, SkewPrimitiveSpace};
pub use verify::{verify_axioms, AxiomReport, CheckResult};

use crate::scalars::{Field, Scalar};
use crate::Result;

/// `map[k] += c`, dropping the entry when it cancels.
pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get().add_ref(&c);
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

pub fn multiply(u: &Element, v: &Element) -> Result<Element> {
    u.try_mul(v)
}

pub fn comultiply(u: &Element) -> TensorElement {
    let inst = u.instance();
    let mut map = BTreeMap::new();
    for (k, c) in u.terms() {
        for (kk, d) in inst.delta_key(k).iter() {
            accumulate(&mut map, kk.clone(), c.mul_ref(d));
        }
    }
    TensorElement::from_map(inst, map)
}

pub fn counit(u: &Element) -> Scalar {
    let inst = u.instance();
    u.terms().iter().fold(Scalar::zero(), |acc, (k, c)| acc.add_ref(&c.mul_ref(&inst.counit_key(k))))
}

pub fn antipode(u: &Element) -> Element {
    let inst = u.instance();
    let mut map = BTreeMap::new();
    for (k, c) in u.terms() {
        for (kk, d) in inst.antipode_key(k).iter() {
            accumulate(&mut map, kk.clone(), c.mul_ref(d));
        }
    }
    Element::from_map(inst, map)
}
