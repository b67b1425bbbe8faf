use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use super::{accumulate, Element, MonomialKey};
use crate::families::{box_keys, HopfInstance};
use crate::linalg::{self, SparseVec};
use crate::scalars::{Field, Scalar};
use crate::{HopfError, Result};

/// Grouplikes supported on the box monomials.
///
/// In these pointed algebras a grouplike is a single monomial up to scalar,
/// so candidates are the monomials m with Δ(m) ∈ k·(m⊗m), rescaled so ε = 1.
pub fn find_grouplikes(inst: &Arc<HopfInstance>, box_size: u32) -> Vec<Element> {
    let mut out = Vec::new();
    for k in box_keys(inst, box_size) {
        let d = inst.delta_key(&k);
        if d.len() != 1 {
            continue;
        }
        let ((a, b), c) = &d[0];
        if *a != k || *b != k {
            continue;
        }
        let eps = inst.counit_key(&k);
        // v = m/c satisfies Δv = v⊗v; it is grouplike iff ε(v) = 1
        if eps == *c {
            let v = Element::from_terms_unchecked(inst, [(k.clone(), c.inv().expect("unit"))]);
            out.push(v);
        }
    }
    out
}

/// The (1, g)-skew primitives in the span of the box monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewPrimitiveSpace {
    pub weight: MonomialKey,
    pub basis: Vec<Element>,
    pub box_size: u32,
}

impl SkewPrimitiveSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vectors(&self) -> Vec<SparseVec<MonomialKey, Scalar>> {
        self.basis.iter().map(|e| e.terms().clone()).collect()
    }
}

/// Solves Δ(v) − v⊗1 − g⊗v = 0 exactly over all box monomials. Each
/// column is the full tensor image of a monomial, so nothing is truncated.
pub fn find_skew_primitives(inst: &Arc<HopfInstance>, g: &MonomialKey, box_size: u32) -> Result<SkewPrimitiveSpace> {
    inst.validate_key(g)?;
    let dg = inst.delta_key(g);
    let grouplike = dg.len() == 1 && dg[0].0 == (g.clone(), g.clone()) && dg[0].1.is_one();
    if !grouplike || !inst.counit_key(g).is_one() {
        return Err(HopfError::Domain(format!("weight {} is not grouplike", Element::display_key(inst, g))));
    }
    let keys = box_keys(inst, box_size);
    let one = inst.one_key();
    let minus = Scalar::one().neg_ref();
    let columns: Vec<SparseVec<(MonomialKey, MonomialKey), Scalar>> = keys
        .iter()
        .map(|k| {
            let mut col = BTreeMap::new();
            for (kk, c) in inst.delta_key(k).iter() {
                accumulate(&mut col, kk.clone(), c.clone());
            }
            accumulate(&mut col, (k.clone(), one.clone()), minus.clone());
            accumulate(&mut col, (g.clone(), k.clone()), minus.clone());
            col
        })
        .collect();
    let kernel = linalg::kernel(columns);
    let raw: Vec<SparseVec<MonomialKey, Scalar>> =
        kernel.into_iter().map(|combo| combo.into_iter().map(|(j, c)| (keys[j].clone(), c)).collect()).collect();
    let basis = linalg::reduced_basis(raw).into_iter().map(|v| Element::from_map(inst, v)).collect();
    Ok(SkewPrimitiveSpace { weight: g.clone(), basis, box_size })
}
