use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::key::KeyDisplay;
use super::{accumulate, MonomialKey};
use crate::families::{Family, HopfInstance};
use crate::scalars::{Field, Scalar};
use crate::{HopfError, Result};

/// A finite linear combination of normal-form monomials.
#[derive(Clone)]
pub struct Element {
    inst: Arc<HopfInstance>,
    terms: BTreeMap<MonomialKey, Scalar>,
}

/// A finite linear combination of pure tensors of monomials.
#[derive(Clone)]
pub struct TensorElement {
    inst: Arc<HopfInstance>,
    terms: BTreeMap<(MonomialKey, MonomialKey), Scalar>,
}

pub(crate) fn same_instance(a: &Arc<HopfInstance>, b: &Arc<HopfInstance>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn mismatch() -> HopfError {
    HopfError::InvalidData("elements belong to different instances".into())
}

impl Element {
    pub fn zero(inst: &Arc<HopfInstance>) -> Self {
        Element { inst: inst.clone(), terms: BTreeMap::new() }
    }

    pub fn one(inst: &Arc<HopfInstance>) -> Self {
        Self::from_terms_unchecked(inst, [(inst.one_key(), Scalar::one())])
    }

    pub fn scalar(inst: &Arc<HopfInstance>, c: Scalar) -> Self {
        Self::from_terms_unchecked(inst, [(inst.one_key(), c)])
    }

    pub fn monomial(inst: &Arc<HopfInstance>, key: MonomialKey) -> Result<Self> {
        Self::term(inst, key, Scalar::one())
    }

    pub fn term(inst: &Arc<HopfInstance>, key: MonomialKey, c: Scalar) -> Result<Self> {
        inst.validate_key(&key)?;
        Ok(Self::from_terms_unchecked(inst, [(key, c)]))
    }

    pub fn from_terms(
        inst: &Arc<HopfInstance>,
        terms: impl IntoIterator<Item = (MonomialKey, Scalar)>,
    ) -> Result<Self> {
        let terms: Vec<_> = terms.into_iter().collect();
        for (k, _) in &terms {
            inst.validate_key(k)?;
        }
        Ok(Self::from_terms_unchecked(inst, terms))
    }

    pub(crate) fn from_terms_unchecked(
        inst: &Arc<HopfInstance>,
        terms: impl IntoIterator<Item = (MonomialKey, Scalar)>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            accumulate(&mut map, k, c);
        }
        Element { inst: inst.clone(), terms: map }
    }

    pub(crate) fn from_map(inst: &Arc<HopfInstance>, terms: BTreeMap<MonomialKey, Scalar>) -> Self {
        Element { inst: inst.clone(), terms }
    }

    pub fn instance(&self) -> &Arc<HopfInstance> {
        &self.inst
    }

    pub fn terms(&self) -> &BTreeMap<MonomialKey, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, k: &MonomialKey) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_terms_unchecked(&self.inst, self.terms.iter().map(|(k, v)| (k.clone(), v.mul_ref(c))))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !same_instance(&self.inst, &other.inst) {
            return Err(mismatch());
        }
        let mut map = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut map, k.clone(), c.clone());
        }
        Ok(Element { inst: self.inst.clone(), terms: map })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !same_instance(&self.inst, &other.inst) {
            return Err(mismatch());
        }
        let left: Vec<_> = self.terms.iter().map(|(k, c)| (k.clone(), c.clone())).collect();
        let right: Vec<_> = other.terms.iter().map(|(k, c)| (k.clone(), c.clone())).collect();
        Ok(Element { inst: self.inst.clone(), terms: self.inst.mul_terms(&left, &right) })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Element::one(&self.inst);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn display_key<'a>(inst: &'a HopfInstance, key: &'a MonomialKey) -> KeyDisplay<'a> {
        let pair_symbols = match inst.family() {
            Family::GroupQ2(_) => ("x1", "x2"),
            _ => ("x", "w"),
        };
        KeyDisplay { key, pair_symbols }
    }
}

/// Sign and body of a coefficient; compound bodies are parenthesized.
pub(crate) fn format_coefficient(c: &Scalar) -> (bool, String) {
    let s = c.to_string();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s.clone()),
    };
    if body.contains(['+', '-']) {
        (false, format!("({s})"))
    } else {
        (neg, body)
    }
}

pub(crate) fn write_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Scalar)>,
) -> fmt::Result {
    let mut first = true;
    for (mono, c) in terms {
        let (neg, body) = format_coefficient(c);
        let piece = if body == "1" {
            mono
        } else if mono == "1" {
            body
        } else {
            format!("{body}*{mono}")
        };
        match (first, neg) {
            (true, false) => write!(f, "{piece}")?,
            (true, true) => write!(f, "-{piece}")?,
            (false, false) => write!(f, " + {piece}")?,
            (false, true) => write!(f, " - {piece}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inst = &*self.inst;
        write_sum(f, self.terms.iter().map(|(k, c)| (Element::display_key(inst, k).to_string(), c)))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_instance(&self.inst, &other.inst) && self.terms == other.terms
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        self.try_add(o).expect("instance mismatch")
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, o: &Element) -> Element {
        self.try_add(&-o).expect("instance mismatch")
    }
}

impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, o: &Element) -> Element {
        self.try_mul(o).expect("instance mismatch")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Scalar::one().neg_ref())
    }
}

impl TensorElement {
    pub fn zero(inst: &Arc<HopfInstance>) -> Self {
        TensorElement { inst: inst.clone(), terms: BTreeMap::new() }
    }

    /// a ⊗ b.
    pub fn pure(a: &Element, b: &Element) -> Result<Self> {
        if !same_instance(&a.inst, &b.inst) {
            return Err(mismatch());
        }
        let mut map = BTreeMap::new();
        for (k1, c1) in &a.terms {
            for (k2, c2) in &b.terms {
                accumulate(&mut map, (k1.clone(), k2.clone()), c1.mul_ref(c2));
            }
        }
        Ok(TensorElement { inst: a.inst.clone(), terms: map })
    }

    pub(crate) fn from_map(inst: &Arc<HopfInstance>, terms: BTreeMap<(MonomialKey, MonomialKey), Scalar>) -> Self {
        TensorElement { inst: inst.clone(), terms }
    }

    pub fn from_terms(
        inst: &Arc<HopfInstance>,
        terms: impl IntoIterator<Item = ((MonomialKey, MonomialKey), Scalar)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((a, b), c) in terms {
            inst.validate_key(&a)?;
            inst.validate_key(&b)?;
            accumulate(&mut map, (a, b), c);
        }
        Ok(TensorElement { inst: inst.clone(), terms: map })
    }

    pub fn instance(&self) -> &Arc<HopfInstance> {
        &self.inst
    }

    pub fn terms(&self) -> &BTreeMap<(MonomialKey, MonomialKey), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in &self.terms {
            accumulate(&mut map, k.clone(), v.mul_ref(c));
        }
        TensorElement { inst: self.inst.clone(), terms: map }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !same_instance(&self.inst, &other.inst) {
            return Err(mismatch());
        }
        let mut map = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut map, k.clone(), c.clone());
        }
        Ok(TensorElement { inst: self.inst.clone(), terms: map })
    }

    /// (a⊗b)(c⊗d) = ac⊗bd.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !same_instance(&self.inst, &other.inst) {
            return Err(mismatch());
        }
        let left: Vec<_> = self.terms.iter().map(|(k, c)| (k.clone(), c.clone())).collect();
        let right: Vec<_> = other.terms.iter().map(|(k, c)| (k.clone(), c.clone())).collect();
        Ok(TensorElement { inst: self.inst.clone(), terms: self.inst.tensor_mul_terms(&left, &right) })
    }

    pub fn pow(&self, n: u32) -> Self {
        let one = Element::one(&self.inst);
        let mut out = TensorElement::pure(&one, &one).expect("same instance");
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inst = &*self.inst;
        write_sum(
            f,
            self.terms.iter().map(|((a, b), c)| {
                (format!("{} (x) {}", Element::display_key(inst, a), Element::display_key(inst, b)), c)
            }),
        )
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        same_instance(&self.inst, &other.inst) && self.terms == other.terms
    }
}

impl<'a> Add<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn add(self, o: &TensorElement) -> TensorElement {
        self.try_add(o).expect("instance mismatch")
    }
}

impl<'a> Sub<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn sub(self, o: &TensorElement) -> TensorElement {
        self.try_add(&o.scale(&Scalar::one().neg_ref())).expect("instance mismatch")
    }
}

impl<'a> Mul<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn mul(self, o: &TensorElement) -> TensorElement {
        self.try_mul(o).expect("instance mismatch")
    }
}
