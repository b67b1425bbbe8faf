use std::collections::BTreeMap;

use super::{exp, Exp};
use crate::arith;
use crate::{HopfError, Result};

/// M = Σ ℤ₊(1/p_i) for pairwise coprime p_i ≥ 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubmonoidM {
    primes: Vec<u64>,
}

impl SubmonoidM {
    pub fn new(primes: Vec<u64>) -> Result<Self> {
        for (i, &p) in primes.iter().enumerate() {
            if p < 2 {
                return Err(HopfError::InvalidData(format!("p_i must be at least 2, got {p}")));
            }
            for &q in &primes[..i] {
                if arith::gcd(p, q) != 1 {
                    return Err(HopfError::InvalidData(format!("not pairwise coprime: {q} and {p}")));
                }
            }
        }
        Ok(SubmonoidM { primes })
    }

    /// No validation; used to build deliberately broken data.
    pub fn new_unchecked(primes: Vec<u64>) -> Self {
        SubmonoidM { primes }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// m = ∏ p_i.
    pub fn modulus(&self) -> u64 {
        self.primes.iter().product()
    }

    /// The submonoid on the first `k` generators.
    pub fn truncate(&self, k: usize) -> Self {
        SubmonoidM { primes: self.primes[..k.min(self.primes.len())].to_vec() }
    }

    pub fn generator(&self, p: u64) -> Exp {
        exp(1, p as i64)
    }
}

/// Decomposes `b = Σ c_i/p_i` with `c_i ≥ 0`, or `None` when `b ∉ M`.
///
/// With `m = ∏ p_i` and `N = b·m`, each `c_i` is forced modulo `p_i`
/// (`c_i·m_i ≡ N`), so `b ∈ M` iff the least residues already fit under `N`.
/// The spare multiple of `m` goes to the first generator.
pub fn monoid_contains(m: &SubmonoidM, b: &Exp) -> Result<Option<BTreeMap<u64, u64>>> {
    if *b < Exp::from_integer(0) {
        return Err(HopfError::Domain(format!("monoid membership needs b >= 0, got {b}")));
    }
    let mut out = BTreeMap::new();
    if *b == Exp::from_integer(0) {
        return Ok(Some(out));
    }
    if m.primes.is_empty() {
        return Ok(None);
    }
    let modulus = m.modulus() as i128;
    let den = *b.denom() as i128;
    if modulus % den != 0 {
        return Ok(None);
    }
    let total = *b.numer() as i128 * (modulus / den);
    let mut used = 0i128;
    let mut coeffs = Vec::with_capacity(m.primes.len());
    for &p in &m.primes {
        let p = p as i128;
        let mi = modulus / p;
        let inv = arith::mod_inverse(mi % p, p).expect("pairwise coprime");
        let r = (total.rem_euclid(p) * inv).rem_euclid(p);
        used += r * mi;
        coeffs.push(r);
    }
    if used > total {
        return Ok(None);
    }
    coeffs[0] += (total - used) / modulus * m.primes[0] as i128;
    for (&p, c) in m.primes.iter().zip(coeffs) {
        if c > 0 {
            out.insert(p, c as u64);
        }
    }
    Ok(Some(out))
}
