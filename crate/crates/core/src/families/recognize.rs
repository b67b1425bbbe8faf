use serde::Serialize;

use super::{Family, HopfInstance};
use crate::arith;
use crate::groups::{exp, MultiplicativeCharacter, RationalSubgroup};
use crate::scalars::{root_order, RootOrder, Scalar};
use crate::{HopfError, Result};

/// Recognition data of an affine stage ℤ(1/t) with primes p_1 < … < p_s.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AffineRecognition {
    pub t: u64,
    pub m: u64,
    pub primes: Vec<u64>,
    /// m_i = m/p_i.
    pub m_i: Vec<u64>,
    pub n: u64,
    /// c_i with Σ c_i m_i = 1, so that 1/m²n = Σ (c_i/t)(1/p_i).
    pub bezout: Vec<i64>,
    #[serde(serialize_with = "crate::families::recognize::ser_scalar")]
    pub q: Scalar,
    pub ell: u64,
    pub p0: u64,
    pub recognized_type: char,
}

pub(crate) fn ser_scalar<S: serde::Serializer>(s: &Scalar, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&s.to_string())
}

/// Integers c_i with Σ c_i·v_i = gcd(v).
fn bezout(values: &[u64]) -> (i128, Vec<i64>) {
    let mut g = 0i128;
    let mut coeffs: Vec<i64> = Vec::new();
    for &v in values {
        let e = num_integer::Integer::extended_gcd(&g, &(v as i128));
        for c in coeffs.iter_mut() {
            *c = (*c as i128 * e.x) as i64;
        }
        coeffs.push(e.y as i64);
        g = e.gcd;
    }
    (g, coeffs)
}

/// Computes n, q, ℓ, p₀ for the stage ℤ(1/t) with the given primes and
/// asserts p₀ | n and gcd(p₀, p_i) = 1.
pub fn recognize_data(
    group: &RationalSubgroup,
    primes: &[u64],
    chi: &MultiplicativeCharacter,
) -> Result<AffineRecognition> {
    let gen = group.generator().ok_or_else(|| HopfError::Domain(format!("stage group {group} is not cyclic")))?;
    let t = *gen.denom() as u64;
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    if primes.is_empty() {
        return Err(HopfError::Domain("recognition needs at least one p_i".into()));
    }
    let m: u64 = primes.iter().product();
    if !t.is_multiple_of(m) {
        return Err(HopfError::InvalidData(format!("m = {m} does not divide t = {t}")));
    }
    let n = t / m;
    let m_i: Vec<u64> = primes.iter().map(|p| m / p).collect();
    let (g, bez) = bezout(&m_i);
    if g != 1 {
        return Err(HopfError::InvalidData("the p_i are not pairwise coprime".into()));
    }
    let q = chi.evaluate(&exp(1, (m * m * n) as i64))?;
    let ell = match root_order(&q)? {
        RootOrder::Finite(l) => l,
        RootOrder::NotRootOfUnity => {
            return Err(HopfError::Domain(format!("q = {q} is not a root of unity")));
        }
    };
    if !(m * n).is_multiple_of(ell) {
        return Err(HopfError::InvalidData(format!("ell = {ell} does not divide mn = {}", m * n)));
    }
    let p0 = m * n / ell;
    if !n.is_multiple_of(p0) {
        return Err(HopfError::InvalidData(format!("p0 = {p0} does not divide n = {n}")));
    }
    if let Some(p) = primes.iter().find(|&&p| arith::gcd(p, p0) != 1) {
        return Err(HopfError::InvalidData(format!("p0 = {p0} shares a factor with {p}")));
    }
    let recognized_type = if primes.len() == 1 { 'A' } else { 'B' };
    Ok(AffineRecognition { t, m, primes, m_i, n, bezout: bez, q, ell, p0, recognized_type })
}

pub fn recognize_affine(stage: &HopfInstance) -> Result<AffineRecognition> {
    match stage.family() {
        Family::TypeB { group, monoid, chi } => recognize_data(group, monoid.primes(), chi),
        _ => Err(HopfError::Domain(format!("recognition needs a type B stage, got {}", stage.tag()))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoResult {
    pub isomorphic: bool,
    pub certificate: String,
}

fn chi_label(a: &crate::groups::Exp) -> String {
    format!("χ({a})")
}

/// Compares normalized data: the Steinitz data of G, the prime sets and
/// χ on {1/p_i²} together with the generator of G.
pub fn is_isomorphic(a: &HopfInstance, b: &HopfInstance) -> IsoResult {
    let no = |c: String| IsoResult { isomorphic: false, certificate: c };
    let (Family::TypeB { group: g1, monoid: m1, chi: c1 }, Family::TypeB { group: g2, monoid: m2, chi: c2 }) =
        (a.family(), b.family())
    else {
        return no(format!("not comparable: {} vs {}", a.tag(), b.tag()));
    };
    if g1 != g2 {
        return no(format!("G differs: {g1} vs {g2}"));
    }
    let mut p1 = m1.primes().to_vec();
    let mut p2 = m2.primes().to_vec();
    p1.sort_unstable();
    p2.sort_unstable();
    if p1 != p2 {
        return no(format!("prime sets differ: {p1:?} vs {p2:?}"));
    }
    let mut probes: Vec<crate::groups::Exp> = p1.iter().map(|&p| exp(1, (p * p) as i64)).collect();
    // GM is generated by g/p_i when G = ℤg
    if let Some(g) = g1.generator() {
        probes.push(g);
        probes.extend(p1.iter().map(|&p| g / exp(p as i64, 1)));
    }
    for x in probes {
        match (c1.evaluate(&x), c2.evaluate(&x)) {
            (Ok(u), Ok(v)) if u == v => {}
            _ => return no(format!("{} differs", chi_label(&x))),
        }
    }
    IsoResult { isomorphic: true, certificate: "same G, prime set and character".into() }
}
