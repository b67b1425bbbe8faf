use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::families::{presentation, HopfInstance};
use crate::hopf::{Element, MonomialKey};
use crate::{HopfError, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthReport {
    /// dims[n] = number of normal-form monomials reached by products of
    /// at most n generators.
    pub dims: Vec<u64>,
    /// Least-squares slope of log dim against log n over [n_max/2, n_max].
    #[serde(serialize_with = "slope_as_rational")]
    pub slope: Option<f64>,
}

/// Three decimal places, written as an exact fraction over 1000.
fn slope_as_rational<S: Serializer>(s: &Option<f64>, ser: S) -> std::result::Result<S::Ok, S::Error> {
    match s {
        None => ser.serialize_none(),
        Some(v) => {
            let r = num_rational::Ratio::new((v * 1000.0).round() as i64, 1000);
            ser.serialize_str(&r.to_string())
        }
    }
}

fn fit_slope(dims: &[u64]) -> Option<f64> {
    let n_max = dims.len().checked_sub(1)?;
    let lo = (n_max / 2).max(1);
    let pts: Vec<(f64, f64)> = (lo..=n_max).map(|n| ((n as f64).ln(), (dims[n] as f64).ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Some(sxy / sxx)
}

/// Closes {1} under left multiplication by the generators, n_max times.
///
/// Each step adds the support of every product g·m with m new at the
/// previous step. For families whose products of monomials are monomials
/// this counts F_n exactly; when rewriting spreads a product over several
/// monomials (C, nonabelian U) it counts the monomial hull of F_n.
pub fn growth_dimensions(inst: &Arc<HopfInstance>, gens: &[Element], n_max: u32) -> Result<GrowthReport> {
    let gen_keys: Vec<MonomialKey> = gens.iter().flat_map(|g| g.terms().keys().cloned()).collect();
    let mut seen: BTreeSet<MonomialKey> = BTreeSet::from([inst.one_key()]);
    let mut frontier = vec![inst.one_key()];
    let mut dims = vec![1u64];
    for n in 1..=n_max {
        let mut next = Vec::new();
        for m in &frontier {
            for g in &gen_keys {
                for (k, _) in inst.mul_keys(g, m) {
                    if !seen.contains(&k) {
                        seen.insert(k.clone());
                        next.push(k);
                    }
                }
            }
        }
        if next.is_empty() {
            return Err(HopfError::NonGenerating(format!("span stopped growing at length {n}")));
        }
        frontier = next;
        dims.push(seen.len() as u64);
    }
    if n_max >= 1 {
        for (name, g) in presentation(inst)?.generators {
            if g.terms().keys().any(|k| !seen.contains(k)) {
                return Err(HopfError::NonGenerating(format!("generator {name} is not reached")));
            }
        }
    }
    let slope = fit_slope(&dims);
    Ok(GrowthReport { dims, slope })
}
