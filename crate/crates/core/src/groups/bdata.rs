use num_traits::One;
use serde::Serialize;

use super::{exp, CharacterKind, MultiplicativeCharacter, RationalSubgroup, SubmonoidM};
use crate::arith;
use crate::scalars::{root_order, RootOrder};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BDataCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of validating (G, {p_i}, χ). Checks run in a fixed order and stop
/// at the first violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BDataReport {
    pub checks: Vec<BDataCheck>,
}

impl BDataReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failure(&self) -> Option<&BDataCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) -> bool {
        self.checks.push(BDataCheck { name, passed, detail: detail.into() });
        passed
    }
}

pub fn validate_bdata(g: &RationalSubgroup, m: &SubmonoidM, chi: &MultiplicativeCharacter) -> BDataReport {
    let mut r = BDataReport { checks: Vec::new() };
    let ps = m.primes();

    let ok = ps.len() >= 2;
    let detail = if ok {
        format!("{} generators", ps.len())
    } else {
        "needs at least two p_i; a single generator gives a Hopf algebra isomorphic to A_G(e,chi)".to_string()
    };
    if !r.push("index_set", ok, detail) {
        return r;
    }

    if let Some(&p) = ps.iter().find(|&&p| p < 2) {
        r.push("coprime", false, format!("p_i = {p} is below 2"));
        return r;
    }
    for i in 0..ps.len() {
        for j in 0..i {
            if arith::gcd(ps[i], ps[j]) != 1 {
                r.push("coprime", false, format!("not pairwise coprime: {} and {}", ps[j], ps[i]));
                return r;
            }
        }
    }
    r.push("coprime", true, "pairwise coprime");

    for &p in ps {
        if !g.contains(&exp(1, p as i64)) {
            r.push("reciprocals_in_group", false, format!("1/{p} is not in G"));
            return r;
        }
    }
    r.push("reciprocals_in_group", true, "every 1/p_i lies in G");

    // GM = Σ G/p_i; a finitely specified character can only cover it when G is cyclic
    let domain_ok = match (g.generator(), chi.kind()) {
        (_, CharacterKind::Trivial) => Ok(()),
        (None, _) => Err("G is not cyclic, so GM is not in the character's domain".to_string()),
        (Some(gen), _) => ps
            .iter()
            .map(|&p| gen / exp(p as i64, 1))
            .find(|a| !chi.in_domain(a))
            .map_or(Ok(()), |a| Err(format!("chi is undefined at {a} in GM"))),
    };
    if let Err(e) = domain_ok {
        r.push("character_domain", false, e);
        return r;
    }
    r.push("character_domain", true, "GM lies in the domain of chi");

    for &p in ps {
        let a = exp(1, (p * p) as i64);
        let v = match chi.evaluate(&a) {
            Ok(v) => v,
            Err(e) => {
                r.push("primitive_roots", false, format!("chi(1/{}) undefined: {e}", p * p));
                return r;
            }
        };
        let ord = root_order(&v);
        if ord != Ok(RootOrder::Finite(p)) {
            r.push("primitive_roots", false, format!("chi(1/{}) = {v} is not a primitive {p}-th root of unity", p * p));
            return r;
        }
    }
    r.push("primitive_roots", true, "chi(1/p_i^2) is a primitive p_i-th root for all i");

    let mut probes: Vec<(String, super::Exp)> = vec![("1".into(), exp(1, 1))];
    for (i, &p) in ps.iter().enumerate() {
        probes.push((format!("1/{p}"), exp(1, p as i64)));
        for &q in &ps[..i] {
            probes.push((format!("1/{}", p * q), exp(1, (p * q) as i64)));
        }
    }
    for (name, a) in probes {
        match chi.evaluate(&a) {
            Ok(v) if v.is_one() => {}
            Ok(v) => {
                r.push("derived_identities", false, format!("chi({name}) = {v}, expected 1"));
                return r;
            }
            Err(e) => {
                r.push("derived_identities", false, format!("chi({name}) undefined: {e}"));
                return r;
            }
        }
    }
    r.push("derived_identities", true, "chi(1) = chi(1/p_i) = chi(1/p_ip_j) = 1");
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar;
    use std::collections::BTreeMap;

    fn chi() -> MultiplicativeCharacter {
        MultiplicativeCharacter::crt(BTreeMap::from([
            (2, parse_scalar("-1").unwrap()),
            (3, parse_scalar("zeta(3)").unwrap()),
        ]))
        .unwrap()
    }

    #[test]
    fn golden_passes() {
        let r = validate_bdata(&RationalSubgroup::cyclic(6), &SubmonoidM::new(vec![2, 3]).unwrap(), &chi());
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn failures_name_the_condition() {
        let r = validate_bdata(&RationalSubgroup::cyclic(6), &SubmonoidM::new_unchecked(vec![2, 4]), &chi());
        assert!(r.failure().unwrap().detail.contains("not pairwise coprime"));
        let r = validate_bdata(&RationalSubgroup::localization(2), &SubmonoidM::new(vec![2, 3]).unwrap(), &chi());
        assert_eq!(r.failure().unwrap().detail, "1/3 is not in G");
        let r = validate_bdata(&RationalSubgroup::cyclic(6), &SubmonoidM::new(vec![2]).unwrap(), &chi());
        assert!(r.failure().unwrap().detail.contains("isomorphic to A_G"));
        let flat = MultiplicativeCharacter::crt(BTreeMap::from([
            (2, parse_scalar("-1").unwrap()),
            (3, parse_scalar("1").unwrap()),
        ]))
        .unwrap();
        let r = validate_bdata(&RationalSubgroup::cyclic(6), &SubmonoidM::new(vec![2, 3]).unwrap(), &flat);
        assert_eq!(r.failure().unwrap().name, "primitive_roots");
        let r = validate_bdata(&RationalSubgroup::localization(6), &SubmonoidM::new(vec![2, 3]).unwrap(), &chi());
        assert_eq!(r.failure().unwrap().name, "character_domain");
    }
}
