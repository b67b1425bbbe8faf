use super::{exp_add, Exp, RationalSubgroup};
use crate::{HopfError, Result};

/// L ⋊ R with R ⊆ ℤ_(2) acting on L through φ(r) = ±1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemidirectGroup {
    l: RationalSubgroup,
    r: RationalSubgroup,
}

impl SemidirectGroup {
    pub fn new(l: RationalSubgroup, r: RationalSubgroup) -> Result<Self> {
        if r.steinitz().contains_key(&2) {
            return Err(HopfError::InvalidData("R must have odd denominators (R inside Z_(2))".into()));
        }
        Ok(SemidirectGroup { l, r })
    }

    pub fn l(&self) -> &RationalSubgroup {
        &self.l
    }

    pub fn r(&self) -> &RationalSubgroup {
        &self.r
    }

    pub fn contains(&self, (l, r): &(Exp, Exp)) -> bool {
        self.l.contains(l) && self.r.contains(r)
    }

    /// +1 on 2ℤ_(2), −1 elsewhere.
    pub fn phi(r: &Exp) -> i64 {
        if r.numer() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self, (l, r): &(Exp, Exp)) -> (Exp, Exp) {
        (-l * Exp::from_integer(Self::phi(r)), -r)
    }
}

/// (l, r)(l', r') = (l + φ(r) l', r + r').
pub fn semidirect_multiply(g: &SemidirectGroup, u: &(Exp, Exp), v: &(Exp, Exp)) -> Result<(Exp, Exp)> {
    for x in [u, v] {
        if !g.contains(x) {
            return Err(HopfError::NotInGroup(format!("({}, {}) is not in L x R", x.0, x.1)));
        }
    }
    let twist = Exp::from_integer(SemidirectGroup::phi(&u.1));
    Ok((exp_add(&u.0, &(twist * v.0)), exp_add(&u.1, &v.1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{exp, exp_int};

    #[test]
    fn products() {
        let g = SemidirectGroup::new(RationalSubgroup::localization(15), RationalSubgroup::localization(3)).unwrap();
        let l = exp(2, 5);
        assert_eq!(semidirect_multiply(&g, &(exp_int(0), exp_int(1)), &(l, exp_int(0))).unwrap(), (-l, exp_int(1)));
        assert_eq!(
            semidirect_multiply(&g, &(exp(1, 3), exp_int(2)), &(exp(1, 5), exp(1, 3))).unwrap(),
            (exp(8, 15), exp(7, 3))
        );
        assert!(semidirect_multiply(&g, &(exp(1, 2), exp_int(0)), &(exp_int(0), exp_int(0))).is_err());
    }

    #[test]
    fn rejects_even_denominators() {
        assert!(SemidirectGroup::new(RationalSubgroup::integers(), RationalSubgroup::localization(2)).is_err());
    }
}
