use std::fmt;

use crate::groups::Exp;

/// A normal-form monomial. Group parts sit to the left of Ore/monoid parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialKey {
    /// x^a in kG, G ⊆ ℚ.
    Group(Exp),
    /// A group element of ℚ² or of L ⋊ R.
    Pair(Exp, Exp),
    /// x^a z^n in an Ore extension of kG.
    Ore(Exp, u32),
    /// x^a y^b in kM # kG.
    Smash(Exp, Exp),
    /// x^i y^j in U(𝔤).
    Pbw(u32, u32),
}

pub(crate) fn fmt_power(f: &mut fmt::Formatter<'_>, sym: &str, e: &Exp) -> fmt::Result {
    if *e == Exp::from_integer(1) {
        write!(f, "{sym}")
    } else if e.is_integer() && *e > Exp::from_integer(0) {
        write!(f, "{sym}^{e}")
    } else {
        write!(f, "{sym}^({e})")
    }
}

impl MonomialKey {
    pub fn is_one(&self) -> bool {
        let zero = Exp::from_integer(0);
        match self {
            MonomialKey::Group(a) => *a == zero,
            MonomialKey::Pair(a, b) => *a == zero && *b == zero,
            MonomialKey::Ore(a, n) => *a == zero && *n == 0,
            MonomialKey::Smash(a, b) => *a == zero && *b == zero,
            MonomialKey::Pbw(i, j) => *i == 0 && *j == 0,
        }
    }

    /// The group exponent of a key whose non-group part is trivial.
    pub fn group_exponent(&self) -> Option<Exp> {
        let zero = Exp::from_integer(0);
        match self {
            MonomialKey::Group(a) => Some(*a),
            MonomialKey::Ore(a, 0) => Some(*a),
            MonomialKey::Smash(a, b) if *b == zero => Some(*a),
            _ => None,
        }
    }
}

/// Formats a key with the symbol names of its family.
pub struct KeyDisplay<'a> {
    pub key: &'a MonomialKey,
    pub pair_symbols: (&'a str, &'a str),
}

impl fmt::Display for KeyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = Exp::from_integer(0);
        if self.key.is_one() {
            return write!(f, "1");
        }
        let mut parts: Vec<(&str, Exp)> = Vec::new();
        match self.key {
            MonomialKey::Group(a) => parts.push(("x", *a)),
            MonomialKey::Pair(a, b) => {
                parts.push((self.pair_symbols.0, *a));
                parts.push((self.pair_symbols.1, *b));
            }
            MonomialKey::Ore(a, n) => {
                parts.push(("x", *a));
                parts.push(("z", Exp::from_integer(*n as i64)));
            }
            MonomialKey::Smash(a, b) => {
                parts.push(("x", *a));
                parts.push(("y", *b));
            }
            MonomialKey::Pbw(i, j) => {
                parts.push(("x", Exp::from_integer(*i as i64)));
                parts.push(("y", Exp::from_integer(*j as i64)));
            }
        }
        let mut first = true;
        for (sym, e) in parts {
            if e == zero {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            fmt_power(f, sym, &e)?;
        }
        Ok(())
    }
}
