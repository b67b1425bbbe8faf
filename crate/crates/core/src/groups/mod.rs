//! Subgroups of ℚ and ℚ², the monoid M, semidirect products and characters.

mod bdata;
mod character;
mod monoid;
mod rank_two;
mod semidirect;
mod subgroup;

pub use bdata::{validate_bdata, BDataCheck, BDataReport};
pub use character::{AdditiveCharacter, CharacterKind, MultiplicativeCharacter};
pub use monoid::{monoid_contains, SubmonoidM};
pub use rank_two::{RankTwoGroup, Rows};
pub use semidirect::{semidirect_multiply, SemidirectGroup};
pub use subgroup::{RationalSubgroup, SteinitzExponent};

use num_rational::Ratio;

/// Exponent of a monomial: an element of a subgroup of ℚ.
///
/// Stage data stays desk-scale, so 64-bit numerators and denominators are
/// ample; arithmetic overflow panics instead of wrapping.
pub type Exp = Ratio<i64>;

pub fn exp(n: i64, d: i64) -> Exp {
    Ratio::new(n, d)
}

pub fn exp_int(n: i64) -> Exp {
    Ratio::from_integer(n)
}

/// Checked sum of exponents.
pub(crate) fn exp_add(a: &Exp, b: &Exp) -> Exp {
    let l = num_integer::lcm(*a.denom(), *b.denom());
    let n = (a.numer().checked_mul(l / a.denom()))
        .and_then(|x| b.numer().checked_mul(l / b.denom()).and_then(|y| x.checked_add(y)))
        .expect("exponent overflow");
    Ratio::new(n, l)
}

pub(crate) fn exp_mul(a: &Exp, b: &Exp) -> Exp {
    let g1 = num_integer::gcd(*a.numer(), *b.denom()).max(1);
    let g2 = num_integer::gcd(*b.numer(), *a.denom()).max(1);
    let n = (a.numer() / g1).checked_mul(b.numer() / g2).expect("exponent overflow");
    let d = (a.denom() / g2).checked_mul(b.denom() / g1).expect("exponent overflow");
    Ratio::new(n, d)
}

pub(crate) fn exp_scale(a: &Exp, k: i64) -> Exp {
    exp_mul(a, &exp_int(k))
}

/// `a / g` as an integer when `g` divides `a` in ℤg.
pub(crate) fn exp_quotient(a: &Exp, g: &Exp) -> Option<i64> {
    let q = a / g;
    q.is_integer().then(|| q.to_integer())
}

pub fn exp_from_rational(r: &crate::Rational) -> crate::Result<Exp> {
    use num_traits::ToPrimitive;
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => Ok(Ratio::new(n, d)),
        _ => Err(crate::HopfError::Unsupported(format!("exponent {r} exceeds 64-bit range"))),
    }
}

pub fn exp_to_rational(a: &Exp) -> crate::Rational {
    crate::Rational::new((*a.numer()).into(), (*a.denom()).into())
}
