//! Exact scalars: rationals, cyclotomic fields and the one-parameter
//! extension used for generic (non-root-of-unity) parameters.

mod cyclotomic;
pub mod field;
mod literal;
mod poly;
mod qbinomial;
mod ratfunc;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, RootOrder};
pub use field::Field;
pub use literal::parse_scalar;
pub use poly::Poly;
pub use qbinomial::qbinomial;
pub use ratfunc::RationalFunction;

use num_rational::BigRational;

use crate::error::HopfError;

/// Base-field scalar: an element of ℚ(ζ_N)(t).
pub type Scalar = RationalFunction<Cyclotomic>;

impl Scalar {
    pub fn from_cyclotomic(c: Cyclotomic) -> Self {
        Scalar::constant(c)
    }

    pub fn zeta_pow(n: u64, k: i64) -> Self {
        Scalar::constant(Cyclotomic::zeta_pow(n, k))
    }

    pub fn rational(r: &BigRational) -> Self {
        Scalar::from_rational(r)
    }

    pub fn as_cyclotomic(&self) -> Option<Cyclotomic> {
        self.as_constant()
    }
}

/// Multiplicative order of a nonzero scalar. Anything with a genuine
/// dependence on `t` is not a root of unity.
pub fn root_order(s: &Scalar) -> Result<RootOrder, HopfError> {
    if num_traits::Zero::is_zero(s) {
        return Err(HopfError::Domain("root_order of zero".into()));
    }
    match s.as_cyclotomic() {
        Some(c) => Ok(c.root_order().expect("nonzero")),
        None => Ok(RootOrder::NotRootOfUnity),
    }
}
