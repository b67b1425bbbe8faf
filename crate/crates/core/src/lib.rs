//! Exact computation with the Hopf algebra families appearing in the
//! classification of affine Hopf domains of Gelfand-Kirillov dimension two
//! and their infinite-dimensional, non-noetherian cousins.

pub mod analysis;
pub mod arith;
pub mod error;
pub mod families;
pub mod groups;
pub mod hopf;
pub mod linalg;
pub mod scalars;

pub use error::{HopfError, Result};
pub use scalars::{Cyclotomic, Field, RationalFunction, RootOrder};

pub type Rational = num_rational::BigRational;
pub type Scalar = scalars::Scalar;
