//! Quantitative checks: growth of word-length filtrations, the tangent
//! space 𝔪/𝔪², predicted skew primitives, and the Takeuchi maps for pairs
//! of group algebras.

mod growth;
mod predict;
mod takeuchi;
mod tangent;

pub use growth::{growth_dimensions, GrowthReport};
pub use predict::expected_skew_primitives;
pub use takeuchi::{
    kernel_of_difference, takeuchi_maps, CanonicalSum, CosetQuotient, KernelEntry, KernelReport, PairSum, TakeuchiMaps,
};
pub use tangent::{tangent_dimension, TangentReport};

#[cfg(test)]
mod tests;
