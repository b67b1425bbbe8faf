use std::sync::Arc;

use serde::Serialize;

use crate::families::{presentation, HopfInstance};
use crate::hopf::counit;
use crate::linalg::{self, SparseVec};
use crate::scalars::Scalar;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TangentReport {
    pub generators: Vec<String>,
    /// One row per relation: its linear part in the generator classes.
    pub matrix: Vec<Vec<String>>,
    pub rank: usize,
    /// dim 𝔪/𝔪² = number of generators minus the rank.
    pub dim: usize,
}

pub fn tangent_dimension(inst: &Arc<HopfInstance>) -> Result<TangentReport> {
    let pres = presentation(inst)?;
    let eps: Vec<Scalar> = pres.generators.iter().map(|(_, g)| counit(g)).collect();
    let rows: Vec<Vec<Scalar>> = pres.relations.iter().map(|r| r.linear_part(&eps)).collect();
    let rank = linalg::rank(rows.iter().map(|row| {
        row.iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(i, c)| (i, c.clone()))
            .collect::<SparseVec<usize, Scalar>>()
    }));
    Ok(TangentReport {
        generators: pres.generators.iter().map(|(n, _)| n.clone()).collect(),
        matrix: rows.iter().map(|r| r.iter().map(Scalar::to_string).collect()).collect(),
        rank,
        dim: pres.generators.len() - rank,
    })
}
