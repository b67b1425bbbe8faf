use super::{exp_int, Exp, RationalSubgroup};
use crate::{HopfError, Result};

/// Two generating rows of a lattice in ℚ².
pub type Rows = [[Exp; 2]; 2];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Tower {
    Explicit(Vec<Rows>),
    Diagonal(RationalSubgroup, RationalSubgroup),
}

/// A subgroup of ℚ² containing ℤ², presented as an ascending union of
/// lattices L₁ ⊆ L₂ ⊆ …, each given by two generating rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankTwoGroup {
    tower: Tower,
}

fn solve(rows: &Rows, v: &[Exp; 2]) -> Option<[Exp; 2]> {
    let [[a, b], [c, d]] = rows;
    let det = a * d - b * c;
    if det == exp_int(0) {
        return None;
    }
    // v = s*r1 + t*r2
    let s = (v[0] * d - v[1] * c) / det;
    let t = (a * v[1] - b * v[0]) / det;
    Some([s, t])
}

fn in_lattice(rows: &Rows, v: &[Exp; 2]) -> bool {
    solve(rows, v).is_some_and(|[s, t]| s.is_integer() && t.is_integer())
}

impl RankTwoGroup {
    /// Explicit finite tower; later stages repeat the last lattice.
    pub fn from_stages(stages: Vec<Rows>) -> Result<Self> {
        if stages.is_empty() {
            return Err(HopfError::InvalidData("rank-two tower needs at least one stage".into()));
        }
        let unit = [[exp_int(1), exp_int(0)], [exp_int(0), exp_int(1)]];
        for (i, rows) in stages.iter().enumerate() {
            if solve(rows, &[exp_int(1), exp_int(0)]).is_none() {
                return Err(HopfError::InvalidData(format!("stage {} rows are linearly dependent", i + 1)));
            }
            if i == 0 {
                for e in &unit {
                    if !in_lattice(rows, e) {
                        return Err(HopfError::InvalidData("first stage does not contain Z^2".into()));
                    }
                }
            } else {
                for r in &stages[i - 1] {
                    if !in_lattice(rows, r) {
                        return Err(HopfError::InvalidData(format!("stage {i} is not contained in stage {}", i + 1)));
                    }
                }
            }
        }
        Ok(RankTwoGroup { tower: Tower::Explicit(stages) })
    }

    /// G₁ × G₂ with the product of the stage towers of each factor.
    pub fn diagonal(g1: RationalSubgroup, g2: RationalSubgroup) -> Self {
        RankTwoGroup { tower: Tower::Diagonal(g1, g2) }
    }

    pub fn stage(&self, n: u32) -> Rows {
        let n = n.max(1);
        match &self.tower {
            Tower::Explicit(v) => v[(n as usize - 1).min(v.len() - 1)],
            Tower::Diagonal(a, b) => [[a.stage_group(n), exp_int(0)], [exp_int(0), b.stage_group(n)]],
        }
    }

    /// Number of distinct explicit stages (`None` for a lazy tower).
    pub fn explicit_len(&self) -> Option<usize> {
        match &self.tower {
            Tower::Explicit(v) => Some(v.len()),
            Tower::Diagonal(..) => None,
        }
    }

    pub fn stage_contains(&self, n: u32, v: &[Exp; 2]) -> bool {
        in_lattice(&self.stage(n), v)
    }

    /// Coordinates of `v` in the stage basis, when `v` lies in that stage.
    pub fn coordinates(&self, n: u32, v: &[Exp; 2]) -> Option<[i64; 2]> {
        let [s, t] = solve(&self.stage(n), v)?;
        (s.is_integer() && t.is_integer()).then(|| [s.to_integer(), t.to_integer()])
    }

    pub fn contains(&self, v: &[Exp; 2]) -> bool {
        match &self.tower {
            Tower::Explicit(s) => in_lattice(s.last().expect("nonempty"), v),
            Tower::Diagonal(a, b) => a.contains(&v[0]) && b.contains(&v[1]),
        }
    }
}
