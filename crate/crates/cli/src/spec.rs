//! Algebra spec files: a JSON description of one instance.
//!
//! ```json
//! { "algebra": { "family": "affine_a", "n": 1, "q": "1" }, "stage": 1 }
//! ```
//!
//! Exponents and scalars are strings (`"1/2"`, `"-zeta(3)"`, `"t"`), never
//! floats. Unknown fields are rejected at every level.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use hopfdom::families::{
    make_a, make_affine_a, make_affine_b, make_affine_c, make_b, make_c, make_enveloping, make_group_algebra,
    prime_tower, GroupData, HopfInstance, LieKind,
};
use hopfdom::groups::{
    AdditiveCharacter, Exp, MultiplicativeCharacter, RankTwoGroup, RationalSubgroup, SemidirectGroup, SteinitzExponent,
    SubmonoidM,
};
use hopfdom::scalars::{parse_scalar, Scalar};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub algebra: AlgebraSpec,
    #[serde(default)]
    pub stage: Option<u32>,
    #[serde(default)]
    pub plan: Plan,
}

/// Defaults for the run; command-line flags take precedence.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Plan {
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    #[serde(rename = "box")]
    pub box_size: Option<u32>,
    pub nmax: Option<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraSpec {
    GroupQ {
        group: GroupSpec,
    },
    /// Generator rows of each stage, as exponent strings.
    GroupQ2 {
        stages: Vec<[[String; 2]; 2]>,
    },
    Semidirect {
        l: GroupSpec,
        r: GroupSpec,
    },
    Enveloping {
        lie: Lie,
    },
    TypeA {
        group: GroupSpec,
        e: String,
        character: CharacterSpec,
    },
    TypeC {
        group: GroupSpec,
        e0: String,
        lambda: String,
    },
    TypeB {
        group: GroupSpec,
        primes: Vec<u64>,
        character: CharacterSpec,
    },
    AffineA {
        n: i64,
        q: String,
    },
    AffineB {
        n: u64,
        p0: u64,
        primes: Vec<u64>,
        q: String,
    },
    AffineC {
        n: i64,
    },
    PrimeTower {
        primes: Vec<u64>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lie {
    Abelian,
    Nonabelian,
}

/// `"integers"`, `{"cyclic": d}` for ℤ(1/d), `{"localization": d}` for
/// ℤ[1/d], or explicit Steinitz exponents `{"steinitz": {"2": "inf", "3": 1}}`.
#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Integers,
    Cyclic(u64),
    Localization(u64),
    Steinitz(BTreeMap<String, StValue>),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum StValue {
    Finite(u32),
    Word(String),
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum CharacterSpec {
    Trivial,
    Cyclic {
        generator: String,
        value: String,
    },
    /// p ↦ χ(1/p²).
    Crt(BTreeMap<String, String>),
}

fn scalar(src: &str) -> Result<Scalar, String> {
    parse_scalar(src).map_err(|e| format!("scalar {src:?}: {e}"))
}

fn exponent(src: &str) -> Result<Exp, String> {
    Exp::from_str(src.trim()).map_err(|_| format!("exponent {src:?} is not a fraction"))
}

fn prime_key(src: &str) -> Result<u64, String> {
    src.trim().parse().map_err(|_| format!("key {src:?} is not a positive integer"))
}

impl GroupSpec {
    fn build(&self) -> Result<RationalSubgroup, String> {
        let check = |d: u64| if d == 0 { Err("group parameter must be positive".to_string()) } else { Ok(d) };
        Ok(match self {
            GroupSpec::Integers => RationalSubgroup::integers(),
            GroupSpec::Cyclic(d) => RationalSubgroup::cyclic(check(*d)?),
            GroupSpec::Localization(d) => RationalSubgroup::localization(check(*d)?),
            GroupSpec::Steinitz(map) => {
                let mut st = BTreeMap::new();
                for (p, v) in map {
                    let p = prime_key(p)?;
                    let e = match v {
                        StValue::Finite(k) => SteinitzExponent::Finite(*k),
                        StValue::Word(w) if w == "inf" || w == "omega" => SteinitzExponent::Infinite,
                        StValue::Word(w) => {
                            return Err(format!("steinitz exponent {w:?} is neither a count nor \"inf\""))
                        }
                    };
                    st.insert(p, e);
                }
                RationalSubgroup::new(st).map_err(|e| e.to_string())?
            }
        })
    }
}

impl CharacterSpec {
    fn build(&self) -> Result<MultiplicativeCharacter, String> {
        let built = match self {
            CharacterSpec::Trivial => return Ok(MultiplicativeCharacter::trivial()),
            CharacterSpec::Cyclic { generator, value } => {
                MultiplicativeCharacter::cyclic(exponent(generator)?, scalar(value)?)
            }
            CharacterSpec::Crt(roots) => {
                let roots =
                    roots.iter().map(|(p, v)| Ok((prime_key(p)?, scalar(v)?))).collect::<Result<_, String>>()?;
                MultiplicativeCharacter::crt(roots)
            }
        };
        built.map_err(|e| e.to_string())
    }
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<Arc<HopfInstance>, String> {
        let err = |e: hopfdom::HopfError| e.to_string();
        Ok(match self {
            AlgebraSpec::GroupQ { group } => make_group_algebra(GroupData::Q(group.build()?)),
            AlgebraSpec::GroupQ2 { stages } => {
                let rows = stages
                    .iter()
                    .map(|s| {
                        Ok([[exponent(&s[0][0])?, exponent(&s[0][1])?], [exponent(&s[1][0])?, exponent(&s[1][1])?]])
                    })
                    .collect::<Result<Vec<_>, String>>()?;
                make_group_algebra(GroupData::Q2(RankTwoGroup::from_stages(rows).map_err(err)?))
            }
            AlgebraSpec::Semidirect { l, r } => {
                make_group_algebra(GroupData::Semidirect(SemidirectGroup::new(l.build()?, r.build()?).map_err(err)?))
            }
            AlgebraSpec::Enveloping { lie: Lie::Abelian } => make_enveloping(LieKind::Abelian),
            AlgebraSpec::Enveloping { lie: Lie::Nonabelian } => make_enveloping(LieKind::Nonabelian),
            AlgebraSpec::TypeA { group, e, character } => {
                make_a(group.build()?, exponent(e)?, character.build()?).map_err(err)?
            }
            AlgebraSpec::TypeC { group, e0, lambda } => {
                make_c(group.build()?, exponent(e0)?, AdditiveCharacter::new(scalar(lambda)?)).map_err(err)?
            }
            AlgebraSpec::TypeB { group, primes, character } => {
                let monoid = SubmonoidM::new(primes.clone()).map_err(err)?;
                make_b(group.build()?, monoid, character.build()?).map_err(err)?
            }
            AlgebraSpec::AffineA { n, q } => make_affine_a(*n, scalar(q)?).map_err(err)?,
            AlgebraSpec::AffineB { n, p0, primes, q } => {
                make_affine_b(*n, *p0, primes.clone(), scalar(q)?).map_err(err)?
            }
            AlgebraSpec::AffineC { n } => make_affine_c(*n).map_err(err)?,
            AlgebraSpec::PrimeTower { primes } => prime_tower(primes).map_err(err)?,
        })
    }
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("spec schema: {e}"))
    }

    pub fn load(path: &str) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        Self::parse(&text).map_err(|e| format!("{path}: {e}"))
    }

    pub fn instance(&self, stage: Option<u32>) -> Result<Arc<HopfInstance>, String> {
        let inst = self.algebra.build()?;
        Ok(match stage.or(self.stage) {
            Some(n) => inst.with_stage(n),
            None => inst,
        })
    }
}
