use std::sync::Arc;

use num_traits::{One, Zero};

use super::{Family, HopfInstance, LieKind};
use crate::groups::{exp, exp_add, exp_mul, exp_quotient, Exp};
use crate::hopf::{Element, MonomialKey};
use crate::scalars::{Field, Scalar};
use crate::{HopfError, Result};

/// Σ c_w · w over words in the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub name: String,
    pub words: Vec<(Scalar, Vec<usize>)>,
}

impl Relation {
    pub fn evaluate(&self, generators: &[(String, Element)]) -> Element {
        let inst = generators[0].1.instance();
        let mut acc = Element::zero(inst);
        for (c, word) in &self.words {
            let mut w = Element::one(inst);
            for &i in word {
                w = &w * &generators[i].1;
            }
            acc = &acc + &w.scale(c);
        }
        acc
    }

    /// Image in 𝔪/𝔪² coordinates: substitute g = ε(g) + ĝ and keep the
    /// part linear in the ĝ.
    pub fn linear_part(&self, counits: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); counits.len()];
        for (c, word) in &self.words {
            for (j, &g) in word.iter().enumerate() {
                let mut coeff = c.clone();
                for (l, &h) in word.iter().enumerate() {
                    if l != j {
                        coeff = coeff.mul_ref(&counits[h]);
                    }
                }
                out[g] = out[g].add_ref(&coeff);
            }
        }
        out
    }
}

/// Finite presentation of the current stage.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<(String, Element)>,
    pub relations: Vec<Relation>,
}

struct Builder<'a> {
    inst: &'a Arc<HopfInstance>,
    generators: Vec<(String, Element)>,
    relations: Vec<Relation>,
}

impl Builder<'_> {
    fn gen(&mut self, key: MonomialKey) -> Result<usize> {
        let e = Element::monomial(self.inst, key)?;
        self.generators.push((e.to_string(), e));
        Ok(self.generators.len() - 1)
    }

    /// A grouplike and its inverse, with both inverse relations.
    fn unit_pair(&mut self, key: MonomialKey, inv: MonomialKey) -> Result<(usize, usize)> {
        let a = self.gen(key)?;
        let b = self.gen(inv)?;
        let one = Scalar::one();
        let m1 = one.neg_ref();
        let (na, nb) = (self.generators[a].0.clone(), self.generators[b].0.clone());
        self.rel(format!("{na}*{nb} = 1"), vec![(one.clone(), vec![a, b]), (m1.clone(), vec![])]);
        self.rel(format!("{nb}*{na} = 1"), vec![(one, vec![b, a]), (m1, vec![])]);
        Ok((a, b))
    }

    fn rel(&mut self, name: String, words: Vec<(Scalar, Vec<usize>)>) {
        self.relations.push(Relation { name, words });
    }

    fn commute(&mut self, a: usize, b: usize, c: Scalar) {
        let name = format!("{0}*{1} = ({c})*{1}*{0}", self.generators[a].0, self.generators[b].0);
        self.rel(name, vec![(Scalar::one(), vec![a, b]), (c.neg_ref(), vec![b, a])]);
    }
}

/// Word for g^k using `g` or its inverse.
fn power_word(k: i64, g: usize, g_inv: usize) -> Vec<usize> {
    vec![if k >= 0 { g } else { g_inv }; k.unsigned_abs() as usize]
}

pub fn presentation(inst: &Arc<HopfInstance>) -> Result<Presentation> {
    let mut b = Builder { inst, generators: Vec::new(), relations: Vec::new() };
    let z = || Exp::from_integer(0);
    match inst.family() {
        Family::GroupQ(_) => {
            let g = inst.stage_generator().expect("rational family");
            b.unit_pair(MonomialKey::Group(g), MonomialKey::Group(-g))?;
        }
        Family::GroupQ2(grp) => {
            let [r1, r2] = grp.stage(inst.stage());
            let (a, _) = b.unit_pair(MonomialKey::Pair(r1[0], r1[1]), MonomialKey::Pair(-r1[0], -r1[1]))?;
            let (c, _) = b.unit_pair(MonomialKey::Pair(r2[0], r2[1]), MonomialKey::Pair(-r2[0], -r2[1]))?;
            b.commute(a, c, Scalar::one());
        }
        Family::Semidirect(g) => {
            let gl = g.l().stage_group(inst.stage());
            let gr = g.r().stage_group(inst.stage());
            let (a, a_inv) = b.unit_pair(MonomialKey::Pair(gl, z()), MonomialKey::Pair(-gl, z()))?;
            let (w, w_inv) = b.unit_pair(MonomialKey::Pair(z(), gr), MonomialKey::Pair(z(), -gr))?;
            // w a w⁻¹ = a⁻¹
            b.rel(
                "w*a*w^-1 = a^-1".into(),
                vec![(Scalar::one(), vec![w, a, w_inv]), (Scalar::one().neg_ref(), vec![a_inv])],
            );
        }
        Family::Enveloping(kind) => {
            let x = b.gen(MonomialKey::Pbw(1, 0))?;
            let y = b.gen(MonomialKey::Pbw(0, 1))?;
            let mut words = vec![(Scalar::one(), vec![x, y]), (Scalar::one().neg_ref(), vec![y, x])];
            if *kind == LieKind::Nonabelian {
                words.push((Scalar::one().neg_ref(), vec![y]));
            }
            b.rel("[x, y]".into(), words);
        }
        Family::TypeA { chi, .. } => {
            let g = inst.stage_generator().expect("rational family");
            let (x, _) = b.unit_pair(MonomialKey::Ore(g, 0), MonomialKey::Ore(-g, 0))?;
            let zz = b.gen(MonomialKey::Ore(z(), 1))?;
            // z x^g = χ(g) x^g z
            let c = inst.chi_value(chi, &g);
            b.commute(zz, x, c);
        }
        Family::TypeC { e0, tau, .. } => {
            let g = inst.stage_generator().expect("rational family");
            let (x, x_inv) = b.unit_pair(MonomialKey::Ore(g, 0), MonomialKey::Ore(-g, 0))?;
            let zz = b.gen(MonomialKey::Ore(z(), 1))?;
            let k = exp_quotient(&exp_add(&g, e0), &g).expect("e0 is a multiple of the stage generator");
            let t = tau.evaluate(&g);
            b.rel(
                "z*x = x*z + tau*(x^(1+e0) - x)".into(),
                vec![
                    (Scalar::one(), vec![zz, x]),
                    (Scalar::one().neg_ref(), vec![x, zz]),
                    (t.neg_ref(), power_word(k, x, x_inv)),
                    (t, vec![x]),
                ],
            );
        }
        Family::TypeB { chi, monoid, .. } => {
            let g = inst.stage_generator().expect("rational family");
            let (x, _) = b.unit_pair(MonomialKey::Smash(g, z()), MonomialKey::Smash(-g, z()))?;
            let ps = monoid.primes().to_vec();
            let mut ys = Vec::new();
            for &p in &ps {
                ys.push(b.gen(MonomialKey::Smash(z(), exp(1, p as i64)))?);
            }
            for (i, &p) in ps.iter().enumerate() {
                // x^g y_i = χ(g/p_i) y_i x^g
                let c = inst.chi_value(chi, &exp_mul(&g, &exp(1, p as i64)));
                b.commute(x, ys[i], c);
            }
            for i in 0..ys.len() {
                for j in i + 1..ys.len() {
                    b.commute(ys[i], ys[j], Scalar::one());
                }
            }
            for i in 1..ys.len() {
                let name = format!("y_{}^{} = y_{}^{}", ps[i - 1], ps[i - 1], ps[i], ps[i]);
                b.rel(
                    name,
                    vec![
                        (Scalar::one(), vec![ys[i - 1]; ps[i - 1] as usize]),
                        (Scalar::one().neg_ref(), vec![ys[i]; ps[i] as usize]),
                    ],
                );
            }
        }
    }
    if b.generators.is_empty() {
        return Err(HopfError::Unsupported("no presentation".into()));
    }
    Ok(Presentation { generators: b.generators, relations: b.relations })
}
