use std::collections::BTreeMap;

use num_traits::Zero;

use super::*;
use crate::hopf::{
    antipode, comultiply, counit, find_skew_primitives, parse_element, verify_axioms, Element, MonomialKey,
    TensorElement,
};
use crate::scalars::parse_scalar;

fn s(v: &str) -> Scalar {
    parse_scalar(v).unwrap()
}

fn golden_b() -> Arc<HopfInstance> {
    let chi = MultiplicativeCharacter::crt(BTreeMap::from([(2, s("-1")), (3, s("zeta(3)"))])).unwrap();
    make_b(RationalSubgroup::cyclic(6), SubmonoidM::new(vec![2, 3]).unwrap(), chi).unwrap()
}

fn el(inst: &Arc<HopfInstance>, src: &str) -> Element {
    parse_element(inst, src).unwrap()
}

#[test]
fn c3_commutation() {
    let c = make_affine_c(3).unwrap();
    assert_eq!(&el(&c, "z") * &el(&c, "x"), el(&c, "x*z + x^(-1) - x"));
    assert_eq!(el(&c, "z*x").to_string(), el(&c, "x*z + x^(-1) - x").to_string());
}

#[test]
fn b_product_golden() {
    let b = golden_b();
    let lhs = &el(&b, "x^(1/2)*y^(1/3)") * &el(&b, "x^(1/3)*y^(1/2)");
    assert_eq!(lhs, el(&b, "zeta(3)^2*x^(5/6)*y^(5/6)"));
}

#[test]
fn b_coproduct_of_y() {
    let b = golden_b();
    let y = el(&b, "y");
    let want = &TensorElement::pure(&y, &Element::one(&b)).unwrap() + &TensorElement::pure(&el(&b, "x"), &y).unwrap();
    assert_eq!(comultiply(&y), want);
    assert_eq!(counit(&el(&b, "3 + 2*y^(1/2)")), s("3"));
    assert_eq!(antipode(&el(&b, "x^(1/2)")), el(&b, "x^(-1/2)"));
    assert_eq!(antipode(&el(&b, "y^(1/2)")), el(&b, "-x^(-1/2)*y^(1/2)"));
}

#[test]
fn enveloping_rules() {
    let u = make_enveloping(LieKind::Nonabelian);
    assert_eq!(el(&u, "y*x"), el(&u, "x*y - y"));
    let a = make_enveloping(LieKind::Abelian);
    assert_eq!(el(&a, "y*x"), el(&a, "x*y"));
    let x = el(&a, "x");
    let want =
        &TensorElement::pure(&x, &Element::one(&a)).unwrap() + &TensorElement::pure(&Element::one(&a), &x).unwrap();
    assert_eq!(comultiply(&x), want);
    assert_eq!(counit(&x), Scalar::zero());
}

#[test]
fn affine_a_direct_rule_matches_character() {
    let q = s("zeta(5)^2");
    let direct = make_affine_a(2, q.clone()).unwrap();
    let chi = MultiplicativeCharacter::cyclic(exp_int(1), q.inv().unwrap()).unwrap();
    let general = make_a(RationalSubgroup::integers(), exp_int(2), chi).unwrap();
    for src in ["x*z", "z^2*x^(-3)", "z^3*x^2*z"] {
        assert_eq!(el(&direct, src).to_string(), el(&general, src).to_string(), "{src}");
    }
    assert_eq!(el(&direct, "x*z"), el(&direct, "zeta(5)^2*z*x"));
}

#[test]
fn axioms_hold_on_small_instances() {
    let insts = vec![
        make_group_algebra(GroupData::Q(RationalSubgroup::localization(2))),
        make_enveloping(LieKind::Nonabelian),
        make_affine_a(1, Scalar::one()).unwrap(),
        make_affine_a(2, s("zeta(3)")).unwrap(),
        make_affine_c(3).unwrap(),
        golden_b(),
    ];
    for inst in insts {
        let r = verify_axioms(&inst, 8, 3);
        assert!(r.passed(), "{}: {:?}", inst.describe(), r.checks);
    }
}

#[test]
fn tampered_character_breaks_power_consistency() {
    let chi = MultiplicativeCharacter::crt(BTreeMap::from([(2, s("1")), (3, s("zeta(3)"))])).unwrap();
    let bad = make_b_unchecked(RationalSubgroup::cyclic(6), SubmonoidM::new(vec![2, 3]).unwrap(), chi);
    let r = verify_axioms(&bad, 0, 1);
    assert!(!r.check("delta_power_consistency").unwrap().passed);
}

#[test]
fn skew_primitives_of_a11() {
    let a = make_affine_a(1, Scalar::one()).unwrap();
    let sp = find_skew_primitives(&a, &MonomialKey::Ore(exp_int(1), 0), 2).unwrap();
    assert_eq!(sp.dim(), 2);
    let trivial = find_skew_primitives(&a, &MonomialKey::Ore(exp_int(2), 0), 2).unwrap();
    assert_eq!(trivial.dim(), 1);
}

#[test]
fn constructor_errors() {
    let chi = MultiplicativeCharacter::crt(BTreeMap::from([(2, s("-1")), (3, s("zeta(3)"))])).unwrap();
    let one = make_b(RationalSubgroup::cyclic(6), SubmonoidM::new_unchecked(vec![2]), chi.clone()).unwrap_err();
    assert!(one.to_string().contains("isomorphic to A_G(e,chi)"), "{one}");
    let cop =
        make_b(RationalSubgroup::localization(6), SubmonoidM::new_unchecked(vec![2, 4]), chi.clone()).unwrap_err();
    assert!(cop.to_string().contains("not pairwise coprime"), "{cop}");
    let recip = make_b(RationalSubgroup::localization(2), SubmonoidM::new(vec![2, 3]).unwrap(), chi).unwrap_err();
    assert!(recip.to_string().contains("1/3 is not in G"), "{recip}");
    assert!(make_a(RationalSubgroup::integers(), exp(1, 3), MultiplicativeCharacter::trivial()).is_err());
    assert!(SemidirectGroup::new(RationalSubgroup::localization(3), RationalSubgroup::localization(2)).is_err());
    assert!(make_affine_c(1).is_err());
}

#[test]
fn recognition_golden() {
    let r = recognize_affine(&golden_b()).unwrap();
    assert_eq!((r.m, r.n, r.ell, r.p0, r.recognized_type), (6, 1, 6, 1, 'B'));
    assert_eq!(r.q, s("-zeta(3)"));
    let b = make_affine_b(r.n, r.p0, r.primes.clone(), r.q.clone()).unwrap();
    assert_eq!(recognize_affine(&b).unwrap().q, r.q);
}

#[test]
fn stages_ascend() {
    let tower = prime_tower(&[2, 3, 5, 7, 11]).unwrap();
    let mut prev: Option<Arc<HopfInstance>> = None;
    for n in 1..=4 {
        let st = chain_stage(&tower, n).unwrap();
        let r = recognize_affine(&st).unwrap();
        assert_eq!(r.t, r.m * r.n);
        if let Some(p) = &prev {
            let pres = presentation(p).unwrap();
            for (_, g) in pres.generators {
                for k in g.terms().keys() {
                    assert!(st.validate_key(k).is_ok());
                }
            }
        }
        prev = Some(st);
    }
}

#[test]
fn isomorphism_certificates() {
    let b = golden_b();
    assert!(is_isomorphic(&b, &b).isomorphic);
    let chi2 = MultiplicativeCharacter::crt(BTreeMap::from([(2, s("-1")), (3, s("zeta(3)^2"))])).unwrap();
    let b2 = make_b(RationalSubgroup::cyclic(6), SubmonoidM::new(vec![3, 2]).unwrap(), chi2).unwrap();
    let r = is_isomorphic(&b, &b2);
    assert!(!r.isomorphic);
    assert_eq!(r.certificate, "χ(1/9) differs");
    let c = make_affine_c(3).unwrap();
    assert!(is_isomorphic(&b, &c).certificate.starts_with("not comparable"));
}

#[test]
fn tangent_linearization() {
    let a = make_affine_a(2, s("zeta(3)")).unwrap();
    let p = presentation(&a).unwrap();
    let eps: Vec<Scalar> = p.generators.iter().map(|(_, g)| counit(g)).collect();
    let last = p.relations.last().unwrap().linear_part(&eps);
    // z x - χ(1) x z with χ(1) = q⁻¹: linear part (1 - q⁻¹) ẑ
    assert_eq!(last[2], Scalar::one().sub_ref(&s("zeta(3)^2")));
}
