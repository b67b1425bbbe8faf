use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::families::{
    make_affine_a, make_affine_c, make_enveloping, make_group_algebra, presentation, random_element, GroupData, LieKind,
};
use crate::groups::{exp, exp_int, RationalSubgroup};
use crate::hopf::{find_skew_primitives, MonomialKey};
use crate::linalg::same_span;
use crate::scalars::{parse_scalar, Scalar};
use num_traits::One;

#[test]
fn growth_of_integers() {
    let kz = make_group_algebra(GroupData::Q(RationalSubgroup::integers()));
    let gens: Vec<_> = presentation(&kz).unwrap().generators.into_iter().map(|(_, g)| g).collect();
    let r = growth_dimensions(&kz, &gens, 16).unwrap();
    assert_eq!(r.dims, (0..=16).map(|n| 2 * n + 1).collect::<Vec<u64>>());
    assert_eq!(growth_dimensions(&kz, &gens, 0).unwrap().dims, vec![1]);
    assert!(growth_dimensions(&kz, &gens[..1], 8).is_err());
}

#[test]
fn tangent_goldens() {
    let a11 = make_affine_a(1, Scalar::one()).unwrap();
    assert_eq!(tangent_dimension(&a11).unwrap().dim, 2);
    let a2q = make_affine_a(2, parse_scalar("zeta(3)").unwrap()).unwrap();
    assert_eq!(tangent_dimension(&a2q).unwrap().dim, 1);
    let kz = make_group_algebra(GroupData::Q(RationalSubgroup::integers()));
    assert_eq!(tangent_dimension(&kz).unwrap().dim, 1);
    assert_eq!(tangent_dimension(&make_enveloping(LieKind::Nonabelian)).unwrap().dim, 1);
    assert_eq!(tangent_dimension(&make_enveloping(LieKind::Abelian)).unwrap().dim, 2);
}

#[test]
fn predictions_match_solver_on_c3() {
    let c = make_affine_c(3).unwrap();
    for j in -3..=3 {
        let g = MonomialKey::Ore(exp_int(j), 0);
        let got = find_skew_primitives(&c, &g, 4).unwrap();
        let want = expected_skew_primitives(&c, &g).unwrap();
        assert!(same_span(&got.vectors(), &want.vectors()), "weight x^{j}");
    }
}

#[test]
fn takeuchi_round_trip() {
    let kz = make_group_algebra(GroupData::Q(RationalSubgroup::integers()));
    let k6 = make_group_algebra(GroupData::Q(RationalSubgroup::localization(6)));
    let h = k6.with_stage(2);
    let maps = takeuchi_maps(&kz, &k6, &h).unwrap();
    assert_eq!(maps.quotient.representative(&exp(7, 6)), exp(1, 6));
    assert_eq!(maps.quotient.representative(&exp(-1, 6)), exp(5, 6));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let v = random_element(&h, &mut rng);
        let a = exp(rng.gen_range(0..36), 36);
        let canon: CanonicalSum = v.terms().iter().map(|(k, c)| ((a, k.clone()), c.clone())).collect();
        assert_eq!(maps.tau(&maps.mu(&canon)), canon);
    }
    let rep = kernel_of_difference(&kz, &k6, &[exp(1, 2), exp(3, 1), exp(-5, 6)]).unwrap();
    assert!(rep.passed);
    assert_eq!(rep.entries.iter().map(|e| e.equal).collect::<Vec<_>>(), vec![false, true, false]);
}
