mod common;

use parasym::fixtures::non_group_isotope;
use parasym::isotope::principal_loop;
use parasym::oracle::relabel;
use parasym::verify::{random_permutation, random_unitary};
use parasym::{
    build_isotope, canonical_decomposition, check_corollaries, decompose_autotopism, group_from_table,
    is_group_isotope, is_t_quasigroup, satisfies_identity, GroupStructure, Identity, Permutation,
};
use proptest::prelude::*;
use rand::Rng;

fn group() -> impl Strategy<Value = GroupStructure> {
    (0usize..64).prop_map(|i| {
        let gs = common::groups();
        gs[i % gs.len()].1.clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn build_then_decompose_round_trips(g in group(), seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let alpha = random_unitary(&g, &mut r);
        let beta = random_unitary(&g, &mut r);
        let a = r.gen_range(0..g.order());
        let t = build_isotope(&g, &alpha, a, &beta).unwrap();
        let d = canonical_decomposition(&t, g.neutral()).unwrap();
        prop_assert_eq!(d.group.table(), g.table());
        prop_assert_eq!(d.alpha, alpha);
        prop_assert_eq!(d.beta, beta);
        prop_assert_eq!(d.a, a);
    }

    #[test]
    fn every_zero_decomposes(i in 0usize..64, seed in any::<u64>()) {
        let t = common::group_isotope(i, seed);
        prop_assert!(is_group_isotope(&t));
        for z in 0..t.order() {
            let d = canonical_decomposition(&t, z).unwrap();
            prop_assert_eq!(d.to_table(), t.clone());
        }
    }

    #[test]
    fn automorphism_and_anti_agree_when_abelian(g in group(), seed in any::<u64>()) {
        let p = random_unitary(&g, &mut common::rng(seed));
        if g.is_abelian() {
            prop_assert_eq!(g.is_automorphism(&p), g.is_anti_automorphism(&p));
        }
    }

    #[test]
    fn autotopisms_recompose(g in group(), seed in any::<u64>(), bi in 0usize..16, ci in 0usize..16) {
        let autos = g.automorphisms().unwrap();
        let theta = &autos[(seed as usize) % autos.len()];
        let (b, c) = (bi % g.order(), ci % g.order());
        let alpha = g.left_translation(c).compose(&g.right_translation(g.neg(b))).compose(theta);
        let beta = g.left_translation(b).compose(theta);
        let gamma = g.left_translation(c).compose(theta);
        let parts = decompose_autotopism(&g, &alpha, &beta, &gamma).unwrap();
        prop_assert_eq!(&parts.theta, theta);
        prop_assert_eq!((parts.b, parts.c), (b, c));
    }

    #[test]
    fn medial_t_quasigroups_have_commuting_coefficients(g in group(), i in 0usize..64, j in 0usize..64, seed in any::<u64>()) {
        prop_assume!(g.is_abelian());
        let autos = g.automorphisms().unwrap();
        let (alpha, beta) = (&autos[i % autos.len()], &autos[j % autos.len()]);
        let a = (seed as usize) % g.order();
        let t = build_isotope(&g, alpha, a, beta).unwrap();
        let t = relabel(&t, &random_permutation(g.order(), &mut common::rng(seed))).unwrap();
        prop_assert!(is_t_quasigroup(&t));
        let commute = alpha.compose(beta) == beta.compose(alpha);
        prop_assert_eq!(satisfies_identity(&t, Identity::Medial), commute);
        prop_assert!(check_corollaries(&t).unwrap().violations.is_empty());
    }
}

#[test]
fn fixture_is_latin_but_no_principal_loop_is_a_group() {
    let t = non_group_isotope();
    assert_eq!(t.order(), 5);
    assert!(!is_group_isotope(&t));
    for z in 0..5 {
        assert!(group_from_table(&principal_loop(&t, z)).is_err());
        assert!(canonical_decomposition(&t, z).is_err());
    }
}

#[test]
fn non_automorphic_unitary_gives_nonlinear_isotope() {
    let g = GroupStructure::cyclic(5);
    let alpha = Permutation::transposition(5, 1, 2);
    assert!(!g.is_automorphism(&alpha));
    let t = build_isotope(&g, &alpha, 0, &Permutation::identity(5)).unwrap();
    assert!(is_group_isotope(&t));
    assert!(!parasym::is_linear_isotope(&t));
}

#[test]
fn autotopism_with_translations() {
    let g = GroupStructure::cyclic(5);
    let alpha = Permutation::from_fn(5, |x| (x + 2 + 5 - 3) % 5).unwrap();
    let beta = Permutation::from_fn(5, |y| (y + 3) % 5).unwrap();
    let gamma = Permutation::from_fn(5, |z| (z + 2) % 5).unwrap();
    let parts = decompose_autotopism(&g, &alpha, &beta, &gamma).unwrap();
    assert!(parts.theta.is_identity());
    assert_eq!((parts.b, parts.c), (3, 2));

    let g = GroupStructure::cyclic(7);
    let triple = Permutation::from_fn(7, |x| 3 * x % 7).unwrap();
    let parts = decompose_autotopism(&g, &triple, &triple, &triple).unwrap();
    assert_eq!(parts.theta, triple);
    assert_eq!((parts.b, parts.c), (0, 0));
}
