mod common;

use parasym::oracle::{is_symmetry, relabel};
use parasym::verify::random_permutation;
use parasym::{parastrophe, satisfies_identity, symmetry_group, CayleyTable, Identity, Sigma, SymmetryGroup};
use proptest::prelude::*;

fn squares() -> impl Strategy<Value = CayleyTable> {
    (0usize..64, any::<u64>()).prop_map(|(i, seed)| common::latin_square(i, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_law_for_all_pairs(t in squares()) {
        for sigma in Sigma::ALL {
            for tau in Sigma::ALL {
                let twice = parastrophe(&parastrophe(&t, tau), sigma);
                prop_assert_eq!(twice, parastrophe(&t, sigma.compose(tau)), "{} {}", sigma, tau);
            }
        }
    }

    #[test]
    fn parastrophes_stay_latin(t in squares()) {
        for sigma in Sigma::ALL {
            let p = parastrophe(&t, sigma);
            prop_assert!(CayleyTable::new(p.rows()).is_ok());
        }
    }

    #[test]
    fn fixed_exactly_by_the_symmetry_group(t in squares()) {
        let g = symmetry_group(&t);
        prop_assert!(SymmetryGroup::SUBGROUPS.contains(&g));
        for sigma in Sigma::ALL {
            prop_assert_eq!(parastrophe(&t, sigma) == t, g.contains(sigma));
            prop_assert_eq!(is_symmetry(&t, sigma), g.contains(sigma));
        }
    }

    #[test]
    fn isomorphic_copies_share_symmetry(t in squares(), seed in any::<u64>()) {
        let phi = random_permutation(t.order(), &mut common::rng(seed));
        prop_assert_eq!(symmetry_group(&relabel(&t, &phi).unwrap()), symmetry_group(&t));
    }

    #[test]
    fn identities_match_group_membership(t in squares()) {
        let g = symmetry_group(&t);
        prop_assert_eq!(satisfies_identity(&t, Identity::Commutative), g.contains(Sigma::S));
        prop_assert_eq!(satisfies_identity(&t, Identity::LeftSymmetric), g.contains(Sigma::R));
        prop_assert_eq!(satisfies_identity(&t, Identity::RightSymmetric), g.contains(Sigma::L));
        prop_assert_eq!(
            satisfies_identity(&t, Identity::SemiSymmetric),
            g.is_superset_of(SymmetryGroup::ALTERNATING)
        );
    }
}

#[test]
fn semi_symmetric_table_is_fixed_by_sl() {
    let t = CayleyTable::from_fn(7, |x, y| (5 * x + 3 * y) % 7).unwrap();
    assert!(satisfies_identity(&t, Identity::SemiSymmetric));
    assert_eq!(parastrophe(&t, Sigma::Sl), t);
    assert_eq!(parastrophe(&t, Sigma::Sr), t);
    assert_ne!(parastrophe(&t, Sigma::S), t);
}

#[test]
fn order_one_is_totally_symmetric() {
    let t = CayleyTable::new(vec![vec![0]]).unwrap();
    assert_eq!(symmetry_group(&t), SymmetryGroup::FULL);
}
