use parasym::linear::{
    canonical_representatives, census, enumerate_linear, expected_counts, is_prime, primes_below,
    semi_symmetric_set, semi_symmetric_sweep, small_order_census, sqrt_mod, verify_pairwise_nonisomorphic,
    CensusReport, LinearIsotopeSpec,
};
use parasym::{classify_table, SymmetryClass};

const FIXTURES: [(usize, &str); 4] = [
    (5, include_str!("../fixtures/census_p5.json")),
    (7, include_str!("../fixtures/census_p7.json")),
    (11, include_str!("../fixtures/census_p11.json")),
    (13, include_str!("../fixtures/census_p13.json")),
];

#[test]
fn census_matches_frozen_fixtures() {
    for (p, text) in FIXTURES {
        let expected = CensusReport::from_json(text).unwrap();
        let got = census(p).unwrap();
        assert_eq!(got, expected, "p = {p}");
        assert_eq!(got.to_json(), text.trim_end(), "p = {p}");
    }
}

#[test]
fn census_counts_follow_closed_forms() {
    for p in primes_below(24).into_iter().filter(|&p| p > 3) {
        let r = census(p).unwrap();
        assert_eq!(r.total, p * p - p - 1);
        assert_eq!(r.counts, expected_counts(p));
        for class in SymmetryClass::ALL {
            for s in r.specs(class) {
                assert_eq!(classify_table(&s.table()).unwrap().class, class, "{s}");
            }
        }
        let total: usize = SymmetryClass::ALL.iter().map(|&c| *r.counts.get(c)).sum();
        assert_eq!(total, r.total);
    }
}

#[test]
fn semi_symmetric_members_are_inverse_cube_roots_of_minus_one() {
    for p in primes_below(100).into_iter().filter(|&p| p > 3) {
        let set = semi_symmetric_set(p).unwrap();
        assert_eq!(set.is_empty(), sqrt_mod(p - 3, p).is_none(), "p = {p}");
        assert_eq!(set, semi_symmetric_sweep(p), "p = {p}");
        for s in &set {
            assert_eq!(s.alpha() * s.beta() % p, 1);
            assert_eq!(s.alpha().pow(3) % p, p - 1);
            assert_eq!(s.d(), 0);
        }
        if !set.is_empty() {
            assert_eq!(set.len(), 2);
        }
    }
}

#[test]
fn canonical_count_for_small_primes() {
    for p in [3, 5, 7] {
        assert_eq!(canonical_representatives(p).unwrap().len(), p * p - p - 1);
    }
    assert!(canonical_representatives(9).is_err());
}

#[test]
fn pairwise_checks() {
    let single = [LinearIsotopeSpec::new(5, 2, 3, 0).unwrap()];
    assert!(verify_pairwise_nonisomorphic(&single).is_ok());
    let pair = [
        LinearIsotopeSpec::new(5, 1, 1, 0).unwrap(),
        LinearIsotopeSpec::new(5, 1, 1, 1).unwrap(),
    ];
    let witness = verify_pairwise_nonisomorphic(&pair).unwrap_err();
    assert!(parasym::oracle::is_isomorphism(&pair[0].table(), &pair[1].table(), &witness.phi));
}

#[test]
fn small_orders() {
    let two = small_order_census(2).unwrap();
    assert_eq!(two.total, 1);
    assert_eq!(*two.counts.get(SymmetryClass::TotallySymmetric), 1);
    let three = small_order_census(3).unwrap();
    assert_eq!(three.total, 5);
    assert_eq!(*three.counts.get(SymmetryClass::TotallySymmetric), 2);
    assert!(small_order_census(4).is_err());
}

#[test]
fn composite_enumeration_is_verified() {
    for m in 2..=8 {
        let r = enumerate_linear(m).unwrap();
        assert_eq!(r.verified, Some(true), "m = {m}");
        assert_eq!(r.isomorphism_classes, Some(r.total), "m = {m}");
    }
    assert_eq!(enumerate_linear(9).unwrap().verified, None);
}

#[test]
fn primes() {
    assert_eq!(primes_below(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    assert!(!is_prime(1) && !is_prime(91) && is_prime(97));
}
