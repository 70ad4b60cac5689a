//! Seeded sweeps comparing the criteria classifier with the oracle.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classify::{check_corollaries, cross_check};
use crate::group::GroupStructure;
use crate::isotope::build_isotope;
use crate::linear::units;
use crate::oracle::relabel;
use crate::perm::Permutation;
use crate::table::CayleyTable;

pub const DEFAULT_SEED: u64 = 0x005e_ed0f_1505;

/// Named groups of order `2..=max_order` used by the sweeps.
pub fn small_groups(max_order: usize) -> Vec<(String, GroupStructure)> {
    let z = GroupStructure::cyclic;
    let mut out: Vec<(String, GroupStructure)> =
        (2..=max_order).map(|n| (format!("Z{n}"), z(n))).collect();
    let mut push = |name: &str, order: usize, build: &dyn Fn() -> GroupStructure| {
        if order <= max_order {
            out.push((name.to_string(), build()));
        }
    };
    push("Z2xZ2", 4, &|| GroupStructure::direct_product(&z(2), &z(2)));
    push("S3", 6, &GroupStructure::symmetric3);
    push("Z2xZ4", 8, &|| GroupStructure::direct_product(&z(2), &z(4)));
    push("Z2xZ2xZ2", 8, &|| {
        GroupStructure::direct_product(&GroupStructure::direct_product(&z(2), &z(2)), &z(2))
    });
    push("D4", 8, &|| GroupStructure::dihedral(4));
    push("Q8", 8, &GroupStructure::quaternion);
    push("Z3xZ3", 9, &|| GroupStructure::direct_product(&z(3), &z(3)));
    push("D5", 10, &|| GroupStructure::dihedral(5));
    push("D6", 12, &|| GroupStructure::dihedral(6));
    out
}

/// A uniformly random permutation fixing the neutral element of `g`.
pub fn random_unitary<R: Rng>(g: &GroupStructure, rng: &mut R) -> Permutation {
    let e = g.neutral();
    let mut rest: Vec<usize> = (0..g.order()).filter(|&x| x != e).collect();
    rest.shuffle(rng);
    let mut it = rest.into_iter();
    let images = (0..g.order())
        .map(|x| if x == e { e } else { it.next().expect("one image per element") })
        .collect();
    Permutation::new(images).expect("shuffle is a bijection")
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffle is a bijection")
}

/// `αx + a + βy` with random unitary `α`, `β` and random `a`, relabelled by a
/// random bijection so that no element is singled out.
pub fn random_isotope<R: Rng>(g: &GroupStructure, rng: &mut R) -> CayleyTable {
    let alpha = random_unitary(g, rng);
    let beta = random_unitary(g, rng);
    let a = rng.gen_range(0..g.order());
    let t = build_isotope(g, &alpha, a, &beta).expect("unitary by construction");
    relabel(&t, &random_permutation(g.order(), rng)).expect("same order")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_order: usize,
    pub samples: usize,
    pub seed: u64,
    pub linear_tables: usize,
    pub random_tables: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check(label: &str, t: &CayleyTable, failures: &mut Vec<String>) {
    let c = cross_check(t);
    if !c.agree {
        failures.push(format!(
            "{label}: oracle {} vs criteria {:?} (zeros {:?})",
            c.oracle, c.criteria, c.disagreeing_zeros
        ));
        return;
    }
    match check_corollaries(t) {
        Ok(r) if r.violations.is_empty() => {}
        Ok(r) => failures.push(format!("{label}: {}", r.violations.join("; "))),
        Err(e) => failures.push(format!("{label}: {e}")),
    }
}

/// Every linear isotope of `Z_m` for `m` in `2..=max_order`, then `samples`
/// random isotopes of each catalogue group of order at most `max_order`.
pub fn run_verification(max_order: usize, samples: usize, seed: u64) -> VerifyReport {
    let mut failures = Vec::new();
    let mut linear_tables = 0;
    for m in 2..=max_order {
        let us = units(m);
        for &a in &us {
            for &b in &us {
                for d in 0..m {
                    let t = CayleyTable::from_fn(m, |x, y| (a * x + b * y + d) % m)
                        .expect("unit coefficients");
                    check(&format!("Z{m} ({a},{b},{d})"), &t, &mut failures);
                    linear_tables += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_tables = 0;
    for (name, g) in small_groups(max_order) {
        for i in 0..samples {
            let t = random_isotope(&g, &mut rng);
            check(&format!("{name} sample {i}"), &t, &mut failures);
            random_tables += 1;
        }
    }
    VerifyReport {
        max_order,
        samples,
        seed,
        linear_tables,
        random_tables,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_fixes_neutral() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = GroupStructure::symmetric3();
        for _ in 0..20 {
            assert!(g.is_unitary(&random_unitary(&g, &mut rng)));
        }
    }

    #[test]
    fn catalogue_sizes() {
        let groups = small_groups(8);
        assert!(groups.iter().all(|(_, g)| g.order() <= 8));
        assert_eq!(groups.iter().filter(|(_, g)| g.order() == 8).count(), 5);
    }

    #[test]
    fn small_verification_passes() {
        let r = run_verification(5, 20, DEFAULT_SEED);
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.linear_tables > 0 && r.random_tables > 0);
    }
}
