#![allow(dead_code)]

use parasym::fixtures::non_group_isotope;
use parasym::group::GroupStructure;
use parasym::oracle::apply_isotopy;
use parasym::verify::{random_isotope, random_permutation, small_groups};
use parasym::CayleyTable;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn groups() -> Vec<(String, GroupStructure)> {
    small_groups(8)
}

/// A group isotope of catalogue group `index` (mod the catalogue size).
pub fn group_isotope(index: usize, seed: u64) -> CayleyTable {
    let gs = groups();
    let (_, g) = &gs[index % gs.len()];
    random_isotope(g, &mut rng(seed))
}

/// An arbitrary isotope of either a catalogue group or the order-5 table
/// that is not a group isotope.
pub fn latin_square(index: usize, seed: u64) -> CayleyTable {
    let gs = groups();
    let base = if index % (gs.len() + 1) == gs.len() {
        non_group_isotope()
    } else {
        gs[index % (gs.len() + 1)].1.table().clone()
    };
    let mut r = rng(seed);
    let n = base.order();
    let (a, b, c) = (
        random_permutation(n, &mut r),
        random_permutation(n, &mut r),
        random_permutation(n, &mut r),
    );
    apply_isotopy(&base, &a, &b, &c).unwrap()
}
