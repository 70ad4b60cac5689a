//! Builds an isotope of the quaternion group, hides it behind a random
//! relabelling, and recovers the canonical decomposition x·y = αx + a + βy.
//!
//! cargo run --example decomposition

use parasym::oracle::relabel;
use parasym::verify::{random_permutation, random_unitary};
use parasym::{build_isotope, canonical_decomposition, is_group_isotope, GroupStructure};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let q8 = GroupStructure::quaternion();
    let alpha = random_unitary(&q8, &mut rng);
    let beta = random_unitary(&q8, &mut rng);
    let t = build_isotope(&q8, &alpha, 3, &beta).unwrap();
    let hidden = relabel(&t, &random_permutation(8, &mut rng)).unwrap();
    println!("input table:\n{}", hidden.to_text());
    assert!(is_group_isotope(&hidden));

    for zero in [0, 5] {
        let d = canonical_decomposition(&hidden, zero).unwrap();
        println!("zero {zero}: a = {}, alpha = {}, beta = {}", d.a, d.alpha, d.beta);
        println!("  group is abelian: {}", d.group.is_abelian());
        println!("  alpha is an automorphism: {}", d.group.is_automorphism(&d.alpha));
    }

    let d = canonical_decomposition(&hidden, 0).unwrap();
    println!("{}", serde_json::to_string(&d.to_record()).unwrap());
}
