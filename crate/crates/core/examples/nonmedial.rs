//! A T-quasigroup that is not medial, built from two automorphisms of
//! Z3 x Z3 that do not commute.
//!
//! cargo run --example nonmedial

use parasym::oracle::identity_witness;
use parasym::{build_isotope, check_corollaries, classify_by_oracle, GroupStructure, Identity};

fn main() {
    let z3 = GroupStructure::cyclic(3);
    let g = GroupStructure::direct_product(&z3, &z3);
    let autos = g.automorphisms().unwrap();
    println!("|Aut(Z3 x Z3)| = {}", autos.len());

    let (alpha, beta) = autos
        .iter()
        .flat_map(|a| autos.iter().map(move |b| (a, b)))
        .find(|(a, b)| a.compose(b) != b.compose(a))
        .unwrap();
    println!("alpha = {alpha}\nbeta  = {beta}");

    let t = build_isotope(&g, alpha, 0, beta).unwrap();
    let w = identity_witness(&t, Identity::Medial).unwrap();
    println!("mediality fails at x, y, u, v = {w:?}");
    println!("class: {}", classify_by_oracle(&t));

    let r = check_corollaries(&t).unwrap();
    println!("T-quasigroup {}, medial {}, violations {:?}", r.t_quasigroup, r.medial, r.violations);
}
