//! Seeded sweep comparing the decomposition criteria with the oracle on
//! linear isotopes and random isotopes of small groups.
//!
//! cargo run --release --example verify_sweep -- 8 200

use parasym::verify::{run_verification, DEFAULT_SEED};

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("a number"));
    let max_order = args.next().unwrap_or(6);
    let samples = args.next().unwrap_or(100);
    let r = run_verification(max_order, samples, DEFAULT_SEED);
    println!(
        "{} linear and {} random tables up to order {max_order}",
        r.linear_tables, r.random_tables
    );
    for f in &r.failures {
        println!("FAIL {f}");
    }
    if !r.passed() {
        std::process::exit(1);
    }
    println!("oracle and criteria agree everywhere");
}
