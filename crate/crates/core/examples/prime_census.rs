//! Linear isotopes of Z_p up to isomorphism, grouped by symmetry class.
//!
//! cargo run --example prime_census -- 13

use parasym::linear::{census, expected_counts};
use parasym::SymmetryClass;

fn main() {
    let p: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("a prime"))
        .unwrap_or(7);
    let report = match census(p) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    print!("{}", report.to_text());
    let expected = expected_counts(p);
    for class in SymmetryClass::ALL {
        assert_eq!(report.counts.get(class), expected.get(class));
    }
    println!("total {} = p^2 - p - 1", report.total);
}
