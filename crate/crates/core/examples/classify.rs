//! Classifies a few linear isotopes by the decomposition criteria and
//! compares each result with the parastrophe oracle.
//!
//! cargo run --example classify

use parasym::classify::criterion;
use parasym::{classify_table, cross_check, CayleyTable};

fn main() {
    let cases: [(usize, usize, usize, usize); 6] = [
        (7, 1, 1, 0),
        (7, 1, 6, 0),
        (7, 6, 1, 0),
        (7, 6, 6, 0),
        (7, 5, 3, 0),
        (9, 2, 5, 3),
    ];
    for (m, a, b, d) in cases {
        let t = CayleyTable::from_fn(m, |x, y| (a * x + b * y + d) % m).unwrap();
        let report = classify_table(&t).unwrap();
        let check = cross_check(&t);
        let held: Vec<&str> = criterion::ALL.into_iter().filter(|c| report.check(c)).collect();
        println!(
            "{a}x + {b}y + {d} mod {m}: {} (oracle {}, agree {})",
            report.class, check.oracle, check.agree
        );
        println!("    {}", held.join(", "));
    }
}
