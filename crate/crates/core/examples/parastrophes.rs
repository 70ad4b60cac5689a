//! Prints the six parastrophes of a small table and its symmetry group.
//!
//! cargo run --example parastrophes

use parasym::{classify_by_oracle, parastrophe, symmetry_group, CayleyTable, Sigma};

fn main() {
    // x·y = x + 2y (mod 3) is strictly left symmetric: x·(x·y) = y.
    let t = CayleyTable::from_fn(3, |x, y| (x + 2 * y) % 3).unwrap();
    for sigma in Sigma::ALL {
        let p = parastrophe(&t, sigma);
        let mark = if p == t { "  (fixed)" } else { "" };
        println!("{} = {}{mark}", sigma.label(), sigma.cycle());
        for row in p.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            println!("    {}", cells.join(" "));
        }
    }
    println!("Sym = {}", symmetry_group(&t));
    println!("class: {}", classify_by_oracle(&t));
}
