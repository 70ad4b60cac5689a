//! Every Latin square of order 3, sorted into isomorphism classes.
//!
//! cargo run --example small_orders

use parasym::linear::{isomorphism_classes, small_order_census};
use parasym::oracle::all_latin_squares;
use parasym::{classify_by_oracle, find_isomorphism, CayleyTable};

fn main() {
    let squares = all_latin_squares(3).unwrap();
    let classes = isomorphism_classes(&squares);
    println!("{} Latin squares of order 3, {} up to isomorphism", squares.len(), classes.len());
    for t in &classes {
        let size = squares.iter().filter(|s| find_isomorphism(t, s).is_some()).count();
        println!("{} ({size} squares)", classify_by_oracle(t));
        print!("{}", t.to_text());
    }

    let plus = CayleyTable::from_fn(2, |x, y| (x + y) % 2).unwrap();
    let shifted = CayleyTable::from_fn(2, |x, y| (x + y + 1) % 2).unwrap();
    println!("order 2: x+y ≅ x+y+1 via {}", find_isomorphism(&plus, &shifted).unwrap());
    print!("{}", small_order_census(3).unwrap().to_text());
}
