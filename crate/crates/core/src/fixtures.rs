//! Small tables with known properties, shared by tests and examples.

use crate::table::CayleyTable;

/// Text form of [`non_group_isotope`], as shipped in `fixtures/`.
pub const NON_GROUP_ISOTOPE_TEXT: &str = include_str!("../fixtures/non_group_isotope_5.txt");

/// The lexicographically first Latin square of order 5 whose principal loop
/// at `0` is not associative, so it is not isotopic to any group.
pub fn non_group_isotope() -> CayleyTable {
    CayleyTable::parse_text(NON_GROUP_ISOTOPE_TEXT)
        .expect("fixture is a valid table")
        .0
}
