//! Parastrophic symmetry of finite quasigroups.
//!
//! A quasigroup is given by its Cayley table. Permuting the three places of
//! `x₁·x₂ = x₃` gives six parastrophes; the permutations that leave the
//! operation unchanged form its symmetry group, one of the six subgroups of
//! `S₃`. This crate computes that group directly ([`oracle`]), recovers the
//! canonical decomposition `x·y = αx + a + βy` of group isotopes
//! ([`isotope`]), classifies group isotopes from the decomposition alone
//! ([`classify`]) and enumerates linear isotopes of cyclic groups up to
//! isomorphism ([`linear`]).
//!
//! ```
//! use parasym::{classify_table, CayleyTable, SymmetryClass};
//!
//! let t = CayleyTable::from_fn(7, |x, y| (5 * x + 3 * y) % 7).unwrap();
//! assert_eq!(classify_table(&t).unwrap().class, SymmetryClass::StrictlySemiSymmetric);
//! ```

pub mod classify;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod isotope;
pub mod linear;
pub mod oracle;
pub mod perm;
pub mod symmetry;
pub mod table;
pub mod verify;

pub use classify::{
    check_corollaries, classify_by_criteria, classify_table, cross_check, CorollaryReport,
    CriteriaReport, CrossCheck,
};
pub use error::{Error, Result};
pub use group::{group_from_table, GroupStructure};
pub use isotope::{
    build_isotope, canonical_decomposition, decompose_autotopism, is_group_isotope,
    is_linear_isotope, is_t_quasigroup, CanonicalDecomposition,
};
pub use linear::{
    canonical_representatives, census, semi_symmetric_set, small_order_census, sqrt_mod,
    verify_pairwise_nonisomorphic, CensusReport, LinearIsotopeSpec,
};
pub use oracle::{
    apply_isotopy, classify_by_oracle, find_isomorphism, parastrophe, satisfies_identity,
    symmetry_group, Identity,
};
pub use perm::Permutation;
pub use symmetry::{Sigma, SymmetryClass, SymmetryGroup};
pub use table::CayleyTable;
