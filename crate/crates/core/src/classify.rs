//! Symmetry classification of group isotopes from their canonical
//! decompositions, and cross-checks against the parastrophe oracle.
//!
//! With `x·y = αx + a + βy` over `(Q; +)`:
//!
//! | class                     | condition                                                    |
//! |---------------------------|--------------------------------------------------------------|
//! | commutative               | `+` abelian, `β = α`                                         |
//! | left symmetric            | `+` abelian, `β = −ι`                                        |
//! | right symmetric           | `+` abelian, `α = −ι`                                        |
//! | totally symmetric         | `+` abelian, `α = β = −ι`                                    |
//! | semi-symmetric            | `α` anti-automorphism, `β = α⁻¹`, `α³ = −I_a⁻¹`, `α(a) = −a` |
//! | asymmetric                | none of the above                                            |
//!
//! The reported class is the strict one: totally symmetric wins over the
//! three binary symmetries, and semi-symmetric is reported only when not
//! totally symmetric.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isotope::{canonical_decomposition, is_group_isotope, CanonicalDecomposition};
use crate::oracle::{self, Identity};
use crate::perm::Permutation;
use crate::symmetry::SymmetryClass;
use crate::table::CayleyTable;

/// Names of the individual checks recorded in a [`CriteriaReport`].
pub mod criterion {
    pub const ABELIAN: &str = "abelian";
    pub const BETA_EQ_ALPHA: &str = "beta-eq-alpha";
    pub const BETA_EQ_NEG_ID: &str = "beta-eq-neg-id";
    pub const ALPHA_EQ_NEG_ID: &str = "alpha-eq-neg-id";
    pub const ALPHA_ANTI_AUTOMORPHISM: &str = "alpha-anti-automorphism";
    pub const BETA_EQ_ALPHA_INVERSE: &str = "beta-eq-alpha-inverse";
    pub const ALPHA_CUBED_EQ_NEG_INNER_INVERSE: &str = "alpha-cubed-eq-neg-inner-inverse";
    pub const ALPHA_A_EQ_NEG_A: &str = "alpha-a-eq-neg-a";

    pub const ALL: [&str; 8] = [
        ABELIAN,
        BETA_EQ_ALPHA,
        BETA_EQ_NEG_ID,
        ALPHA_EQ_NEG_ID,
        ALPHA_ANTI_AUTOMORPHISM,
        BETA_EQ_ALPHA_INVERSE,
        ALPHA_CUBED_EQ_NEG_INNER_INVERSE,
        ALPHA_A_EQ_NEG_A,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaReport {
    pub class: SymmetryClass,
    pub checks: BTreeMap<String, bool>,
    /// Whether every choice of zero yields the same class; `None` when only
    /// one decomposition was examined.
    pub zero_independent: Option<bool>,
    /// The asymmetry condition read word for word as a conjunction of
    /// "some binary symmetry fails" and "some semi-symmetry condition fails".
    /// Diagnostic only; the class is the complement of the other five.
    #[serde(skip)]
    pub literal_asymmetry: bool,
}

impl CriteriaReport {
    pub fn check(&self, name: &str) -> bool {
        self.checks.get(name).copied().unwrap_or(false)
    }

    pub fn is_semi_symmetric(&self) -> bool {
        use criterion::*;
        self.check(ALPHA_ANTI_AUTOMORPHISM)
            && self.check(BETA_EQ_ALPHA_INVERSE)
            && self.check(ALPHA_CUBED_EQ_NEG_INNER_INVERSE)
            && self.check(ALPHA_A_EQ_NEG_A)
    }
}

/// Evaluates each criterion pointwise and derives the strict class.
pub fn classify_by_criteria(d: &CanonicalDecomposition) -> CriteriaReport {
    use criterion::*;
    let g = &d.group;
    let n = g.order();
    let neg = g.negation();
    let alpha = &d.alpha;
    let beta = &d.beta;
    let a = d.a;
    let alpha_cubed = alpha.pow(3);
    let inner = g.inner_shift(a);
    let inner_inv = inner.inverse();

    let abelian = g.is_abelian();
    let beta_eq_alpha = beta == alpha;
    let beta_eq_neg = *beta == neg;
    let alpha_eq_neg = *alpha == neg;
    let anti = g.is_anti_automorphism(alpha);
    let beta_inv = *beta == alpha.inverse();
    let cube = (0..n).all(|x| alpha_cubed.apply(x) == g.neg(inner_inv.apply(x)));
    let alpha_a = alpha.apply(a) == g.neg(a);

    let commutative = abelian && beta_eq_alpha;
    let left = abelian && beta_eq_neg;
    let right = abelian && alpha_eq_neg;
    let total = left && right;
    let semi = anti && beta_inv && cube && alpha_a;

    let class = if total {
        SymmetryClass::TotallySymmetric
    } else if semi {
        SymmetryClass::StrictlySemiSymmetric
    } else if commutative {
        SymmetryClass::StrictlyCommutative
    } else if left {
        SymmetryClass::StrictlyLeftSymmetric
    } else if right {
        SymmetryClass::StrictlyRightSymmetric
    } else {
        SymmetryClass::Asymmetric
    };

    let binary_fail = !abelian || (!alpha_eq_neg && !beta_eq_alpha && !beta_eq_neg);
    let semi_fail = !anti || !beta_inv || !cube || !alpha_a;

    let checks = [
        (ABELIAN, abelian),
        (BETA_EQ_ALPHA, beta_eq_alpha),
        (BETA_EQ_NEG_ID, beta_eq_neg),
        (ALPHA_EQ_NEG_ID, alpha_eq_neg),
        (ALPHA_ANTI_AUTOMORPHISM, anti),
        (BETA_EQ_ALPHA_INVERSE, beta_inv),
        (ALPHA_CUBED_EQ_NEG_INNER_INVERSE, cube),
        (ALPHA_A_EQ_NEG_A, alpha_a),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();

    CriteriaReport {
        class,
        checks,
        zero_independent: None,
        literal_asymmetry: binary_fail && semi_fail,
    }
}

/// Decomposes at zero `0` and classifies; also records whether every other
/// zero agrees.
pub fn classify_table(t: &CayleyTable) -> Result<CriteriaReport> {
    if !is_group_isotope(t) {
        return Err(Error::NotGroupIsotope);
    }
    let mut report = classify_by_criteria(&canonical_decomposition(t, 0)?);
    let mut independent = true;
    for z in 1..t.order() {
        let other = classify_by_criteria(&canonical_decomposition(t, z)?);
        independent &= other.class == report.class;
    }
    report.zero_independent = Some(independent);
    Ok(report)
}

/// Result of comparing the oracle and the decomposition criteria.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub oracle: SymmetryClass,
    /// `None` when the table is not a group isotope.
    pub criteria: Option<SymmetryClass>,
    /// Zeros whose decomposition classifies differently from the oracle.
    pub disagreeing_zeros: Vec<usize>,
    pub agree: bool,
}

pub fn cross_check(t: &CayleyTable) -> CrossCheck {
    let oracle = oracle::classify_by_oracle(t);
    if !is_group_isotope(t) {
        return CrossCheck {
            oracle,
            criteria: None,
            disagreeing_zeros: Vec::new(),
            agree: false,
        };
    }
    let mut criteria = None;
    let mut disagreeing_zeros = Vec::new();
    for z in 0..t.order() {
        let class = canonical_decomposition(t, z)
            .map(|d| classify_by_criteria(&d).class)
            .ok();
        if z == 0 {
            criteria = class;
        }
        if class != Some(oracle) {
            disagreeing_zeros.push(z);
        }
    }
    CrossCheck {
        oracle,
        criteria,
        agree: disagreeing_zeros.is_empty(),
        disagreeing_zeros,
    }
}

/// Outcome of the implications that follow from the criteria. Each field is
/// `None` when its hypothesis does not apply, else whether it held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub class: SymmetryClass,
    pub linear: bool,
    pub t_quasigroup: bool,
    pub medial: bool,
    /// Linear and not asymmetric or semi-symmetric implies medial.
    pub symmetric_linear_is_medial: Option<bool>,
    /// T-quasigroup and not medial implies asymmetric.
    pub nonmedial_t_is_asymmetric: Option<bool>,
    /// Over an abelian group the automorphism form of the semi-symmetry
    /// test agrees with the anti-automorphism form.
    pub abelian_semi_symmetry_agrees: Option<bool>,
    /// For T-quasigroups: medial iff `αβ = βα`.
    pub medial_iff_commuting: Option<bool>,
    /// An isotope of a nonabelian group is semi-symmetric or asymmetric.
    pub nonabelian_dichotomy: Option<bool>,
    pub violations: Vec<String>,
}

pub fn check_corollaries(t: &CayleyTable) -> Result<CorollaryReport> {
    let d = canonical_decomposition(t, 0)?;
    let report = classify_by_criteria(&d);
    let g = &d.group;
    let linear = g.is_automorphism(&d.alpha) && g.is_automorphism(&d.beta);
    let t_quasigroup = linear && g.is_abelian();
    let medial = oracle::satisfies_identity(t, Identity::Medial);
    let class = report.class;

    let symmetric_binary = matches!(
        class,
        SymmetryClass::StrictlyCommutative
            | SymmetryClass::StrictlyLeftSymmetric
            | SymmetryClass::StrictlyRightSymmetric
            | SymmetryClass::TotallySymmetric
    );
    let symmetric_linear_is_medial = (linear && symmetric_binary).then_some(medial);
    let nonmedial_t_is_asymmetric =
        (t_quasigroup && !medial).then_some(class == SymmetryClass::Asymmetric);

    let abelian_semi_symmetry_agrees = g.is_abelian().then(|| {
        let n = g.order();
        let neg = g.negation();
        let cube = d.alpha.pow(3);
        let automorphism_form = g.is_automorphism(&d.alpha)
            && d.beta == d.alpha.inverse()
            && (0..n).all(|x| cube.apply(x) == neg.apply(x))
            && d.alpha.apply(d.a) == g.neg(d.a);
        automorphism_form == report.is_semi_symmetric()
    });

    let medial_iff_commuting = t_quasigroup.then(|| {
        let commute: Permutation = d.alpha.compose(&d.beta);
        medial == (commute == d.beta.compose(&d.alpha))
    });

    let nonabelian_dichotomy = (!g.is_abelian()).then_some(matches!(
        class,
        SymmetryClass::StrictlySemiSymmetric | SymmetryClass::Asymmetric
    ));

    let mut violations = Vec::new();
    for (name, outcome) in [
        ("symmetric linear isotope is medial", symmetric_linear_is_medial),
        ("nonmedial T-quasigroup is asymmetric", nonmedial_t_is_asymmetric),
        ("abelian semi-symmetry forms agree", abelian_semi_symmetry_agrees),
        ("T-quasigroup medial iff coefficients commute", medial_iff_commuting),
        ("nonabelian isotope is semi-symmetric or asymmetric", nonabelian_dichotomy),
    ] {
        if outcome == Some(false) {
            violations.push(name.to_string());
        }
    }

    Ok(CorollaryReport {
        class,
        linear,
        t_quasigroup,
        medial,
        symmetric_linear_is_medial,
        nonmedial_t_is_asymmetric,
        abelian_semi_symmetry_agrees,
        medial_iff_commuting,
        nonabelian_dichotomy,
        violations,
    })
}
