//! Group isotopes and their canonical decompositions `x·y = αx + a + βy`.
//!
//! For a chosen element `0` the decomposition is recovered constructively:
//! with `a = 0·0`, the principal loop `x∘y = R₀⁻¹(x)·L₀⁻¹(y)` has identity
//! `a`, and when `·` is `αx + a + βy` it equals `x − a + y`. Taking `w` to be
//! the `∘`-inverse of `0`, `x∘w∘y = x + y` recovers the group with neutral
//! `0`, after which `α(x) = x·0 − a` and `β(y) = −a + 0·y`. Every
//! decomposition is checked against the input before it is returned.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupStructure;
use crate::perm::Permutation;
use crate::table::CayleyTable;

/// `x·y = α(x) + a + β(y)` over `group`, whose neutral element is `zero`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub group: GroupStructure,
    pub alpha: Permutation,
    pub beta: Permutation,
    pub a: usize,
    pub zero: usize,
}

/// JSON form of a [`CanonicalDecomposition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub order: usize,
    pub zero: usize,
    pub a: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub group_table: Vec<Vec<usize>>,
}

impl CanonicalDecomposition {
    /// Evaluates `α(x) + a + β(y)`.
    pub fn eval(&self, x: usize, y: usize) -> usize {
        let g = &self.group;
        g.add(g.add(self.alpha.apply(x), self.a), self.beta.apply(y))
    }

    pub fn to_table(&self) -> CayleyTable {
        let n = self.group.order();
        let cells = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| self.eval(x, y))
            .collect();
        CayleyTable::from_cells_unchecked(n, cells)
    }

    pub fn to_record(&self) -> DecompositionRecord {
        DecompositionRecord {
            order: self.group.order(),
            zero: self.zero,
            a: self.a,
            alpha: self.alpha.images().to_vec(),
            beta: self.beta.images().to_vec(),
            group_table: self.group.table().rows(),
        }
    }

    /// Rebuilds and re-verifies a decomposition from its JSON form.
    pub fn from_record(record: &DecompositionRecord) -> Result<Self> {
        let group = GroupStructure::new(CayleyTable::new(record.group_table.clone())?)?;
        let alpha = Permutation::new(record.alpha.clone())?;
        let beta = Permutation::new(record.beta.clone())?;
        if group.order() != record.order {
            return Err(Error::SizeMismatch { expected: record.order, found: group.order() });
        }
        if group.neutral() != record.zero {
            return Err(Error::NotUnitary { neutral: group.neutral() });
        }
        let d = build_decomposition(group, alpha, record.a, beta)?;
        Ok(d)
    }
}

fn check_element(order: usize, element: usize) -> Result<()> {
    if element >= order {
        return Err(Error::ElementOutOfRange { element, order });
    }
    Ok(())
}

/// `x∘y = R_z⁻¹(x)·L_z⁻¹(y)` with `R_z(t) = t·z`, `L_z(t) = z·t`. Its identity
/// element is `z·z`.
pub fn principal_loop(t: &CayleyTable, zero: usize) -> CayleyTable {
    let n = t.order();
    let mut r_inv = vec![0; n];
    let mut l_inv = vec![0; n];
    for v in 0..n {
        r_inv[t.get(v, zero)] = v;
        l_inv[t.get(zero, v)] = v;
    }
    let cells = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| t.get(r_inv[x], l_inv[y]))
        .collect();
    CayleyTable::from_cells_unchecked(n, cells)
}

/// A loop isotopic to a group is a group, so one principal loop decides.
pub fn is_group_isotope(t: &CayleyTable) -> bool {
    let lp = principal_loop(t, 0);
    let n = t.order();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| lp.get(lp.get(x, y), z) == lp.get(x, lp.get(y, z)))))
}

/// The `zero`-canonical decomposition of a group isotope.
pub fn canonical_decomposition(t: &CayleyTable, zero: usize) -> Result<CanonicalDecomposition> {
    let n = t.order();
    check_element(n, zero)?;
    let a = t.get(zero, zero);
    let lp = principal_loop(t, zero);
    let lp = GroupStructure::new(lp).map_err(|e| match e {
        Error::NotAssociative { .. } | Error::NoNeutral => Error::NotGroupIsotope,
        other => other,
    })?;
    debug_assert_eq!(lp.neutral(), a);
    let w = lp.neg(zero);
    let sum = CayleyTable::from_fn(n, |x, y| lp.add(lp.add(x, w), y))
        .map_err(|e| Error::InternalVerificationFailed(e.to_string()))?;
    let group =
        GroupStructure::new(sum).map_err(|e| Error::InternalVerificationFailed(e.to_string()))?;
    if group.neutral() != zero {
        return Err(Error::InternalVerificationFailed(format!(
            "recovered group has neutral {} instead of {zero}",
            group.neutral()
        )));
    }
    let neg_a = group.neg(a);
    let alpha = Permutation::from_fn(n, |x| group.add(t.get(x, zero), neg_a))
        .map_err(|e| Error::InternalVerificationFailed(e.to_string()))?;
    let beta = Permutation::from_fn(n, |y| group.add(neg_a, t.get(zero, y)))
        .map_err(|e| Error::InternalVerificationFailed(e.to_string()))?;
    let d = CanonicalDecomposition { group, alpha, beta, a, zero };
    verify_decomposition(&d, t)?;
    Ok(d)
}

fn verify_decomposition(d: &CanonicalDecomposition, t: &CayleyTable) -> Result<()> {
    let fail = |msg: String| Err(Error::InternalVerificationFailed(msg));
    if d.group.neutral() != d.zero {
        return fail("neutral differs from zero".into());
    }
    if !d.alpha.fixes(d.zero) || !d.beta.fixes(d.zero) {
        return fail("coefficients are not unitary".into());
    }
    let n = t.order();
    for x in 0..n {
        for y in 0..n {
            if d.eval(x, y) != t.get(x, y) {
                return fail(format!("decomposition differs from table at ({x}, {y})"));
            }
        }
    }
    Ok(())
}

fn build_decomposition(
    group: GroupStructure,
    alpha: Permutation,
    a: usize,
    beta: Permutation,
) -> Result<CanonicalDecomposition> {
    let n = group.order();
    for p in [&alpha, &beta] {
        if p.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: p.len() });
        }
        if !group.is_unitary(p) {
            return Err(Error::NotUnitary { neutral: group.neutral() });
        }
    }
    check_element(n, a)?;
    let zero = group.neutral();
    Ok(CanonicalDecomposition { group, alpha, beta, a, zero })
}

/// `out[x][y] = α(x) + a + β(y)`; `α`, `β` must fix the neutral element.
pub fn build_isotope(
    g: &GroupStructure,
    alpha: &Permutation,
    a: usize,
    beta: &Permutation,
) -> Result<CayleyTable> {
    Ok(build_decomposition(g.clone(), alpha.clone(), a, beta.clone())?.to_table())
}

/// `(θ, b, c)` with `α = L_c R_{−b} θ`, `β = L_b θ`, `γ = L_c θ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutotopismParts {
    pub theta: Permutation,
    pub b: usize,
    pub c: usize,
}

/// Splits an autotopism `α(x) + β(y) = γ(x + y)` of `g`.
pub fn decompose_autotopism(
    g: &GroupStructure,
    alpha: &Permutation,
    beta: &Permutation,
    gamma: &Permutation,
) -> Result<AutotopismParts> {
    let n = g.order();
    for p in [alpha, beta, gamma] {
        if p.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: p.len() });
        }
    }
    for x in 0..n {
        for y in 0..n {
            if g.add(alpha.apply(x), beta.apply(y)) != gamma.apply(g.add(x, y)) {
                return Err(Error::NotAutotopism { witness: (x, y) });
            }
        }
    }
    let e = g.neutral();
    let c = gamma.apply(e);
    let b = beta.apply(e);
    let theta = g.left_translation(c).inverse().compose(gamma);
    let recomposed_alpha = g
        .left_translation(c)
        .compose(&g.right_translation(g.neg(b)))
        .compose(&theta);
    let ok = g.is_automorphism(&theta)
        && recomposed_alpha == *alpha
        && g.left_translation(b).compose(&theta) == *beta
        && g.left_translation(c).compose(&theta) == *gamma;
    if !ok {
        return Err(Error::InternalVerificationFailed(
            "autotopism components do not recompose".into(),
        ));
    }
    Ok(AutotopismParts { theta, b, c })
}

/// A group isotope whose canonical coefficients are automorphisms.
pub fn is_linear_isotope(t: &CayleyTable) -> bool {
    canonical_decomposition(t, 0)
        .map(|d| d.group.is_automorphism(&d.alpha) && d.group.is_automorphism(&d.beta))
        .unwrap_or(false)
}

/// A linear isotope of an abelian group.
pub fn is_t_quasigroup(t: &CayleyTable) -> bool {
    canonical_decomposition(t, 0)
        .map(|d| {
            d.group.is_abelian()
                && d.group.is_automorphism(&d.alpha)
                && d.group.is_automorphism(&d.beta)
        })
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(m: usize, a: usize, b: usize, d: usize) -> CayleyTable {
        CayleyTable::from_fn(m, |x, y| (a * x + b * y + d) % m).unwrap()
    }

    #[test]
    fn cyclic_group_is_already_canonical() {
        let d = canonical_decomposition(&lin(5, 1, 1, 0), 0).unwrap();
        assert!(d.alpha.is_identity());
        assert!(d.beta.is_identity());
        assert_eq!(d.a, 0);
        assert_eq!(d.group, GroupStructure::cyclic(5));
    }

    #[test]
    fn linear_isotope_of_z7() {
        let d = canonical_decomposition(&lin(7, 3, 5, 1), 0).unwrap();
        assert_eq!(d.group, GroupStructure::cyclic(7));
        assert_eq!(d.alpha, Permutation::from_fn(7, |x| 3 * x % 7).unwrap());
        assert_eq!(d.beta, Permutation::from_fn(7, |x| 5 * x % 7).unwrap());
        assert_eq!(d.a, 1);
    }

    #[test]
    fn non_group_isotope_is_rejected() {
        let t = crate::fixtures::non_group_isotope();
        assert!(!is_group_isotope(&t));
        assert_eq!(canonical_decomposition(&t, 0).unwrap_err(), Error::NotGroupIsotope);
    }

    #[test]
    fn every_zero_gives_a_decomposition() {
        let t = lin(9, 2, 5, 3);
        for z in 0..9 {
            let d = canonical_decomposition(&t, z).unwrap();
            assert_eq!(d.zero, z);
            assert_eq!(d.to_table(), t);
        }
        assert!(canonical_decomposition(&t, 9).is_err());
    }

    #[test]
    fn build_examples() {
        let z3 = GroupStructure::cyclic(3);
        let id3 = Permutation::identity(3);
        assert_eq!(build_isotope(&z3, &id3, 0, &id3).unwrap(), lin(3, 1, 1, 0));
        let z2 = GroupStructure::cyclic(2);
        let id2 = Permutation::identity(2);
        assert_eq!(build_isotope(&z2, &id2, 1, &id2).unwrap(), lin(2, 1, 1, 1));
        let shift = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(
            build_isotope(&z3, &shift, 0, &id3).unwrap_err(),
            Error::NotUnitary { neutral: 0 }
        );
    }

    #[test]
    fn build_z9_semi_symmetric() {
        let z9 = GroupStructure::cyclic(9);
        let a = Permutation::from_fn(9, |x| 2 * x % 9).unwrap();
        let b = Permutation::from_fn(9, |x| 5 * x % 9).unwrap();
        let t = build_isotope(&z9, &a, 3, &b).unwrap();
        assert!(crate::oracle::satisfies_identity(&t, crate::oracle::Identity::SemiSymmetric));
        let d = canonical_decomposition(&t, 0).unwrap();
        assert_eq!((d.alpha, d.beta, d.a), (a, b, 3));
    }

    #[test]
    fn record_round_trip() {
        let d = canonical_decomposition(&lin(7, 3, 5, 1), 2).unwrap();
        let json = serde_json::to_string(&d.to_record()).unwrap();
        let back: DecompositionRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(CanonicalDecomposition::from_record(&back).unwrap(), d);
    }

    #[test]
    fn trivial_autotopism() {
        let g = GroupStructure::cyclic(4);
        let id = Permutation::identity(4);
        let parts = decompose_autotopism(&g, &id, &id, &id).unwrap();
        assert!(parts.theta.is_identity());
        assert_eq!((parts.b, parts.c), (0, 0));
    }

    #[test]
    fn translation_autotopism_of_z5() {
        let g = GroupStructure::cyclic(5);
        let alpha = Permutation::from_fn(5, |x| (x + 5 + 2 - 3) % 5).unwrap();
        let beta = Permutation::from_fn(5, |y| (y + 3) % 5).unwrap();
        let gamma = Permutation::from_fn(5, |z| (z + 2) % 5).unwrap();
        let parts = decompose_autotopism(&g, &alpha, &beta, &gamma).unwrap();
        assert!(parts.theta.is_identity());
        assert_eq!((parts.b, parts.c), (3, 2));
    }

    #[test]
    fn multiplicative_autotopism_of_z7() {
        let g = GroupStructure::cyclic(7);
        let t = Permutation::from_fn(7, |x| 3 * x % 7).unwrap();
        let parts = decompose_autotopism(&g, &t, &t, &t).unwrap();
        assert_eq!(parts.theta, t);
        assert_eq!((parts.b, parts.c), (0, 0));
    }

    #[test]
    fn non_autotopism_reports_witness() {
        let g = GroupStructure::cyclic(3);
        let id = Permutation::identity(3);
        let swap = Permutation::transposition(3, 0, 1);
        assert!(matches!(
            decompose_autotopism(&g, &swap, &id, &id),
            Err(Error::NotAutotopism { .. })
        ));
    }

    #[test]
    fn autotopism_of_nonabelian_group() {
        let g = GroupStructure::symmetric3();
        let theta = g.inner_shift(3);
        let (b, c) = (1, 4);
        let alpha = g.left_translation(c).compose(&g.right_translation(g.neg(b))).compose(&theta);
        let beta = g.left_translation(b).compose(&theta);
        let gamma = g.left_translation(c).compose(&theta);
        let parts = decompose_autotopism(&g, &alpha, &beta, &gamma).unwrap();
        assert_eq!(parts, AutotopismParts { theta, b, c });
    }

    #[test]
    fn linearity() {
        assert!(is_linear_isotope(&lin(5, 2, 3, 4)));
        assert!(is_t_quasigroup(&lin(5, 2, 3, 4)));
        let z5 = GroupStructure::cyclic(5);
        let swap = Permutation::transposition(5, 1, 2);
        assert!(!z5.is_automorphism(&swap));
        let t = build_isotope(&z5, &swap, 0, &Permutation::identity(5)).unwrap();
        assert!(is_group_isotope(&t));
        assert!(!is_linear_isotope(&t));
        assert!(!is_t_quasigroup(&t));
        let s3 = GroupStructure::symmetric3();
        let inner = s3.inner_shift(1);
        let t = build_isotope(&s3, &inner, 2, &Permutation::identity(6)).unwrap();
        assert!(is_linear_isotope(&t));
        assert!(!is_t_quasigroup(&t));
    }

    #[test]
    fn order_one_is_trivially_canonical() {
        let t = CayleyTable::new(vec![vec![0]]).unwrap();
        let d = canonical_decomposition(&t, 0).unwrap();
        assert_eq!(d.a, 0);
        assert!(d.alpha.is_identity());
    }
}
