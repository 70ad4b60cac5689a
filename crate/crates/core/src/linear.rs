//! Linear isotopes `x∘y = αx + βy + d` of the cyclic group `Z_m`, their
//! canonical representatives up to isomorphism, and the prime-order census.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::classify_table;
use crate::error::{Error, Result};
use crate::oracle::{self, find_isomorphism, Identity};
use crate::perm::Permutation;
use crate::symmetry::SymmetryClass;
use crate::table::CayleyTable;

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Trial division.
pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn primes_below(limit: usize) -> Vec<usize> {
    (2..limit).filter(|&n| is_prime(n)).collect()
}

pub fn units(m: usize) -> Vec<usize> {
    (1..m.max(2)).filter(|&u| gcd(u, m) == 1).collect()
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: usize, m: usize) -> Option<usize> {
    if m == 1 {
        return Some(0);
    }
    (1..m).find(|&x| a % m * x % m == 1)
}

/// Smallest `k` in `1..p` with `k² ≡ n (mod p)`, by scanning. For `n ≡ 0`
/// the root is `0`.
pub fn sqrt_mod(n: usize, p: usize) -> Option<usize> {
    let n = n % p;
    if n == 0 {
        return Some(0);
    }
    (1..p).find(|&k| k * k % p == n)
}

/// `(α, β, d)` over `Z_m`, standing for `x∘y = αx + βy + d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearIsotopeSpec {
    m: usize,
    alpha: usize,
    beta: usize,
    d: usize,
}

impl LinearIsotopeSpec {
    pub fn new(m: usize, alpha: usize, beta: usize, d: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("modulus must be at least 2, got {m}")));
        }
        let (alpha, beta, d) = (alpha % m, beta % m, d % m);
        for value in [alpha, beta] {
            if gcd(value, m) != 1 {
                return Err(Error::NonUnitCoefficient { value, modulus: m });
            }
        }
        Ok(Self { m, alpha, beta, d })
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn triple(&self) -> [usize; 3] {
        [self.alpha, self.beta, self.d]
    }

    /// `μ = α + β − 1 (mod m)`.
    pub fn mu(&self) -> usize {
        (self.alpha + self.beta + self.m - 1) % self.m
    }

    pub fn apply(&self, x: usize, y: usize) -> usize {
        (self.alpha * x + self.beta * y + self.d) % self.m
    }

    pub fn table(&self) -> CayleyTable {
        CayleyTable::from_fn(self.m, |x, y| self.apply(x, y))
            .expect("unit coefficients give a Latin square")
    }
}

impl fmt::Display for LinearIsotopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.alpha, self.beta, self.d)
    }
}

pub fn linear_isotope_table(spec: &LinearIsotopeSpec) -> CayleyTable {
    spec.table()
}

fn require_prime(p: usize) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn spec(p: usize, a: usize, b: usize, d: usize) -> LinearIsotopeSpec {
    LinearIsotopeSpec::new(p, a, b, d).expect("coefficients are units")
}

/// `M₀ ∪ M₁`: every `(α, β, 0)` plus `(α, 1 − α, 1)` for `α = 2..p−1`.
pub fn canonical_representatives(p: usize) -> Result<Vec<LinearIsotopeSpec>> {
    require_prime(p)?;
    let mut out: Vec<_> = (1..p)
        .flat_map(|a| (1..p).map(move |b| spec(p, a, b, 0)))
        .collect();
    out.extend((2..p).map(|a| spec(p, a, p + 1 - a, 1)));
    Ok(out)
}

/// Canonical linear isotopes of `Z_m` for any `m ≥ 2`.
///
/// Translating by `t` turns `d` into `d − μt` and scaling by a unit `u`
/// turns it into `ud`, so `d` matters only modulo `g = gcd(μ, m)` and up to
/// unit multiples: the representatives are `0` and the divisors of `g`
/// below `g`.
pub fn canonical_linear_isotopes(m: usize) -> Result<Vec<LinearIsotopeSpec>> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("modulus must be at least 2, got {m}")));
    }
    let us = units(m);
    let mut out = Vec::new();
    for &a in &us {
        for &b in &us {
            let mu = (a + b + m - 1) % m;
            let g = gcd(mu, m);
            out.push(spec(m, a, b, 0));
            out.extend((1..g).filter(|d| g.is_multiple_of(*d)).map(|d| spec(m, a, b, d)));
        }
    }
    Ok(out)
}

/// The `d` values a word-for-word "common divisor of `μ` and `m`" reading
/// would list for `(α, β)`: all positive common divisors below `m`.
pub fn divisor_reading(m: usize, alpha: usize, beta: usize) -> Vec<usize> {
    let mu = (alpha + beta + m - 1) % m;
    let g = gcd(mu, m);
    (1..m).filter(|d| g.is_multiple_of(*d)).collect()
}

/// Strictly semi-symmetric `(α, α⁻¹, 0)` from a root `k` of `p − 3`.
pub fn semi_symmetric_set(p: usize) -> Result<Vec<LinearIsotopeSpec>> {
    require_prime(p)?;
    if p <= 3 {
        return Err(Error::InvalidArgument(format!(
            "semi-symmetric set formula needs p > 3, got {p}"
        )));
    }
    let Some(k) = sqrt_mod(p - 3, p) else {
        return Ok(Vec::new());
    };
    let half = mod_inverse(2, p).expect("p is odd");
    let mut out = Vec::new();
    for s in [(1 + k) % p, (1 + p - k) % p] {
        let inv = mod_inverse(s, p).ok_or_else(|| Error::InternalMismatch {
            class: "ss".into(),
            expected: "1 ± k invertible".into(),
            computed: format!("1 ± k = {s} mod {p}"),
        })?;
        out.push(spec(p, s * half % p, 2 * inv % p, 0));
    }
    if out[0] == out[1] {
        return Err(Error::InternalMismatch {
            class: "ss".into(),
            expected: "two distinct members".into(),
            computed: format!("{} twice", out[0]),
        });
    }
    out.sort();
    Ok(out)
}

/// A value for each of the six classes, serialized under the two-letter
/// codes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerClass<T> {
    pub cs: T,
    pub ls: T,
    pub rs: T,
    pub ts: T,
    pub ss: T,
    #[serde(rename = "as")]
    pub asym: T,
}

impl<T> PerClass<T> {
    pub fn get(&self, class: SymmetryClass) -> &T {
        match class {
            SymmetryClass::StrictlyCommutative => &self.cs,
            SymmetryClass::StrictlyLeftSymmetric => &self.ls,
            SymmetryClass::StrictlyRightSymmetric => &self.rs,
            SymmetryClass::TotallySymmetric => &self.ts,
            SymmetryClass::StrictlySemiSymmetric => &self.ss,
            SymmetryClass::Asymmetric => &self.asym,
        }
    }

    pub fn get_mut(&mut self, class: SymmetryClass) -> &mut T {
        match class {
            SymmetryClass::StrictlyCommutative => &mut self.cs,
            SymmetryClass::StrictlyLeftSymmetric => &mut self.ls,
            SymmetryClass::StrictlyRightSymmetric => &mut self.rs,
            SymmetryClass::TotallySymmetric => &mut self.ts,
            SymmetryClass::StrictlySemiSymmetric => &mut self.ss,
            SymmetryClass::Asymmetric => &mut self.asym,
        }
    }
}

/// Representatives of every isomorphism class of linear isotopes of `Z_p`,
/// grouped by symmetry class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub p: usize,
    /// Smallest square root of `p − 3`, when one exists (`p > 3` only).
    pub k: Option<usize>,
    pub counts: PerClass<usize>,
    pub total: usize,
    pub representatives: PerClass<Vec<[usize; 3]>>,
}

impl CensusReport {
    fn from_specs(p: usize, k: Option<usize>, classified: &[(SymmetryClass, LinearIsotopeSpec)]) -> Self {
        let mut sorted = classified.to_vec();
        sorted.sort();
        let mut counts = PerClass::<usize>::default();
        let mut representatives = PerClass::<Vec<[usize; 3]>>::default();
        for (class, spec) in &sorted {
            *counts.get_mut(*class) += 1;
            representatives.get_mut(*class).push(spec.triple());
        }
        Self {
            p,
            k,
            counts,
            total: sorted.len(),
            representatives,
        }
    }

    pub fn specs(&self, class: SymmetryClass) -> Vec<LinearIsotopeSpec> {
        self.representatives
            .get(class)
            .iter()
            .map(|&[a, b, d]| spec(self.p, a, b, d))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }

    /// `class,alpha,beta,d` rows in report order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("class,alpha,beta,d\n");
        for class in SymmetryClass::ALL {
            for [a, b, d] in self.representatives.get(class) {
                out.push_str(&format!("{},{a},{b},{d}\n", class.code()));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("order {}: {} linear isotopes up to isomorphism\n", self.p, self.total);
        if let Some(k) = self.k {
            out.push_str(&format!("p-3 = {k}^2 mod {}\n", self.p));
        }
        for class in SymmetryClass::ALL {
            let reps: Vec<String> = self
                .representatives
                .get(class)
                .iter()
                .map(|[a, b, d]| format!("({a},{b},{d})"))
                .collect();
            out.push_str(&format!(
                "{:<26}{:>5}  {}\n",
                class.name(),
                self.counts.get(class),
                reps.join(" ")
            ));
        }
        out
    }
}

/// The blocks each representative belongs to, written out from closed
/// formulas for `p > 3`.
pub fn expected_blocks(p: usize) -> Result<PerClass<BTreeSet<LinearIsotopeSpec>>> {
    require_prime(p)?;
    if p <= 3 {
        return Err(Error::InvalidArgument(format!("closed formulas need p > 3, got {p}")));
    }
    let half = mod_inverse(2, p).expect("p is odd");
    let neg = p - 1;
    let ss: BTreeSet<_> = semi_symmetric_set(p)?.into_iter().collect();
    let mut blocks = PerClass::<BTreeSet<LinearIsotopeSpec>>::default();
    blocks.cs = (1..p - 1).map(|a| spec(p, a, a, 0)).collect();
    blocks.cs.insert(spec(p, half, half, 1));
    blocks.ls = (1..p - 1).map(|a| spec(p, a, neg, 0)).collect();
    blocks.ls.insert(spec(p, 2, neg, 1));
    blocks.rs = (1..p - 1).map(|b| spec(p, neg, b, 0)).collect();
    blocks.rs.insert(spec(p, neg, 2, 1));
    blocks.ts.insert(spec(p, neg, neg, 0));
    blocks.asym = (3..p - 1)
        .filter(|&a| a != half)
        .map(|a| spec(p, a, p + 1 - a, 1))
        .chain(
            (1..p - 1)
                .flat_map(|a| (1..p - 1).map(move |b| (a, b)))
                .filter(|(a, b)| a != b)
                .map(|(a, b)| spec(p, a, b, 0))
                .filter(|s| !ss.contains(s)),
        )
        .collect();
    blocks.ss = ss;
    Ok(blocks)
}

/// Class sizes from closed formulas for `p > 3`.
pub fn expected_counts(p: usize) -> PerClass<usize> {
    let residue = sqrt_mod(p - 3, p).is_some();
    PerClass {
        cs: p - 1,
        ls: p - 1,
        rs: p - 1,
        ts: 1,
        ss: if residue { 2 } else { 0 },
        asym: (p - 2) * (p - 2) - if residue { 5 } else { 3 },
    }
}

fn mismatch(class: SymmetryClass, expected: impl fmt::Debug, computed: impl fmt::Debug) -> Error {
    Error::InternalMismatch {
        class: class.code().to_string(),
        expected: format!("{expected:?}"),
        computed: format!("{computed:?}"),
    }
}

/// Classifies every canonical representative of order `p > 3` and checks the
/// blocks and counts against the closed formulas.
pub fn census(p: usize) -> Result<CensusReport> {
    require_prime(p)?;
    if p <= 3 {
        return Err(Error::InvalidArgument(format!(
            "census needs p > 3; use small_order_census for {p}"
        )));
    }
    let reps = canonical_representatives(p)?;
    let mut classified = Vec::with_capacity(reps.len());
    for spec in reps {
        let t = spec.table();
        let class = classify_table(&t)?.class;
        let oracle_class = oracle::classify_by_oracle(&t);
        if oracle_class != class {
            return Err(mismatch(class, format!("{spec} by oracle: {oracle_class}"), format!("{spec}: {class}")));
        }
        classified.push((class, spec));
    }
    let report = CensusReport::from_specs(p, sqrt_mod(p - 3, p), &classified);

    let blocks = expected_blocks(p)?;
    for class in SymmetryClass::ALL {
        let computed: BTreeSet<_> = report.specs(class).into_iter().collect();
        let expected = blocks.get(class);
        if &computed != expected {
            let show = |s: &BTreeSet<LinearIsotopeSpec>| s.iter().map(ToString::to_string).collect::<Vec<_>>();
            return Err(mismatch(class, show(expected), show(&computed)));
        }
    }
    let expected = expected_counts(p);
    if report.counts != expected {
        return Err(Error::InternalMismatch {
            class: "counts".into(),
            expected: format!("{expected:?}"),
            computed: format!("{:?}", report.counts),
        });
    }
    if report.total != p * p - p - 1 {
        return Err(Error::InternalMismatch {
            class: "total".into(),
            expected: (p * p - p - 1).to_string(),
            computed: report.total.to_string(),
        });
    }
    Ok(report)
}

/// Orders 2 and 3, where every quasigroup is a linear isotope of `Z_n`.
/// The listed representatives are confirmed by enumerating every Latin
/// square of order `n` and sorting them into isomorphism classes.
pub fn small_order_census(n: usize) -> Result<CensusReport> {
    let listed: Vec<(SymmetryClass, LinearIsotopeSpec)> = match n {
        2 => vec![(SymmetryClass::TotallySymmetric, spec(2, 1, 1, 0))],
        3 => vec![
            (SymmetryClass::StrictlyCommutative, spec(3, 1, 1, 0)),
            (SymmetryClass::StrictlyLeftSymmetric, spec(3, 1, 2, 0)),
            (SymmetryClass::StrictlyRightSymmetric, spec(3, 2, 1, 0)),
            (SymmetryClass::TotallySymmetric, spec(3, 2, 2, 0)),
            (SymmetryClass::TotallySymmetric, spec(3, 2, 2, 1)),
        ],
        _ => {
            return Err(Error::InvalidArgument(format!(
                "small-order census covers orders 2 and 3, got {n}"
            )))
        }
    };

    let classes = isomorphism_classes(&oracle::all_latin_squares(n)?);
    if classes.len() != listed.len() {
        return Err(Error::InternalMismatch {
            class: "isomorphism classes".into(),
            expected: listed.len().to_string(),
            computed: classes.len().to_string(),
        });
    }
    let mut hit = vec![false; listed.len()];
    for class_rep in &classes {
        let matching: Vec<usize> = listed
            .iter()
            .enumerate()
            .filter(|(_, (_, s))| find_isomorphism(class_rep, &s.table()).is_some())
            .map(|(i, _)| i)
            .collect();
        let [i] = matching[..] else {
            return Err(Error::InternalMismatch {
                class: "isomorphism classes".into(),
                expected: "exactly one listed representative per class".into(),
                computed: format!("{} matches", matching.len()),
            });
        };
        hit[i] = true;
        let (class, s) = listed[i];
        let oracle_class = oracle::classify_by_oracle(class_rep);
        let criteria_class = classify_table(&s.table())?.class;
        if oracle_class != class || criteria_class != class {
            return Err(mismatch(class, class, (oracle_class, criteria_class)));
        }
    }
    debug_assert!(hit.iter().all(|&h| h));
    Ok(CensusReport::from_specs(n, None, &listed))
}

/// One table from each isomorphism class of `tables`, in first-seen order.
pub fn isomorphism_classes(tables: &[CayleyTable]) -> Vec<CayleyTable> {
    let mut reps: Vec<CayleyTable> = Vec::new();
    for t in tables {
        if !reps.iter().any(|r| find_isomorphism(r, t).is_some()) {
            reps.push(t.clone());
        }
    }
    reps
}

/// Two specs whose tables are isomorphic, with the isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphicPair {
    pub first: LinearIsotopeSpec,
    pub second: LinearIsotopeSpec,
    pub phi: Permutation,
}

/// `Ok` when no two specs give isomorphic tables; otherwise the first
/// offending pair.
pub fn verify_pairwise_nonisomorphic(specs: &[LinearIsotopeSpec]) -> Result<(), IsomorphicPair> {
    let tables: Vec<CayleyTable> = specs.iter().map(LinearIsotopeSpec::table).collect();
    for i in 0..specs.len() {
        for j in i + 1..specs.len() {
            if let Some(phi) = find_isomorphism(&tables[i], &tables[j]) {
                return Err(IsomorphicPair { first: specs[i], second: specs[j], phi });
            }
        }
    }
    Ok(())
}

/// Strictly semi-symmetric `(α, β, 0)` over `Z_p` found by testing
/// `x·yx = y` on every coefficient pair, with no number theory involved.
pub fn semi_symmetric_sweep(p: usize) -> Vec<LinearIsotopeSpec> {
    let mut out = Vec::new();
    for a in 1..p {
        for b in 1..p {
            let op = |x: usize, y: usize| (a * x + b * y) % p;
            let semi = (0..p).all(|x| (0..p).all(|y| op(x, op(y, x)) == y));
            if semi && !(a == p - 1 && b == p - 1) {
                out.push(spec(p, a, b, 0));
            }
        }
    }
    out
}

/// Canonical linear isotopes of `Z_m` with their classes, and for small `m`
/// a brute-force check that they are exactly the isomorphism classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub m: usize,
    pub total: usize,
    pub counts: PerClass<usize>,
    pub representatives: PerClass<Vec<[usize; 3]>>,
    /// Number of isomorphism classes among all `(α, β, d)`, when computed.
    pub isomorphism_classes: Option<usize>,
    /// Whether the representatives are pairwise non-isomorphic and cover
    /// every linear isotope, when computed.
    pub verified: Option<bool>,
    /// `(α, β)` pairs where listing every common divisor of `μ` and `m` as a
    /// separate `d` would give a different set.
    pub divisor_reading_differs: Vec<[usize; 2]>,
}

/// Largest modulus for which [`enumerate_linear`] runs the isomorphism check.
pub const BRUTE_FORCE_LIMIT: usize = 8;

pub fn enumerate_linear(m: usize) -> Result<EnumerationReport> {
    let specs = canonical_linear_isotopes(m)?;
    let mut classified = Vec::with_capacity(specs.len());
    for s in &specs {
        classified.push((classify_table(&s.table())?.class, *s));
    }
    let base = CensusReport::from_specs(m, None, &classified);

    let mut divisor_reading_differs = Vec::new();
    for a in units(m) {
        for b in units(m) {
            let ours: Vec<usize> = specs
                .iter()
                .filter(|s| s.alpha == a && s.beta == b)
                .map(|s| s.d)
                .filter(|&d| d != 0)
                .collect();
            if ours != divisor_reading(m, a, b) {
                divisor_reading_differs.push([a, b]);
            }
        }
    }

    let (isomorphism_classes, verified) = if m <= BRUTE_FORCE_LIMIT {
        let us = units(m);
        let all: Vec<CayleyTable> = us
            .iter()
            .flat_map(|&a| us.iter().flat_map(move |&b| (0..m).map(move |d| spec(m, a, b, d))))
            .map(|s| s.table())
            .collect();
        let classes = self::isomorphism_classes(&all).len();
        let rep_tables: Vec<CayleyTable> = specs.iter().map(LinearIsotopeSpec::table).collect();
        let covers = all
            .iter()
            .all(|t| rep_tables.iter().filter(|r| find_isomorphism(r, t).is_some()).count() == 1);
        let distinct = verify_pairwise_nonisomorphic(&specs).is_ok();
        (Some(classes), Some(covers && distinct && classes == specs.len()))
    } else {
        (None, None)
    };

    Ok(EnumerationReport {
        m,
        total: base.total,
        counts: base.counts,
        representatives: base.representatives,
        isomorphism_classes,
        verified,
        divisor_reading_differs,
    })
}

impl EnumerationReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("class,alpha,beta,d\n");
        for class in SymmetryClass::ALL {
            for [a, b, d] in self.representatives.get(class) {
                out.push_str(&format!("{},{a},{b},{d}\n", class.code()));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("Z_{}: {} canonical linear isotopes\n", self.m, self.total);
        for class in SymmetryClass::ALL {
            let reps: Vec<String> = self
                .representatives
                .get(class)
                .iter()
                .map(|[a, b, d]| format!("({a},{b},{d})"))
                .collect();
            out.push_str(&format!("{:<26}{:>5}  {}\n", class.name(), self.counts.get(class), reps.join(" ")));
        }
        match (self.isomorphism_classes, self.verified) {
            (Some(c), Some(v)) => out.push_str(&format!(
                "brute force: {c} isomorphism classes, representatives {}\n",
                if v { "verified" } else { "DO NOT MATCH" }
            )),
            _ => out.push_str(&format!("brute force: skipped (m > {BRUTE_FORCE_LIMIT})\n")),
        }
        out
    }
}

/// Oracle-verified: the table satisfies `x·yx = y`.
pub fn is_semi_symmetric(spec: &LinearIsotopeSpec) -> bool {
    oracle::satisfies_identity(&spec.table(), Identity::SemiSymmetric)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_theory() {
        assert_eq!(sqrt_mod(4, 7), Some(2));
        assert_eq!(sqrt_mod(2, 5), None);
        assert_eq!(sqrt_mod(0, 11), Some(0));
        assert_eq!(sqrt_mod(10, 13), Some(6));
        assert_eq!(mod_inverse(2, 7), Some(4));
        assert_eq!(mod_inverse(2, 8), None);
        assert!(is_prime(97) && !is_prime(91) && !is_prime(1));
        assert_eq!(units(9), vec![1, 2, 4, 5, 7, 8]);
    }

    #[test]
    fn spec_validation() {
        assert!(LinearIsotopeSpec::new(6, 2, 1, 0).is_err());
        assert_eq!(
            LinearIsotopeSpec::new(6, 3, 1, 0).unwrap_err(),
            Error::NonUnitCoefficient { value: 3, modulus: 6 }
        );
        let s = LinearIsotopeSpec::new(7, 5, 3, 0).unwrap();
        assert_eq!(s.mu(), 0);
        assert!(is_semi_symmetric(&s));
    }

    #[test]
    fn small_tables() {
        let z3 = CayleyTable::from_fn(3, |x, y| (x + y) % 3).unwrap();
        assert_eq!(spec(3, 1, 1, 0).table(), z3);
        assert_eq!(spec(3, 2, 2, 1).table().get(0, 0), 1);
    }

    #[test]
    fn representatives_for_small_primes() {
        let p3: Vec<_> = canonical_representatives(3).unwrap().iter().map(|s| s.triple()).collect();
        assert_eq!(p3, vec![[1, 1, 0], [1, 2, 0], [2, 1, 0], [2, 2, 0], [2, 2, 1]]);
        assert_eq!(canonical_representatives(5).unwrap().len(), 19);
        let p2: Vec<_> = canonical_representatives(2).unwrap().iter().map(|s| s.triple()).collect();
        assert_eq!(p2, vec![[1, 1, 0]]);
        assert_eq!(canonical_representatives(9).unwrap_err(), Error::NotPrime(9));
    }

    #[test]
    fn semi_symmetric_sets() {
        let p7: Vec<_> = semi_symmetric_set(7).unwrap().iter().map(|s| s.triple()).collect();
        assert_eq!(p7, vec![[3, 5, 0], [5, 3, 0]]);
        assert!(semi_symmetric_set(5).unwrap().is_empty());
        let p13 = semi_symmetric_set(13).unwrap();
        assert_eq!(p13.len(), 2);
        for s in p13 {
            assert_eq!(s.alpha().pow(3) % 13, 12);
            assert_eq!(s.alpha() * s.beta() % 13, 1);
        }
    }

    #[test]
    fn census_counts() {
        let r = census(5).unwrap();
        assert_eq!(
            [r.counts.cs, r.counts.ls, r.counts.rs, r.counts.ts, r.counts.ss, r.counts.asym],
            [4, 4, 4, 1, 0, 6]
        );
        assert_eq!(r.total, 19);
        assert_eq!(r.k, None);
        assert_eq!(census(7).unwrap().k, Some(2));
        assert!(census(3).is_err());
        assert_eq!(census(15).unwrap_err(), Error::NotPrime(15));
    }

    #[test]
    fn small_censuses() {
        let r2 = small_order_census(2).unwrap();
        assert_eq!(r2.total, 1);
        assert_eq!(r2.counts.ts, 1);
        let r3 = small_order_census(3).unwrap();
        assert_eq!(r3.total, 5);
        assert_eq!(r3.representatives.ts, vec![[2, 2, 0], [2, 2, 1]]);
        assert!(small_order_census(4).is_err());
    }

    #[test]
    fn pairwise_check() {
        assert!(verify_pairwise_nonisomorphic(&[spec(5, 2, 3, 0)]).is_ok());
        let pair = verify_pairwise_nonisomorphic(&[spec(5, 1, 1, 0), spec(5, 1, 1, 1)]).unwrap_err();
        assert!(oracle::is_isomorphism(&spec(5, 1, 1, 0).table(), &spec(5, 1, 1, 1).table(), &pair.phi));
    }

    #[test]
    fn composite_enumeration_matches_brute_force() {
        for m in 2..=BRUTE_FORCE_LIMIT {
            let r = enumerate_linear(m).unwrap();
            assert_eq!(r.verified, Some(true), "m = {m}: {r:?}");
        }
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let r = census(7).unwrap();
        let text = r.to_json();
        let back = CensusReport::from_json(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn csv_has_one_row_per_representative() {
        let r = census(5).unwrap();
        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), 1 + 19);
        assert!(csv.starts_with("class,alpha,beta,d\ncs,"));
    }
}
