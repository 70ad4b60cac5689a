//! Direct, exhaustive operations on Cayley tables.
//!
//! Nothing here knows about groups or decompositions: symmetry is decided by
//! comparing parastrophe tables cell by cell, identities by looping over every
//! assignment of the variables. The classifier in [`crate::classify`] is
//! checked against these routines.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::symmetry::{Sigma, SymmetryClass, SymmetryGroup};
use crate::table::CayleyTable;

/// The `σ`-parastrophe of `t`.
///
/// Every triple `x₁·x₂ = x₃` of `t` is rearranged by moving the entry in
/// position `i` to position `σ(i)`; the rearranged triple is a triple of the
/// result. With this reading `parastrophe(parastrophe(t, τ), σ)` equals
/// `parastrophe(t, σ∘τ)`.
pub fn parastrophe(t: &CayleyTable, sigma: Sigma) -> CayleyTable {
    let n = t.order();
    let pos = sigma.positions();
    let mut cells = vec![usize::MAX; n * n];
    for x in 0..n {
        for y in 0..n {
            let triple = [x, y, t.get(x, y)];
            let mut moved = [0; 3];
            for i in 0..3 {
                moved[pos[i]] = triple[i];
            }
            cells[moved[0] * n + moved[1]] = moved[2];
        }
    }
    debug_assert!(cells.iter().all(|&c| c < n));
    CayleyTable::from_cells_unchecked(n, cells)
}

/// Whether the `σ`-parastrophe coincides with `t`, without building it.
pub fn is_symmetry(t: &CayleyTable, sigma: Sigma) -> bool {
    let pos = sigma.positions();
    (0..t.order()).all(|x| {
        (0..t.order()).all(|y| {
            let triple = [x, y, t.get(x, y)];
            let mut moved = [0; 3];
            for i in 0..3 {
                moved[pos[i]] = triple[i];
            }
            t.get(moved[0], moved[1]) == moved[2]
        })
    })
}

/// `{ σ ∈ S₃ : parastrophe(t, σ) = t }`.
pub fn symmetry_group(t: &CayleyTable) -> SymmetryGroup {
    SymmetryGroup::from_members(Sigma::ALL.into_iter().filter(|&s| is_symmetry(t, s)))
}

pub fn classify_by_oracle(t: &CayleyTable) -> SymmetryClass {
    symmetry_group(t)
        .class()
        .expect("a stabilizer is always one of the six subgroups of S3")
}

/// Identities checked by brute force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `xy = yx`
    Commutative,
    /// `x·xy = y`
    LeftSymmetric,
    /// `xy·y = x`
    RightSymmetric,
    /// `x·yx = y`
    SemiSymmetric,
    /// `xy·uv = xu·yv`
    Medial,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::Commutative,
        Identity::LeftSymmetric,
        Identity::RightSymmetric,
        Identity::SemiSymmetric,
        Identity::Medial,
    ];
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::Commutative => "commutative",
            Identity::LeftSymmetric => "left-symmetric",
            Identity::RightSymmetric => "right-symmetric",
            Identity::SemiSymmetric => "semi-symmetric",
            Identity::Medial => "medial",
        })
    }
}

/// The first variable assignment violating `identity`, if any. Binary
/// identities report `[x, y]`, mediality reports `[x, y, u, v]`.
pub fn identity_witness(t: &CayleyTable, identity: Identity) -> Option<Vec<usize>> {
    let n = t.order();
    let m = |a, b| t.get(a, b);
    let pairs = (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    match identity {
        Identity::Commutative => pairs.into_iter().find(|&(x, y)| m(x, y) != m(y, x)),
        Identity::LeftSymmetric => pairs.into_iter().find(|&(x, y)| m(x, m(x, y)) != y),
        Identity::RightSymmetric => pairs.into_iter().find(|&(x, y)| m(m(x, y), y) != x),
        Identity::SemiSymmetric => pairs.into_iter().find(|&(x, y)| m(x, m(y, x)) != y),
        Identity::Medial => {
            for x in 0..n {
                for y in 0..n {
                    let xy = m(x, y);
                    for u in 0..n {
                        let xu = m(x, u);
                        for v in 0..n {
                            if m(xy, m(u, v)) != m(xu, m(y, v)) {
                                return Some(vec![x, y, u, v]);
                            }
                        }
                    }
                }
            }
            return None;
        }
    }
    .map(|(x, y)| vec![x, y])
}

pub fn satisfies_identity(t: &CayleyTable, identity: Identity) -> bool {
    identity_witness(t, identity).is_none()
}

/// `out[x][y] = γ⁻¹(t[α(x)][β(y)])`.
pub fn apply_isotopy(
    t: &CayleyTable,
    alpha: &Permutation,
    beta: &Permutation,
    gamma: &Permutation,
) -> Result<CayleyTable> {
    let n = t.order();
    for p in [alpha, beta, gamma] {
        if p.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: p.len() });
        }
    }
    let gamma_inv = gamma.inverse();
    let cells = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| gamma_inv.apply(t.get(alpha.apply(x), beta.apply(y))))
        .collect();
    Ok(CayleyTable::from_cells_unchecked(n, cells))
}

/// Relabels `t` along `phi`: the result is the image of `t` under the
/// isomorphism `phi`.
pub fn relabel(t: &CayleyTable, phi: &Permutation) -> Result<CayleyTable> {
    let inv = phi.inverse();
    apply_isotopy(t, &inv, &inv, &inv)
}

/// Per-element data preserved by isomorphisms, used to prune the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct ElementProfile {
    idempotent: bool,
    commuting: usize,
    left_symmetric: usize,
    right_symmetric: usize,
    right_cycle: usize,
}

fn profiles(t: &CayleyTable) -> Vec<ElementProfile> {
    let n = t.order();
    (0..n)
        .map(|x| {
            let mut right_cycle = 1;
            let mut v = t.get(x, x);
            while v != x {
                v = t.get(v, x);
                right_cycle += 1;
            }
            ElementProfile {
                idempotent: t.get(x, x) == x,
                commuting: (0..n).filter(|&y| t.get(x, y) == t.get(y, x)).count(),
                left_symmetric: (0..n).filter(|&y| t.get(x, t.get(x, y)) == y).count(),
                right_symmetric: (0..n).filter(|&y| t.get(t.get(y, x), x) == y).count(),
                right_cycle,
            }
        })
        .collect()
}

struct IsoSearch<'a> {
    a: &'a CayleyTable,
    b: &'a CayleyTable,
    profile_a: Vec<ElementProfile>,
    profile_b: Vec<ElementProfile>,
}

#[derive(Clone)]
struct Partial {
    fwd: Vec<Option<usize>>,
    bwd: Vec<Option<usize>>,
    known: Vec<usize>,
}

impl IsoSearch<'_> {
    /// Assigns `x ↦ y` and closes the partial map under the operation.
    fn assign(&self, state: &mut Partial, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match (state.fwd[x], state.bwd[y]) {
                (Some(fy), _) if fy == y => continue,
                (None, None) => {}
                _ => return false,
            }
            if self.profile_a[x] != self.profile_b[y] {
                return false;
            }
            state.fwd[x] = Some(y);
            state.bwd[y] = Some(x);
            state.known.push(x);
            for &k in &state.known {
                for (p, q) in [(x, k), (k, x)] {
                    let z = self.a.get(p, q);
                    let w = self.b.get(
                        state.fwd[p].expect("mapped"),
                        state.fwd[q].expect("mapped"),
                    );
                    match state.fwd[z] {
                        Some(v) if v != w => return false,
                        Some(_) => {}
                        None => queue.push((z, w)),
                    }
                }
            }
        }
        true
    }

    /// Depth-first search; `visit` returns `false` to stop early.
    fn search(&self, state: Partial, visit: &mut dyn FnMut(Permutation) -> bool) -> bool {
        let n = self.a.order();
        let Some(x) = (0..n).find(|&x| state.fwd[x].is_none()) else {
            let images = state.fwd.iter().map(|v| v.expect("complete")).collect();
            return visit(Permutation::new(images).expect("bijective by construction"));
        };
        for y in (0..n).filter(|&y| state.bwd[y].is_none()) {
            let mut next = state.clone();
            if self.assign(&mut next, x, y) && !self.search(next, visit) {
                return false;
            }
        }
        true
    }
}

fn run_search(t1: &CayleyTable, t2: &CayleyTable, visit: &mut dyn FnMut(Permutation) -> bool) {
    if t1.order() != t2.order() || symmetry_group(t1) != symmetry_group(t2) {
        return;
    }
    let search = IsoSearch {
        a: t1,
        b: t2,
        profile_a: profiles(t1),
        profile_b: profiles(t2),
    };
    let mut pa = search.profile_a.clone();
    let mut pb = search.profile_b.clone();
    pa.sort();
    pb.sort();
    if pa != pb {
        return;
    }
    let n = t1.order();
    let start = Partial {
        fwd: vec![None; n],
        bwd: vec![None; n],
        known: Vec::with_capacity(n),
    };
    search.search(start, visit);
}

/// A bijection `φ` with `φ(t1[x][y]) = t2[φ(x)][φ(y)]`, if one exists.
pub fn find_isomorphism(t1: &CayleyTable, t2: &CayleyTable) -> Option<Permutation> {
    let mut found = None;
    run_search(t1, t2, &mut |phi| {
        found = Some(phi);
        false
    });
    found
}

/// Every isomorphism from `t1` to `t2`.
pub fn all_isomorphisms(t1: &CayleyTable, t2: &CayleyTable) -> Vec<Permutation> {
    let mut out = Vec::new();
    run_search(t1, t2, &mut |phi| {
        out.push(phi);
        true
    });
    out
}

pub fn is_isomorphism(t1: &CayleyTable, t2: &CayleyTable, phi: &Permutation) -> bool {
    let n = t1.order();
    t2.order() == n
        && phi.len() == n
        && (0..n).all(|x| (0..n).all(|y| phi.apply(t1.get(x, y)) == t2.get(phi.apply(x), phi.apply(y))))
}

/// Every Latin square of order `n` (tractable for `n ≤ 4`).
pub fn all_latin_squares(n: usize) -> Result<Vec<CayleyTable>> {
    if n == 0 || n > 4 {
        return Err(Error::InvalidArgument(format!(
            "exhaustive Latin square enumeration supports orders 1..=4, got {n}"
        )));
    }
    fn fill(n: usize, cell: usize, cells: &mut Vec<usize>, out: &mut Vec<CayleyTable>) {
        if cell == n * n {
            out.push(CayleyTable::from_cells_unchecked(n, cells.clone()));
            return;
        }
        let (r, c) = (cell / n, cell % n);
        for v in 0..n {
            let row_clash = (0..c).any(|j| cells[r * n + j] == v);
            let col_clash = (0..r).any(|i| cells[i * n + c] == v);
            if !row_clash && !col_clash {
                cells.push(v);
                fill(n, cell + 1, cells, out);
                cells.pop();
            }
        }
    }
    let mut out = Vec::new();
    fill(n, 0, &mut Vec::with_capacity(n * n), &mut out);
    Ok(out)
}
