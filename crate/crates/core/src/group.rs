//! Finite groups given by Cayley tables, written additively.

use crate::error::{Error, Result};
use crate::oracle;
use crate::perm::Permutation;
use crate::table::CayleyTable;

/// A Cayley table verified to be a group `(Q; +)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    table: CayleyTable,
    neutral: usize,
    inverses: Vec<usize>,
    abelian: bool,
}

/// Checks associativity and a two-sided neutral element.
pub fn group_from_table(table: &CayleyTable) -> Result<GroupStructure> {
    GroupStructure::new(table.clone())
}

impl GroupStructure {
    pub fn new(table: CayleyTable) -> Result<Self> {
        let n = table.order();
        for x in 0..n {
            for y in 0..n {
                let xy = table.get(x, y);
                for z in 0..n {
                    if table.get(xy, z) != table.get(x, table.get(y, z)) {
                        return Err(Error::NotAssociative { witness: (x, y, z) });
                    }
                }
            }
        }
        let neutral = (0..n)
            .find(|&e| (0..n).all(|x| table.get(e, x) == x && table.get(x, e) == x))
            .ok_or(Error::NoNeutral)?;
        let inverses = (0..n).map(|x| table.right_division(x, neutral)).collect();
        let abelian = oracle::satisfies_identity(&table, oracle::Identity::Commutative);
        Ok(Self {
            table,
            neutral,
            inverses,
            abelian,
        })
    }

    /// `Z_n` under addition.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let table = CayleyTable::from_fn(n, |x, y| (x + y) % n).expect("Z_n is a Latin square");
        Self::new(table).expect("Z_n is a group")
    }

    /// `G × H`, with the pair `(g, h)` encoded as `g * |H| + h`.
    pub fn direct_product(g: &Self, h: &Self) -> Self {
        let m = h.order();
        let table = CayleyTable::from_fn(g.order() * m, |x, y| {
            g.add(x / m, y / m) * m + h.add(x % m, y % m)
        })
        .expect("direct product is a Latin square");
        Self::new(table).expect("direct product of groups is a group")
    }

    /// The group generated by permutations of a common degree, listed with
    /// the identity at index 0. `x + y` is the composite "`y` first, then `x`".
    pub fn from_generators(generators: &[Permutation]) -> Result<Self> {
        let degree = generators
            .first()
            .map(Permutation::len)
            .ok_or_else(|| Error::InvalidArgument("no generators".into()))?;
        if let Some(p) = generators.iter().find(|p| p.len() != degree) {
            return Err(Error::SizeMismatch { expected: degree, found: p.len() });
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let p = elements[i].compose(g);
                if !elements.contains(&p) {
                    elements.push(p);
                }
            }
            i += 1;
        }
        let n = elements.len();
        let table = CayleyTable::from_fn(n, |x, y| {
            let p = elements[x].compose(&elements[y]);
            elements.iter().position(|q| *q == p).expect("closed")
        })?;
        Self::new(table)
    }

    /// The symmetric group on three letters (order 6, nonabelian).
    pub fn symmetric3() -> Self {
        Self::from_generators(&[
            Permutation::new(vec![1, 2, 0]).expect("3-cycle"),
            Permutation::transposition(3, 0, 1),
        ])
        .expect("S3")
    }

    /// The dihedral group of order `2k` acting on a `k`-gon.
    pub fn dihedral(k: usize) -> Self {
        assert!(k >= 3, "dihedral group needs at least three vertices");
        let rotation = Permutation::from_fn(k, |i| (i + 1) % k).expect("rotation");
        let reflection = Permutation::from_fn(k, |i| (k - i) % k).expect("reflection");
        Self::from_generators(&[rotation, reflection]).expect("dihedral group")
    }

    /// The quaternion group `Q₈` through its regular representation.
    pub fn quaternion() -> Self {
        // element e = 4*sign + unit, unit in {1, i, j, k}
        const UNIT_MUL: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let table = CayleyTable::from_fn(8, |x, y| {
            let (sign, unit) = UNIT_MUL[x % 4][y % 4];
            ((x / 4 + y / 4 + sign) % 2) * 4 + unit
        })
        .expect("Q8 is a Latin square");
        Self::new(table).expect("Q8 is a group")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn neutral(&self) -> usize {
        self.neutral
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.inverses[x]
    }

    /// `−ι`, the map `x ↦ −x`.
    pub fn negation(&self) -> Permutation {
        Permutation::new(self.inverses.clone()).expect("inversion is a bijection")
    }

    /// `L_c : x ↦ c + x`.
    pub fn left_translation(&self, c: usize) -> Permutation {
        Permutation::from_fn(self.order(), |x| self.add(c, x)).expect("translation")
    }

    /// `R_c : x ↦ x + c`.
    pub fn right_translation(&self, c: usize) -> Permutation {
        Permutation::from_fn(self.order(), |x| self.add(x, c)).expect("translation")
    }

    /// `I_a : x ↦ −a + x + a`.
    pub fn inner_shift(&self, a: usize) -> Permutation {
        let na = self.neg(a);
        Permutation::from_fn(self.order(), |x| self.add(self.add(na, x), a)).expect("conjugation")
    }

    pub fn is_unitary(&self, p: &Permutation) -> bool {
        p.len() == self.order() && p.fixes(self.neutral)
    }

    /// `p(x + y) = p(x) + p(y)` for all `x, y`.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        let n = self.order();
        p.len() == n
            && (0..n).all(|x| {
                (0..n).all(|y| p.apply(self.add(x, y)) == self.add(p.apply(x), p.apply(y)))
            })
    }

    /// `p(x + y) = p(y) + p(x)` for all `x, y`.
    pub fn is_anti_automorphism(&self, p: &Permutation) -> bool {
        let n = self.order();
        p.len() == n
            && (0..n).all(|x| {
                (0..n).all(|y| p.apply(self.add(x, y)) == self.add(p.apply(y), p.apply(x)))
            })
    }

    /// All automorphisms, for groups of order at most 16.
    pub fn automorphisms(&self) -> Result<Vec<Permutation>> {
        if self.order() > 16 {
            return Err(Error::InvalidArgument(format!(
                "automorphism enumeration is limited to order 16, got {}",
                self.order()
            )));
        }
        Ok(oracle::all_isomorphisms(&self.table, &self.table))
    }

    /// The same group transported along the bijection `phi`.
    pub fn relabel(&self, phi: &Permutation) -> Result<Self> {
        Self::new(oracle::relabel(&self.table, phi)?)
    }
}
