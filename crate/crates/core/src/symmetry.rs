//! The symmetric group on the three positions of `x₁·x₂ = x₃`, its six
//! subgroups, and the six symmetry classes they label.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A permutation of the positions `{1, 2, 3}`.
///
/// `s = (12)`, `l = (13)`, `r = (23)`. Composition `σ∘τ` applies `τ` first;
/// under that rule `sl = s∘l = (1 3 2)` and `sr = s∘r = (1 2 3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sigma {
    Id,
    S,
    L,
    R,
    Sl,
    Sr,
}

impl Sigma {
    pub const ALL: [Sigma; 6] = [Sigma::Id, Sigma::S, Sigma::L, Sigma::R, Sigma::Sl, Sigma::Sr];

    /// Zero-based position map: position `i` goes to `positions()[i]`.
    pub const fn positions(self) -> [usize; 3] {
        match self {
            Sigma::Id => [0, 1, 2],
            Sigma::S => [1, 0, 2],
            Sigma::L => [2, 1, 0],
            Sigma::R => [0, 2, 1],
            Sigma::Sl => [2, 0, 1],
            Sigma::Sr => [1, 2, 0],
        }
    }

    pub fn from_positions(p: [usize; 3]) -> Sigma {
        *Self::ALL
            .iter()
            .find(|s| s.positions() == p)
            .expect("every permutation of three positions is labelled")
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(self, other: Sigma) -> Sigma {
        let a = self.positions();
        let b = other.positions();
        Self::from_positions([a[b[0]], a[b[1]], a[b[2]]])
    }

    pub fn inverse(self) -> Sigma {
        let p = self.positions();
        let mut inv = [0; 3];
        for (i, &v) in p.iter().enumerate() {
            inv[v] = i;
        }
        Self::from_positions(inv)
    }

    pub const fn label(self) -> &'static str {
        match self {
            Sigma::Id => "id",
            Sigma::S => "s",
            Sigma::L => "l",
            Sigma::R => "r",
            Sigma::Sl => "sl",
            Sigma::Sr => "sr",
        }
    }

    /// Cycle notation over positions 1..3.
    pub const fn cycle(self) -> &'static str {
        match self {
            Sigma::Id => "()",
            Sigma::S => "(1 2)",
            Sigma::L => "(1 3)",
            Sigma::R => "(2 3)",
            Sigma::Sl => "(1 3 2)",
            Sigma::Sr => "(1 2 3)",
        }
    }

    const fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Sigma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|x| x.label() == s || (s == "ι" && *x == Sigma::Id))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown sigma {s:?}")))
    }
}

/// A subset of `S₃`, stored as a bit set over [`Sigma::ALL`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryGroup(u8);

impl SymmetryGroup {
    pub const TRIVIAL: Self = Self(Sigma::Id.bit());
    pub const COMMUTATIVE: Self = Self(Sigma::Id.bit() | Sigma::S.bit());
    pub const LEFT: Self = Self(Sigma::Id.bit() | Sigma::R.bit());
    pub const RIGHT: Self = Self(Sigma::Id.bit() | Sigma::L.bit());
    pub const ALTERNATING: Self = Self(Sigma::Id.bit() | Sigma::Sl.bit() | Sigma::Sr.bit());
    pub const FULL: Self = Self(0b11_1111);

    pub const SUBGROUPS: [Self; 6] = [
        Self::TRIVIAL,
        Self::COMMUTATIVE,
        Self::LEFT,
        Self::RIGHT,
        Self::ALTERNATING,
        Self::FULL,
    ];

    pub fn from_members(members: impl IntoIterator<Item = Sigma>) -> Self {
        Self(members.into_iter().fold(0, |acc, s| acc | s.bit()))
    }

    pub fn contains(self, s: Sigma) -> bool {
        self.0 & s.bit() != 0
    }

    pub fn is_superset_of(self, other: Self) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn members(self) -> Vec<Sigma> {
        Sigma::ALL.into_iter().filter(|&s| self.contains(s)).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Closed under composition and inverses and containing the identity.
    pub fn is_subgroup(self) -> bool {
        let m = self.members();
        self.contains(Sigma::Id)
            && m.iter().all(|&a| self.contains(a.inverse()))
            && m.iter().all(|&a| m.iter().all(|&b| self.contains(a.compose(b))))
    }

    /// The class this group labels, if it is one of the six subgroups.
    pub fn class(self) -> Option<SymmetryClass> {
        Some(match self {
            Self::TRIVIAL => SymmetryClass::Asymmetric,
            Self::COMMUTATIVE => SymmetryClass::StrictlyCommutative,
            Self::LEFT => SymmetryClass::StrictlyLeftSymmetric,
            Self::RIGHT => SymmetryClass::StrictlyRightSymmetric,
            Self::ALTERNATING => SymmetryClass::StrictlySemiSymmetric,
            Self::FULL => SymmetryClass::TotallySymmetric,
            _ => return None,
        })
    }
}

impl fmt::Debug for SymmetryGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymmetryGroup{self}")
    }
}

impl fmt::Display for SymmetryGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.members().iter().map(|s| s.label()).collect();
        write!(f, "{{{}}}", labels.join(", "))
    }
}

/// One block of the partition of quasigroups by symmetry group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryClass {
    StrictlyCommutative,
    StrictlyLeftSymmetric,
    StrictlyRightSymmetric,
    TotallySymmetric,
    StrictlySemiSymmetric,
    Asymmetric,
}

impl SymmetryClass {
    pub const ALL: [SymmetryClass; 6] = [
        SymmetryClass::StrictlyCommutative,
        SymmetryClass::StrictlyLeftSymmetric,
        SymmetryClass::StrictlyRightSymmetric,
        SymmetryClass::TotallySymmetric,
        SymmetryClass::StrictlySemiSymmetric,
        SymmetryClass::Asymmetric,
    ];

    pub fn group(self) -> SymmetryGroup {
        match self {
            SymmetryClass::Asymmetric => SymmetryGroup::TRIVIAL,
            SymmetryClass::StrictlyCommutative => SymmetryGroup::COMMUTATIVE,
            SymmetryClass::StrictlyLeftSymmetric => SymmetryGroup::LEFT,
            SymmetryClass::StrictlyRightSymmetric => SymmetryGroup::RIGHT,
            SymmetryClass::StrictlySemiSymmetric => SymmetryGroup::ALTERNATING,
            SymmetryClass::TotallySymmetric => SymmetryGroup::FULL,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            SymmetryClass::Asymmetric => "asymmetric",
            SymmetryClass::StrictlyCommutative => "strictly-commutative",
            SymmetryClass::StrictlyLeftSymmetric => "strictly-left-symmetric",
            SymmetryClass::StrictlyRightSymmetric => "strictly-right-symmetric",
            SymmetryClass::StrictlySemiSymmetric => "strictly-semi-symmetric",
            SymmetryClass::TotallySymmetric => "totally-symmetric",
        }
    }

    /// Two-letter abbreviation used in census reports.
    pub const fn code(self) -> &'static str {
        match self {
            SymmetryClass::Asymmetric => "as",
            SymmetryClass::StrictlyCommutative => "cs",
            SymmetryClass::StrictlyLeftSymmetric => "ls",
            SymmetryClass::StrictlyRightSymmetric => "rs",
            SymmetryClass::StrictlySemiSymmetric => "ss",
            SymmetryClass::TotallySymmetric => "ts",
        }
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymmetryClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s || c.code() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown symmetry class {s:?}")))
    }
}
