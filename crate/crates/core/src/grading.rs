//! Degree arithmetic for the Z₂,₂ grading.
//!
//! Every homogeneous element carries a two-bit degree `(i, j)` naming the
//! subspace `L_ij` it lives in. Degrees add component-wise mod 2 and pair
//! through the ordinary dot product; the parity of that dot product decides
//! whether the graded product of two elements is realized as a commutator or
//! an anticommutator.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Two-bit degree `(i, j)` with `i, j ∈ {0, 1}`.
///
/// Ordered `(0,0) < (0,1) < (1,0) < (1,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree {
    i: u8,
    j: u8,
}

impl Degree {
    pub const ZERO: Degree = Degree { i: 0, j: 0 };
    /// `L_01`; plays the role of the odd (Fermi) part in the Z₂ embedding.
    pub const ODD: Degree = Degree { i: 0, j: 1 };
    /// `L_10`; parabosons.
    pub const PARABOSE: Degree = Degree { i: 1, j: 0 };
    /// `L_11`; parafermions.
    pub const PARAFERMI: Degree = Degree { i: 1, j: 1 };

    pub const ALL: [Degree; 4] = [Self::ZERO, Self::ODD, Self::PARABOSE, Self::PARAFERMI];

    /// Builds a degree from two bits. Returns `None` if either is not 0 or 1.
    pub fn new(i: u8, j: u8) -> Option<Self> {
        (i <= 1 && j <= 1).then_some(Degree { i, j })
    }

    pub fn i(self) -> u8 {
        self.i
    }

    pub fn j(self) -> u8 {
        self.j
    }

    /// `i·m + j·n`, in `{0, 1, 2}`.
    pub fn dot(self, other: Degree) -> u8 {
        self.i * other.i + self.j * other.j
    }

    /// `(-1)^{g·h}` as `+1` or `-1`.
    pub fn sign(self, other: Degree) -> i8 {
        if self.dot(other).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Position in the total order, `0..4`.
    pub fn index(self) -> usize {
        (2 * self.i + self.j) as usize
    }
}

impl std::ops::Add for Degree {
    type Output = Degree;

    /// Component-wise addition mod 2.
    fn add(self, rhs: Degree) -> Degree {
        Degree {
            i: self.i ^ rhs.i,
            j: self.j ^ rhs.j,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.i, self.j].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [i, j] = <[u8; 2]>::deserialize(d)?;
        Degree::new(i, j).ok_or_else(|| serde::de::Error::custom(format!("degree bits must be 0 or 1, got [{i}, {j}]")))
    }
}

/// Realization of the graded product `u ∘ v = uv − (−1)^{g(u)·g(v)} vu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BracketKind {
    #[serde(rename = "comm")]
    Commutator,
    #[serde(rename = "anticomm")]
    Anticommutator,
}

impl BracketKind {
    /// Sign `s` with `u ∘ v = −s · v ∘ u`: `+1` for commutators, `-1` for
    /// anticommutators.
    pub fn sign(self) -> i8 {
        match self {
            BracketKind::Commutator => 1,
            BracketKind::Anticommutator => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BracketKind::Commutator => "comm",
            BracketKind::Anticommutator => "anticomm",
        }
    }
}

impl fmt::Display for BracketKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

pub fn degree_add(a: Degree, b: Degree) -> Degree {
    a + b
}

pub fn degree_dot(a: Degree, b: Degree) -> u8 {
    a.dot(b)
}

/// Anticommutator iff the degree dot product is odd.
pub fn bracket_kind(a: Degree, b: Degree) -> BracketKind {
    if a.dot(b) % 2 == 1 {
        BracketKind::Anticommutator
    } else {
        BracketKind::Commutator
    }
}
