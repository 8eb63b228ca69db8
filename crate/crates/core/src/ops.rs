//! Names for the operators of a mixed paraboson/parafermion system: the four
//! generator families, the ten bilinear families built from them, and the
//! identity.
//!
//! Indices are 1-based, as written in the physics. Latin indices run over
//! `1..=M` boson modes, Greek ones over `1..=N` fermion modes. Display form
//! is `family_i` or `family_i_j`, e.g. `adag_2`, `Bf_1_2`, `Qdag_1_1`.

use std::fmt;
use std::str::FromStr;

use crate::grading::Degree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    Adag,
    F,
    Fdag,
    /// `M_kl(a) = {a_k†, a_l}/2`
    Ma,
    /// `B_kl(a) = {a_k, a_l}/2`
    Ba,
    Badag,
    /// `M_αβ(f) = [f_α†, f_β]/2`
    Mf,
    /// `B_αβ(f) = [f_α, f_β]/2`
    Bf,
    Bfdag,
    /// `F_kα = {a_k, f_α}/2`
    Fk,
    Fkdag,
    /// `Q_kα = {a_k†, f_α}/2`
    Q,
    Qdag,
    Identity,
}

/// Which mode set an index slot ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Boson,
    Fermion,
}

impl Family {
    pub const ALL: [Family; 15] = [
        Family::A,
        Family::Adag,
        Family::F,
        Family::Fdag,
        Family::Ma,
        Family::Ba,
        Family::Badag,
        Family::Mf,
        Family::Bf,
        Family::Bfdag,
        Family::Fk,
        Family::Fkdag,
        Family::Q,
        Family::Qdag,
        Family::Identity,
    ];

    pub fn symbol(self) -> &'static str {
        use Family::*;
        match self {
            A => "a",
            Adag => "adag",
            F => "f",
            Fdag => "fdag",
            Ma => "Ma",
            Ba => "Ba",
            Badag => "Badag",
            Mf => "Mf",
            Bf => "Bf",
            Bfdag => "Bfdag",
            Fk => "F",
            Fkdag => "Fdag",
            Q => "Q",
            Qdag => "Qdag",
            Identity => "1",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.symbol() == s)
    }

    pub fn slots(self) -> &'static [Slot] {
        use Family::*;
        use Slot::*;
        match self {
            A | Adag => &[Boson],
            F | Fdag => &[Fermion],
            Ma | Ba | Badag => &[Boson, Boson],
            Mf | Bf | Bfdag => &[Fermion, Fermion],
            Fk | Fkdag | Q | Qdag => &[Boson, Fermion],
            Identity => &[],
        }
    }

    pub fn degree(self) -> Degree {
        use Family::*;
        match self {
            A | Adag => Degree::PARABOSE,
            F | Fdag => Degree::PARAFERMI,
            Fk | Fkdag | Q | Qdag => Degree::ODD,
            _ => Degree::ZERO,
        }
    }

    /// Number of single-particle generator factors.
    pub fn word_len(self) -> usize {
        match self {
            Family::Identity => 0,
            f if f.is_generator() => 1,
            _ => 2,
        }
    }

    pub fn is_generator(self) -> bool {
        matches!(self, Family::A | Family::Adag | Family::F | Family::Fdag)
    }

    pub fn dagger(self) -> Family {
        use Family::*;
        match self {
            A => Adag,
            Adag => A,
            F => Fdag,
            Fdag => F,
            Ba => Badag,
            Badag => Ba,
            Bf => Bfdag,
            Bfdag => Bf,
            Fk => Fkdag,
            Fkdag => Fk,
            Q => Qdag,
            Qdag => Q,
            Ma => Ma,
            Mf => Mf,
            Identity => Identity,
        }
    }
}

/// A single operator: family plus up to two 1-based indices (unused slots
/// are 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpId {
    pub family: Family,
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OpError {
    #[error("unknown operator {0:?}")]
    Unknown(String),
    #[error("operator {op} has index out of range for M={m}, N={n}")]
    OutOfRange { op: String, m: usize, n: usize },
}

impl OpId {
    pub fn new(family: Family, idx: &[usize]) -> OpId {
        assert_eq!(
            idx.len(),
            family.slots().len(),
            "{} takes {} indices",
            family.symbol(),
            family.slots().len()
        );
        OpId {
            family,
            i: idx.first().copied().unwrap_or(0),
            j: idx.get(1).copied().unwrap_or(0),
        }
    }

    pub fn gen(family: Family, i: usize) -> OpId {
        OpId::new(family, &[i])
    }

    pub fn pair(family: Family, i: usize, j: usize) -> OpId {
        OpId::new(family, &[i, j])
    }

    pub fn identity() -> OpId {
        OpId::new(Family::Identity, &[])
    }

    pub fn indices(&self) -> Vec<usize> {
        [self.i, self.j][..self.family.slots().len()].to_vec()
    }

    pub fn degree(&self) -> Degree {
        self.family.degree()
    }

    pub fn word_len(&self) -> usize {
        self.family.word_len()
    }

    /// Hermitian conjugate, in canonical index order where that matters.
    /// `M_kl† = M_lk`; every other family just swaps with its dagger.
    pub fn dagger(&self) -> OpId {
        match self.family {
            Family::Ma | Family::Mf => OpId::pair(self.family, self.j, self.i),
            f => OpId {
                family: f.dagger(),
                ..*self
            },
        }
    }

    /// Rewrites to the stored index order. `B(a)` is symmetric, so indices are
    /// sorted; `B(f)` is antisymmetric, so sorting may flip the sign, and equal
    /// indices give zero (`None`).
    pub fn canonical(&self) -> Option<(OpId, i8)> {
        match self.family {
            Family::Ba | Family::Badag if self.i > self.j => Some((
                OpId {
                    i: self.j,
                    j: self.i,
                    ..*self
                },
                1,
            )),
            Family::Bf | Family::Bfdag => match self.i.cmp(&self.j) {
                std::cmp::Ordering::Less => Some((*self, 1)),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some((
                    OpId {
                        i: self.j,
                        j: self.i,
                        ..*self
                    },
                    -1,
                )),
            },
            _ => Some((*self, 1)),
        }
    }

    pub fn in_range(&self, m: usize, n: usize) -> bool {
        self.family
            .slots()
            .iter()
            .zip(self.indices())
            .all(|(s, x)| x >= 1 && x <= if *s == Slot::Boson { m } else { n })
    }

    /// Every canonical operator of the system with `m` boson and `n` fermion
    /// modes, generators first.
    pub fn enumerate(m: usize, n: usize, families: &[Family]) -> Vec<OpId> {
        let mut out = Vec::new();
        for &fam in families {
            let ranges: Vec<usize> = fam
                .slots()
                .iter()
                .map(|s| if *s == Slot::Boson { m } else { n })
                .collect();
            match ranges.len() {
                0 => out.push(OpId::identity()),
                1 => out.extend((1..=ranges[0]).map(|i| OpId::gen(fam, i))),
                _ => {
                    for i in 1..=ranges[0] {
                        for j in 1..=ranges[1] {
                            let id = OpId::pair(fam, i, j);
                            if id.canonical() == Some((id, 1)) {
                                out.push(id);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// The fourteen families of the para-Lie superalgebraic system.
pub const SYSTEM_FAMILIES: [Family; 14] = [
    Family::A,
    Family::Adag,
    Family::F,
    Family::Fdag,
    Family::Ma,
    Family::Ba,
    Family::Badag,
    Family::Mf,
    Family::Bf,
    Family::Bfdag,
    Family::Fk,
    Family::Fkdag,
    Family::Q,
    Family::Qdag,
];

impl fmt::Display for OpId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.symbol())?;
        for x in self.indices() {
            write!(f, "_{x}")?;
        }
        Ok(())
    }
}

impl FromStr for OpId {
    type Err = OpError;

    fn from_str(s: &str) -> Result<Self, OpError> {
        let bad = || OpError::Unknown(s.to_string());
        let mut parts = s.split('_');
        let family = Family::from_symbol(parts.next().ok_or_else(bad)?).ok_or_else(bad)?;
        let idx = parts
            .map(|p| p.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        if idx.len() != family.slots().len() || idx.contains(&0) {
            return Err(bad());
        }
        Ok(OpId::new(family, &idx))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["a_1", "adag_2", "Bf_1_2", "Qdag_3_1", "1", "Ma_2_1"] {
            assert_eq!(s.parse::<OpId>().unwrap().to_string(), s);
        }
        for s in ["a", "a_0", "Ba_1", "x_1", "Ma_1_x"] {
            assert!(s.parse::<OpId>().is_err(), "{s}");
        }
    }

    #[test]
    fn daggers_are_involutive() {
        for id in OpId::enumerate(2, 2, &Family::ALL) {
            assert_eq!(id.dagger().dagger(), id);
            assert_eq!(id.dagger().degree(), id.degree());
        }
        assert_eq!(OpId::pair(Family::Ma, 1, 2).dagger(), OpId::pair(Family::Ma, 2, 1));
        assert_eq!(OpId::pair(Family::Fk, 1, 2).dagger(), OpId::pair(Family::Fkdag, 1, 2));
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(
            OpId::pair(Family::Ba, 2, 1).canonical(),
            Some((OpId::pair(Family::Ba, 1, 2), 1))
        );
        assert_eq!(
            OpId::pair(Family::Bf, 2, 1).canonical(),
            Some((OpId::pair(Family::Bf, 1, 2), -1))
        );
        assert_eq!(OpId::pair(Family::Bfdag, 2, 2).canonical(), None);
        assert_eq!(
            OpId::pair(Family::Ma, 2, 1).canonical(),
            Some((OpId::pair(Family::Ma, 2, 1), 1))
        );
    }

    #[test]
    fn system_size() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 0), (0, 2)] {
            let count = OpId::enumerate(m, n, &SYSTEM_FAMILIES).len();
            assert_eq!(
                count,
                2 * (m + n) + 4 * m * n + m * m + m * (m + 1) + n * n + n * (n.max(1) - 1)
            );
        }
        assert_eq!(OpId::enumerate(1, 1, &SYSTEM_FAMILIES).len(), 12);
        assert_eq!(OpId::enumerate(2, 2, &SYSTEM_FAMILIES).len(), 40);
    }
}
