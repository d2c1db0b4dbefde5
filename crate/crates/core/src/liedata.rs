//! Exponents and dimensions of simple root systems, plus the compact classical
//! groups SO(n) and SU(n).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    /// The forced rank of an exceptional family.
    pub fn fixed_rank(self) -> Option<u64> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    fn min_rank(self) -> u64 {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            // D3 is accepted as an alias of A3.
            Family::D => 3,
            other => other.fixed_rank().unwrap(),
        }
    }

    pub const ALL: [Family; 9] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
    ];
}

/// A simple root system, identified by family and rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystem {
    family: Family,
    rank: u64,
}

impl RootSystem {
    pub fn new(family: Family, rank: u64) -> Result<Self> {
        let ok = match family.fixed_rank() {
            Some(r) => rank == r,
            None => rank >= family.min_rank(),
        };
        if !ok {
            return Err(Error::InvalidRootSystem(format!("{family:?}{rank}")));
        }
        let rs = RootSystem { family, rank };
        assert_eq!(
            rs.dimension(),
            rs.exponents().iter().map(|e| 2 * e + 1).sum::<u64>(),
            "exponent table inconsistent for {rs}"
        );
        Ok(rs)
    }

    /// Exceptional systems and A_n never fail to construct with valid ranks.
    pub fn exceptional(family: Family) -> Self {
        let rank = family
            .fixed_rank()
            .expect("exceptional() needs an exceptional family");
        RootSystem { family, rank }
    }

    pub fn a(n: u64) -> Result<Self> {
        Self::new(Family::A, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    /// Exponents in ascending order.
    pub fn exponents(&self) -> Vec<u64> {
        let n = self.rank;
        match self.family {
            Family::A => (1..=n).collect(),
            Family::B | Family::C => (1..n * 2).step_by(2).collect(),
            Family::D => {
                let mut e: Vec<u64> = (1..2 * n - 2).step_by(2).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            Family::E6 => vec![1, 4, 5, 7, 8, 11],
            Family::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            Family::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
            Family::F4 => vec![1, 5, 7, 11],
            Family::G2 => vec![1, 5],
        }
    }

    pub fn dimension(&self) -> u64 {
        let n = self.rank;
        match self.family {
            Family::A => n * n + 2 * n,
            Family::B | Family::C => 2 * n * n + n,
            Family::D => 2 * n * n - n,
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
            Family::F4 => 52,
            Family::G2 => 14,
        }
    }

    /// The columns of the exceptional tables: A1, E6, E7, E8, F4, G2.
    pub fn table_columns() -> [RootSystem; 6] {
        [
            RootSystem {
                family: Family::A,
                rank: 1,
            },
            Self::exceptional(Family::E6),
            Self::exceptional(Family::E7),
            Self::exceptional(Family::E8),
            Self::exceptional(Family::F4),
            Self::exceptional(Family::G2),
        ]
    }

    /// Every root system of every family with rank at most `max_rank`.
    pub fn all_up_to_rank(max_rank: u64) -> Vec<RootSystem> {
        let mut out = Vec::new();
        for family in Family::ALL {
            match family.fixed_rank() {
                Some(r) if r <= max_rank => out.push(Self::exceptional(family)),
                Some(_) => {}
                None => {
                    for rank in family.min_rank()..=max_rank {
                        out.push(RootSystem { family, rank });
                    }
                }
            }
        }
        out
    }
}

pub fn exponents(rs: &RootSystem) -> Vec<u64> {
    rs.exponents()
}

pub fn dimension(rs: &RootSystem) -> u64 {
    rs.dimension()
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::C => write!(f, "C{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidRootSystem(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let rank: u64 = chars.as_str().parse().map_err(|_| bad())?;
        let family = match (letter.to_ascii_uppercase(), rank) {
            ('A', _) => Family::A,
            ('B', _) => Family::B,
            ('C', _) => Family::C,
            ('D', _) => Family::D,
            ('E', 6) => Family::E6,
            ('E', 7) => Family::E7,
            ('E', 8) => Family::E8,
            ('F', 4) => Family::F4,
            ('G', 2) => Family::G2,
            _ => return Err(bad()),
        };
        RootSystem::new(family, rank)
    }
}

/// The compact groups SO(n) and SU(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalGroup {
    SO(u64),
    SU(u64),
}

impl ClassicalGroup {
    pub fn so(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGroup(format!("SO({n})")));
        }
        Ok(ClassicalGroup::SO(n))
    }

    pub fn su(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGroup(format!("SU({n})")));
        }
        Ok(ClassicalGroup::SU(n))
    }

    pub fn dimension(&self) -> u64 {
        match *self {
            ClassicalGroup::SO(n) => n * (n - 1) / 2,
            ClassicalGroup::SU(n) => n * n - 1,
        }
    }

    pub fn rank(&self) -> u64 {
        match *self {
            ClassicalGroup::SO(n) => n / 2,
            ClassicalGroup::SU(n) => n - 1,
        }
    }
}

pub fn classical_dim(g: &ClassicalGroup) -> u64 {
    g.dimension()
}

impl fmt::Display for ClassicalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalGroup::SO(n) => write!(f, "SO({n})"),
            ClassicalGroup::SU(n) => write!(f, "SU({n})"),
        }
    }
}

impl FromStr for ClassicalGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidGroup(s.to_string());
        let (kind, rest) = s.split_at_checked(2).ok_or_else(bad)?;
        let n: u64 = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        match kind.to_ascii_uppercase().as_str() {
            "SO" => Self::so(n),
            "SU" => Self::su(n),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(rs("A1").exponents(), vec![1]);
        assert_eq!(rs("G2").exponents(), vec![1, 5]);
        assert_eq!(rs("E8").exponents(), vec![1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(rs("D4").exponents(), vec![1, 3, 3, 5]);
        assert_eq!(rs("D3").exponents(), rs("A3").exponents());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(rs("F4").dimension(), 52);
        assert_eq!(rs("A1").dimension(), 3);
        assert_eq!(rs("D4").dimension(), 28);
        assert_eq!(rs("E6").dimension(), 78);
        assert_eq!(rs("E7").dimension(), 133);
    }

    #[test]
    fn identity_holds_for_all_ranks_to_50() {
        for r in RootSystem::all_up_to_rank(50) {
            let e = r.exponents();
            assert_eq!(e.len() as u64, r.rank(), "{r}");
            assert_eq!(
                e.iter().map(|x| 2 * x + 1).sum::<u64>(),
                r.dimension(),
                "{r}"
            );
        }
    }

    #[test]
    fn b_and_c_share_exponents() {
        for n in 2..30 {
            let b = RootSystem::new(Family::B, n).unwrap();
            let c = RootSystem::new(Family::C, n).unwrap();
            assert_eq!(b.exponents(), c.exponents());
            assert_eq!(b.dimension(), c.dimension());
        }
    }

    #[test]
    fn invalid_ranks() {
        assert!(RootSystem::new(Family::B, 1).is_err());
        assert!(RootSystem::new(Family::D, 2).is_err());
        assert!(RootSystem::new(Family::E6, 7).is_err());
        assert!(RootSystem::new(Family::A, 0).is_err());
        assert!("E9".parse::<RootSystem>().is_err());
        assert!("X3".parse::<RootSystem>().is_err());
    }

    #[test]
    fn classical_dimensions() {
        assert_eq!(classical_dim(&"SO(13)".parse().unwrap()), 78);
        assert_eq!(classical_dim(&"SU(2)".parse().unwrap()), 3);
        assert_eq!(classical_dim(&ClassicalGroup::so(11).unwrap()), 55);
        assert_eq!(
            "SU(7)".parse::<ClassicalGroup>().unwrap().to_string(),
            "SU(7)"
        );
        assert!("SO(1)".parse::<ClassicalGroup>().is_err());
        assert!("SP(4)".parse::<ClassicalGroup>().is_err());
    }

    #[test]
    fn labels_round_trip() {
        for r in RootSystem::all_up_to_rank(12) {
            assert_eq!(r.to_string().parse::<RootSystem>().unwrap(), r);
        }
    }
}
