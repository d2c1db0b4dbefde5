//! Signatures of cocompact oriented Fuchsian groups.
//!
//! A group with signature `(g; d_1, ..., d_m)` has generators
//! `y_1, z_1, ..., y_g, z_g, x_1, ..., x_m` subject to `x_j^{d_j} = 1` and
//! `[y_1, z_1] ... [y_g, z_g] x_1 ... x_m = 1`. The genus and the multiset of
//! periods determine the group up to isomorphism, so periods are kept sorted.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{from_u64, ExactScalar};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FuchsianPresentation {
    genus: u64,
    periods: Vec<u64>,
}

fn check_candidate(genus: i64, periods: &[i64]) -> Result<()> {
    if genus < 0 {
        return Err(Error::NegativeGenus(genus));
    }
    if let Some(&d) = periods.iter().find(|&&d| d < 2) {
        return Err(Error::BadPeriod(d));
    }
    Ok(())
}

fn chi_unchecked<S: ExactScalar>(genus: u64, periods: &[u64]) -> S {
    let two = S::from_int(2);
    let mut chi = two.clone() - two * from_u64::<S>(genus);
    for &d in periods {
        chi = chi - (S::one() - S::one() / from_u64::<S>(d));
    }
    chi
}

/// `2 - 2g - sum(1 - 1/d_i)` for a candidate signature, in any exact scalar.
///
/// Negativity is not required here; `validate` relies on this to reject
/// spherical and Euclidean signatures.
pub fn euler_characteristic_in<S: ExactScalar>(genus: i64, periods: &[i64]) -> Result<S> {
    check_candidate(genus, periods)?;
    let periods: Vec<u64> = periods.iter().map(|&d| d as u64).collect();
    Ok(chi_unchecked(genus as u64, &periods))
}

pub fn euler_characteristic(genus: i64, periods: &[i64]) -> Result<Rational> {
    euler_characteristic_in(genus, periods)
}

/// Builds the canonical presentation, rejecting bad periods and signatures
/// whose Euler characteristic is not negative.
pub fn validate(genus: i64, periods: &[i64]) -> Result<FuchsianPresentation> {
    let chi: Rational = euler_characteristic(genus, periods)?;
    if chi >= Rational::zero() {
        return Err(Error::NonHyperbolic {
            chi: chi.to_string(),
        });
    }
    let mut periods: Vec<u64> = periods.iter().map(|&d| d as u64).collect();
    periods.sort_unstable();
    Ok(FuchsianPresentation {
        genus: genus as u64,
        periods,
    })
}

impl FuchsianPresentation {
    pub fn new(genus: u64, periods: &[u64]) -> Result<Self> {
        let genus = i64::try_from(genus).map_err(|_| Error::OutOfRange(genus.to_string()))?;
        let periods = periods
            .iter()
            .map(|&d| i64::try_from(d).map_err(|_| Error::OutOfRange(d.to_string())))
            .collect::<Result<Vec<_>>>()?;
        validate(genus, &periods)
    }

    /// The triangle group `Γ_{d1,d2,d3}` (genus 0, three periods).
    pub fn triangle(d1: u64, d2: u64, d3: u64) -> Result<Self> {
        Self::new(0, &[d1, d2, d3])
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Periods in ascending order.
    pub fn periods(&self) -> &[u64] {
        &self.periods
    }

    /// Number of elliptic generators.
    pub fn m(&self) -> usize {
        self.periods.len()
    }

    pub fn euler_characteristic(&self) -> Rational {
        chi_unchecked(self.genus, &self.periods)
    }

    pub fn euler_characteristic_in<S: ExactScalar>(&self) -> S {
        chi_unchecked(self.genus, &self.periods)
    }

    /// `1 - χ(Γ)`, the leading coefficient in Weil's formula.
    pub fn one_minus_chi(&self) -> Rational {
        Rational::one() - self.euler_characteristic()
    }

    pub fn is_triangle_group(&self) -> bool {
        self.genus == 0 && self.periods.len() == 3
    }
}

pub fn is_triangle_group(p: &FuchsianPresentation) -> bool {
    p.is_triangle_group()
}

impl fmt::Display for FuchsianPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={};d=", self.genus)?;
        for (i, d) in self.periods.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Parses `g=<int>;d=<c1>,<c2>,...` into a raw candidate `(genus, periods)`
/// without checking hyperbolicity.
pub fn parse_candidate(s: &str) -> Result<(i64, Vec<i64>)> {
    let bad = || Error::Parse(format!("expected `g=<int>;d=<c1>,<c2>,...`, got `{s}`"));
    let (g_part, d_part) = s.trim().split_once(';').ok_or_else(bad)?;
    let genus = g_part
        .trim()
        .strip_prefix("g=")
        .ok_or_else(bad)?
        .trim()
        .parse::<i64>()
        .map_err(|e| Error::Parse(format!("genus in `{s}`: {e}")))?;
    let list = d_part.trim().strip_prefix("d=").ok_or_else(bad)?.trim();
    let periods = if list.is_empty() {
        Vec::new()
    } else {
        list.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("period `{}` in `{s}`: {e}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?
    };
    Ok((genus, periods))
}

impl FromStr for FuchsianPresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (genus, periods) = parse_candidate(s)?;
        validate(genus, &periods)
    }
}
