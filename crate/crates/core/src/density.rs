//! SO(3)-density of Fuchsian groups.
//!
//! A Fuchsian group is SO(3)-dense unless it is one of six triangle groups.
//! The verdict is taken from that classification; the rational-angle witness
//! search below is an independent, computable cross-check of the triangle
//! cases and explains which argument applies to each group.

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::FuchsianPresentation;
use crate::Rational;

/// The triangle groups that are not SO(3)-dense, periods ascending.
pub const NON_DENSE_TRIPLES: [[u64; 3]; 6] = [
    [2, 4, 6],
    [2, 6, 6],
    [3, 4, 4],
    [3, 6, 6],
    [2, 6, 10],
    [4, 6, 12],
];

/// Hyperbolic triples admitting no rational angles with the strict triangle
/// inequality.
pub const NO_WITNESS_TRIPLES: [[u64; 3]; 5] =
    [[2, 4, 6], [2, 6, 6], [2, 6, 10], [3, 6, 6], [4, 6, 12]];

/// Triples whose images could be octahedral or icosahedral; density follows
/// from the index-two embedding `Γ_{a,b,b} ⊂ Γ_{2,2a,b}`.
const FINITE_SHADOWED: [[u64; 3]; 6] = [
    [2, 5, 5],
    [3, 3, 5],
    [3, 5, 5],
    [5, 5, 5],
    [3, 3, 4],
    [4, 4, 4],
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    /// The tuple with the two largest periods replaced by `auxiliary`.
    pub reduced: Vec<u64>,
    /// The split-off triangle `(d_{m-1}, d_m, auxiliary)`, ascending.
    pub triple: [u64; 3],
    pub auxiliary: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum DensityReason {
    GenusPositive,
    ExceptionalSet,
    TriangleWitness { witness: [u64; 3] },
    InductiveReduction { chain: Vec<ReductionStep> },
    IndexTwoRealization { parent: [u64; 3] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityVerdict {
    pub dense: bool,
    pub reason: DensityReason,
    /// Lexicographically smallest strict witness of a triangle group, also
    /// reported for groups whose verdict does not rest on it.
    pub strict_witness: Option<[u64; 3]>,
}

fn is_hyperbolic_triple(d: [u64; 3]) -> bool {
    // 1/d1 + 1/d2 + 1/d3 < 1
    let [a, b, c] = d.map(u128::from);
    b * c + a * c + a * b < a * b * c
}

fn sorted3(mut d: [u64; 3]) -> [u64; 3] {
    d.sort_unstable();
    d
}

/// Lexicographically smallest `(a1, a2, a3)` with `0 < a_i <= d_i/2`,
/// `gcd(a_i, d_i) = 1` and `a_i/d_i` satisfying the triangle inequality.
/// No hyperbolicity requirement.
fn search_witness(d: [u64; 3], strict: bool) -> Option<[u64; 3]> {
    let [d1, d2, d3] = d;
    let (d1w, d2w, d3w) = (d1 as u128, d2 as u128, d3 as u128);
    for a1 in (1..=d1 / 2).filter(|a| a.gcd(&d1) == 1) {
        for a2 in (1..=d2 / 2).filter(|a| a.gcd(&d2) == 1) {
            // q3 must lie between |q1 - q2| and q1 + q2, where
            // q1 ± q2 = (a1 d2 ± a2 d1) / (d1 d2).
            let den = d1w * d2w;
            let x = a1 as u128 * d2w;
            let y = a2 as u128 * d1w;
            let diff = x.abs_diff(y);
            let sum = x + y;
            // smallest a3 with a3 * den > diff * d3 (strict) or >= (closed)
            let lo_num = diff * d3w;
            let mut a3 = if strict {
                lo_num / den + 1
            } else {
                lo_num.div_ceil(den)
            }
            .max(1);
            while a3.gcd(&d3w) != 1 {
                a3 += 1;
            }
            let below_sum = if strict {
                a3 * den < sum * d3w
            } else {
                a3 * den <= sum * d3w
            };
            if 2 * a3 <= d3w && below_sum {
                return Some([a1, a2, a3 as u64]);
            }
        }
    }
    None
}

/// Rational rotation angles for a hyperbolic triangle group.
pub fn triangle_witness(d1: u64, d2: u64, d3: u64, strict: bool) -> Result<Option<[u64; 3]>> {
    let d = [d1, d2, d3];
    if let Some(&bad) = d.iter().find(|&&x| x < 2) {
        return Err(Error::BadPeriod(bad as i64));
    }
    if !is_hyperbolic_triple(d) {
        return Err(Error::NotHyperbolicTriple(d1, d2, d3));
    }
    Ok(search_witness(d, strict))
}

/// `q1 < q2 + q3`, `q2 < q1 + q3`, `q3 < q1 + q2` for `q_i ∈ (0, 1/2]`.
pub fn strict_triangle(q1: &Rational, q2: &Rational, q3: &Rational) -> Result<bool> {
    let half = Rational::new(1.into(), 2.into());
    for q in [q1, q2, q3] {
        if q <= &Rational::zero() || q > &half {
            return Err(Error::OutOfRange(format!("{q} is not in (0, 1/2]")));
        }
    }
    Ok(q1 < &(q2 + q3) && q2 < &(q1 + q3) && q3 < &(q1 + q2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalCase {
    /// `1/4 <= a/d <= 1/2`, closed only for `d ∈ {2, 4}`.
    Quarter,
    /// `1/3 <= a/d <= 1/2`, closed only for `d ∈ {2, 3}`.
    Third,
    /// `1/12 < a/d < 4/15`, closed only for `d = 12`.
    Narrow,
}

impl TryFrom<u8> for IntervalCase {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(IntervalCase::Quarter),
            2 => Ok(IntervalCase::Third),
            3 => Ok(IntervalCase::Narrow),
            other => Err(Error::OutOfRange(format!(
                "interval case {other} (expected 1, 2 or 3)"
            ))),
        }
    }
}

impl IntervalCase {
    /// `d` values for which no admissible `a` exists.
    pub fn exceptions(self) -> &'static [u64] {
        match self {
            IntervalCase::Quarter => &[6],
            IntervalCase::Third => &[4, 6, 10],
            IntervalCase::Narrow => &[2, 3, 18],
        }
    }

    /// Whether `a/d` lies in the interval, with the boundary rule for `d`.
    pub fn admits(self, d: u64, a: u64) -> bool {
        if a == 0 || a.gcd(&d) != 1 {
            return false;
        }
        let (a, d) = (a as u128, d as u128);
        // interval lo_n/lo_d .. hi_n/hi_d
        let (lo_n, lo_d, hi_n, hi_d, closed) = match self {
            IntervalCase::Quarter => (1, 4, 1, 2, d == 2 || d == 4),
            IntervalCase::Third => (1, 3, 1, 2, d == 2 || d == 3),
            IntervalCase::Narrow => (1, 12, 4, 15, d == 12),
        };
        let lo_cmp = (a * lo_d).cmp(&(lo_n * d));
        let hi_cmp = (a * hi_d).cmp(&(hi_n * d));
        if closed {
            lo_cmp.is_ge() && hi_cmp.is_le()
        } else {
            lo_cmp.is_gt() && hi_cmp.is_lt()
        }
    }

    fn constructed(self, d: u64) -> Option<u64> {
        match self {
            IntervalCase::Quarter | IntervalCase::Third => match (d % 2, d % 4) {
                (1, _) => Some((d - 1) / 2),
                (_, 2) => d.checked_sub(4).map(|x| x / 2),
                _ => Some((d - 2) / 2),
            },
            IntervalCase::Narrow => {
                let b = narrow_offset(d);
                let num = d as i64 - b;
                (num > 0 && num % 6 == 0).then_some((num / 6) as u64)
            }
        }
    }
}

/// The offset `b` with `a = (d - b)/6` for the narrow interval, determined by
/// `d mod 4` and `d mod 9`.
fn narrow_offset(d: u64) -> i64 {
    let m4 = d % 4;
    let m9 = d % 9;
    let odd = m4 % 2 == 1;
    match (m4, m9, odd) {
        (2, 3, _) => -12,
        (0, 6, _) => -6,
        (2, 2 | 5 | 8, _) => -4,
        (_, 3, true) => -3,
        (0, 1 | 4 | 7, _) => -2,
        (_, 2 | 5 | 8, true) => -1,
        (_, 1 | 4 | 7, true) => 1,
        (0, 2 | 5 | 8, _) => 2,
        (_, 0 | 6, true) => 3,
        (2, 1 | 4 | 7, _) => 4,
        (0, 0 | 3, _) => 6,
        (2, 0 | 6, _) => 12,
        _ => unreachable!("every residue pair is covered"),
    }
}

/// An integer `a` coprime to `d` with `a/d` in the requested interval.
///
/// Uses the explicit construction `(d-1)/2`, `(d-4)/2`, `(d-2)/2` (by `d mod 4`)
/// for the first two intervals and `(d-b)/6` for the narrow one; for the few
/// small `d` where the construction falls outside, returns the smallest
/// admissible `a`.
pub fn interval_coprime(d: u64, case: IntervalCase) -> Result<Option<u64>> {
    if d < 2 {
        return Err(Error::OutOfRange(format!("d = {d} < 2")));
    }
    if let Some(a) = case.constructed(d).filter(|&a| case.admits(d, a)) {
        return Ok(Some(a));
    }
    Ok((1..d).find(|&a| case.admits(d, a)))
}

/// Hyperbolic triples `d1 <= d2 <= d3 <= dmax` without a strict witness.
pub fn scan_hyperbolic_triples(dmax: u64) -> Result<Vec<[u64; 3]>> {
    if dmax < 7 {
        return Err(Error::OutOfRange(format!("dmax = {dmax} < 7")));
    }
    let mut out: Vec<[u64; 3]> = (2..=dmax)
        .into_par_iter()
        .flat_map_iter(|d1| (d1..=dmax).flat_map(move |d2| (d2..=dmax).map(move |d3| [d1, d2, d3])))
        .filter(|&d| is_hyperbolic_triple(d) && search_witness(d, true).is_none())
        .collect();
    out.sort_unstable();
    Ok(out)
}

fn index_two_parent(d: [u64; 3]) -> [u64; 3] {
    // Γ_{a,b,b} with the repeated period b
    let [x, y, z] = d;
    let (a, b) = if y == z { (x, y) } else { (z, x) };
    sorted3([2, 2 * a, b])
}

fn usable_triple(d: [u64; 3]) -> bool {
    let d = sorted3(d);
    !NON_DENSE_TRIPLES.contains(&d) && search_witness(d, true).is_some()
}

fn reduction_chain(periods: &[u64]) -> Vec<ReductionStep> {
    let mut current = periods.to_vec();
    let mut chain = Vec::new();
    while current.len() > 3 {
        let m = current.len();
        let (pair_a, pair_b) = (current[m - 2], current[m - 1]);
        let rest = &current[..m - 2];
        let auxiliary = (7u64..)
            .find(|&d| {
                let triple_ok = usable_triple([pair_a, pair_b, d]);
                let reduced_ok = if rest.len() == 2 {
                    usable_triple([rest[0], rest[1], d])
                } else {
                    true
                };
                triple_ok && reduced_ok
            })
            .expect("large auxiliary periods always admit witnesses");
        let mut reduced = rest.to_vec();
        reduced.push(auxiliary);
        reduced.sort_unstable();
        chain.push(ReductionStep {
            reduced: reduced.clone(),
            triple: sorted3([pair_a, pair_b, auxiliary]),
            auxiliary,
        });
        current = reduced;
    }
    chain
}

pub fn is_so3_dense(p: &FuchsianPresentation) -> DensityVerdict {
    let periods = p.periods();
    let triple: Option<[u64; 3]> = if p.is_triangle_group() {
        Some([periods[0], periods[1], periods[2]])
    } else {
        None
    };
    let strict_witness = triple.and_then(|t| search_witness(t, true));

    let reason = if p.genus() >= 1 {
        DensityReason::GenusPositive
    } else if let Some(t) = triple {
        if NON_DENSE_TRIPLES.contains(&t) {
            DensityReason::ExceptionalSet
        } else if FINITE_SHADOWED.contains(&t) {
            DensityReason::IndexTwoRealization {
                parent: index_two_parent(t),
            }
        } else {
            DensityReason::TriangleWitness {
                witness: strict_witness
                    .expect("every hyperbolic triple outside the exceptions has a strict witness"),
            }
        }
    } else {
        // genus 0 and hyperbolic force at least three periods
        DensityReason::InductiveReduction {
            chain: reduction_chain(periods),
        }
    };
    DensityVerdict {
        dense: reason != DensityReason::ExceptionalSet,
        reason,
        strict_witness,
    }
}
