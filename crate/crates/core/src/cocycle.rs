//! Weil's formula for `dim Z¹(Γ, V)` and the inequalities built on it.
//!
//! For a Fuchsian group of genus `g` with periods `d_1..d_m` acting on `V`,
//!
//! ```text
//! dim Z¹ = (2g-1) dim V + dim (V*)^Γ + Σ (dim V - dim V^{x_j})
//!        = (1-χ) dim V + dim (V*)^Γ + Σ (dim V / d_j - dim V^{x_j})
//! ```
//!
//! Both lines are evaluated and required to agree.

use num_traits::Zero;

use crate::eigen::{
    exterior_square_fixed_dim, perm_std_eigenprofile, principal_fixed_dim, CycleType,
};
use crate::error::{Error, Result};
use crate::liedata::RootSystem;
use crate::perm::Permutation;
use crate::presentation::FuchsianPresentation;
use crate::scalar::{from_u64, ExactScalar};
use crate::Rational;

/// Fixed-space data of the torsion generators on a representation `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionFixedData {
    dim_v: u64,
    invariant_dual_dim: u64,
    /// `(d_j, dim V^{x_j})` per elliptic generator.
    entries: Vec<(u64, u64)>,
}

impl TorsionFixedData {
    pub fn new(dim_v: u64, invariant_dual_dim: u64, entries: Vec<(u64, u64)>) -> Result<Self> {
        if let Some(&(d, fix)) = entries.iter().find(|&&(_, fix)| fix > dim_v) {
            return Err(Error::OutOfRange(format!(
                "fixed dimension {fix} for period {d} exceeds dim V = {dim_v}"
            )));
        }
        Ok(TorsionFixedData {
            dim_v,
            invariant_dual_dim,
            entries,
        })
    }

    pub fn dim_v(&self) -> u64 {
        self.dim_v
    }

    pub fn invariant_dual_dim(&self) -> u64 {
        self.invariant_dual_dim
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    fn check_periods(&self, p: &FuchsianPresentation) -> Result<()> {
        let mut ours: Vec<u64> = self.entries.iter().map(|&(d, _)| d).collect();
        ours.sort_unstable();
        if ours != p.periods() {
            return Err(Error::MismatchedPeriods(format!(
                "data has periods {ours:?}, presentation {p} has {:?}",
                p.periods()
            )));
        }
        Ok(())
    }
}

/// Evaluates both forms of Weil's formula in `S`.
pub fn z1_dim_in<S: ExactScalar>(p: &FuchsianPresentation, t: &TorsionFixedData) -> Result<S> {
    t.check_periods(p)?;
    let dim_v: S = from_u64(t.dim_v);
    let inv: S = from_u64(t.invariant_dual_dim);

    let two_g_minus_one = S::from_int(2) * from_u64::<S>(p.genus()) - S::one();
    let mut first = two_g_minus_one * dim_v.clone() + inv.clone();
    for &(_, fix) in &t.entries {
        first = first + dim_v.clone() - from_u64::<S>(fix);
    }

    let one_minus_chi = S::one() - p.euler_characteristic_in::<S>();
    let mut second = one_minus_chi * dim_v.clone() + inv;
    for &(d, fix) in &t.entries {
        second = second + dim_v.clone() / from_u64::<S>(d) - from_u64::<S>(fix);
    }

    if !second.is_integral() {
        return Err(Error::NonIntegerResult(second.to_string()));
    }
    if first != second {
        return Err(Error::NonIntegerResult(format!(
            "forms disagree: {first} vs {second}"
        )));
    }
    Ok(second)
}

pub fn z1_dim(p: &FuchsianPresentation, t: &TorsionFixedData) -> Result<i64> {
    let v: Rational = z1_dim_in(p, t)?;
    v.to_i64_exact()
        .ok_or_else(|| Error::OutOfRange(format!("dim Z¹ = {v} does not fit in i64")))
}

/// Fixed data for the adjoint representation composed with the principal
/// homomorphism; the coadjoint invariants vanish because the image is maximal
/// with finite centralizer.
pub fn principal_fixed_data(p: &FuchsianPresentation, rs: &RootSystem) -> TorsionFixedData {
    TorsionFixedData {
        dim_v: rs.dimension(),
        invariant_dual_dim: 0,
        entries: p
            .periods()
            .iter()
            .map(|&d| (d, principal_fixed_dim(rs, d)))
            .collect(),
    }
}

pub fn z1_dim_principal(p: &FuchsianPresentation, rs: &RootSystem) -> Result<i64> {
    z1_dim(p, &principal_fixed_data(p, rs))
}

/// `t_G - dim G` for the principal image.
pub fn principal_excess(p: &FuchsianPresentation, rs: &RootSystem) -> Result<i64> {
    Ok(z1_dim_principal(p, rs)? - rs.dimension() as i64)
}

/// Image of an elliptic generator in the alternating group, either as an
/// explicit permutation or as a conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorsionImage {
    Perm(Permutation),
    Class(CycleType),
}

impl TorsionImage {
    fn representative(&self) -> Permutation {
        match self {
            TorsionImage::Perm(x) => x.clone(),
            TorsionImage::Class(c) => c.representative(),
        }
    }
}

/// Fixed data on `so(N-1)`, the exterior square of the standard
/// representation of `A_N`. Images are paired with the ascending periods.
pub fn alternating_so_fixed_data(
    p: &FuchsianPresentation,
    images: &[TorsionImage],
    degree: u64,
) -> Result<TorsionFixedData> {
    if images.len() != p.m() {
        return Err(Error::MismatchedPeriods(format!(
            "{} images for {} periods",
            images.len(),
            p.m()
        )));
    }
    if degree < 3 {
        return Err(Error::OutOfRange(format!("degree {degree} < 3")));
    }
    let mut entries = Vec::with_capacity(images.len());
    for (index, (image, &d)) in images.iter().zip(p.periods()).enumerate() {
        let x = image.representative();
        if x.degree() as u64 != degree {
            return Err(Error::DegreeMismatch {
                left: x.degree(),
                right: degree as usize,
            });
        }
        let order = x.order();
        if order != d {
            return Err(Error::OrderMismatch {
                index,
                expected: d,
                found: order,
            });
        }
        entries.push((d, exterior_square_fixed_dim(&perm_std_eigenprofile(&x))));
    }
    let n = degree - 1;
    TorsionFixedData::new(n * (n - 1) / 2, 0, entries)
}

pub fn z1_dim_alternating_so(
    p: &FuchsianPresentation,
    images: &[TorsionImage],
    degree: u64,
) -> Result<i64> {
    z1_dim(p, &alternating_so_fixed_data(p, images, degree)?)
}

/// `(1-χ) dim G + (2g + m + rank) + (3/2) m rank`.
pub fn upper_bound_in<S: ExactScalar>(p: &FuchsianPresentation, dim_g: u64, rank: u64) -> S {
    let m: S = from_u64(p.m() as u64);
    let rank: S = from_u64(rank);
    let one_minus_chi = S::one() - p.euler_characteristic_in::<S>();
    one_minus_chi * from_u64::<S>(dim_g)
        + S::from_int(2) * from_u64::<S>(p.genus())
        + m.clone()
        + rank.clone()
        + S::ratio(3, 2) * m * rank
}

pub fn upper_bound(p: &FuchsianPresentation, dim_g: u64, rank: u64) -> Rational {
    upper_bound_in(p, dim_g, rank)
}

/// `t_G - dim G > t_H - dim H`.
pub fn density_criterion_compare(t_g: i64, dim_g: i64, t_h: i64, dim_h: i64) -> bool {
    t_g - dim_g > t_h - dim_h
}

/// `(2g-2+m)(dim G - 3) - Σ_j Σ_{e ∈ E} (1 + 2⌊e/d_j⌋)` where `E` is the
/// exponent list of `G` with the single exponent 1 of SO(3) removed. This is
/// `(t_G - dim G) - (t_SO(3) - dim SO(3))` for the principal image.
pub fn exceptional_margin(p: &FuchsianPresentation, rs: &RootSystem) -> i64 {
    let exps = rs.exponents();
    let pos = exps
        .iter()
        .position(|&e| e == 1)
        .expect("every root system has exponent 1");
    let rest: Vec<u64> = exps
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pos)
        .map(|(_, &e)| e)
        .collect();
    let euler_part = (2 * p.genus() as i64 - 2 + p.m() as i64) * (rs.dimension() as i64 - 3);
    let fixed: i64 = p
        .periods()
        .iter()
        .map(|&d| rest.iter().map(|&e| 1 + 2 * (e / d) as i64).sum::<i64>())
        .sum();
    euler_part - fixed
}

pub fn exceptional_inequality(p: &FuchsianPresentation, rs: &RootSystem) -> bool {
    exceptional_margin(p, rs) > 0
}

/// `dim Z¹ - dim V` as an exact rational, used where the excess may be negative.
pub fn excess(p: &FuchsianPresentation, t: &TorsionFixedData) -> Result<Rational> {
    let z: Rational = z1_dim_in(p, t)?;
    Ok(z - Rational::from_integer(t.dim_v.into()))
}

/// Whether a rational is strictly positive; small helper for reports.
pub fn is_positive(r: &Rational) -> bool {
    r > &Rational::zero()
}
