//! Eigenvalue multiplicities of finite-order elements and the fixed-space
//! dimensions derived from them.
//!
//! An eigenvalue `exp(2πij/d)` is identified with its residue `j mod d`, so all
//! fixed-space dimensions are integer combinatorics on multiplicity vectors.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::liedata::RootSystem;
use crate::perm::Permutation;
use crate::Rational;

/// Multiplicities `m_0, ..., m_{d-1}` of the `d`-th roots of unity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EigenProfile {
    order: u64,
    multiplicities: Vec<u64>,
    dim: u64,
    real: bool,
}

impl EigenProfile {
    pub fn new(order: u64, multiplicities: Vec<u64>) -> Result<Self> {
        if order == 0 || multiplicities.len() as u64 != order {
            return Err(Error::OutOfRange(format!(
                "profile of order {order} needs {order} multiplicities, got {}",
                multiplicities.len()
            )));
        }
        let dim = multiplicities.iter().sum();
        Ok(EigenProfile {
            order,
            multiplicities,
            dim,
            real: false,
        })
    }

    /// A profile flagged as the spectrum of a real operator; the spectrum must
    /// be closed under complex conjugation.
    pub fn new_real(order: u64, multiplicities: Vec<u64>) -> Result<Self> {
        let mut p = Self::new(order, multiplicities)?;
        if !p.is_self_dual() {
            return Err(Error::OutOfRange(format!(
                "multiplicities {:?} are not conjugation-symmetric",
                p.multiplicities
            )));
        }
        p.real = true;
        Ok(p)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    pub fn multiplicity(&self, residue: u64) -> u64 {
        self.multiplicities[(residue % self.order) as usize]
    }

    pub fn is_real(&self) -> bool {
        self.real
    }

    pub fn is_self_dual(&self) -> bool {
        let d = self.order as usize;
        (0..d).all(|j| self.multiplicities[j] == self.multiplicities[(d - j) % d])
    }

    /// Dimension of the fixed space.
    pub fn fixed_dim(&self) -> u64 {
        self.multiplicities[0]
    }

    /// Exact deviations `|m_j - dim/d|` from a perfectly balanced spectrum.
    pub fn deviations(&self) -> Vec<Rational> {
        let mean = Rational::new(self.dim.into(), self.order.into());
        self.multiplicities
            .iter()
            .map(|&m| (Rational::from_integer(m.into()) - &mean).abs())
            .collect()
    }
}

/// Fixed-space dimension on the adjoint representation of the image of an
/// order-`d` element under the principal homomorphism: `Σ (1 + 2⌊e_i/d⌋)`.
pub fn principal_fixed_dim(rs: &RootSystem, d: u64) -> u64 {
    assert!(d >= 1, "element order must be positive");
    rs.exponents().iter().map(|e| 1 + 2 * (e / d)).sum()
}

/// Adjoint spectrum of the principal image of an order-`d` element.
///
/// The element lifts to SU(2) with eigenvalues `ζ^{±1}`, `ζ` a primitive
/// `2d`-th root of unity; each summand `V_{2e}` contributes `ζ^{2k}` for
/// `k = -e..=e`, i.e. residue `k mod d`.
pub fn principal_eigenprofile(rs: &RootSystem, d: u64) -> EigenProfile {
    assert!(d >= 1, "element order must be positive");
    let mut m = vec![0u64; d as usize];
    let di = d as i64;
    for &e in &rs.exponents() {
        let e = e as i64;
        for k in -e..=e {
            m[k.rem_euclid(di) as usize] += 1;
        }
    }
    EigenProfile::new_real(d, m).expect("principal spectra are self-dual")
}

/// Spectrum on the standard representation: the permutation representation
/// with one trivial summand removed.
pub fn perm_std_eigenprofile(x: &Permutation) -> EigenProfile {
    let d = x.order();
    let mut m = vec![0u64; d as usize];
    for cycle in x.cycles() {
        let c = cycle.len() as u64;
        let step = d / c;
        for j in 0..c {
            m[((j * step) % d) as usize] += 1;
        }
    }
    m[0] -= 1;
    EigenProfile::new_real(d, m).expect("permutation spectra are self-dual")
}

fn choose2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Multiplicity of the eigenvalue 1 on the exterior square.
pub fn exterior_square_fixed_dim(p: &EigenProfile) -> u64 {
    let d = p.order();
    let m = p.multiplicities();
    let mut total = choose2(m[0]);
    if d.is_multiple_of(2) {
        total += choose2(m[(d / 2) as usize]);
    }
    for j in 1..d.div_ceil(2) {
        total += m[j as usize] * m[(d - j) as usize];
    }
    total
}

/// Centralizer dimension of the element in SU(n): `Σ m_j² - 1`.
pub fn su_centralizer_dim(p: &EigenProfile) -> Result<u64> {
    if p.dim() < 2 {
        return Err(Error::OutOfRange(format!(
            "SU(n) requires n >= 2, profile has dimension {}",
            p.dim()
        )));
    }
    Ok(p.multiplicities().iter().map(|m| m * m).sum::<u64>() - 1)
}

/// A conjugacy class of permutations given by its cycle type on `degree` points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    degree: u64,
    /// Non-trivial cycle lengths, descending.
    cycles: Vec<u64>,
}

impl CycleType {
    pub fn new(degree: u64, mut cycles: Vec<u64>) -> Result<Self> {
        cycles.retain(|&c| c > 1);
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        let moved: u64 = cycles.iter().sum();
        if moved > degree || cycles.contains(&0) {
            return Err(Error::OutOfRange(format!(
                "cycle type {cycles:?} does not fit on {degree} points"
            )));
        }
        Ok(CycleType { degree, cycles })
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn cycles(&self) -> &[u64] {
        &self.cycles
    }

    pub fn fixed_points(&self) -> u64 {
        self.degree - self.cycles.iter().sum::<u64>()
    }

    pub fn is_even(&self) -> bool {
        self.cycles.iter().filter(|&&c| c % 2 == 0).count() % 2 == 0
    }

    /// A representative using consecutive points for consecutive cycles.
    pub fn representative(&self) -> Permutation {
        let mut next = 1u32;
        let cycles: Vec<Vec<u32>> = self
            .cycles
            .iter()
            .map(|&c| {
                let cyc: Vec<u32> = (next..next + c as u32).collect();
                next += c as u32;
                cyc
            })
            .collect();
        Permutation::from_cycles(self.degree as usize, &cycles)
            .expect("cycle type fits by construction")
    }
}

/// The balanced class of order-`d` even permutations on `points` points:
/// as many `d`-cycles as possible, the rest fixed.
pub fn balanced_class(points: u64, d: u64) -> Result<CycleType> {
    if d < 2 {
        return Err(Error::OutOfRange(format!("cycle length {d} < 2")));
    }
    if points < d {
        return Err(Error::NoBalancedClass { points, d });
    }
    let mut q = points / d;
    if d.is_multiple_of(2) && q % 2 == 1 {
        q -= 1;
    }
    if q == 0 {
        // a single even-length cycle is odd
        return Err(Error::NoBalancedClass { points, d });
    }
    CycleType::new(points, vec![d; q as usize])
}
