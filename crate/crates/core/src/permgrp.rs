//! Deterministic Schreier-Sims and certification of explicit generating
//! triples of alternating groups.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::cocycle::{z1_dim_alternating_so, TorsionImage};
use crate::error::{Error, Result};
use crate::liedata::ClassicalGroup;
use crate::perm::Permutation;
use crate::presentation::FuchsianPresentation;

#[derive(Debug, Clone)]
struct Level {
    base_point: usize,
    generators: Vec<Permutation>,
    /// `transversal[p]` maps the base point to `p`, for `p` in the orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        Level {
            base_point,
            generators: Vec::new(),
            transversal,
            orbit: vec![base_point],
        }
    }

    /// Extends the orbit; existing representatives are kept.
    fn grow_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for g in &self.generators {
                let q = g.apply(p);
                if self.transversal[q].is_none() {
                    let rep = g.compose_unchecked(self.transversal[p].as_ref().unwrap());
                    self.transversal[q] = Some(rep);
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set with per-level transversals.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(generators: &[Permutation]) -> Result<Self> {
        let degree = generators
            .first()
            .map(|g| g.degree())
            .ok_or_else(|| Error::OutOfRange("at least one generator is required".to_string()))?;
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            if !chain.contains(g) {
                chain.extend(0, g.clone());
            }
        }
        Ok(chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Membership test by sifting.
    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g.clone(), 0).1.is_identity()
    }

    /// Sifts `g` from level `start`; returns the level where it dropped out
    /// and the residue.
    fn sift(&self, mut g: Permutation, start: usize) -> (usize, Permutation) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let image = g.apply(level.base_point);
            match &level.transversal[image] {
                Some(rep) => g = rep.inverse().compose_unchecked(&g),
                None => return (i, g),
            }
        }
        (self.levels.len(), g)
    }

    /// Adds `g`, an element of the `i`-th point stabilizer not yet generated
    /// at that level, and restores the Schreier property from level `i` down.
    /// Residues found at level `i` are pushed to level `i + 1`, so every
    /// level's generators generate the full stabilizer it stands for.
    fn extend(&mut self, i: usize, g: Permutation) {
        if i == self.levels.len() {
            let moved = (0..self.degree)
                .find(|&p| g.apply(p) != p)
                .expect("residue is not the identity");
            self.levels.push(Level::new(moved, self.degree));
        }
        self.levels[i].generators.push(g);
        self.levels[i].grow_orbit();

        // Every Schreier generator u_{s(p)}^{-1} s u_p must sift through the
        // levels below.
        let mut k = 0;
        while k < self.levels[i].orbit.len() {
            let p = self.levels[i].orbit[k];
            let mut s_idx = 0;
            while s_idx < self.levels[i].generators.len() {
                let level = &self.levels[i];
                let s = &level.generators[s_idx];
                let u_p = level.transversal[p].as_ref().unwrap();
                let u_sp = level.transversal[s.apply(p)].as_ref().unwrap();
                let schreier = u_sp.inverse().compose_unchecked(&s.compose_unchecked(u_p));
                if !schreier.is_identity() {
                    let (_, residue) = self.sift(schreier, i + 1);
                    if !residue.is_identity() {
                        self.extend(i + 1, residue);
                    }
                }
                s_idx += 1;
            }
            k += 1;
        }
    }
}

pub fn group_order(generators: &[Permutation]) -> Result<BigUint> {
    Ok(StabilizerChain::new(generators)?.order())
}

/// `n!/2`.
pub fn alternating_order(n: u64) -> BigUint {
    let fact = (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
    if n >= 2 {
        fact / 2u32
    } else {
        fact
    }
}

/// True iff all generators are even and generate a group of order `n!/2`.
pub fn generates_alternating(generators: &[Permutation], n: usize) -> Result<bool> {
    if let Some(g) = generators.iter().find(|g| g.degree() != n) {
        return Err(Error::DegreeMismatch {
            left: n,
            right: g.degree(),
        });
    }
    if !generators.iter().all(Permutation::is_even) {
        return Ok(false);
    }
    Ok(group_order(generators)? == alternating_order(n as u64))
}

/// A triple `x1, x2, x3` in `A_degree` with `x1 x2 x3 = 1` representing a
/// homomorphism from the triangle group with the given periods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixEntry {
    pub periods: [u64; 3],
    pub degree: usize,
    pub generators: [Permutation; 3],
}

impl AppendixEntry {
    pub fn label(&self) -> String {
        let [a, b, c] = self.periods;
        format!("{a},{b},{c}")
    }

    pub fn presentation(&self) -> Result<FuchsianPresentation> {
        let [a, b, c] = self.periods;
        FuchsianPresentation::triangle(a, b, c)
    }

    /// `x1 ∘ x2 ∘ x3`.
    pub fn product(&self) -> Permutation {
        let [x1, x2, x3] = &self.generators;
        x1.compose_unchecked(&x2.compose_unchecked(x3))
    }
}

impl fmt::Display for AppendixEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gamma={};degree={}", self.label(), self.degree)?;
        for x in &self.generators {
            writeln!(f, "{x}")?;
        }
        Ok(())
    }
}

fn parse_header(line: &str) -> Result<([u64; 3], usize)> {
    let bad = || {
        Error::Parse(format!(
            "expected `gamma=<d1>,<d2>,<d3>;degree=<n>`, got `{line}`"
        ))
    };
    let (g, d) = line.trim().split_once(';').ok_or_else(bad)?;
    let periods: Vec<u64> = g
        .trim()
        .strip_prefix("gamma=")
        .ok_or_else(bad)?
        .split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    let periods: [u64; 3] = periods.try_into().map_err(|_| bad())?;
    let degree = d
        .trim()
        .strip_prefix("degree=")
        .ok_or_else(bad)?
        .trim()
        .parse::<usize>()
        .map_err(|_| bad())?;
    Ok((periods, degree))
}

impl FromStr for AppendixEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        if lines.len() != 4 {
            return Err(Error::Parse(format!(
                "an appendix entry has a header and three permutation lines, got {} lines",
                lines.len()
            )));
        }
        let (periods, degree) = parse_header(lines[0])?;
        let x1 = Permutation::parse(degree, lines[1])?;
        let x2 = Permutation::parse(degree, lines[2])?;
        let x3 = Permutation::parse(degree, lines[3])?;
        Ok(AppendixEntry {
            periods,
            degree,
            generators: [x1, x2, x3],
        })
    }
}

/// Parses a sequence of entries separated by blank lines or consecutive headers.
pub fn parse_entries(text: &str) -> Result<Vec<AppendixEntry>> {
    let mut blocks: Vec<Vec<&str>> = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with("gamma=") || blocks.is_empty() {
            blocks.push(Vec::new());
        }
        blocks.last_mut().unwrap().push(line);
    }
    blocks.iter().map(|b| b.join("\n").parse()).collect()
}

const APPENDIX_DATA: &str = include_str!("../data/appendix.txt");

/// The six triples certifying that the non-SO(3)-dense triangle groups
/// surject onto `A_12` or `A_14`.
pub fn appendix_entries() -> Vec<AppendixEntry> {
    parse_entries(APPENDIX_DATA).expect("bundled appendix data parses")
}

pub fn find_entry(label: &str) -> Option<AppendixEntry> {
    let wanted: Vec<u64> = label
        .trim()
        .trim_start_matches("gamma=")
        .split(',')
        .map(|t| t.trim().parse().ok())
        .collect::<Option<_>>()?;
    appendix_entries()
        .into_iter()
        .find(|e| e.periods.as_slice() == wanted.as_slice())
}

/// Outcome of checking one entry; failures are recorded as flags.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct AppendixReport {
    pub label: String,
    pub degree: usize,
    pub product_is_identity: bool,
    pub order_matches: [bool; 3],
    pub even: [bool; 3],
    pub group_order: String,
    pub generates_alternating: bool,
    /// `dim Z¹(Γ, so(n))` with `n = degree - 1`, when the orders match.
    pub z1_dim: Option<i64>,
    pub so_dim: u64,
    /// `dim Z¹(Γ, so(n)) - dim SO(n)`.
    pub margin: Option<i64>,
    pub margin_positive: bool,
}

impl AppendixReport {
    pub fn all_passed(&self) -> bool {
        self.product_is_identity
            && self.order_matches.iter().all(|&b| b)
            && self.even.iter().all(|&b| b)
            && self.generates_alternating
            && self.margin_positive
    }
}

pub fn verify_appendix_entry(e: &AppendixEntry) -> AppendixReport {
    let product_is_identity = e.product().is_identity();
    let order_matches = [0, 1, 2].map(|i| e.generators[i].order() == e.periods[i]);
    let even = [0, 1, 2].map(|i| e.generators[i].is_even());
    let order = group_order(&e.generators).expect("entry generators share a degree");
    let generates_alternating =
        even.iter().all(|&b| b) && order == alternating_order(e.degree as u64);
    let so_dim = ClassicalGroup::SO(e.degree as u64 - 1).dimension();
    let z1 = e.presentation().ok().and_then(|p| {
        let images: Vec<TorsionImage> = e
            .generators
            .iter()
            .cloned()
            .map(TorsionImage::Perm)
            .collect();
        z1_dim_alternating_so(&p, &images, e.degree as u64).ok()
    });
    let margin = z1.map(|z| z - so_dim as i64);
    AppendixReport {
        label: e.label(),
        degree: e.degree,
        product_is_identity,
        order_matches,
        even,
        group_order: order.to_string(),
        generates_alternating,
        z1_dim: z1,
        so_dim,
        margin,
        margin_positive: margin.is_some_and(|m| m > 0),
    }
}
