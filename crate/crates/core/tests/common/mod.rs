//! Independent oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use repvar::Permutation;

pub fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn fix_count(x: &Permutation) -> i64 {
    (0..x.degree()).filter(|&p| x.apply(p) == p).count() as i64
}

/// Fixed dimension of `x` on the exterior square of the standard
/// representation, as the average of `(χ(g)² - χ(g²)) / 2` over `<x>`.
pub fn exterior_square_by_characters(x: &Permutation) -> u64 {
    let d = x.order();
    let mut twice_sum = 0i64;
    for k in 0..d {
        let chi = fix_count(&x.pow(k)) - 1;
        let chi2 = fix_count(&x.pow(2 * k)) - 1;
        twice_sum += chi * chi - chi2;
    }
    assert_eq!(
        twice_sum % (2 * d as i64),
        0,
        "character average is not integral"
    );
    (twice_sum / (2 * d as i64)) as u64
}

/// The two expressions for dim Z¹ from a signature and fixed-space data.
pub fn weil_both_forms(
    genus: u64,
    dim_v: u64,
    inv: u64,
    entries: &[(u64, u64)],
) -> (BigRational, BigRational) {
    let v = q(dim_v as i64, 1);
    let g = q(genus as i64, 1);
    let inv = q(inv as i64, 1);
    let mut first = (q(2, 1) * &g - q(1, 1)) * &v + &inv;
    for &(_, fix) in entries {
        first += &v - q(fix as i64, 1);
    }
    let mut chi = q(2, 1) - q(2, 1) * &g;
    for &(d, _) in entries {
        chi -= q(1, 1) - q(1, d as i64);
    }
    let mut second = (q(1, 1) - chi) * &v + &inv;
    for &(d, fix) in entries {
        second += &v / q(d as i64, 1) - q(fix as i64, 1);
    }
    (first, second)
}

/// dim Z¹(Γ_{d1,d2,d3}, so(n-1)) - dim SO(n-1) for images in `A_n`, through
/// the character oracle.
pub fn alternating_margin_by_characters(degree: usize, images: &[Permutation]) -> i64 {
    let n = degree as i64 - 1;
    let v = n * (n - 1) / 2;
    let mut z1 = -v;
    for x in images {
        z1 += v - exterior_square_by_characters(x) as i64;
    }
    z1 - v
}

/// All partitions of `n` with parts in non-increasing order.
pub fn partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(n: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A permutation with the given cycle type on consecutive points.
pub fn with_cycle_type(parts: &[u64]) -> Permutation {
    let degree: u64 = parts.iter().sum();
    let mut cycles = Vec::new();
    let mut next = 1u32;
    for &len in parts {
        cycles.push((next..next + len as u32).collect::<Vec<u32>>());
        next += len as u32;
    }
    Permutation::from_cycles(degree as usize, &cycles).unwrap()
}

/// Size of the group generated by `gens`, by closure under right
/// multiplication.
pub fn closure_order(gens: &[Permutation]) -> u64 {
    let degree = gens[0].degree();
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(id.images().to_vec());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g).unwrap();
            if seen.insert(y.images().to_vec()) {
                queue.push_back(y);
            }
        }
    }
    seen.len() as u64
}

/// Multisets of size `m` from `lo..=hi`, non-decreasing.
pub fn multisets(m: usize, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    fn go(m: usize, lo: u64, hi: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == m {
            out.push(prefix.clone());
            return;
        }
        for d in lo..=hi {
            prefix.push(d);
            go(m, d, hi, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, lo, hi, &mut Vec::new(), &mut out);
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `a/d` within the interval of `case`, with the stated boundary rule.
pub fn in_interval(case: u8, d: u64, a: u64) -> bool {
    let r = q(a as i64, d as i64);
    let (lo, hi, closed) = match case {
        1 => (q(1, 4), q(1, 2), d == 2 || d == 4),
        2 => (q(1, 3), q(1, 2), d == 2 || d == 3),
        3 => (q(1, 12), q(4, 15), d == 12),
        _ => unreachable!(),
    };
    if closed {
        lo <= r && r <= hi
    } else {
        lo < r && r < hi
    }
}
