//! Exit criteria. One PASS/FAIL line per criterion; nonzero exit on any failure.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use repvar::cocycle::{upper_bound, z1_dim, z1_dim_principal};
use repvar::density::{interval_coprime, is_so3_dense, scan_hyperbolic_triples, IntervalCase};
use repvar::eigen::{
    exterior_square_fixed_dim, perm_std_eigenprofile, principal_eigenprofile, principal_fixed_dim,
    su_centralizer_dim,
};
use repvar::permgrp::{appendix_entries, verify_appendix_entry};
use repvar::report::{defect_table, genus0_all2_values, tminusdim_table, Table, TableJson};
use repvar::{EigenProfile, FuchsianPresentation, RootSystem, TorsionFixedData};

use common::{
    alternating_margin_by_characters, exterior_square_by_characters, gcd, in_interval, multisets,
    partitions, q, weil_both_forms, with_cycle_type,
};

const APPENDIX_BUDGET: Duration = Duration::from_secs(5);
const SEED: u64 = 0x5eed_2024;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn compare_table(computed: &Table, fixture: &str, anchors: &[(&str, &str, BigRational)]) -> Check {
    let expected: TableJson =
        serde_json::from_str(&common::fixture(fixture)).map_err(|e| e.to_string())?;
    let expected = Table::from_json(&expected).map_err(|e| e.to_string())?;
    if computed.rows != expected.rows || computed.cols != expected.cols {
        return Err(format!(
            "labels differ: {:?} x {:?} vs {:?} x {:?}",
            computed.rows, computed.cols, expected.rows, expected.cols
        ));
    }
    let mut bad = Vec::new();
    let mut cells = 0;
    for (r, row) in expected.rows.iter().enumerate() {
        for (c, col) in expected.cols.iter().enumerate() {
            cells += 1;
            if computed.cells[r][c] != expected.cells[r][c] {
                bad.push(format!(
                    "({row},{col}) = {} expected {}",
                    computed.cells[r][c], expected.cells[r][c]
                ));
            }
        }
    }
    for (row, col, value) in anchors {
        if computed.cell(row, col) != Some(value) {
            bad.push(format!("anchor ({row},{col}) expected {value}"));
        }
    }
    if bad.is_empty() {
        Ok(format!("{cells} cells equal, {} anchors", anchors.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_defect_table() -> Check {
    compare_table(
        &defect_table(),
        "defect.json",
        &[
            ("2", "E8", q(-4, 1)),
            ("5", "F4", q(8, 5)),
            ("7", "E7", q(0, 1)),
        ],
    )
}

fn criterion_tminusdim_table() -> Check {
    compare_table(
        &tminusdim_table(),
        "tminusdim.json",
        &[
            ("(2,3,7)", "E8", q(12, 1)),
            ("(2,4,5)", "G2", q(0, 1)),
            ("(2,2,2,3)", "F4", q(16, 1)),
        ],
    )
}

fn criterion_genus0_forms() -> Check {
    let labels = ["A1", "E6", "E7", "E8", "F4", "G2"];
    let printed = |m: i64| {
        [
            2 * m - 6,
            40 * m - 136,
            70 * m - 266,
            128 * m - 496,
            28 * m - 104,
            8 * m - 28,
        ]
    };
    let mut mismatches: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for m in 5..=40u64 {
        let direct = genus0_all2_values(m).map_err(|e| e.to_string())?;
        let expected = printed(m as i64);
        for (i, label) in labels.iter().enumerate() {
            if direct[i] != expected[i] {
                mismatches
                    .entry(label)
                    .or_default()
                    .push(format!("m={m}: {} vs {}", direct[i], expected[i]));
            }
        }
    }
    if mismatches.is_empty() {
        Ok("m = 5..40, 6 columns equal".to_string())
    } else {
        Err(mismatches
            .iter()
            .map(|(label, v)| format!("{label} differs at {} values (first {})", v.len(), v[0]))
            .collect::<Vec<_>>()
            .join("; "))
    }
}

fn criterion_appendix_certificates() -> Check {
    let start = Instant::now();
    let entries = appendix_entries();
    let reports: Vec<_> = entries.iter().map(verify_appendix_entry).collect();
    let elapsed = start.elapsed();
    let a12 = BigUint::from(239_500_800u64);
    let a14 = BigUint::from(43_589_145_600u64);
    let mut bad = Vec::new();
    if entries.len() != 6 {
        bad.push(format!("{} entries", entries.len()));
    }
    for r in &reports {
        let expected = if r.degree == 12 { &a12 } else { &a14 };
        let structural = r.product_is_identity
            && r.order_matches.iter().all(|&b| b)
            && r.even.iter().all(|&b| b)
            && r.generates_alternating;
        if !structural || r.group_order != expected.to_string() {
            bad.push(format!("{} (order {})", r.label, r.group_order));
        }
    }
    if elapsed > APPENDIX_BUDGET {
        bad.push(format!("took {elapsed:?}"));
    }
    if bad.is_empty() {
        Ok(format!("6 triples certified in {} ms", elapsed.as_millis()))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_appendix_margins() -> Check {
    let fixture: BTreeMap<String, i64> =
        serde_json::from_str(&common::fixture("appendix_margins.json"))
            .map_err(|e| e.to_string())?;
    let mut bad = Vec::new();
    let mut seen = 0;
    for e in appendix_entries() {
        let report = verify_appendix_entry(&e);
        let oracle = alternating_margin_by_characters(e.degree, &e.generators);
        let frozen = fixture.get(&e.label()).copied();
        seen += 1;
        if report.margin != Some(oracle)
            || frozen != Some(oracle)
            || oracle <= 0
            || !report.margin_positive
        {
            bad.push(format!(
                "{}: computed {:?} oracle {oracle} fixture {frozen:?}",
                e.label(),
                report.margin
            ));
        }
    }
    if seen != fixture.len() {
        bad.push(format!("{seen} entries vs {} fixtures", fixture.len()));
    }
    if bad.is_empty() {
        Ok("margins 12, 18, 18, 16, 16, 26 all positive".to_string())
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_density() -> Check {
    let mut non_dense: Vec<(u64, Vec<u64>)> = Vec::new();
    let mut scanned = 0usize;
    for g in 0..=2u64 {
        for m in 0..=5usize {
            for periods in multisets(m, 2, 12) {
                let Ok(p) = FuchsianPresentation::new(g, &periods) else {
                    continue;
                };
                scanned += 1;
                if !is_so3_dense(&p).dense {
                    non_dense.push((g, periods));
                }
            }
        }
    }
    let expected: Vec<(u64, Vec<u64>)> = [
        [2, 4, 6],
        [2, 6, 6],
        [2, 6, 10],
        [3, 4, 4],
        [3, 6, 6],
        [4, 6, 12],
    ]
    .iter()
    .map(|t| (0, t.to_vec()))
    .collect();
    let mut sorted = non_dense.clone();
    sorted.sort();
    if sorted != expected {
        return Err(format!("non-dense set {sorted:?}"));
    }
    let strict = scan_hyperbolic_triples(24).map_err(|e| e.to_string())?;
    let expected_strict = vec![[2, 4, 6], [2, 6, 6], [2, 6, 10], [3, 6, 6], [4, 6, 12]];
    if strict != expected_strict {
        return Err(format!("strict-witness failures {strict:?}"));
    }
    Ok(format!(
        "{scanned} presentations, 6 non-dense; 5 triples without strict witness up to 24"
    ))
}

fn criterion_intervals() -> Check {
    let mut bad = Vec::new();
    for (case, exceptions) in [(1u8, vec![6u64]), (2, vec![4, 6, 10]), (3, vec![2, 3, 18])] {
        let c = IntervalCase::try_from(case).unwrap();
        for d in 2..=10_000u64 {
            match interval_coprime(d, c) {
                Ok(Some(a)) => {
                    if exceptions.contains(&d) || gcd(a, d) != 1 || !in_interval(case, d, a) {
                        bad.push(format!("case {case} d={d} a={a}"));
                    }
                }
                Ok(None) => {
                    let exists = (1..d).any(|a| gcd(a, d) == 1 && in_interval(case, d, a));
                    if !exceptions.contains(&d) || exists {
                        bad.push(format!("case {case} d={d} none"));
                    }
                }
                Err(e) => bad.push(format!("case {case} d={d}: {e}")),
            }
        }
    }
    if bad.is_empty() {
        Ok("3 cases, d = 2..10000".to_string())
    } else {
        Err(format!("{} failures, first {}", bad.len(), bad[0]))
    }
}

fn random_presentation(rng: &mut ChaCha8Rng) -> FuchsianPresentation {
    loop {
        let g = rng.gen_range(0..=3u64);
        let m = rng.gen_range(0..=6usize);
        let periods: Vec<u64> = (0..m).map(|_| rng.gen_range(2..=30)).collect();
        if let Ok(p) = FuchsianPresentation::new(g, &periods) {
            return p;
        }
    }
}

fn principal_presentations() -> Vec<FuchsianPresentation> {
    let mut out = Vec::new();
    for g in 0..=2u64 {
        let max_m = if g == 2 { 2 } else { 3 };
        for m in 0..=max_m {
            for periods in multisets(m, 2, 24) {
                if let Ok(p) = FuchsianPresentation::new(g, &periods) {
                    out.push(p);
                }
            }
        }
    }
    out
}

fn criterion_identities() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut notes = Vec::new();

    for i in 0..1000 {
        let p = random_presentation(&mut rng);
        let dim_v = rng.gen_range(1..=300u64);
        let inv = rng.gen_range(0..=dim_v);
        let entries: Vec<(u64, u64)> = p
            .periods()
            .iter()
            .map(|&d| (d, rng.gen_range(0..=dim_v)))
            .collect();
        let (first, second) = weil_both_forms(p.genus(), dim_v, inv, &entries);
        let t = TorsionFixedData::new(dim_v, inv, entries).map_err(|e| e.to_string())?;
        let lib = z1_dim(&p, &t).map_err(|e| format!("instance {i} {p}: {e}"))?;
        if first != second || first != q(lib, 1) {
            return Err(format!("instance {i} {p}: {first} / {second} / {lib}"));
        }
    }
    notes.push("1000 two-form instances");

    let mut profiles: Vec<EigenProfile> = Vec::new();
    let mut classes = 0;
    for n in 1..=10u64 {
        for parts in partitions(n) {
            let x = with_cycle_type(&parts);
            let profile = perm_std_eigenprofile(&x);
            let closed = exterior_square_fixed_dim(&profile);
            let oracle = exterior_square_by_characters(&x);
            if closed != oracle {
                return Err(format!(
                    "exterior square on {parts:?}: {closed} vs {oracle}"
                ));
            }
            classes += 1;
            profiles.push(profile);
        }
    }
    notes.push("exterior square on all cycle types of degree <= 10");

    let systems = RootSystem::all_up_to_rank(12);
    for rs in &systems {
        for d in 1..=24 {
            profiles.push(principal_eigenprofile(rs, d));
        }
    }
    for _ in 0..1000 {
        let k = rng.gen_range(1..=24u64);
        let m: Vec<u64> = (0..k).map(|_| rng.gen_range(0..=12)).collect();
        if let Ok(p) = EigenProfile::new(k, m) {
            profiles.push(p);
        }
    }
    let mut checked = 0;
    for p in &profiles {
        let n = p.dim();
        if n < 2 {
            continue;
        }
        let sum_sq = su_centralizer_dim(p).map_err(|e| e.to_string())? + 1;
        if p.order() * sum_sq < n * n {
            return Err(format!(
                "centralizer bound fails on {:?}",
                p.multiplicities()
            ));
        }
        checked += 1;
    }
    notes.push("centralizer bound on every profile");

    for rs in &systems {
        let dim = q(rs.dimension() as i64, 1);
        let rank = q(rs.rank() as i64, 1);
        for d in 1..=24u64 {
            let fix = q(principal_fixed_dim(rs, d) as i64, 1);
            let share = &dim / q(d as i64, 1);
            if fix < &share - &rank || fix < &share - q(3, 2) * &rank {
                return Err(format!("fixed-space bound fails for {rs} d={d}"));
            }
        }
    }
    notes.push("fixed-space lower bounds, rank <= 12, d <= 24");

    let presentations = principal_presentations();
    for p in &presentations {
        for rs in &systems {
            let z1 = z1_dim_principal(p, rs).map_err(|e| format!("{p} {rs}: {e}"))?;
            if q(z1, 1) > upper_bound(p, rs.dimension(), rs.rank()) {
                return Err(format!("upper bound below Z1 for {p} {rs}"));
            }
        }
    }
    Ok(format!(
        "{}; {classes} classes, {checked} profiles, {} presentations x {} root systems",
        notes.join(", "),
        presentations.len(),
        systems.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("defect table", criterion_defect_table),
        ("t - dim table", criterion_tminusdim_table),
        ("genus-0 linear forms", criterion_genus0_forms),
        ("appendix certificates", criterion_appendix_certificates),
        ("appendix positivity", criterion_appendix_margins),
        ("density classification", criterion_density),
        ("coprime interval sweep", criterion_intervals),
        ("formula identities", criterion_identities),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail} [{ms} ms]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} [{ms} ms]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
