//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a check comes out negative (a signature
//! that is not hyperbolic, a failing appendix entry), 2 on usage or input
//! errors. Diagnostics go to the error stream only.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cocycle::{upper_bound, z1_dim_alternating_so, z1_dim_principal, TorsionImage};
use crate::density::{
    interval_coprime, is_so3_dense, scan_hyperbolic_triples, triangle_witness, DensityVerdict,
    IntervalCase,
};
use crate::eigen::balanced_class;
use crate::error::{Error, Result};
use crate::liedata::{ClassicalGroup, RootSystem};
use crate::perm::Permutation;
use crate::permgrp::{
    appendix_entries, find_entry, verify_appendix_entry, AppendixEntry, AppendixReport,
};
use crate::presentation::{euler_characteristic, parse_candidate, validate, FuchsianPresentation};
use crate::report::{defect_table, genus0_table, tminusdim_table, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "repvar",
    version,
    about = "Exact dimension formulas for Fuchsian group representation varieties"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Euler characteristic of a signature `g=<int>;d=<c1>,...`
    Euler { presentation: String },
    /// Check that a signature is hyperbolic
    Validate { presentation: String },
    /// Dimension of the cocycle space Z¹
    Z1 {
        #[command(subcommand)]
        kind: Z1Kind,
    },
    /// Upper bound on dim Z¹ for a root system or classical group
    UpperBound { presentation: String, group: String },
    /// SO(3)-density classification
    Density { presentation: String },
    /// Rational rotation angles for a triangle group
    TriangleWitness {
        d1: u64,
        d2: u64,
        d3: u64,
        #[arg(long)]
        non_strict: bool,
    },
    /// Hyperbolic triples without a strict witness
    ScanTriples {
        #[arg(long)]
        dmax: u64,
    },
    /// Coprime interval representative
    Interval {
        d: u64,
        #[arg(long)]
        case: u8,
    },
    /// Certify the bundled alternating-group triples
    VerifyAppendix {
        #[arg(long)]
        entry: Option<String>,
    },
    /// Reproduce the exceptional-group tables
    Tables {
        #[arg(value_enum)]
        which: TableKind,
        #[arg(long)]
        m: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
enum Z1Kind {
    /// Adjoint representation through the principal homomorphism
    Principal {
        presentation: String,
        rootsystem: String,
    },
    /// so(N-1) through an alternating group A_N
    Alternating {
        presentation: String,
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        triple: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Defect,
    Tminusdim,
    Genus0,
}

/// What a subcommand produced: the rendered output and whether the
/// mathematics said yes.
struct Outcome {
    text: String,
    positive: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            positive: true,
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn configure_threads() {
    let threads = std::env::var("REPVAR_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(0);
    if threads > 0 {
        // Already-initialized pools keep their size.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    2
                }
            };
        }
    };
    configure_threads();
    match execute(&cli) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.text.as_bytes());
            if outcome.positive {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Euler { presentation } => cmd_euler(presentation, fmt),
        Command::Validate { presentation } => cmd_validate(presentation, fmt),
        Command::Z1 { kind } => match kind {
            Z1Kind::Principal {
                presentation,
                rootsystem,
            } => cmd_z1_principal(presentation, rootsystem, fmt),
            Z1Kind::Alternating {
                presentation,
                degree,
                triple,
            } => cmd_z1_alternating(presentation, *degree, triple.as_ref(), fmt),
        },
        Command::UpperBound {
            presentation,
            group,
        } => cmd_upper_bound(presentation, group, fmt),
        Command::Density { presentation } => cmd_density(presentation, fmt),
        Command::TriangleWitness {
            d1,
            d2,
            d3,
            non_strict,
        } => cmd_witness([*d1, *d2, *d3], !non_strict, fmt),
        Command::ScanTriples { dmax } => cmd_scan(*dmax, fmt),
        Command::Interval { d, case } => cmd_interval(*d, *case, fmt),
        Command::VerifyAppendix { entry } => cmd_verify(entry.as_deref(), fmt),
        Command::Tables { which, m } => cmd_tables(*which, *m, fmt),
    }
}

#[derive(Serialize)]
struct EulerJson {
    schema_version: u32,
    presentation: String,
    euler_characteristic: String,
}

fn cmd_euler(text: &str, fmt: Format) -> Result<Outcome> {
    let (g, d) = parse_candidate(text)?;
    let chi = euler_characteristic(g, &d)?;
    let mut sorted = d.clone();
    sorted.sort_unstable();
    let canonical = format!(
        "g={g};d={}",
        sorted
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    Ok(Outcome::ok(match fmt {
        Format::Text => format!("euler_characteristic: {chi}\n"),
        Format::Json => json(&EulerJson {
            schema_version: SCHEMA_VERSION,
            presentation: canonical,
            euler_characteristic: chi.to_string(),
        }),
    }))
}

#[derive(Serialize)]
struct ValidateJson {
    schema_version: u32,
    valid: bool,
    presentation: Option<String>,
    euler_characteristic: String,
}

fn cmd_validate(text: &str, fmt: Format) -> Result<Outcome> {
    let (g, d) = parse_candidate(text)?;
    let chi = euler_characteristic(g, &d)?;
    let result = match validate(g, &d) {
        Ok(p) => Some(p),
        Err(Error::NonHyperbolic { .. }) => None,
        Err(e) => return Err(e),
    };
    let text = match fmt {
        Format::Text => match &result {
            Some(p) => format!("valid: {p}\neuler_characteristic: {chi}\n"),
            None => format!("not hyperbolic\neuler_characteristic: {chi}\n"),
        },
        Format::Json => json(&ValidateJson {
            schema_version: SCHEMA_VERSION,
            valid: result.is_some(),
            presentation: result.as_ref().map(|p| p.to_string()),
            euler_characteristic: chi.to_string(),
        }),
    };
    Ok(Outcome {
        text,
        positive: result.is_some(),
    })
}

#[derive(Serialize)]
struct Z1Json {
    schema_version: u32,
    presentation: String,
    target: String,
    z1_dim: i64,
    dim: u64,
    excess: i64,
}

fn z1_output(p: &FuchsianPresentation, target: String, z1: i64, dim: u64, fmt: Format) -> String {
    let excess = z1 - dim as i64;
    match fmt {
        Format::Text => format!("z1_dim: {z1}\ndim: {dim}\nexcess: {excess}\n"),
        Format::Json => json(&Z1Json {
            schema_version: SCHEMA_VERSION,
            presentation: p.to_string(),
            target,
            z1_dim: z1,
            dim,
            excess,
        }),
    }
}

fn cmd_z1_principal(pres: &str, rs: &str, fmt: Format) -> Result<Outcome> {
    let p: FuchsianPresentation = pres.parse()?;
    let rs: RootSystem = rs.parse()?;
    let z1 = z1_dim_principal(&p, &rs)?;
    Ok(Outcome::ok(z1_output(
        &p,
        rs.to_string(),
        z1,
        rs.dimension(),
        fmt,
    )))
}

/// Reads either an appendix entry or bare cycle-notation lines.
fn read_images(path: &PathBuf, degree: u64) -> Result<Vec<Permutation>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.first().is_some_and(|l| l.starts_with("gamma=")) {
        let entry: AppendixEntry = lines.join("\n").parse()?;
        if entry.degree as u64 != degree {
            return Err(Error::DegreeMismatch {
                left: entry.degree,
                right: degree as usize,
            });
        }
        return Ok(entry.generators.to_vec());
    }
    lines
        .iter()
        .map(|l| Permutation::parse(degree as usize, l))
        .collect()
}

fn cmd_z1_alternating(
    pres: &str,
    degree: u64,
    triple: Option<&PathBuf>,
    fmt: Format,
) -> Result<Outcome> {
    let p: FuchsianPresentation = pres.parse()?;
    let images: Vec<TorsionImage> = match triple {
        Some(path) => read_images(path, degree)?
            .into_iter()
            .map(TorsionImage::Perm)
            .collect(),
        None => p
            .periods()
            .iter()
            .map(|&d| balanced_class(degree, d).map(TorsionImage::Class))
            .collect::<Result<_>>()?,
    };
    let z1 = z1_dim_alternating_so(&p, &images, degree)?;
    let so = ClassicalGroup::so(degree - 1)?;
    Ok(Outcome::ok(z1_output(
        &p,
        so.to_string(),
        z1,
        so.dimension(),
        fmt,
    )))
}

#[derive(Serialize)]
struct UpperBoundJson {
    schema_version: u32,
    presentation: String,
    group: String,
    dim: u64,
    rank: u64,
    upper_bound: String,
}

fn cmd_upper_bound(pres: &str, group: &str, fmt: Format) -> Result<Outcome> {
    let p: FuchsianPresentation = pres.parse()?;
    let (label, dim, rank) = match group.parse::<RootSystem>() {
        Ok(rs) => (rs.to_string(), rs.dimension(), rs.rank()),
        Err(_) => {
            let g: ClassicalGroup = group.parse()?;
            (g.to_string(), g.dimension(), g.rank())
        }
    };
    let bound = upper_bound(&p, dim, rank);
    Ok(Outcome::ok(match fmt {
        Format::Text => format!("upper_bound: {bound}\n"),
        Format::Json => json(&UpperBoundJson {
            schema_version: SCHEMA_VERSION,
            presentation: p.to_string(),
            group: label,
            dim,
            rank,
            upper_bound: bound.to_string(),
        }),
    }))
}

#[derive(Serialize)]
struct DensityJson<'a> {
    schema_version: u32,
    presentation: String,
    #[serde(flatten)]
    verdict: &'a DensityVerdict,
}

fn fmt_triple(t: &[u64; 3]) -> String {
    format!("{},{},{}", t[0], t[1], t[2])
}

fn cmd_density(pres: &str, fmt: Format) -> Result<Outcome> {
    use crate::density::DensityReason::*;
    let p: FuchsianPresentation = pres.parse()?;
    let v = is_so3_dense(&p);
    Ok(Outcome::ok(match fmt {
        Format::Text => {
            let reason = match &v.reason {
                GenusPositive => "GenusPositive".to_string(),
                ExceptionalSet => "ExceptionalSet".to_string(),
                TriangleWitness { witness } => format!("TriangleWitness({})", fmt_triple(witness)),
                IndexTwoRealization { parent } => {
                    format!("IndexTwoRealization({})", fmt_triple(parent))
                }
                InductiveReduction { chain } => {
                    let steps: Vec<String> = chain
                        .iter()
                        .map(|s| {
                            let reduced: Vec<String> =
                                s.reduced.iter().map(|x| x.to_string()).collect();
                            format!("[{}]+({})", reduced.join(","), fmt_triple(&s.triple))
                        })
                        .collect();
                    format!("InductiveReduction({})", steps.join(" -> "))
                }
            };
            let witness = v
                .strict_witness
                .as_ref()
                .map(fmt_triple)
                .unwrap_or_else(|| "none".to_string());
            format!(
                "dense: {}\nreason: {reason}\nstrict_witness: {witness}\n",
                v.dense
            )
        }
        Format::Json => json(&DensityJson {
            schema_version: SCHEMA_VERSION,
            presentation: p.to_string(),
            verdict: &v,
        }),
    }))
}

#[derive(Serialize)]
struct WitnessJson {
    schema_version: u32,
    periods: [u64; 3],
    strict: bool,
    witness: Option<[u64; 3]>,
}

fn cmd_witness(d: [u64; 3], strict: bool, fmt: Format) -> Result<Outcome> {
    let w = triangle_witness(d[0], d[1], d[2], strict)?;
    Ok(Outcome::ok(match fmt {
        Format::Text => match &w {
            Some(a) => format!(
                "witness: {}\nangles: {}/{} {}/{} {}/{}\n",
                fmt_triple(a),
                a[0],
                d[0],
                a[1],
                d[1],
                a[2],
                d[2]
            ),
            None => "witness: none\n".to_string(),
        },
        Format::Json => json(&WitnessJson {
            schema_version: SCHEMA_VERSION,
            periods: d,
            strict,
            witness: w,
        }),
    }))
}

#[derive(Serialize)]
struct ScanJson {
    schema_version: u32,
    dmax: u64,
    triples: Vec<[u64; 3]>,
}

fn cmd_scan(dmax: u64, fmt: Format) -> Result<Outcome> {
    let triples = scan_hyperbolic_triples(dmax)?;
    Ok(Outcome::ok(match fmt {
        Format::Text => triples.iter().map(|t| fmt_triple(t) + "\n").collect(),
        Format::Json => json(&ScanJson {
            schema_version: SCHEMA_VERSION,
            dmax,
            triples,
        }),
    }))
}

#[derive(Serialize)]
struct IntervalJson {
    schema_version: u32,
    d: u64,
    case: u8,
    a: Option<u64>,
}

fn cmd_interval(d: u64, case: u8, fmt: Format) -> Result<Outcome> {
    let a = interval_coprime(d, IntervalCase::try_from(case)?)?;
    Ok(Outcome::ok(match fmt {
        Format::Text => match a {
            Some(a) => format!("a: {a}\nratio: {a}/{d}\n"),
            None => "a: none\n".to_string(),
        },
        Format::Json => json(&IntervalJson {
            schema_version: SCHEMA_VERSION,
            d,
            case,
            a,
        }),
    }))
}

#[derive(Serialize)]
struct VerifyJson {
    schema_version: u32,
    entries: Vec<AppendixReport>,
    all_passed: bool,
}

fn cmd_verify(label: Option<&str>, fmt: Format) -> Result<Outcome> {
    let entries = match label {
        Some(l) => {
            vec![find_entry(l).ok_or_else(|| Error::Parse(format!("no appendix entry `{l}`")))?]
        }
        None => appendix_entries(),
    };
    let reports: Vec<AppendixReport> = entries.iter().map(verify_appendix_entry).collect();
    let all_passed = reports.iter().all(AppendixReport::all_passed);
    let text = match fmt {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let margin = r
                    .margin
                    .map(|m| m.to_string())
                    .unwrap_or_else(|| "n/a".to_string());
                s.push_str(&format!(
                    "gamma={} degree={} product={} orders={} even={} alternating={} order={} margin={} positive={} {}\n",
                    r.label,
                    r.degree,
                    r.product_is_identity,
                    r.order_matches.iter().all(|&b| b),
                    r.even.iter().all(|&b| b),
                    r.generates_alternating,
                    r.group_order,
                    margin,
                    r.margin_positive,
                    if r.all_passed() { "PASS" } else { "FAIL" },
                ));
            }
            s
        }
        Format::Json => json(&VerifyJson {
            schema_version: SCHEMA_VERSION,
            entries: reports,
            all_passed,
        }),
    };
    Ok(Outcome {
        text,
        positive: all_passed,
    })
}

fn cmd_tables(which: TableKind, m: Option<u64>, fmt: Format) -> Result<Outcome> {
    let table = match which {
        TableKind::Defect => defect_table(),
        TableKind::Tminusdim => tminusdim_table(),
        TableKind::Genus0 => {
            let m = m.ok_or_else(|| Error::Parse("`tables genus0` needs --m".to_string()))?;
            genus0_table(m)?
        }
    };
    Ok(Outcome::ok(match fmt {
        Format::Text => table.render_text(),
        Format::Json => json(&table.to_json()),
    }))
}
