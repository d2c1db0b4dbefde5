//! The two exceptional-group tables and the genus-0 linear formulas.
//!
//! Everything here is computed from the formulas; printed reference values
//! live only in the test fixtures.

use serde::{Deserialize, Serialize};

use crate::cocycle::principal_excess;
use crate::eigen::principal_fixed_dim;
use crate::error::{Error, Result};
use crate::liedata::RootSystem;
use crate::presentation::FuchsianPresentation;
use crate::Rational;

pub const SCHEMA_VERSION: u32 = 1;

/// Period vectors of the second table.
pub const TMINUSDIM_ROWS: [&[u64]; 4] = [&[2, 2, 2, 3], &[2, 3, 7], &[2, 4, 5], &[3, 3, 4]];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub corner: String,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub cells: Vec<Vec<Rational>>,
}

/// Serialized form; rationals are `p/q` strings, `q` omitted when 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub schema_version: u32,
    pub table: String,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub cells: Vec<Vec<String>>,
}

impl Table {
    pub fn cell(&self, row: &str, col: &str) -> Option<&Rational> {
        let r = self.rows.iter().position(|x| x == row)?;
        let c = self.cols.iter().position(|x| x == col)?;
        Some(&self.cells[r][c])
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            schema_version: SCHEMA_VERSION,
            table: self.name.clone(),
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            cells: self
                .cells
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &TableJson) -> Result<Self> {
        let cells = json
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        c.parse::<Rational>()
                            .map_err(|e| Error::Parse(format!("{c}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Table {
            name: json.table.clone(),
            corner: String::new(),
            rows: json.rows.clone(),
            cols: json.cols.clone(),
            cells,
        })
    }

    /// Right-aligned columns, one line per row.
    pub fn render_text(&self) -> String {
        let mut grid: Vec<Vec<String>> = Vec::with_capacity(self.rows.len() + 1);
        let mut header = vec![self.corner.clone()];
        header.extend(self.cols.iter().cloned());
        grid.push(header);
        for (label, row) in self.rows.iter().zip(&self.cells) {
            let mut line = vec![label.clone()];
            line.extend(row.iter().map(|c| c.to_string()));
            grid.push(line);
        }
        let ncols = grid[0].len();
        let widths: Vec<usize> = (0..ncols)
            .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &grid {
            let mut line = String::new();
            for (c, cell) in row.iter().enumerate() {
                if c == 0 {
                    line.push_str(&format!("{cell:<w$}", w = widths[0]));
                } else {
                    line.push_str(&format!("  {cell:>w$}", w = widths[c]));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

fn column_labels() -> Vec<String> {
    RootSystem::table_columns()
        .iter()
        .map(|r| r.to_string())
        .collect()
}

/// `Σ_i ((1 + 2⌊e_i/n⌋) - (2e_i + 1)/n)`: the gap between the principal
/// fixed dimension and `dim G / n`.
pub fn defect(rs: &RootSystem, n: u64) -> Rational {
    rs.exponents()
        .iter()
        .map(|&e| {
            Rational::from_integer((1 + 2 * (e / n)).into())
                - Rational::new((2 * e + 1).into(), n.into())
        })
        .sum()
}

/// Defects for `n = 2..7` against A1, E6, E7, E8, F4, G2.
pub fn defect_table() -> Table {
    let cols = RootSystem::table_columns();
    let ns: Vec<u64> = (2..=7).collect();
    Table {
        name: "defect".to_string(),
        corner: "n".to_string(),
        rows: ns.iter().map(|n| n.to_string()).collect(),
        cols: column_labels(),
        cells: ns
            .iter()
            .map(|&n| cols.iter().map(|rs| defect(rs, n)).collect())
            .collect(),
    }
}

fn period_label(d: &[u64]) -> String {
    let inner: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

/// `t_G - dim G` on the four minimal genus-0 period vectors.
pub fn tminusdim_table() -> Table {
    let cols = RootSystem::table_columns();
    let cells = TMINUSDIM_ROWS
        .iter()
        .map(|d| {
            let p = FuchsianPresentation::new(0, d).expect("table rows are hyperbolic");
            cols.iter()
                .map(|rs| {
                    let v = principal_excess(&p, rs).expect("principal data is consistent");
                    Rational::from_integer(v.into())
                })
                .collect()
        })
        .collect();
    Table {
        name: "tminusdim".to_string(),
        corner: "d vector".to_string(),
        rows: TMINUSDIM_ROWS.iter().map(|d| period_label(d)).collect(),
        cols: column_labels(),
        cells,
    }
}

/// Reference linear forms for `t_G - dim G` on `(0; 2, ..., 2)` with `m`
/// periods, in the column order of [`RootSystem::table_columns`].
pub fn genus0_all2_formula(m: i64) -> [i64; 6] {
    [
        2 * m - 6,
        40 * m - 136,
        70 * m - 266,
        128 * m - 496,
        28 * m - 104,
        8 * m - 28,
    ]
}

/// `t_G - dim G` on `(0; 2^m)` for A1, E6, E7, E8, F4, G2, computed directly.
pub fn genus0_all2_values(m: u64) -> Result<[i64; 6]> {
    if m < 5 {
        return Err(Error::OutOfRange(format!("m = {m} < 5")));
    }
    let p = FuchsianPresentation::new(0, &vec![2; m as usize])?;
    let cols = RootSystem::table_columns();
    let mut direct = [0i64; 6];
    for (slot, rs) in direct.iter_mut().zip(&cols) {
        *slot = principal_excess(&p, rs)?;
    }
    Ok(direct)
}

pub fn genus0_table(m: u64) -> Result<Table> {
    let values = genus0_all2_values(m)?;
    Ok(Table {
        name: "genus0".to_string(),
        corner: "m".to_string(),
        rows: vec![m.to_string()],
        cols: column_labels(),
        cells: vec![values
            .iter()
            .map(|&v| Rational::from_integer(v.into()))
            .collect()],
    })
}

/// `principal_fixed_dim - dim/n`, the same defect grouped the other way.
pub fn defect_by_fixed_dim(rs: &RootSystem, n: u64) -> Rational {
    Rational::from_integer(principal_fixed_dim(rs, n).into())
        - Rational::new(rs.dimension().into(), n.into())
}
