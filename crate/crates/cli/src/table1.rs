//! Tree-numbers of every group of order at most 15, checked against the
//! published table.

use kappa_core::powergraph::{power_graph, reduced_power_graph};
use kappa_core::treecount::temperley_kappa;
use serde::Serialize;

use crate::parse::parse_group_spec;
use crate::CliError;

const GOLDEN: &str = include_str!("../data/table1.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub order: usize,
    pub name: String,
    pub spec: String,
    pub kappa: String,
    /// `-` for the trivial group.
    pub reduced: String,
}

pub fn golden_rows() -> Vec<GoldenRow> {
    GOLDEN
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split('|').map(str::trim).collect();
            assert_eq!(f.len(), 5, "malformed golden row {l:?}");
            GoldenRow {
                order: f[0].parse().expect("order"),
                name: f[1].into(),
                spec: f[2].into(),
                kappa: f[3].into(),
                reduced: f[4].into(),
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RowResult {
    pub name: String,
    pub order: usize,
    pub kappa_expected: String,
    pub kappa_computed: String,
    pub reduced_expected: String,
    pub reduced_computed: String,
}

impl RowResult {
    pub fn kappa_ok(&self) -> bool {
        self.kappa_expected == self.kappa_computed
    }

    pub fn reduced_ok(&self) -> bool {
        self.reduced_expected == self.reduced_computed
    }
}

/// Compute both tree-numbers for every row by the matrix-tree method.
pub fn compute_table1() -> Result<Vec<RowResult>, CliError> {
    golden_rows()
        .into_iter()
        .map(|row| {
            let g = parse_group_spec(&row.spec)?.build()?;
            if g.order() != row.order {
                return Err(CliError::Usage(format!("{} has order {}, not {}", row.name, g.order(), row.order)));
            }
            let kappa_computed = temperley_kappa(&power_graph(&g))?.factored();
            let reduced_computed = if g.order() == 1 {
                "-".to_string()
            } else {
                temperley_kappa(&reduced_power_graph(&g)?)?.factored()
            };
            Ok(RowResult {
                name: row.name,
                order: row.order,
                kappa_expected: row.kappa,
                kappa_computed,
                reduced_expected: row.reduced,
                reduced_computed,
            })
        })
        .collect()
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn render(rows: &[RowResult]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "{:>2}  {:<9} kappa={:<22} {}  kappa#={:<22} {}\n",
            r.order,
            r.name,
            r.kappa_computed,
            verdict(r.kappa_ok()),
            r.reduced_computed,
            verdict(r.reduced_ok()),
        ));
        if !r.kappa_ok() {
            out.push_str(&format!("      expected kappa={}\n", r.kappa_expected));
        }
        if !r.reduced_ok() {
            out.push_str(&format!("      expected kappa#={}\n", r.reduced_expected));
        }
    }
    out
}
