//! Command definitions and dispatch. `run` never prints; it returns what
//! should go to stdout and stderr together with the exit code.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;

use kappa_core::classify::{classify_kappa_below_125, verify_a5_recognition, Classification, Verdict};
use kappa_core::closedform::{
    kappa_cyclic, kappa_cyclic_reduced, kappa_dihedral, kappa_elementary_abelian, kappa_epo,
    kappa_quaternion_pow2, kappa_quaternion_reduced, kappa_semidirect_pq, DivisorGraph,
};
use kappa_core::groups::{FiniteGroup, GroupSpec, DEFAULT_MAX_ORDER};
use kappa_core::powergraph::{power_graph, reduced_power_graph, PowerGraph};
use kappa_core::treecount::{block_decomposition_kappa, exact_integer_determinant, temperley_kappa, Counter};
use kappa_core::{Error, MultiGraph, TreeNumber};

use crate::output::OutputRecord;
use crate::parse::{parse_group_spec, ParseError};
use crate::table1;

pub const EXIT_OK: u8 = 0;
pub const EXIT_DISCREPANCY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "kappa", version, about = "Exact spanning-tree counts of power graphs of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tree-number of the power graph of a group.
    Kappa {
        /// Group spec, e.g. `cyclic:12` or `product:(cyclic:3)x(sym:3)`.
        spec: String,
        /// Delete the identity first.
        #[arg(long)]
        reduced: bool,
        #[arg(long, value_enum, default_value_t = Method::MatrixTree)]
        method: Method,
        #[arg(long, value_enum, default_value_t = KappaFormat::Plain)]
        format: KappaFormat,
        /// Include elapsed milliseconds in JSON output.
        #[arg(long)]
        timing: bool,
    },
    /// Recompute every group of order at most 15 and compare with the published values.
    Table1,
    /// Check the cyclic closed forms against the matrix-tree count for n = 1..=max-n.
    Verify {
        #[arg(long, default_value_t = 100)]
        max_n: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Emit the divisor graph of n with n and 1 removed.
    DivisorGraph {
        n: u64,
        /// Emit the incomparability graph instead.
        #[arg(long)]
        complement: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Groups with a given tree-number below 125, or the A5 recognition checks.
    Classify {
        #[arg(required_unless_present = "a5")]
        target: Option<u64>,
        #[arg(long, conflicts_with = "target")]
        a5: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Emit the power graph of a group.
    Graph {
        spec: String,
        #[arg(long)]
        reduced: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Exact determinant of a square integer matrix stored as a JSON array of rows.
    Det { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    MatrixTree,
    ClosedForm,
    Decomposition,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KappaFormat {
    Plain,
    Factored,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub max_order: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_order: DEFAULT_MAX_ORDER }
    }
}

impl Config {
    /// Reads `KAPPA_MAX_ORDER`.
    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var("KAPPA_MAX_ORDER") {
            Ok(v) => v
                .trim()
                .parse()
                .map(|max_order| Config { max_order })
                .map_err(|_| CliError::Usage(format!("KAPPA_MAX_ORDER={v:?} is not a nonnegative integer"))),
            Err(_) => Ok(Config::default()),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("discrepancy detected:\n{0}")]
    Discrepancy(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Discrepancy(_) => EXIT_DISCREPANCY,
            CliError::Core(e) => match e {
                Error::UnsupportedOrder { .. } | Error::TooLarge(_) | Error::TooManyDivisors { .. } => EXIT_RESOURCE,
                Error::Inconsistent(_) => EXIT_DISCREPANCY,
                _ => EXIT_USAGE,
            },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }
}

pub fn run(cli: Cli, config: Config) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Kappa { spec, reduced, method, format, timing } => {
            cmd_kappa(&spec, reduced, method, format, timing, config)
        }
        Command::Table1 => cmd_table1(),
        Command::Verify { max_n, jobs } => cmd_verify(max_n, jobs, config),
        Command::DivisorGraph { n, complement, format } => cmd_divisor_graph(n, complement, format),
        Command::Classify { target, a5, format } => cmd_classify(target, a5, format),
        Command::Graph { spec, reduced, format } => cmd_graph(&spec, reduced, format, config),
        Command::Det { file } => cmd_det(&file),
    }
}

fn build(spec: &str, config: Config) -> Result<(GroupSpec, FiniteGroup), CliError> {
    let spec = parse_group_spec(spec)?;
    let g = spec.build_with_cap(config.max_order)?;
    Ok((spec, g))
}

fn graph_of(g: &FiniteGroup, reduced: bool) -> Result<PowerGraph, CliError> {
    Ok(if reduced { reduced_power_graph(g)? } else { power_graph(g) })
}

/// The closed form for this family, if there is one.
pub fn closed_form(spec: &GroupSpec, g: &FiniteGroup, reduced: bool) -> Option<Result<TreeNumber, Error>> {
    match (spec, reduced) {
        (&GroupSpec::Cyclic(n), false) => Some(kappa_cyclic(n)),
        (&GroupSpec::Cyclic(n), true) => Some(kappa_cyclic_reduced(n)),
        (&GroupSpec::Dihedral(n), false) => Some(kappa_dihedral(n)),
        (&GroupSpec::Quaternion(n), false) if n.is_power_of_two() => Some(kappa_quaternion_pow2(n)),
        (&GroupSpec::Quaternion(n), true) => Some(kappa_quaternion_reduced(n)),
        (&GroupSpec::ElementaryAbelian { p, k }, false) => Some(kappa_elementary_abelian(p, k)),
        (&GroupSpec::SemidirectPQ { p, q }, false) => Some(kappa_semidirect_pq(p, q)),
        (_, false) => kappa_epo(g).ok().map(Ok),
        _ => None,
    }
}

fn by_decomposition(pg: &PowerGraph) -> Result<TreeNumber, Error> {
    if !pg.is_connected() {
        return Ok(TreeNumber::zero());
    }
    block_decomposition_kappa(&MultiGraph::from(pg), Counter::MatrixTree)
}

fn cmd_kappa(
    spec: &str,
    reduced: bool,
    method: Method,
    format: KappaFormat,
    timing: bool,
    config: Config,
) -> Result<Outcome, CliError> {
    let (spec, g) = build(spec, config)?;
    let name = spec.canonical_name();
    let mut stderr = String::new();
    let mut records = Vec::new();
    let mut graph: Option<PowerGraph> = None;
    let mut push = |method: &str, f: &mut dyn FnMut() -> Result<TreeNumber, CliError>| -> Result<(), CliError> {
        let start = Instant::now();
        let k = f()?;
        let mut rec = OutputRecord::new(&name, g.order(), method, &k, reduced);
        if timing {
            rec.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        records.push(rec);
        Ok(())
    };
    let mut matrix_tree = || -> Result<TreeNumber, CliError> {
        let pg = match graph.take() {
            Some(pg) => pg,
            None => graph_of(&g, reduced)?,
        };
        let k = temperley_kappa(&pg)?;
        graph = Some(pg);
        Ok(k)
    };
    let wants = |m: Method| method == m || method == Method::All;
    if wants(Method::MatrixTree) {
        push("matrix-tree", &mut matrix_tree)?;
    }
    if wants(Method::ClosedForm) {
        match closed_form(&spec, &g, reduced) {
            Some(result) => {
                let mut result = Some(result);
                push("closed-form", &mut || Ok(result.take().expect("once")?))?;
            }
            None if method == Method::ClosedForm => {
                stderr.push_str(&format!("no closed form for {name}; using matrix-tree\n"));
                push("matrix-tree", &mut matrix_tree)?;
            }
            None => {}
        }
    }
    if wants(Method::Decomposition) {
        push("decomposition", &mut || Ok(by_decomposition(&graph_of(&g, reduced)?)?))?;
    }
    if records.iter().any(|r| r.kappa != records[0].kappa) {
        let lines: Vec<String> = records.iter().map(|r| format!("  {}: {}", r.method, r.kappa)).collect();
        return Err(CliError::Discrepancy(format!("{name}{}\n{}", if reduced { "#" } else { "" }, lines.join("\n"))));
    }
    let stdout = match format {
        KappaFormat::Json => serde_json::to_string_pretty(&records).expect("records serialize") + "\n",
        KappaFormat::Plain | KappaFormat::Factored => {
            let show = |r: &OutputRecord| if format == KappaFormat::Plain { r.kappa.clone() } else { r.factorization.clone() };
            if records.len() == 1 {
                format!("{}\n", show(&records[0]))
            } else {
                records.iter().map(|r| format!("{}: {}\n", r.method, show(r))).collect()
            }
        }
    };
    Ok(Outcome { stdout, stderr, code: EXIT_OK })
}

fn cmd_table1() -> Result<Outcome, CliError> {
    let rows = table1::compute_table1()?;
    let mut stdout = table1::render(&rows);
    let failures = rows.iter().map(|r| !r.kappa_ok() as usize + !r.reduced_ok() as usize).sum::<usize>();
    stdout.push_str(&format!("{} rows, {} mismatched cells\n", rows.len(), failures));
    Ok(Outcome { stdout, stderr: String::new(), code: if failures == 0 { EXIT_OK } else { EXIT_DISCREPANCY } })
}

/// Compare both cyclic closed forms with the matrix-tree count at `n`.
pub fn verify_one(n: u64, config: Config) -> Result<Option<String>, CliError> {
    let g = GroupSpec::Cyclic(n).build_with_cap(config.max_order)?;
    let full = temperley_kappa(&power_graph(&g))?;
    let formula = kappa_cyclic(n)?;
    if full != formula {
        return Ok(Some(format!("n={n}: closed form {formula} != matrix-tree {full}")));
    }
    if n >= 2 {
        let red = temperley_kappa(&reduced_power_graph(&g)?)?;
        let formula = kappa_cyclic_reduced(n)?;
        if red != formula {
            return Ok(Some(format!("n={n} reduced: closed form {formula} != matrix-tree {red}")));
        }
    }
    Ok(None)
}

fn cmd_verify(max_n: u64, jobs: usize, config: Config) -> Result<Outcome, CliError> {
    if max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let results: Vec<Result<Option<String>, CliError>> =
        pool.install(|| (1..=max_n).into_par_iter().map(|n| verify_one(n, config)).collect());
    for r in results {
        if let Some(msg) = r? {
            return Ok(Outcome { stdout: format!("FAIL {msg}\n"), stderr: String::new(), code: EXIT_DISCREPANCY });
        }
    }
    Ok(Outcome::ok(format!("all n verified (1..={max_n})\n")))
}

fn cmd_divisor_graph(n: u64, complement: bool, format: GraphFormat) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let g = DivisorGraph::middle(n, complement).to_export();
    Ok(Outcome::ok(match format {
        GraphFormat::Dot => g.to_dot(&format!("D({n}){}", if complement { " complement" } else { "" })),
        GraphFormat::Json => g.to_json() + "\n",
    }))
}

fn cmd_classify(target: Option<u64>, a5: bool, format: ReportFormat) -> Result<Outcome, CliError> {
    if a5 {
        let report = verify_a5_recognition()?;
        let stdout = match format {
            ReportFormat::Json => report.to_json() + "\n",
            ReportFormat::Text => report
                .checks
                .iter()
                .map(|c| {
                    let v = if c.verdict == Verdict::Pass { "PASS" } else { "FAIL" };
                    format!("{v}  {}: {}\n      {}\n", c.check, c.claim, c.computed)
                })
                .collect(),
        };
        let code = if report.all_pass() { EXIT_OK } else { EXIT_DISCREPANCY };
        return Ok(Outcome { stdout, stderr: String::new(), code });
    }
    let target = target.ok_or_else(|| CliError::Usage("a target or --a5 is required".into()))?;
    let c = classify_kappa_below_125(target)?;
    let stdout = match format {
        ReportFormat::Json => serde_json::to_string_pretty(&c).expect("classification serializes") + "\n",
        ReportFormat::Text => match c {
            Classification::NoGroup { kappa_value } => format!("no group has tree-number {kappa_value}\n"),
            Classification::Family { kappa_value, description, spectrum } => {
                format!("{kappa_value}: {description}, spectrum {spectrum:?}\n")
            }
            Classification::Groups(entry) => {
                let mut s = format!("{}:\n", entry.kappa_value);
                for g in entry.groups {
                    s.push_str(&format!("  {:<11} {:<28} spectrum {:?}\n", g.name, g.spec, g.spectrum));
                }
                s
            }
        },
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_graph(spec: &str, reduced: bool, format: GraphFormat, config: Config) -> Result<Outcome, CliError> {
    let (spec, g) = build(spec, config)?;
    let export = graph_of(&g, reduced)?.to_export();
    let name = format!("P({}{})", spec.canonical_name(), if reduced { "#" } else { "" });
    Ok(Outcome::ok(match format {
        GraphFormat::Dot => export.to_dot(&name),
        GraphFormat::Json => export.to_json() + "\n",
    }))
}

/// Parse a JSON array of rows whose entries are integers or decimal strings.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<BigInt>>, CliError> {
    let bad = |m: &str| CliError::Usage(format!("matrix file: {m}"));
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    let rows = value.as_array().ok_or_else(|| bad("expected an array of rows"))?;
    let matrix = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("expected each row to be an array"))?
                .iter()
                .map(|x| {
                    let s = match x {
                        serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                        serde_json::Value::String(s) => s.trim().to_string(),
                        _ => return Err(bad(&format!("{x} is not an integer"))),
                    };
                    s.parse::<BigInt>().map_err(|_| bad(&format!("{s:?} is not an integer")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if matrix.iter().any(|r| r.len() != matrix.len()) {
        return Err(bad("matrix is not square"));
    }
    Ok(matrix)
}

fn cmd_det(file: &PathBuf) -> Result<Outcome, CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    let m = parse_matrix(&text)?;
    Ok(Outcome::ok(format!("{}\n", exact_integer_determinant(&m))))
}
