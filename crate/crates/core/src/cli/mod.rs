//! The `ztt` command-line interface.

mod args;
mod render;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dist::{limit_scan, moments, s_pmf, LimitRegime, LimitRow};
use crate::error::{invalid, Error, Result};
use crate::exact::{parse_rational, to_f64, Poly, Rational};
use crate::oracle::{theta_bruteforce, Refinement, DEFAULT_BUDGET};
use crate::theta::{compute_theta, partition_series, Algorithm, ThetaPoly};
use crate::verify::{run_suite, Suite, VerifyConfig};
use crate::weights::{from_json, WeightSequence};

pub use args::{load_weights, parse_range, parse_rationals};
pub use render::{Cell, Format, Table};

/// Environment variable overriding the enumeration budget.
pub const BUDGET_ENV: &str = "ZTT_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ztt", version, about = "Exact interpolated weighted multiset sums and the law of sigma")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Decimal digits for float columns.
    #[arg(long, default_value_t = 12, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub precision: u16,
    /// Maximal number of multisets the brute-force oracle may enumerate
    /// (default: $ZTT_BUDGET, else 10000000).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of theta_{n;k}(t) per (n, k) cell.
    Theta(ThetaArgs),
    /// Law of S_{n,k}: rows (j, exact, float).
    Pmf(CellArgs),
    /// Mean, variance and factorial moments of S_{n,k}.
    Moments(MomentArgs),
    /// Run a verification suite; exit code 1 on any failure.
    Verify(VerifyArgs),
    /// Distances to the limit laws along a parameter grid.
    Limits(LimitArgs),
    /// Partition counts with parts <= n up to q^max.
    Partitions(PartitionArgs),
    /// Write a table to a file instead of stdout.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CellArgs {
    /// Builtin (ones, linear, zeta:<m>) or path to a JSON weight file.
    #[arg(long, default_value = "ones")]
    pub weights: String,
    /// Values of n: `a`, `a..b` (inclusive) or `a,b,c`.
    #[arg(long)]
    pub n: String,
    /// Values of k, same grammar as --n.
    #[arg(long)]
    pub k: String,
}

#[derive(Debug, Clone, Args)]
pub struct ThetaArgs {
    #[command(flatten)]
    pub cell: CellArgs,
    /// product, newton, bell, det, convolution, bruteforce or all.
    #[arg(long, default_value = "newton")]
    pub algo: String,
}

#[derive(Debug, Clone, Args)]
pub struct MomentArgs {
    #[command(flatten)]
    pub cell: CellArgs,
    /// Highest factorial moment order.
    #[arg(long, default_value_t = 2)]
    pub smax: usize,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// identities, marginals, sumtheorem, limits or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    #[arg(long, default_value_t = 8)]
    pub max_k: usize,
}

#[derive(Debug, Clone, Args)]
pub struct LimitArgs {
    /// A regime name or `all`.
    #[arg(long, default_value = "all")]
    pub regime: String,
    /// Grid override for a single regime, same grammar as --n.
    #[arg(long)]
    pub grid: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct PartitionArgs {
    /// Largest allowed part.
    #[arg(long)]
    pub n: usize,
    /// Highest power of q.
    #[arg(long = "max")]
    pub max: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ExportArgs {
    /// Destination file.
    #[arg(long)]
    pub out: PathBuf,
    #[command(subcommand)]
    pub table: ExportTable,
}

#[derive(Debug, Clone, Subcommand)]
pub enum ExportTable {
    Theta(ThetaArgs),
    Pmf(CellArgs),
    Moments(MomentArgs),
    Limits(LimitArgs),
    Partitions(PartitionArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum AlgoChoice {
    One(Algorithm),
    All,
    BruteForce,
}

fn parse_algo(s: &str) -> Result<AlgoChoice> {
    match s {
        "all" => Ok(AlgoChoice::All),
        "bruteforce" => Ok(AlgoChoice::BruteForce),
        other => other.parse().map(AlgoChoice::One),
    }
}

fn resolve_budget(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| invalid(format!("{BUDGET_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

struct Grid {
    seq: WeightSequence,
    ns: Vec<usize>,
    ks: Vec<usize>,
}

impl Grid {
    fn load(cell: &CellArgs) -> Result<Grid> {
        Ok(Grid { seq: load_weights(&cell.weights)?, ns: parse_range(&cell.n)?, ks: parse_range(&cell.k)? })
    }

    fn cells(&self) -> Vec<(usize, usize)> {
        self.ns.iter().flat_map(|&n| self.ks.iter().map(move |&k| (n, k))).collect()
    }

    fn config(&self) -> Value {
        json!({"weights": self.seq.to_json(), "n": self.ns, "k": self.ks})
    }
}

fn coeff_rows(table: &mut Table, n: usize, k: usize, poly: &Poly, prefix: &[Cell], suffix: &[Cell]) {
    let len = k.max(1).max(poly.coeffs().len());
    for i in 0..len {
        let mut row = vec![Cell::from(n), Cell::from(k)];
        row.extend_from_slice(prefix);
        row.push(Cell::from(i));
        row.push(Cell::from(poly.coeff(i)));
        row.extend_from_slice(suffix);
        table.push(row);
    }
}

fn cmd_theta(a: &ThetaArgs, budget: u64) -> Result<Table> {
    let grid = Grid::load(&a.cell)?;
    let choice = parse_algo(&a.algo)?;
    let mut config = grid.config();
    config["algo"] = Value::from(a.algo.clone());
    let cells = grid.cells();
    match choice {
        AlgoChoice::All => {
            let mut table = Table::new("theta", config, vec!["n", "k", "algo", "coeff_index", "value", "agree"]);
            let results: Vec<Vec<ThetaPoly>> = cells
                .par_iter()
                .map(|&(n, k)| Algorithm::ALL.iter().map(|&al| compute_theta(&grid.seq, n, k, al)).collect())
                .collect::<Result<_>>()?;
            for (&(n, k), polys) in cells.iter().zip(&results) {
                let agree = polys.windows(2).all(|w| w[0].poly() == w[1].poly());
                for (al, p) in Algorithm::ALL.iter().zip(polys) {
                    coeff_rows(&mut table, n, k, p.poly(), &[Cell::from(al.name())], &[Cell::from(agree)]);
                }
            }
            Ok(table)
        }
        _ => {
            let mut table = Table::new("theta", config, vec!["n", "k", "coeff_index", "value"]);
            let results: Vec<ThetaPoly> = cells
                .par_iter()
                .map(|&(n, k)| match choice {
                    AlgoChoice::One(al) => compute_theta(&grid.seq, n, k, al),
                    _ => theta_bruteforce(&grid.seq, n, k, &Refinement::ScalarT, budget)?
                        .into_poly()
                        .ok_or_else(|| invalid("expected a polynomial")),
                })
                .collect::<Result<_>>()?;
            for (&(n, k), p) in cells.iter().zip(&results) {
                coeff_rows(&mut table, n, k, p.poly(), &[], &[]);
            }
            Ok(table)
        }
    }
}

fn cmd_pmf(a: &CellArgs) -> Result<Table> {
    let grid = Grid::load(a)?;
    let cells = grid.cells();
    let laws = cells.par_iter().map(|&(n, k)| s_pmf(&grid.seq, n, k)).collect::<Result<Vec<_>>>()?;
    let mut table = Table::new("pmf", grid.config(), vec!["n", "k", "j", "exact", "float"]);
    for (&(n, k), law) in cells.iter().zip(&laws) {
        for (j, p) in law.iter() {
            table.push(vec![n.into(), k.into(), j.into(), p.clone().into(), to_f64(p).into()]);
        }
    }
    Ok(table)
}

fn cmd_moments(a: &MomentArgs) -> Result<Table> {
    let grid = Grid::load(&a.cell)?;
    let cells = grid.cells();
    let reports = cells.par_iter().map(|&(n, k)| moments(&grid.seq, n, k, a.smax)).collect::<Result<Vec<_>>>()?;
    let mut config = grid.config();
    config["smax"] = Value::from(a.smax);
    let mut table = Table::new("moments", config, vec!["n", "k", "quantity", "exact", "float"]);
    for (&(n, k), r) in cells.iter().zip(&reports) {
        let mut push = |name: String, v: &Rational| {
            table.push(vec![n.into(), k.into(), name.into(), v.clone().into(), to_f64(v).into()]);
        };
        push("mean".into(), &r.mean);
        push("variance".into(), &r.variance);
        for (s, fm) in r.factorial_moments.iter().enumerate() {
            push(format!("fm_{}", s + 1), fm);
        }
    }
    Ok(table)
}

fn cmd_verify(a: &VerifyArgs, budget: u64) -> Result<(Table, bool)> {
    let suite: Suite = a.suite.parse()?;
    let cfg = VerifyConfig { max_n: a.max_n, max_k: a.max_k, budget };
    let checks = run_suite(suite, &cfg);
    let config = json!({"suite": suite.name(), "max_n": a.max_n, "max_k": a.max_k});
    let mut table = Table::new("verify", config, vec!["check", "status", "detail"]);
    let ok = checks.iter().all(|c| c.passed);
    for c in checks {
        table.push(vec![c.name.into(), (if c.passed { "PASS" } else { "FAIL" }).into(), c.detail.into()]);
    }
    Ok((table, ok))
}

fn cmd_limits(a: &LimitArgs) -> Result<Table> {
    let regimes: Vec<LimitRegime> = if a.regime == "all" {
        if a.grid.is_some() {
            return Err(invalid("--grid needs a single --regime"));
        }
        LimitRegime::ALL.to_vec()
    } else {
        vec![a.regime.parse()?]
    };
    let mut rows: Vec<LimitRow> = Vec::new();
    for r in &regimes {
        let grid = match &a.grid {
            Some(g) => parse_range(g)?,
            None => r.default_grid(),
        };
        rows.extend(limit_scan(*r, &grid)?);
    }
    let config = json!({"regime": a.regime, "grid": a.grid});
    let mut table = Table::new("limits", config, vec!["regime", "param", "value", "distance"]);
    for row in rows {
        table.push(vec![row.regime.name().into(), row.param.into(), row.value.into(), row.distance.into()]);
    }
    Ok(table)
}

fn cmd_partitions(a: &PartitionArgs) -> Result<Table> {
    if a.n == 0 {
        return Err(invalid("--n must be >= 1"));
    }
    let config = json!({"n": a.n, "max": a.max});
    let mut table = Table::new("partitions", config, vec!["power", "count"]);
    for (p, c) in partition_series(a.n, a.max).into_iter().enumerate() {
        table.push(vec![p.into(), Cell::from(Rational::from_integer(c.into()))]);
    }
    Ok(table)
}

/// Re-reads a JSON `theta` table into one `ThetaPoly` per `(n, k)` cell,
/// taking the first algorithm listed when several are present.
pub fn theta_from_json(document: &str) -> Result<Vec<ThetaPoly>> {
    let bad = |m: &str| invalid(format!("theta table: {m}"));
    let v: Value = serde_json::from_str(document).map_err(|e| bad(&e.to_string()))?;
    if v["command"] != "theta" {
        return Err(bad("command is not theta"));
    }
    let seq = from_json(&v["config"]["weights"])?;
    let rows = v["rows"].as_array().ok_or_else(|| bad("missing rows"))?;
    let mut cells: BTreeMap<(usize, usize), (Option<String>, Vec<Rational>)> = BTreeMap::new();
    let mut order: Vec<(usize, usize)> = Vec::new();
    for row in rows {
        let field = |name: &str| row[name].as_u64().map(|x| x as usize).ok_or_else(|| bad(name));
        let (n, k, i) = (field("n")?, field("k")?, field("coeff_index")?);
        let value = parse_rational(row["value"].as_str().ok_or_else(|| bad("value"))?)?;
        let algo = row["algo"].as_str().map(str::to_string);
        let entry = cells.entry((n, k)).or_insert_with(|| {
            order.push((n, k));
            (algo.clone(), Vec::new())
        });
        if entry.0 != algo {
            continue;
        }
        if entry.1.len() <= i {
            entry.1.resize(i + 1, Rational::from_integer(0.into()));
        }
        entry.1[i] = value;
    }
    Ok(order
        .into_iter()
        .map(|(n, k)| {
            let coeffs = cells.remove(&(n, k)).map(|c| c.1).unwrap_or_default();
            ThetaPoly::new(&seq, n, k, Poly::from_coeffs(coeffs))
        })
        .collect())
}

fn export_table(t: &ExportTable, budget: u64) -> Result<Table> {
    match t {
        ExportTable::Theta(a) => cmd_theta(a, budget),
        ExportTable::Pmf(a) => cmd_pmf(a),
        ExportTable::Moments(a) => cmd_moments(a),
        ExportTable::Limits(a) => cmd_limits(a),
        ExportTable::Partitions(a) => cmd_partitions(a),
    }
}

/// Outcome of a successful parse: the text to print and the exit code.
fn execute(cli: &Cli) -> std::result::Result<(String, i32), Error> {
    let budget = resolve_budget(cli.budget)?;
    let precision = cli.precision as usize;
    let (table, code) = match &cli.command {
        Command::Theta(a) => (cmd_theta(a, budget)?, EXIT_OK),
        Command::Pmf(a) => (cmd_pmf(a)?, EXIT_OK),
        Command::Moments(a) => (cmd_moments(a)?, EXIT_OK),
        Command::Verify(a) => {
            let (t, ok) = cmd_verify(a, budget)?;
            (t, if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Limits(a) => (cmd_limits(a)?, EXIT_OK),
        Command::Partitions(a) => (cmd_partitions(a)?, EXIT_OK),
        Command::Export(a) => {
            let text = export_table(&a.table, budget)?.render(cli.format, precision);
            fs::write(&a.out, text).map_err(|e| invalid(format!("cannot write {}: {e}", a.out.display())))?;
            return Ok((format!("wrote {}\n", a.out.display()), EXIT_OK));
        }
    };
    Ok((table.render(cli.format, precision), code))
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
