//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the mathematics fails (reducible input,
//! unsupported degree, ...), 2 for malformed input or usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::classifier::{classify_scaled, ClassifyOptions, DEFAULT_EFFORT};
use crate::cyclotomic::{gaussian_period, minimal_polynomial};
use crate::error::{Error, Result};
use crate::numtheory::primitive_root;
use crate::parse::parse_polynomial;
use crate::realize::{realize_cyclic_nonreal, realize_frobenius, realize_full_frobenius, realization_consistency_check};
use crate::reduction::{build_group_table, GroupCycleTable, DEFAULT_PRIME_BUDGET};
use crate::sturm::count_real_roots;

#[derive(Parser, Debug)]
#[command(name = "galprime", version, about = "Galois groups of prime-degree polynomials over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Determine the Galois group of an irreducible polynomial of prime degree.
    Classify(ClassifyArgs),
    /// Build a polynomial with a prescribed Galois group.
    Realize(RealizeArgs),
    /// Gaussian period of conductor q and its minimal polynomial.
    Periods(PeriodsArgs),
    /// Cycle types of the transitive groups of prime degree p.
    Table(TableArgs),
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// Polynomial in x, e.g. "x^5 - 4x + 2".
    poly: String,
    /// Number of usable primes sampled when the fast path does not apply.
    #[arg(long, default_value_t = DEFAULT_PRIME_BUDGET)]
    budget: usize,
    /// Shifts and primes tried when certifying irreducibility.
    #[arg(long, default_value_t = DEFAULT_EFFORT)]
    effort: usize,
    /// Trust that the polynomial is irreducible.
    #[arg(long)]
    assert_irreducible: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct RealizeArgs {
    /// Frobenius group of degree P (order P(P-1) unless --n is given).
    #[arg(long, required_unless_present = "cyclic", conflicts_with = "cyclic")]
    p: Option<usize>,
    /// Order of the Frobenius complement, an even divisor of P - 1.
    #[arg(long, requires = "p")]
    n: Option<usize>,
    /// Non-real cyclic field of even degree N.
    #[arg(long)]
    cyclic: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct PeriodsArgs {
    /// Prime conductor.
    #[arg(long)]
    q: u64,
    /// Degree of the period, a divisor of Q - 1.
    #[arg(long)]
    n: u64,
    /// Primitive root (smallest one by default).
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Prime degree.
    #[arg(long, required_unless_present = "import")]
    p: Option<usize>,
    /// Write the table to FILE.
    #[arg(long, value_name = "FILE", conflicts_with = "import")]
    export: Option<PathBuf>,
    /// Read the table from FILE instead of computing it.
    #[arg(long, value_name = "FILE")]
    import: Option<PathBuf>,
}

/// Runs the command line `args` (program name first) and returns the exit
/// code with the text to print.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(out) => (0, out),
        Err(e) => (if e.is_usage() { 2 } else { 1 }, format!("error: {e}\n")),
    }
}

fn dispatch(cmd: Command) -> Result<String> {
    match cmd {
        Command::Classify(a) => classify_cmd(a),
        Command::Realize(a) => realize_cmd(a),
        Command::Periods(a) => periods_cmd(a),
        Command::Table(a) => table_cmd(a),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn classify_cmd(a: ClassifyArgs) -> Result<String> {
    let expr = parse_polynomial(&a.poly)?;
    let opts = ClassifyOptions {
        prime_budget: a.budget,
        effort: a.effort,
        assert_irreducible: a.assert_irreducible,
        ..ClassifyOptions::default()
    };
    let report = classify_scaled(&expr.source, &expr.polynomial, expr.scale, &opts)?;
    Ok(if a.json { pretty(&report.to_json()) } else { report.to_text() })
}

fn realize_cmd(a: RealizeArgs) -> Result<String> {
    let res = match (a.p, a.n, a.cyclic) {
        (Some(p), Some(n), _) => realize_frobenius(p, n)?,
        (Some(p), None, _) => realize_full_frobenius(p)?,
        (None, _, Some(n)) => realize_cyclic_nonreal(n)?,
        _ => unreachable!("clap enforces one of --p / --cyclic"),
    };
    let check = realization_consistency_check(&res);
    if a.json {
        let mut v = res.to_json();
        v["consistent"] = check.passed.into();
        Ok(pretty(&v))
    } else {
        Ok(format!("{}{check}\n", res.to_text()))
    }
}

fn periods_cmd(a: PeriodsArgs) -> Result<String> {
    let m = match a.m {
        Some(m) => m,
        None => primitive_root(a.q)?,
    };
    let period = gaussian_period(a.q, a.n, m)?;
    let poly = minimal_polynomial(&period, a.n, m)?;
    let real_roots = count_real_roots(&poly)?;
    let coords: Vec<String> = period.coords().iter().map(ToString::to_string).collect();
    if a.json {
        return Ok(pretty(&serde_json::json!({
            "q": a.q,
            "n": a.n,
            "primitive_root": m,
            "coordinates": coords,
            "period": period.to_string(),
            "is_real": period.is_real(),
            "minimal_polynomial": poly.to_string(),
            "real_roots": real_roots,
        })));
    }
    let mut s = String::new();
    writeln!(s, "q: {}\nn: {}\nprimitive_root: {m}", a.q, a.n).unwrap();
    writeln!(s, "coordinates: [{}]", coords.join(", ")).unwrap();
    writeln!(s, "period: {period}").unwrap();
    writeln!(s, "is_real: {}", period.is_real()).unwrap();
    writeln!(s, "minimal_polynomial: {poly}").unwrap();
    writeln!(s, "real_roots: {real_roots}").unwrap();
    Ok(s)
}

fn render_table(t: &GroupCycleTable) -> String {
    let width = t.entries.iter().map(|e| e.group.to_string().len()).max().unwrap_or(0);
    let mut s = format!("degree {}\n", t.p);
    for e in &t.entries {
        let types: Vec<String> = e.types.iter().rev().map(ToString::to_string).collect();
        writeln!(
            s,
            "{:<width$}  order {:<10} in_ap {}  types: {}",
            e.group.to_string(),
            e.order,
            e.in_ap as u8,
            types.join(", ")
        )
        .unwrap();
    }
    s
}

fn table_cmd(a: TableArgs) -> Result<String> {
    let table = match &a.import {
        Some(path) => {
            let t = GroupCycleTable::read_file(path)?;
            if let Some(p) = a.p.filter(|&p| p != t.p) {
                return Err(Error::TableFormat {
                    line: 1,
                    msg: format!("file holds degree {}, not {p}", t.p),
                });
            }
            t
        }
        None => build_group_table(a.p.expect("clap requires --p"))?,
    };
    let mut out = render_table(&table);
    if let Some(path) = &a.export {
        table.write_file(path)?;
        writeln!(out, "exported to {}", path.display()).unwrap();
    }
    Ok(out)
}
