//! Command-line front end. Data goes to `out`, diagnostics to `err`.
//!
//! Exit status: 0 on success, 1 when a checked identity fails, 2 on usage
//! errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::identities::{self, IdentityError, IdentityReport, VerifyOptions, DEFAULT_SEED};
use crate::par::Exec;
use crate::partitions;

pub const ENUMERATION_CEILING: u32 = 25;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "stpairs", version, about = "Smallest-part pair counts, pair cranks and q-series identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    /// Print the identity registry and exit.
    #[arg(long, global = true)]
    pub list: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized specializations.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Run everything on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// sT(n) for 1 <= n <= max-n.
    StTable {
        #[arg(long, default_value_t = 20)]
        max_n: u32,
    },
    /// Crank counts C(m,n), or C(k,t,n) with --modulus t.
    CrankTable {
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        #[arg(long)]
        modulus: Option<u32>,
    },
    /// Check one registered identity.
    Verify {
        #[arg(long)]
        identity: String,
        /// Truncation order; defaults to the check's own.
        #[arg(long)]
        order: Option<i64>,
    },
    /// Check every registered identity.
    VerifyAll {
        #[arg(long)]
        order: Option<i64>,
    },
    /// List the pairs of each size up to max-n with their cranks.
    Enumerate {
        #[arg(long, default_value_t = 5)]
        max_n: u32,
    },
}

struct Usage(String);

impl From<IdentityError> for Usage {
    fn from(e: IdentityError) -> Self {
        Usage(e.to_string())
    }
}

impl From<partitions::PartitionError> for Usage {
    fn from(e: partitions::PartitionError) -> Self {
        Usage(e.to_string())
    }
}

impl From<std::io::Error> for Usage {
    fn from(e: std::io::Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Usage {
    fn from(e: serde_json::Error) -> Self {
        Usage(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Usage> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::auto() };
    if cli.list {
        list(cli.format, out)?;
        return Ok(0);
    }
    let Some(cmd) = &cli.command else {
        return Err(Usage("no command given; try --help".into()));
    };
    match cmd {
        Command::StTable { max_n } => st_table(*max_n, cli.format, exec, out),
        Command::CrankTable { max_n, modulus } => crank_table(*max_n, *modulus, cli.format, exec, out),
        Command::Enumerate { max_n } => enumerate(*max_n, cli.format, out),
        Command::Verify { identity, order } => {
            let opts = VerifyOptions {
                order: *order,
                seed: cli.seed,
                exec,
                perturb: None,
            };
            let report = match identities::verify_with(identity, &opts) {
                Ok(r) => r,
                Err(e @ (IdentityError::Unknown(_) | IdentityError::OrderTooSmall { .. })) => return Err(e.into()),
                Err(e) => {
                    writeln!(err, "error: {identity}: {e}")?;
                    return Ok(1);
                }
            };
            match cli.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
                Format::Csv => {
                    writeln!(out, "name,order,passed,first_bad_exponent")?;
                    writeln!(out, "{}", csv_row(&report))?;
                }
                Format::Text => writeln!(out, "{}", text_row(&report))?,
            }
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::VerifyAll { order } => {
            let opts = VerifyOptions {
                order: *order,
                seed: cli.seed,
                exec,
                perturb: None,
            };
            verify_all(&opts, cli.format, out, err)
        }
    }
}

fn list(format: Format, out: &mut dyn Write) -> Result<(), Usage> {
    let checks = identities::list_checks();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&checks)?)?,
        Format::Csv => {
            writeln!(out, "name,default_order,seeded")?;
            for c in &checks {
                writeln!(out, "{},{},{}", c.name, c.default_order, c.seeded)?;
            }
        }
        Format::Text => {
            for c in &checks {
                writeln!(out, "{:<22} {:>4}  {}", c.name, c.default_order, c.description)?;
            }
        }
    }
    Ok(())
}

fn st_table(max_n: u32, format: Format, exec: Exec, out: &mut dyn Write) -> Result<i32, Usage> {
    let st = partitions::st_series(max_n as i64, exec)?;
    let rows: Vec<(u32, String)> = (1..=max_n)
        .map(|n| Ok((n, st.coeff(n as i64).map_err(|e| Usage(e.to_string()))?.to_string())))
        .collect::<Result<_, Usage>>()?;
    match format {
        Format::Csv => {
            writeln!(out, "n,sT")?;
            for (n, c) in &rows {
                writeln!(out, "{n},{c}")?;
            }
        }
        Format::Json => {
            let v: Vec<Value> = rows.iter().map(|(n, c)| json!({"n": n, "sT": big(c)})).collect();
            writeln!(out, "{}", serde_json::to_string(&v)?)?;
        }
        Format::Text => {
            writeln!(out, "{:>4}  sT(n)", "n")?;
            for (n, c) in &rows {
                writeln!(out, "{n:>4}  {c}")?;
            }
        }
    }
    Ok(0)
}

// Integers stay exact in JSON output.
fn big(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|_| Value::String(s.to_string()))
}

fn crank_table(max_n: u32, modulus: Option<u32>, format: Format, exec: Exec, out: &mut dyn Write) -> Result<i32, Usage> {
    let st = partitions::st_series_z_crankform(max_n as i64, exec)?;
    let table = partitions::CrankTable::from_series(&st, max_n)?;
    let mut rows: Vec<(u32, i64, u64)> = Vec::new();
    for n in 1..=max_n {
        match modulus {
            Some(t) => {
                for (k, c) in partitions::crank_mod_counts(&table, t, n)?.into_iter().enumerate() {
                    rows.push((n, k as i64, c));
                }
            }
            None => rows.extend(table.column(n).into_iter().map(|(m, c)| (n, m, c))),
        }
    }
    let col = if modulus.is_some() { "k" } else { "m" };
    match format {
        Format::Csv => {
            writeln!(out, "n,{col},C")?;
            for (n, m, c) in &rows {
                writeln!(out, "{n},{m},{c}")?;
            }
        }
        Format::Json => {
            let v: Vec<Value> = rows.iter().map(|(n, m, c)| json!({"n": n, col: m, "C": c})).collect();
            writeln!(out, "{}", serde_json::to_string(&v)?)?;
        }
        Format::Text => {
            for n in 1..=max_n {
                let cells: Vec<String> = rows
                    .iter()
                    .filter(|r| r.0 == n)
                    .map(|(_, m, c)| format!("{col}={m}:{c}"))
                    .collect();
                writeln!(out, "n={n:<3} {}", cells.join(" "))?;
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct PairRow {
    n: u32,
    pi1: String,
    pi2: String,
    paircrank: i64,
}

fn enumerate(max_n: u32, format: Format, out: &mut dyn Write) -> Result<i32, Usage> {
    if max_n > ENUMERATION_CEILING {
        return Err(Usage(format!(
            "enumeration stops at n = {ENUMERATION_CEILING}; use st-table or crank-table beyond that"
        )));
    }
    let mut rows = Vec::new();
    for n in 1..=max_n {
        for p in partitions::enumerate_st_pairs(n) {
            rows.push(PairRow {
                n,
                pi1: p.pi1.to_string(),
                pi2: p.pi2.to_string(),
                paircrank: p.paircrank()?,
            });
        }
    }
    match format {
        Format::Csv => {
            writeln!(out, "n,pi1,pi2,paircrank")?;
            for r in &rows {
                writeln!(out, "{},{},{},{}", r.n, r.pi1, r.pi2, r.paircrank)?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string(&rows)?)?,
        Format::Text => {
            for r in &rows {
                writeln!(out, "{:>3}  ({}, {})  crank {}", r.n, r.pi1, r.pi2, r.paircrank)?;
            }
        }
    }
    Ok(0)
}

fn text_row(r: &IdentityReport) -> String {
    let mut s = format!("{} {} order={}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.order);
    if let Some(seed) = r.seed {
        s.push_str(&format!(" seed={seed}"));
    }
    if let (Some(e), Some(d)) = (r.first_bad_exponent, &r.discrepancy) {
        s.push_str(&format!(" first_bad=q^{e} discrepancy={d}"));
    }
    s
}

fn csv_row(r: &IdentityReport) -> String {
    let bad = r.first_bad_exponent.map(|e| e.to_string()).unwrap_or_default();
    format!("{},{},{},{}", r.name, r.order, r.passed, bad)
}

fn verify_all(opts: &VerifyOptions, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Usage> {
    let results = identities::verify_all(opts);
    let mut code = 0;
    let mut reports = Vec::new();
    for (name, r) in results {
        match r {
            Ok(r) => {
                if !r.passed {
                    code = 1;
                }
                reports.push(r);
            }
            Err(e) => {
                writeln!(err, "error: {name}: {e}")?;
                code = 1;
            }
        }
    }
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&reports)?)?,
        Format::Csv => {
            writeln!(out, "name,order,passed,first_bad_exponent")?;
            for r in &reports {
                writeln!(out, "{}", csv_row(r))?;
            }
        }
        Format::Text => {
            for r in &reports {
                writeln!(out, "{}", text_row(r))?;
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            writeln!(out, "{passed}/{} passed", identities::list_checks().len())?;
        }
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("stpairs").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn st_table_csv() {
        let (code, out, _) = run_str(&["st-table", "--max-n", "5", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().last(), Some("5,15"));
        let (_, out, _) = run_str(&["st-table", "--max-n", "0", "--format", "csv"]);
        assert_eq!(out, "n,sT\n");
    }

    #[test]
    fn verify_json() {
        let (code, out, _) = run_str(&["verify", "--identity", "thm2_component_A2", "--order", "60", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"name":"thm2_component_A2","order":60,"passed":true}"#);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["verify", "--identity", "nope"]).0, 2);
        assert_eq!(run_str(&["st-table", "--max-n", "x"]).0, 2);
        assert_eq!(run_str(&["enumerate", "--max-n", "26"]).0, 2);
        assert_eq!(run_str(&[]).0, 2);
    }

    #[test]
    fn crank_mod_table() {
        let (code, out, _) = run_str(&["crank-table", "--max-n", "5", "--modulus", "3", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("n,k,C\n"));
        // sT(5) = 15 splits 5/5/5
        assert!(out.contains("5,0,5\n5,1,5\n5,2,5\n"));
    }
}
