//! Batch front door: compute tables, run identity suites, emit matrix and
//! orbit artifacts, manage the dlog cache.
//!
//! Exit codes: 0 on success (and all suites PASS), 2 when any requested
//! suite is FAIL or MIXED, 64 on usage errors.

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclolab::cache;
use cyclolab::char_sums::{dickson_hurwitz_table, full_table, CyclotomyContext};
use cyclolab::field::{find_generator, make_field, FieldElement};
use cyclolab::matrix::{build_orbit_table, roots_of_charpoly, IntMatrix, Parity};
use cyclolab::report::Status;
use cyclolab::verify::{run_suite, FieldParams, Lab, SuiteId, ALL_SUITES};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

const EXIT_VERIFY_FAILED: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "cyclolab",
    version,
    about = "Exact cyclotomic-number computations and identity verification over finite fields"
)]
struct Cli {
    /// Directory for dlog-table cache files (falls back to $CYCLOLAB_CACHE).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Characteristic p (odd prime).
    #[arg(long)]
    p: u64,
    /// Extension degree r.
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// The odd prime l; tables live at order 2 l^2 by default.
    #[arg(long)]
    ell: u32,
    /// Generator override: comma-separated coefficients, e.g. "13" or "2,1".
    #[arg(long = "gen")]
    generator: Option<String>,
    /// Defining-polynomial override, ascending coefficients, e.g. "1,1,1".
    #[arg(long)]
    poly: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKindArg {
    Cyclotomic,
    Dh,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a cyclotomic-number or Dickson-Hurwitz table.
    Table {
        #[command(flatten)]
        field: FieldArgs,
        /// Order e (a divisor of q-1); defaults to 2 l^2.
        #[arg(long)]
        order: Option<u32>,
        #[arg(long, value_enum, default_value = "cyclotomic")]
        kind: TableKindArg,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// Emit one Jacobi sum J_e(i, j) in canonical form.
    Jacobi {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        i: i64,
        #[arg(long)]
        j: i64,
    },
    /// Emit the order-2l^2 cyclotomic matrix, optionally with det, char
    /// poly and eigenvalues.
    Matrix {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        invariants: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// Emit the table of canonical representative pairs and the class count.
    Orbits {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_enum)]
        parity: ParityArg,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// Run identity suites and emit verification reports.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        /// Suite id (e.g. CN-SUM, THM2-TRACE) or "all".
        #[arg(long)]
        suite: String,
    },
}

fn parse_coeffs(s: &str) -> anyhow::Result<Vec<u64>> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().context("bad coefficient list"))
        .collect()
}

fn field_params(args: &FieldArgs) -> anyhow::Result<FieldParams> {
    let mut fp = FieldParams::new(args.p, args.r, args.ell);
    if let Some(g) = &args.generator {
        fp.generator = Some(parse_coeffs(g)?);
    }
    if let Some(p) = &args.poly {
        fp.poly = Some(parse_coeffs(p)?);
    }
    Ok(fp)
}

/// Field + dlog table with generator/poly overrides and caching.
fn build_context(
    args: &FieldArgs,
    order: u32,
    cache_dir: Option<&std::path::Path>,
) -> anyhow::Result<CyclotomyContext> {
    let fp = field_params(args)?;
    let field = Arc::new(make_field(fp.p, fp.r, fp.poly.clone())?);
    let gamma = match &fp.generator {
        Some(c) => FieldElement(c.clone()),
        None => find_generator(&field),
    };
    let dlog = Arc::new(cache::dlog_table_cached(&field, &gamma, cache_dir)?);
    Ok(CyclotomyContext::new(field, dlog, order)?)
}

fn csv_writer() -> csv::Writer<std::io::Stdout> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(std::io::stdout())
}

fn emit_json(value: &serde_json::Value) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let cache_dir = cache::resolve_dir(cli.cache_dir.as_deref());
    let cache_dir = cache_dir.as_deref();
    match cli.command {
        Command::Table {
            field,
            order,
            kind,
            format,
        } => {
            let e = order.unwrap_or(2 * field.ell * field.ell);
            let ctx = build_context(&field, e, cache_dir)?;
            let table = full_table(&ctx);
            let table = match kind {
                TableKindArg::Cyclotomic => table,
                TableKindArg::Dh => dickson_hurwitz_table(&table),
            };
            match format {
                OutFormat::Json => {
                    let rows: Vec<Vec<i64>> = (0..e as i64)
                        .map(|a| (0..e as i64).map(|b| table.get(a, b)).collect())
                        .collect();
                    emit_json(&json!({
                        "schema": 1,
                        "kind": table.kind,
                        "p": ctx.field.p,
                        "r": ctx.field.r,
                        "q": ctx.field.q,
                        "ell": field.ell,
                        "order": e,
                        "k": ctx.k,
                        "provenance": table.provenance,
                        "values": rows,
                    }))?;
                }
                OutFormat::Csv => {
                    let mut w = csv_writer();
                    for a in 0..e as i64 {
                        w.write_record((0..e as i64).map(|b| table.get(a, b).to_string()))?;
                    }
                    w.flush()?;
                }
            }
            Ok(0)
        }
        Command::Jacobi { field, order, i, j } => {
            let ctx = build_context(&field, order, cache_dir)?;
            let js = cyclolab::char_sums::jacobi_sum(&ctx, i, j);
            emit_json(&json!({
                "schema": 1,
                "p": ctx.field.p,
                "r": ctx.field.r,
                "q": ctx.field.q,
                "order": order,
                "generator": ctx.dlog.generator.display(),
                "i": i.rem_euclid(order as i64),
                "j": j.rem_euclid(order as i64),
                "jacobi": js,
            }))?;
            Ok(0)
        }
        Command::Matrix {
            field,
            invariants,
            format,
        } => {
            let e = 2 * field.ell * field.ell;
            let ctx = build_context(&field, e, cache_dir)?;
            let table = full_table(&ctx);
            let m = IntMatrix::from_sum_table(&table);
            match format {
                OutFormat::Csv => {
                    if invariants {
                        bail!("--invariants requires --format json");
                    }
                    let mut w = csv_writer();
                    for i in 0..m.n {
                        w.write_record((0..m.n).map(|j| m.get(i, j).to_string()))?;
                    }
                    w.flush()?;
                }
                OutFormat::Json => {
                    let rows: Vec<Vec<String>> = (0..m.n)
                        .map(|i| (0..m.n).map(|j| m.get(i, j).to_string()).collect())
                        .collect();
                    let mut doc = json!({
                        "schema": 1,
                        "p": ctx.field.p,
                        "r": ctx.field.r,
                        "q": ctx.field.q,
                        "ell": field.ell,
                        "order": e,
                        "generator": ctx.dlog.generator.display(),
                        "matrix": rows,
                    });
                    if invariants {
                        let cp = m.char_poly();
                        let roots = roots_of_charpoly(&cp, 1e-8)?;
                        doc["det"] = json!(m.determinant().to_string());
                        doc["char_poly"] =
                            json!(cp.iter().map(|c| c.to_string()).collect::<Vec<_>>());
                        doc["eigenvalues"] = json!(roots
                            .iter()
                            .map(|z| json!({"re": z.re, "im": z.im}))
                            .collect::<Vec<_>>());
                    }
                    emit_json(&doc)?;
                }
            }
            Ok(0)
        }
        Command::Orbits {
            ell,
            parity,
            format,
        } => {
            let e = 2 * ell * ell;
            let parity = match parity {
                ParityArg::Odd => Parity::KOdd,
                ParityArg::Even => Parity::KEven,
            };
            let t = build_orbit_table(e, parity);
            match format {
                OutFormat::Json => {
                    let rows: Vec<Vec<[i64; 2]>> = (0..e as i64)
                        .map(|a| {
                            (0..e as i64)
                                .map(|b| {
                                    let (x, y) = t.get(a, b);
                                    [x, y]
                                })
                                .collect()
                        })
                        .collect();
                    emit_json(&json!({
                        "schema": 1,
                        "e": e,
                        "parity": t.parity,
                        "class_count": t.class_count,
                        "rep": rows,
                    }))?;
                }
                OutFormat::Csv => {
                    // the printed-table layout: one "(a,b)" cell per entry
                    let mut w = csv_writer();
                    for a in 0..e as i64 {
                        w.write_record((0..e as i64).map(|b| {
                            let (x, y) = t.get(a, b);
                            format!("({x},{y})")
                        }))?;
                    }
                    w.flush()?;
                }
            }
            Ok(0)
        }
        Command::Verify { field, suite } => {
            let fp = field_params(&field)?;
            let suites: Vec<SuiteId> = if suite.eq_ignore_ascii_case("all") {
                ALL_SUITES.to_vec()
            } else {
                match SuiteId::from_str(&suite) {
                    Ok(s) => vec![s],
                    Err(msg) => {
                        eprintln!("error: {msg}");
                        return Ok(EXIT_USAGE);
                    }
                }
            };
            let lab = Lab::build_with_cache(&fp, cache_dir)?;
            let mut reports = Vec::new();
            let mut all_pass = true;
            for s in suites {
                let rep = run_suite(&lab, s)?;
                eprintln!(
                    "{:<12} {:<6} {} instances, {} failures",
                    rep.identity_id,
                    format!("{:?}", rep.status).to_uppercase(),
                    rep.instances_checked,
                    rep.failure_count
                );
                all_pass &= rep.status == Status::Pass;
                reports.push(rep);
            }
            emit_json(&serde_json::to_value(&reports)?)?;
            Ok(if all_pass { 0 } else { EXIT_VERIFY_FAILED })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version requests are not usage errors
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
