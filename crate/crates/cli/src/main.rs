//! `horadam`: terms, tables, identity verification and benchmarks for Horadam
//! quaternion sequences, all in exact arithmetic.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use horadam_core::bench::{bench_fib_lucas, DEFAULT_BENCH_NS};
use horadam_core::campaign::{run_campaign, CampaignResult, IntRange, ShowPolicy, VerifyConfig};
use horadam_core::identities::{params_json, IdentityReport};
use horadam_core::{HoradamParams, HoradamQuatContext, IdentityId, Rational};

const USAGE_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "horadam",
    version,
    about = "Exact Horadam quaternion sequences and identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print Q_{w,n} (or W_n with --scalar).
    Term(TermArgs),
    /// Emit (n, W_n, Q_{w,n}) rows over an index range.
    Table(TableArgs),
    /// Check identities over a parameter grid; exit 1 on any failure.
    Verify(VerifyArgs),
    /// Time naive recurrence against fast doubling.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Show {
    Auto,
    All,
    Failed,
    None,
}

#[derive(Args, Debug)]
struct SeqArgs {
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    p: Rational,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    q: Rational,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    a: Rational,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    b: Rational,
}

impl SeqArgs {
    fn params(&self) -> Result<HoradamParams, String> {
        HoradamParams::new(
            self.p.clone(),
            self.q.clone(),
            self.a.clone(),
            self.b.clone(),
        )
        .map_err(|e| e.to_string())
    }
}

#[derive(Args, Debug)]
struct TermArgs {
    #[command(flatten)]
    seq: SeqArgs,
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    /// Print the scalar W_n instead of the quaternion.
    #[arg(long)]
    scalar: bool,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    seq: SeqArgs,
    /// Index range "lo..hi" (inclusive).
    #[arg(long, allow_hyphen_values = true)]
    idx: IntRange,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check every identity (the default when no --id is given).
    #[arg(long)]
    all: bool,
    /// Identity to check; repeatable.
    #[arg(long = "id")]
    ids: Vec<String>,
    #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
    p: IntRange,
    #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
    q: IntRange,
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    a: IntRange,
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    b: IntRange,
    #[arg(long, default_value = "-6..12", allow_hyphen_values = true)]
    idx: IntRange,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Worker threads (default: one per core).
    #[arg(long)]
    jobs: Option<usize>,
    /// Which individual reports to print; auto prints all of them for small runs.
    #[arg(long, value_enum, default_value_t = Show::Auto)]
    show: Show,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    p: Rational,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    q: Rational,
    /// Indices to time; repeatable. Defaults to 2^10, 2^14, 2^18.
    #[arg(long = "n")]
    ns: Vec<u64>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Term(args) => cmd_term(&args),
        Command::Table(args) => cmd_table(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Bench(args) => cmd_bench(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn cmd_term(args: &TermArgs) -> Result<u8, CliError> {
    let params = args.seq.params().map_err(CliError::Usage)?;
    let ctx = HoradamQuatContext::with_window(params.clone(), args.n, args.n + 3);
    let mut out = io::stdout().lock();
    if args.scalar {
        let w = ctx.w(args.n);
        match args.format {
            Format::Human => writeln!(out, "{w}")?,
            Format::Json => writeln!(
                out,
                "{}",
                json!({"n": args.n, "params": params_json(&params), "W": w.to_string()})
            )?,
            Format::Csv => {
                let mut wtr = csv::Writer::from_writer(out);
                wtr.write_record(["n", "W"])?;
                wtr.write_record([args.n.to_string(), w.to_string()])?;
                wtr.flush()?;
            }
        }
    } else {
        let quat = ctx.qw_term(args.n);
        match args.format {
            Format::Human => writeln!(out, "{quat}")?,
            Format::Json => {
                let parts: Vec<String> = quat.components().iter().map(|c| c.to_string()).collect();
                writeln!(
                    out,
                    "{}",
                    json!({"n": args.n, "params": params_json(&params), "Q": parts})
                )?
            }
            Format::Csv => {
                let mut wtr = csv::Writer::from_writer(out);
                wtr.write_record(["n", "Q", "w", "x", "y", "z"])?;
                let mut row = vec![args.n.to_string(), quat.to_string()];
                row.extend(quat.components().iter().map(|c| c.to_string()));
                wtr.write_record(row)?;
                wtr.flush()?;
            }
        }
    }
    Ok(0)
}

fn cmd_table(args: &TableArgs) -> Result<u8, CliError> {
    let params = args.seq.params().map_err(CliError::Usage)?;
    let ctx = HoradamQuatContext::with_window(params.clone(), args.idx.lo, args.idx.hi + 3);
    let mut out = io::stdout().lock();
    match args.format {
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(out);
            wtr.write_record(["n", "W", "Q", "w", "x", "y", "z"])?;
            for n in args.idx.iter() {
                let quat = ctx.qw_term(n);
                let mut row = vec![n.to_string(), ctx.w(n).to_string(), quat.to_string()];
                row.extend(quat.components().iter().map(|c| c.to_string()));
                wtr.write_record(row)?;
            }
            wtr.flush()?;
        }
        Format::Json => {
            let rows: Vec<_> = args
                .idx
                .iter()
                .map(|n| {
                    let quat = ctx.qw_term(n);
                    let parts: Vec<String> =
                        quat.components().iter().map(|c| c.to_string()).collect();
                    json!({"n": n, "W": ctx.w(n).to_string(), "Q": parts})
                })
                .collect();
            writeln!(
                out,
                "{}",
                json!({"params": params_json(&params), "rows": rows})
            )?;
        }
        Format::Human => {
            for n in args.idx.iter() {
                writeln!(out, "{n}\t{}\t{}", ctx.w(n), ctx.qw_term(n))?;
            }
        }
    }
    Ok(0)
}

fn verify_config(args: &VerifyArgs) -> Result<VerifyConfig, CliError> {
    let identities = if args.all || args.ids.is_empty() {
        IdentityId::ALL.to_vec()
    } else {
        args.ids
            .iter()
            .map(|s| s.parse::<IdentityId>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(CliError::Usage)?
    };
    let config = VerifyConfig {
        identities,
        p: args.p,
        q: args.q,
        a: args.a,
        b: args.b,
        idx: args.idx,
        jobs: args.jobs,
        show: match args.show {
            Show::Auto => ShowPolicy::Auto,
            Show::All => ShowPolicy::All,
            Show::Failed => ShowPolicy::Failed,
            Show::None => ShowPolicy::None,
        },
    };
    config
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(config)
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, CliError> {
    let config = verify_config(args)?;
    let result = run_campaign(&config).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut out = io::stdout().lock();
    match args.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&result.to_json()).unwrap()
        )?,
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(&mut out);
            wtr.write_record([
                "identity", "p", "q", "a", "b", "indices", "equal", "lhs", "rhs", "notes",
            ])?;
            for r in &result.reports {
                wtr.write_record(csv_row(r))?;
            }
            wtr.flush()?;
            drop(wtr);
            let mut err = io::stderr().lock();
            write_summary(&mut err, &result)?;
        }
        Format::Human => {
            for r in &result.reports {
                write_report(&mut out, r)?;
            }
            write_summary(&mut out, &result)?;
        }
    }
    Ok(result.exit_code() as u8)
}

fn indices_text(r: &IdentityReport) -> String {
    r.indices
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

fn csv_row(r: &IdentityReport) -> Vec<String> {
    vec![
        r.identity.name().to_string(),
        r.params.p().to_string(),
        r.params.q().to_string(),
        r.params.a().to_string(),
        r.params.b().to_string(),
        indices_text(r),
        r.equal.to_string(),
        r.lhs.to_string(),
        r.rhs.to_string(),
        r.all_notes().join("; "),
    ]
}

fn write_report(out: &mut impl Write, r: &IdentityReport) -> io::Result<()> {
    let verdict = if r.equal { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{verdict} {} p={} q={} a={} b={} idx=[{}] lhs={} rhs={}",
        r.identity,
        r.params.p(),
        r.params.q(),
        r.params.a(),
        r.params.b(),
        indices_text(r),
        r.lhs,
        r.rhs
    )?;
    for note in r.all_notes() {
        writeln!(out, "  note: {note}")?;
    }
    Ok(())
}

fn write_summary(out: &mut impl Write, result: &CampaignResult) -> io::Result<()> {
    let t = result.totals;
    writeln!(
        out,
        "summary: passed={} failed={} skipped={}",
        t.passed, t.failed, t.skipped
    )?;
    for (id, c) in &result.per_identity {
        writeln!(
            out,
            "  {id}: passed={} failed={} skipped={}",
            c.passed, c.failed, c.skipped
        )?;
    }
    for (label, c) in &result.alternates {
        writeln!(
            out,
            "alternate [{label}]: agrees={} differs={}",
            c.agrees, c.differs
        )?;
    }
    let red = result.reductions;
    writeln!(
        out,
        "reductions: checked={} mismatched={}",
        red.checked, red.mismatched
    )?;
    for f in &result.reduction_failures {
        writeln!(out, "  mismatch: {f}")?;
    }
    let a = &result.audit;
    let pin = &a.pinned;
    let verdict = |ok: bool| if ok { "agrees" } else { "DISAGREES" };
    writeln!(
        out,
        "reflection audit (p={}, q={}, n={}): recurrence F_-n = {}; -(-q)^(-n) F_n = {} ({}); -(-q)^n F_n = {} ({})",
        pin.p,
        pin.q,
        pin.n,
        pin.recurrence,
        pin.reflected,
        verdict(pin.reflected_agrees()),
        pin.flipped,
        verdict(pin.flipped_agrees()),
    )?;
    writeln!(
        out,
        "reflection audit over grid: checked={} reflected_disagreements={} flipped_disagreements={}",
        a.checked, a.reflected_disagreements, a.flipped_disagreements
    )?;
    writeln!(
        out,
        "result: {}",
        if result.success() { "PASS" } else { "FAIL" }
    )
}

fn cmd_bench(args: &BenchArgs) -> Result<u8, CliError> {
    let ns: Vec<u64> = if args.ns.is_empty() {
        DEFAULT_BENCH_NS.to_vec()
    } else {
        args.ns.clone()
    };
    let mut rows = Vec::new();
    for &n in &ns {
        let row =
            bench_fib_lucas(&args.p, &args.q, n).map_err(|e| CliError::Usage(e.to_string()))?;
        if !row.equal {
            eprintln!("error: naive and fast doubling disagree at n={n}");
            return Ok(1);
        }
        rows.push(row);
    }
    let mut out = io::stdout().lock();
    let lines = rows.iter().flat_map(|r| {
        [
            ("naive", r.n, r.naive.as_secs_f64()),
            ("fast-doubling", r.n, r.fast.as_secs_f64()),
        ]
    });
    match args.format {
        Format::Human => {
            writeln!(out, "{:<14} {:>10} {:>14}", "method", "n", "seconds")?;
            for (method, n, secs) in lines {
                writeln!(out, "{method:<14} {n:>10} {secs:>14.6}")?;
            }
        }
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(out);
            wtr.write_record(["method", "n", "seconds"])?;
            for (method, n, secs) in lines {
                wtr.write_record([method.to_string(), n.to_string(), format!("{secs:.9}")])?;
            }
            wtr.flush()?;
        }
        Format::Json => {
            let rows: Vec<_> = lines
                .map(|(method, n, secs)| json!({"method": method, "n": n, "seconds": secs}))
                .collect();
            writeln!(
                out,
                "{}",
                json!({"p": args.p.to_string(), "q": args.q.to_string(), "rows": rows})
            )?;
        }
    }
    Ok(0)
}
