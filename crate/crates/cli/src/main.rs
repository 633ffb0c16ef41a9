use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use binodiv::floor::{landau_min, landau_witnesses, StepFunctionSpec};
use binodiv::harness::{self, Bounds, Format};
use binodiv::qseries::{check_family, QFamily};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Exact checks of divisibility and positivity claims for factorial ratios,
/// binomial products and their q-analogues.
///
/// Exit status: 0 when every check passed, 1 when a counterexample was
/// found, 2 on usage or validation errors.
#[derive(Parser, Debug)]
#[command(name = "binodiv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sweep one registered claim and emit a report.
    Verify(VerifyArgs),
    /// List registered claims.
    List {
        /// Only claims of this kind (e.g. q-positivity).
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Minimum of sum floor(a_i x) - sum floor(b_j x) over one period.
    Landau {
        /// Numerator coefficients, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        num: Vec<u64>,
        /// Denominator coefficients, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        den: Vec<u64>,
    },
    /// Expand one member of a named q-family.
    Qpoly {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Emit::Coeffs)]
        emit: Emit,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Registered claim id, e.g. thm-1.1 (see `binodiv list`).
    claim: String,
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long)]
    a_max: Option<u64>,
    #[arg(long)]
    b_max: Option<u64>,
    #[arg(long)]
    m_max: Option<u64>,
    /// Worker threads; the report does not depend on this.
    #[arg(long, env = "BINODIV_WORKERS")]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl From<ReportFormat> for Format {
    fn from(f: ReportFormat) -> Self {
        match f {
            ReportFormat::Json => Format::Json,
            ReportFormat::Csv => Format::Csv,
            ReportFormat::Text => Format::Text,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ListFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Emit {
    Coeffs,
    Exponents,
}

/// Writes to stdout; a closed pipe (e.g. `| head`) ends the process quietly.
fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(USAGE.into());
    }
}

const PASS: u8 = 0;
const COUNTEREXAMPLE: u8 = 1;
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => verify(args),
        Command::List { kind, format } => list(kind.as_deref(), format),
        Command::Landau { num, den } => landau(num, den),
        Command::Qpoly { family, n, emit } => qpoly(&family, n, emit),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn verify(args: VerifyArgs) -> Result<u8, String> {
    let bounds = Bounds {
        a: args.a_max,
        b: args.b_max,
        m: args.m_max,
        n: args.n_max,
    };
    let workers = args.workers.unwrap_or_else(harness::default_workers);
    let report = harness::run_claim(&args.claim, &bounds, workers).map_err(|e| e.to_string())?;
    let body = harness::emit_report(&report, args.format.into()).map_err(|e| e.to_string())?;
    match &args.out {
        Some(path) => std::fs::write(path, &body).map_err(|e| format!("{}: {e}", path.display()))?,
        None => out(&body),
    }
    if !matches!(args.format, ReportFormat::Text) {
        eprintln!(
            "{}: {} checked, {} failed ({:.3}s) - {}",
            report.claim,
            report.checked,
            report.failed,
            report.wall_time.as_secs_f64(),
            report.banner()
        );
    }
    Ok(if report.passed_all() { PASS } else { COUNTEREXAMPLE })
}

fn list(kind: Option<&str>, format: ListFormat) -> Result<u8, String> {
    let records = harness::list_claims(kind);
    match format {
        ListFormat::Json => {
            let value = serde_json::to_value(&records).map_err(|e| e.to_string())?;
            out(&(serde_json::to_string_pretty(&value).map_err(|e| e.to_string())? + "\n"));
        }
        ListFormat::Text => {
            let mut text = String::new();
            for r in records {
                let tag = if r.conjecture { "conjecture" } else { "" };
                text += &format!("{:<20} {:<16} {:<12}{}\n", r.id, r.kind, tag, r.anchor);
            }
            out(&text);
        }
    }
    Ok(PASS)
}

fn landau(num: Vec<u64>, den: Vec<u64>) -> Result<u8, String> {
    let spec = StepFunctionSpec::new(num, den).map_err(|e| e.to_string())?;
    let min = landau_min(&spec);
    let witnesses: Vec<String> = landau_witnesses(&spec)
        .into_iter()
        .map(|(x, _)| x.to_string())
        .collect();
    let verdict = if min >= 0 {
        "integral factorial ratio"
    } else {
        "not integral: the step function goes negative"
    };
    out(&format!(
        "period denominator: {}\nminimum: {min}\nattained at x = {}\n{verdict}\n",
        spec.period_denominator(),
        witnesses.join(", ")
    ));
    Ok(if min >= 0 { PASS } else { COUNTEREXAMPLE })
}

fn qpoly(family: &str, n: u64, emit: Emit) -> Result<u8, String> {
    let f = QFamily::from_id(family).ok_or_else(|| {
        let known: Vec<_> = QFamily::ALL.iter().map(|f| f.id()).collect();
        format!("unknown family `{family}` (known: {})", known.join(", "))
    })?;
    let report = check_family(f, n).map_err(|e| e.to_string())?;
    let value = match emit {
        Emit::Exponents => json!({
            "family": f.id(),
            "n": n,
            "exponents": report.exponents,
            "polynomial": report.polynomial.is_some(),
        }),
        Emit::Coeffs => match &report.polynomial {
            Some(p) => json!({
                "family": f.id(),
                "n": n,
                "degree": p.degree(),
                "coefficients": p,
                "nonnegative": p.is_nonnegative(),
                "reciprocal": p.is_reciprocal(),
                "unimodal": p.is_unimodal(),
            }),
            None => {
                let (d, e) = report.not_polynomial_at().expect("negative exponent");
                eprintln!("{} at n = {n} is not a polynomial: Φ_{d} has exponent {e}", f.id());
                return Ok(COUNTEREXAMPLE);
            }
        },
    };
    out(&(serde_json::to_string_pretty(&value).map_err(|e| e.to_string())? + "\n"));
    Ok(PASS)
}
