//! `dnalabel`: command-line front end for the labeling library.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error. With `--json`
//! every invocation prints exactly one JSON document, errors included.

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "dnalabel",
    version,
    about = "Labeling codes for DNA data storage"
)]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Label a sequence with a codeset (or a single label).
    Label(LabelArgs),
    /// Encode a message into a codeset over a repeat-free reference.
    Encode(EncodeArgs),
    /// Decode a channel output back into the message.
    Decode(DecodeArgs),
    /// Count binary words whose runs of ones are at least ell long.
    Eta(EtaArgs),
    /// Capacity, period and non-overlapping-code bounds.
    Bounds(BoundsArgs),
    /// Generate a de Bruijn-prefix reference sequence.
    Genref(GenrefArgs),
    /// Period, repeat-freeness and window counts of a sequence.
    Analyze(AnalyzeArgs),
    /// Exhaustive maximum-code-size oracles for small instances.
    Oracle(OracleArgs),
    /// Export a non-overlapping label catalog.
    Catalog(CatalogArgs),
}

#[derive(Args, Debug)]
struct LabelArgs {
    /// Reference sequence, or `-` for stdin.
    #[arg(long)]
    seq: String,
    /// Comma-separated labels; empty for the empty codeset.
    #[arg(long, conflicts_with = "one", allow_hyphen_values = true)]
    labels: Option<String>,
    /// A single label.
    #[arg(long)]
    one: Option<String>,
}

#[derive(Args, Debug)]
struct RefArgs {
    /// Reference sequence, or `-` for stdin.
    #[arg(long = "ref", conflicts_with = "ref_auto")]
    reference: Option<String>,
    /// Use the de Bruijn-prefix reference of length n.
    #[arg(long)]
    ref_auto: bool,
}

#[derive(Args, Debug)]
struct EncodeArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    ell: usize,
    #[command(flatten)]
    reference: RefArgs,
    /// Decimal message index.
    #[arg(long)]
    message: String,
}

#[derive(Args, Debug)]
struct DecodeArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    ell: usize,
    #[command(flatten)]
    reference: RefArgs,
    /// Channel output as a 0/1 string, or `-` to read it (or encode's output) from stdin.
    #[arg(long)]
    output: String,
}

#[derive(Args, Debug)]
struct EtaArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    ell: usize,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    ell: usize,
    /// Minimal period for the period bound.
    #[arg(long)]
    period: Option<usize>,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args, Debug)]
struct GenrefArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    ell: usize,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[arg(long)]
    seq: String,
    /// Largest window length to report (default min(n, 8)).
    #[arg(long)]
    max_ell: Option<usize>,
}

#[derive(Args, Debug)]
#[group(id = "mode", required = true, multiple = false)]
struct OracleMode {
    /// M(S): labels of any length.
    #[arg(long = "M")]
    m: bool,
    /// M_ell(S): labels of length ell.
    #[arg(long = "M-ell", value_name = "ELL")]
    m_ell: Option<usize>,
    /// M(S, V) for the comma-separated executable labels V.
    #[arg(long = "M-v", value_name = "LABELS")]
    m_v: Option<String>,
    /// M(n, V): search every reference of length --n.
    #[arg(long = "M-n-v", value_name = "LABELS")]
    m_n_v: Option<String>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    mode: OracleMode,
    #[arg(long)]
    seq: Option<String>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct CatalogArgs {
    #[arg(long)]
    ell: usize,
    /// Construction parameter; the largest code over all k when omitted.
    #[arg(long)]
    k: Option<usize>,
    /// Restrict to the windows of this sequence.
    #[arg(long)]
    seq: Option<String>,
}

/// Command failure with its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<dnalabel::Error> for CliError {
    fn from(e: dnalabel::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Rendered result: text for humans, JSON for scripts.
pub struct Report {
    pub text: String,
    pub json: Value,
}

/// Reads `-` as all of stdin, otherwise returns the argument.
pub fn read_arg(value: &str) -> Result<String, CliError> {
    if value != "-" {
        return Ok(value.to_string());
    }
    let mut buf = String::new();
    io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
    Ok(buf)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Label(a) => commands::label(&a.seq, a.labels.as_deref(), a.one.as_deref()),
        Command::Encode(a) => commands::encode(
            a.n,
            a.ell,
            a.reference.reference.as_deref(),
            a.reference.ref_auto,
            &a.message,
        ),
        Command::Decode(a) => commands::decode(
            a.n,
            a.ell,
            a.reference.reference.as_deref(),
            a.reference.ref_auto,
            &a.output,
        ),
        Command::Eta(a) => commands::eta(a.n, a.ell),
        Command::Bounds(a) => commands::bounds(a.ell, a.period, a.tol),
        Command::Genref(a) => commands::genref(a.n, a.ell),
        Command::Analyze(a) => commands::analyze(&a.seq, a.max_ell),
        Command::Oracle(a) => {
            let mode = if a.mode.m {
                commands::OracleMode::M
            } else if let Some(ell) = a.mode.m_ell {
                commands::OracleMode::MEll(ell)
            } else if let Some(v) = &a.mode.m_v {
                commands::OracleMode::MV(v.clone())
            } else if let Some(v) = &a.mode.m_n_v {
                commands::OracleMode::MnV(v.clone())
            } else {
                unreachable!("clap enforces one mode")
            };
            commands::oracle(mode, a.seq.as_deref(), a.n)
        }
        Command::Catalog(a) => commands::catalog(a.ell, a.k, a.seq.as_deref()),
    }
}

fn main() -> ExitCode {
    let json = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                // --help and --version.
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            if json {
                let doc = serde_json::json!({ "error": e.kind().to_string(), "exit_code": 2 });
                println!("{doc}");
            } else {
                eprint!("{e}");
            }
            return ExitCode::from(2);
        }
    };
    let result = run(&cli);
    let mut stdout = io::stdout().lock();
    match result {
        Ok(report) => {
            let out = if cli.json {
                format!("{}\n", report.json)
            } else {
                report.text
            };
            // A closed pipe is not worth a panic.
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(err) => {
            if cli.json {
                let doc = serde_json::json!({ "error": err.message(), "exit_code": err.code() });
                let _ = writeln!(stdout, "{doc}");
            } else {
                eprintln!("error: {}", err.message());
            }
            ExitCode::from(err.code())
        }
    }
}
