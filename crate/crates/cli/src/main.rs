use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use slicegenus::braid::{canonical_seifert_matrix, parse_braid};
use slicegenus::corpus::evaluate_corpus;
use slicegenus::json::{certificate_to_value, parse_matrix_file, report_to_value, StoredCertificate};
use slicegenus::{report, Error, IntMatrix, InvariantReport, SeifertMatrix};

// Output goes through here so a closed pipe ends quietly instead of panicking.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_INTERNAL: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Knot invariants, Seifert matrix reduction and topological slice genus
/// bounds.
#[derive(Parser)]
#[command(name = "slicegenus", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial, signature and slice genus bounds.
    Invariants {
        #[command(flatten)]
        input: Input,
        /// Include a reduction certificate.
        #[arg(long)]
        certificate: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reduce to block form and split off the Δ = 1 subform.
    Reduce {
        #[command(flatten)]
        input: Input,
        /// Write the unimodular transform as a matrix file.
        #[arg(long, value_name = "PATH")]
        emit_transform: Option<PathBuf>,
        /// Write the certificate as JSON.
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Re-verify a stored certificate against its matrix.
    Certify {
        #[command(flatten)]
        input: Input,
        #[arg(long = "certificate", value_name = "PATH")]
        certificate: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check a JSON-lines corpus against its expected values.
    Corpus {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(skip)]
#[command(group(ArgGroup::new("source").required(true).args(["matrix", "braid"])))]
struct Input {
    /// Matrix file: {"rows": [[int, ...], ...]}.
    #[arg(long, value_name = "PATH")]
    matrix: Option<PathBuf>,
    /// Braid word, letters (a = σ1, A = σ1⁻¹) or signed integers.
    #[arg(long, value_name = "WORD")]
    braid: Option<String>,
    /// Strand count, if more than the word implies.
    #[arg(long, value_name = "N", requires = "braid")]
    strands: Option<usize>,
}

enum Failure {
    Mismatch(String),
    Internal(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => EXIT_MISMATCH,
            Failure::Internal(_) => EXIT_INTERNAL,
            Failure::Usage(_) => EXIT_USAGE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Mismatch(m) | Failure::Internal(m) | Failure::Usage(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ReductionInvariant(_) => Failure::Internal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, value: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize") + "\n";
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<SeifertMatrix, Failure> {
    if let Some(path) = &input.matrix {
        let text = read(path)?;
        return parse_matrix_file(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())));
    }
    let word = input.braid.as_deref().expect("clap enforces one input");
    let b = parse_braid(word, input.strands)?;
    Ok(canonical_seifert_matrix(&b)?.seifert_matrix)
}

fn print_json(value: &Value) {
    out!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize"));
}

fn print_matrix(label: &str, m: &IntMatrix) {
    if m.nrows() == 0 {
        out!("{label}: []");
        return;
    }
    out!("{label}:");
    let cells: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in cells {
        let row: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out!("  [{}]", row.join(", "));
    }
}

fn print_report(r: &InvariantReport, size: usize) {
    let b = &r.bounds;
    let g4 = b.determined_g4top.map_or_else(|| "undetermined".to_string(), |g| g.to_string());
    out!("{:<18}{}", "matrix size", size);
    out!("{:<18}{}", "alexander", r.alexander);
    out!("{:<18}{}", "alexander degree", r.alexander_degree);
    out!("{:<18}{}", "signature", r.signature);
    out!("{:<18}{} <= g4top <= {}", "bounds", b.signature_lower, b.alexander_upper);
    out!("{:<18}{}", "g4top", g4);
    out!("{:<18}{}", "seifert genus", b.seifert_genus);
    if let Some(cert) = &r.certificate {
        out!("{:<18}{}", "block form d", cert.d);
    }
}

fn invariants(input: &Input, with_certificate: bool, json: bool) -> CmdResult {
    let m = load(input)?;
    let r = report(&m, with_certificate)?;
    if json {
        print_json(&report_to_value(&r));
    } else {
        print_report(&r, m.size());
    }
    Ok(0)
}

fn reduce(input: &Input, emit_transform: Option<&Path>, output: Option<&Path>, json: bool) -> CmdResult {
    let m = load(input)?;
    let cert = slicegenus::reduce_to_block_form(&m)?;
    cert.verify(&m).map_err(|e| Failure::Internal(format!("certificate failed verification: {e}")))?;
    let value = certificate_to_value(&cert);
    if let Some(path) = emit_transform {
        write(path, &json!({ "rows": value["transform"] }))?;
    }
    if let Some(path) = output {
        write(path, &value)?;
    }
    if json {
        print_json(&value);
    } else {
        out!("d: {}", cert.d);
        print_matrix("reduced", cert.reduced.matrix());
        print_matrix("trivial subform", cert.trivial_subform.matrix());
        out!("alexander of subform: {}", cert.trivial_subform.alexander());
    }
    Ok(0)
}

fn certify(input: &Input, certificate: &Path, json: bool) -> CmdResult {
    let m = load(input)?;
    let outcome = StoredCertificate::from_json(&read(certificate)?).and_then(|c| c.verify(&m));
    if json {
        print_json(&json!({
            "valid": outcome.is_ok(),
            "error": outcome.as_ref().err().map(ToString::to_string),
        }));
    }
    match outcome {
        Ok(()) => {
            if !json {
                out!("certificate valid");
            }
            Ok(0)
        }
        Err(e) => Err(Failure::Mismatch(format!("certificate invalid: {e}"))),
    }
}

fn corpus(path: &Path, json: bool) -> CmdResult {
    let rows = evaluate_corpus(&read(path)?);
    let failed = rows.iter().filter(|r| !r.passed()).count();
    if rows.is_empty() {
        eprintln!("warning: {} contains no entries", path.display());
    }
    if json {
        let entries: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "line": r.line,
                    "name": r.name,
                    "passed": r.passed(),
                    "error": r.error,
                    "checks": r.checks.iter().map(|c| json!({
                        "field": c.field,
                        "expected": c.expected,
                        "actual": c.actual,
                        "passed": c.passed(),
                    })).collect::<Vec<_>>(),
                    "report": r.report.as_ref().map(report_to_value),
                })
            })
            .collect();
        print_json(&json!({ "entries": entries, "passed": rows.len() - failed, "failed": failed }));
    } else {
        for r in &rows {
            out!("{r}");
        }
        out!("{} passed, {} failed", rows.len() - failed, failed);
    }
    Ok(if failed == 0 { 0 } else { EXIT_MISMATCH })
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Invariants { input, certificate, json } => invariants(&input, certificate, json),
        Command::Reduce { input, emit_transform, output, json } => {
            reduce(&input, emit_transform.as_deref(), output.as_deref(), json)
        }
        Command::Certify { input, certificate, json } => certify(&input, &certificate, json),
        Command::Corpus { path, json } => corpus(&path, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
