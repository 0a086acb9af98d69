use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use polycert::Polynomial;
use polycert_cli::parse::{parse_coeffs, parse_poly};
use polycert_cli::{run_analyze, run_newton, run_oracle, run_verify, AnalyzeOptions, CliError};
use std::path::PathBuf;
use std::process::ExitCode;

/// Certified upper bounds on the number of irreducible factors of integer
/// polynomials.
#[derive(Parser)]
#[command(name = "polycert", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolyInput {
    /// Polynomial in text form, e.g. "64+56z^2+14z^4+z^6" (x also accepted)
    #[arg(long, conflicts_with = "coeffs", allow_hyphen_values = true)]
    poly: Option<String>,
    /// Coefficients a_0,a_1,...,a_n as a comma-separated list
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

impl PolyInput {
    fn resolve(&self) -> Result<Polynomial, CliError> {
        match (&self.poly, &self.coeffs) {
            (Some(text), None) => parse_poly(text).map_err(|e| CliError::Input(e.to_string())),
            (None, Some(csv)) => parse_coeffs(csv).map_err(|e| CliError::Input(e.to_string())),
            _ => Err(CliError::Input("provide exactly one of --poly or --coeffs".into())),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Search witnesses and certify a bound on the number of irreducible factors
    Analyze {
        #[command(flatten)]
        input: PolyInput,
        /// Smallest shift witness to try
        #[arg(long, allow_hyphen_values = true)]
        m_min: Option<BigInt>,
        /// Largest shift witness to try (default: ceil(height) + 1000)
        #[arg(long, allow_hyphen_values = true)]
        m_max: Option<BigInt>,
        /// Factoring budget per integer, milliseconds
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Comma-separated criteria to run (t1,t2,t3,t4,l3,l4,l5)
        #[arg(long)]
        criteria: Option<String>,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Print the Newton polygon of the polynomial for a prime
    Newton {
        #[command(flatten)]
        input: PolyInput,
        /// The prime the valuations are taken at
        #[arg(long)]
        prime: BigInt,
        /// Write an SVG rendering to this path
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Emit polygon data as JSON
        #[arg(long)]
        json: bool,
    },
    /// Re-check a certificate against a polynomial
    Verify {
        #[command(flatten)]
        input: PolyInput,
        /// Path to the certificate JSON
        #[arg(long)]
        cert: PathBuf,
    },
    /// Brute-force ground-truth factorization (desk scale)
    Oracle {
        #[command(flatten)]
        input: PolyInput,
        /// Emit the factor list as JSON
        #[arg(long)]
        json: bool,
        /// Override the degree limit
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

fn seed_from_env() -> Result<Option<u64>, CliError> {
    match std::env::var("POLYCERT_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Input(format!("POLYCERT_SEED must be a u64, got `{text}`"))),
        Err(_) => Ok(None),
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Analyze { input, m_min, m_max, budget_ms, criteria, json } => {
            let f = input.resolve()?;
            let opts = AnalyzeOptions { m_min, m_max, budget_ms, criteria, json, seed: seed_from_env()? };
            run_analyze(&f, &opts)
        }
        Command::Newton { input, prime, svg, json } => {
            let f = input.resolve()?;
            run_newton(&f, &prime, svg.as_deref(), json)
        }
        Command::Verify { input, cert } => {
            let f = input.resolve()?;
            let text = std::fs::read_to_string(&cert)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", cert.display())))?;
            run_verify(&f, &text)
        }
        Command::Oracle { input, json, max_degree } => {
            let f = input.resolve()?;
            run_oracle(&f, json, max_degree)
        }
    }
}

/// Prints to stdout, tolerating a consumer that closed the pipe early.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            emit(&output);
            ExitCode::SUCCESS
        }
        // a failed verification is a report, not a diagnostic
        Err(e @ CliError::VerifyFailed(_)) => {
            emit(e.message());
            ExitCode::from(e.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
