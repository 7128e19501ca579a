use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use origami_cli::commands::{self, CurveArgs};
use origami_cli::Report;
use origami_core::exactnum::{Rational, DEFAULT_EFFORT};

#[derive(Parser)]
#[command(name = "origami", version, about = "Exact computations for elliptic-curve quaternion origamis")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Trial-division and Pollard-rho budget for factored displays.
    #[arg(long, default_value_t = DEFAULT_EFFORT, global = true)]
    effort: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Curve {
    #[arg(long, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<Rational>,
}

impl From<Curve> for CurveArgs {
    fn from(c: Curve) -> Self {
        CurveArgs { a: c.a, b: c.b, z: c.z, w: c.w }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Polynomials cutting out [n]^-1 P.
    Preimage {
        #[command(flatten)]
        curve: Curve,
        #[arg(long, default_value_t = 2)]
        n: i64,
    },
    /// The origami octics for +P and -P, their classification and Frobenius data.
    Origami {
        #[command(flatten)]
        curve: Curve,
        #[arg(long, default_value_t = 200)]
        primes: usize,
    },
    /// h1, h2, h3, g, T4 and the map alpha -> beta. Omit a, b, z, w for the generic case.
    Quotients {
        #[command(flatten)]
        curve: Curve,
    },
    /// Classify r(x^2) for r = x^4 + c3 x^3 + c2 x^2 + c1 x + c0.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        c3: Rational,
        #[arg(long, allow_hyphen_values = true)]
        c2: Rational,
        #[arg(long, allow_hyphen_values = true)]
        c1: Rational,
        #[arg(long, allow_hyphen_values = true)]
        c0: Rational,
    },
    /// Run every symbolic identity check.
    Verify {
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result: origami_core::Result<Report> = match cli.command {
        Command::Preimage { curve, n } => commands::preimage(&curve.into(), n, cli.effort),
        Command::Origami { curve, primes } => commands::origami(&curve.into(), primes, cli.effort),
        Command::Quotients { curve } => commands::quotients(&curve.into()),
        Command::Classify { c3, c2, c1, c0 } => commands::classify(&c3, &c2, &c1, &c0, cli.effort),
        Command::Verify { inject_fault } => commands::verify(inject_fault.as_deref()),
    };
    match result {
        Ok(mut report) => {
            report.timing_ms = start.elapsed().as_millis();
            let body = match cli.format {
                Format::Text => report.render_text(),
                Format::Json => {
                    serde_json::to_string_pretty(&report.to_json()).expect("json") + "\n"
                }
            };
            // a closed pipe is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
