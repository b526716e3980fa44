use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use qdirac::Uq;
use qdirac_cli::{emit_report, run_checks, CProfile, CValue, CheckConfig, Format};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProfileArg {
    Tprofile,
    TprofilePrinted,
    AllOnes,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// Exact verification of the Dolbeault-Dirac operator on quantum projective space.
#[derive(Debug, Parser)]
#[command(name = "qdirac", version)]
struct Args {
    /// Rank N of sl_{N+1} (2..=4).
    #[arg(long, default_value_t = 2)]
    rank: usize,
    /// Word-length bound for the Groebner completion (default 2N+4).
    #[arg(long)]
    degree_bound: Option<usize>,
    /// c_0 as an exact literal in v and q, or "symbolic".
    #[arg(long, default_value = "1")]
    c0: String,
    /// c_1 as an exact literal in v and q, or "symbolic".
    #[arg(long, default_value = "1")]
    c1: String,
    /// Scaling family for the Dirac checks.
    #[arg(long, value_enum, default_value = "tprofile")]
    c_profile: ProfileArg,
    /// Comma-separated check-id prefixes, e.g. "qext,dirac.main_theorem".
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Run the long rank-4 checks.
    #[arg(long)]
    extended: bool,
    /// Include wall-clock milliseconds per check (breaks byte-stability).
    #[arg(long)]
    timings: bool,
}

fn config_from(args: &Args) -> Result<CheckConfig, qdirac_cli::ConfigError> {
    Ok(CheckConfig {
        rank: args.rank,
        degree_bound: args.degree_bound.unwrap_or_else(|| Uq::default_bound(args.rank)),
        c0: CValue::parse(&args.c0)?,
        c1: CValue::parse(&args.c1)?,
        c_profile: match args.c_profile {
            ProfileArg::Tprofile => CProfile::TProfile,
            ProfileArg::TprofilePrinted => CProfile::Printed,
            ProfileArg::AllOnes => CProfile::AllOnes,
        },
        checks: args.checks.clone(),
        extended: args.extended,
        timings: args.timings,
    })
}

fn main() -> ExitCode {
    let args = Args::parse();
    let report = match config_from(&args).and_then(|c| run_checks(&c)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("qdirac: error: {e}");
            return ExitCode::from(2);
        }
    };
    let format = match args.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let bytes = emit_report(&report, format);
    let written = match &args.output {
        Some(path) => std::fs::write(path, &bytes),
        None => std::io::Write::write_all(&mut std::io::stdout(), &bytes),
    };
    if let Err(e) = written {
        eprintln!("qdirac: error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    let s = &report.summary;
    eprintln!("qdirac: {} passed, {} failed, {} skipped", s.passed, s.failed, s.skipped);
    if report.any_failed() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
