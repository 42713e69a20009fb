use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use heptic_core::curve::{ParamCurve, SyzygySpec};
use heptic_core::exact::ModularConfig;
use heptic_core::singularity::{load_catalog, DEFAULT_TRUNCATION};
use heptic_core::verdict::{
    self, exit, exit_code_for_error, render_json, render_text, RunConfig, VerdictReport,
};
use heptic_core::{Error, Result};

/// Recomputes the degree-16 rational curve argument and reports every claim.
#[derive(Parser, Debug)]
#[command(name = "heptic-verify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for prime selection and random coordinate changes.
    #[arg(long, global = true, default_value_t = 0x5eed_0016)]
    seed: u64,

    /// Number of word-size primes used by modular elimination.
    #[arg(long, global = true, default_value_t = 2)]
    primes: usize,

    /// Force rational arithmetic everywhere.
    #[arg(long, global = true)]
    exact: bool,

    /// Series truncation order for delta-invariants.
    #[arg(long, global = true, default_value_t = DEFAULT_TRUNCATION)]
    truncation: usize,

    /// Depth limit of the rewriting search.
    #[arg(long, global = true, default_value_t = 16)]
    max_depth: usize,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Syzygy data file (TOML); defaults to the bundled data.
    #[arg(long, global = true)]
    syzygies: Option<PathBuf>,

    /// Printed curve coefficients (TOML); defaults to the bundled data.
    #[arg(long, global = true)]
    curve: Option<PathBuf>,

    /// Singularity catalog file (TOML); defaults to the bundled catalog.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Curves spanning P^5.
    VerifyP5,
    /// Curves spanning P^4, including the curve certificate.
    VerifyP4,
    /// Curves spanning P^3.
    VerifyP3,
    /// Syzygy reconstruction and initial ideal certificate.
    CurveCert,
    /// Singularity catalog and ramification arithmetic.
    DeltaAudit,
    /// Everything.
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Format {
    Text,
    Json,
}

fn config(cli: &Cli) -> Result<RunConfig> {
    if cli.truncation < 2 {
        return Err(Error::Input("--truncation must be at least 2".into()));
    }
    let mut modular =
        ModularConfig::from_seed(cli.seed, cli.primes).map_err(|e| Error::Input(e.to_string()))?;
    if cli.exact {
        modular = modular.exact();
    }
    let mut cfg = RunConfig {
        modular,
        truncation: cli.truncation,
        max_depth: cli.max_depth,
        ..RunConfig::default()
    };
    if let Some(p) = &cli.syzygies {
        cfg.syzygies = SyzygySpec::load(p)?;
        cfg.syzygy_source = p.display().to_string();
    }
    if let Some(p) = &cli.curve {
        cfg.curve = ParamCurve::load(p)?;
    }
    if let Some(p) = &cli.catalog {
        cfg.catalog = load_catalog(p)?;
        cfg.catalog_source = p.display().to_string();
    }
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<VerdictReport> {
    let cfg = config(cli)?;
    let sections = match cli.command {
        Command::VerifyP5 => verdict::run_p5(&cfg)?,
        Command::VerifyP4 => verdict::run_p4(&cfg)?,
        Command::VerifyP3 => verdict::run_p3(&cfg)?,
        Command::CurveCert => verdict::curve_cert(&cfg)?,
        Command::DeltaAudit => verdict::delta_audit(&cfg)?,
        Command::All => return verdict::run_all(&cfg),
    };
    Ok(VerdictReport::new(&cfg, sections))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // Help and version requests are not errors; bad usage is input.
            let failed = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if failed { exit::INPUT_ERROR as u8 } else { 0 });
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code_for_error(&e) as u8);
        }
    };
    let text = match cli.format {
        Format::Text => render_text(&report),
        Format::Json => render_json(&report),
    };
    match &cli.report {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(exit::INPUT_ERROR as u8);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code() as u8)
}
