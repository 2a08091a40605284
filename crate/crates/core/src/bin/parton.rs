use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use parton::cli::{self, emit_table, is_usage_error, run_suite, Format, RunConfig, TableKind};
use parton::{Error, Result};

#[derive(Parser)]
#[command(name = "parton", version, about = "p-adic wavelet and modular-form verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write a pass/fail report.
    Verify {
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// Local state operations.
    Parton {
        #[command(subcommand)]
        action: PartonAction,
    },
    /// L(s, ν) and L(s, ν)L(s, ν*) over the s-grid.
    Ltable {
        #[command(flatten)]
        common: Common,
    },
    /// Bessel-expansion coefficients of the Maass-type waveform.
    MaassCoeffs {
        #[arg(long, default_value_t = 50)]
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Theta values, S-transform residuals and theta-Mellin L-values (JSON).
    ThetaCheck {
        #[command(flatten)]
        common: Common,
    },
    /// Critical-line time averages with trend rows (JSON).
    TimeAverage {
        #[arg(long, default_value_t = 50.0)]
        t_max: f64,
        #[arg(long, default_value_t = 60)]
        n_terms: usize,
        #[command(flatten)]
        common: Common,
    },
    /// tau | convolution | ltable | maass | mellin | character | stream
    EmitTable {
        kind: String,
        #[arg(long, default_value_t = 100)]
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum PartonAction {
    /// Dump the coefficients a(p^m), m = 0..M, as JSON.
    Decompose {
        #[arg(long)]
        rescaled: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Default)]
struct Common {
    /// flat key = value file; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    primes: Option<String>,
    /// shorthand for a single-element --primes
    #[arg(long)]
    prime: Option<u64>,
    /// tau, dirichlet, or a stream descriptor file
    #[arg(long)]
    stream: Option<String>,
    #[arg(long)]
    truncation: Option<usize>,
    #[arg(long)]
    precision: Option<usize>,
    #[arg(long)]
    modulus: Option<u64>,
    #[arg(long)]
    char_index: Option<usize>,
    #[arg(long)]
    weight: Option<u32>,
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    s_grid: Option<String>,
    #[arg(long)]
    t_grid: Option<String>,
    #[arg(long)]
    y_grid: Option<String>,
}

impl Common {
    fn resolve(&self, suite: Option<&str>) -> Result<RunConfig> {
        let mut c = match &self.config {
            Some(path) => RunConfig::from_config_text(&std::fs::read_to_string(path)?)?,
            None => RunConfig::default(),
        };
        if let Some(s) = suite {
            c.suite = s.to_string();
        }
        let text = [
            ("primes", self.primes.clone()),
            ("prime", self.prime.map(|p| p.to_string())),
            ("stream", self.stream.clone()),
            ("truncation", self.truncation.map(|v| v.to_string())),
            ("precision", self.precision.map(|v| v.to_string())),
            ("modulus", self.modulus.map(|v| v.to_string())),
            ("char_index", self.char_index.map(|v| v.to_string())),
            ("weight", self.weight.map(|v| v.to_string())),
            ("format", self.format.clone()),
            ("out", self.out.as_ref().map(|p| p.display().to_string())),
            ("s_grid", self.s_grid.clone()),
            ("t_grid", self.t_grid.clone()),
            ("y_grid", self.y_grid.clone()),
        ];
        for (key, value) in text {
            if let Some(v) = value {
                c.set(if key == "prime" { "primes" } else { key }, &v)?;
            }
        }
        c.validate()?;
        Ok(c)
    }
}

fn write_output(config: &RunConfig, text: &str) -> Result<()> {
    match &config.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn json_text(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).unwrap_or_default() + "\n"
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Verify { suite, common } => {
            let config = common.resolve(Some(&suite))?;
            let report = run_suite(&config)?;
            write_output(&config, &report.render(config.format)?)?;
            eprintln!("{} checks, {} failed", report.rows.len(), report.failures());
            Ok(report.exit_code() as u8)
        }
        Command::Parton { action: PartonAction::Decompose { rescaled, common } } => {
            let config = common.resolve(None)?;
            write_output(&config, &json_text(&cli::commands::parton_decompose(&config, rescaled)?))?;
            Ok(0)
        }
        Command::Ltable { common } => {
            let config = common.resolve(None)?;
            write_output(&config, &emit_table(TableKind::Ltable, &config, 0)?)?;
            Ok(0)
        }
        Command::MaassCoeffs { n_max, common } => {
            let config = common.resolve(None)?;
            write_output(&config, &emit_table(TableKind::Maass, &config, n_max)?)?;
            Ok(0)
        }
        Command::ThetaCheck { common } => {
            let config = common.resolve(None)?;
            write_output(&config, &json_text(&cli::commands::theta_check(&config)?))?;
            Ok(0)
        }
        Command::TimeAverage { t_max, n_terms, common } => {
            let config = common.resolve(None)?;
            write_output(&config, &json_text(&cli::commands::time_average(&config, t_max, n_terms)?))?;
            Ok(0)
        }
        Command::EmitTable { kind, n_max, common } => {
            let config = common.resolve(None)?;
            let kind: TableKind = kind.parse()?;
            if config.format == Format::Json {
                return Err(Error::Config("tables are CSV only".into()));
            }
            write_output(&config, &emit_table(kind, &config, n_max)?)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}
