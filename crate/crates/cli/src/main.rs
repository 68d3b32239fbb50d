use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dirac_osc::output::emit;
use dirac_osc::{run_evolve, run_spectrum, run_sweep, run_verify, Mode, RunConfig};

#[derive(Parser)]
#[command(name = "dirac-osc", version, about = "Isospin-coupled Dirac oscillator: spectra, entanglement dynamics, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form and numeric eigenvalues per sector.
    Spectrum(Overrides),
    /// Isospin purity and entropy along one trajectory.
    Evolve(Overrides),
    /// Purity and entropy over the (gamma, t) grid.
    Sweep(Overrides),
    /// Run every check; exits nonzero on any failure.
    Verify(Overrides),
}

#[derive(Args)]
struct Overrides {
    /// Flat key = value configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json.
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    m: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long = "A", allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    dimension: Option<u8>,
    /// auto, unit, sqrt2, chiral or a positive scale.
    #[arg(long)]
    convention: Option<String>,
    /// Any other configuration key, as key=value. Repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
}

impl Overrides {
    fn pairs(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut push = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                out.push(format!("{k}={v}"));
            }
        };
        push("seed", self.seed.map(|v| v.to_string()));
        push("output_path", self.out.as_ref().map(|p| p.display().to_string()));
        push("format", self.format.clone());
        push("dimension", self.dimension.map(|v| v.to_string()));
        push("m", self.m.map(|v| v.to_string()));
        push("alpha", self.alpha.map(|v| v.to_string()));
        push("gamma", self.gamma.map(|v| v.to_string()));
        push("A", self.a.map(|v| v.to_string()));
        push("B", self.b.map(|v| v.to_string()));
        push("theta", self.theta.map(|v| v.to_string()));
        push("n", self.n.map(|v| v.to_string()));
        push("convention", self.convention.clone());
        out.extend(self.set.iter().cloned());
        out
    }
}

fn load(mode: Mode, o: &Overrides) -> Result<RunConfig, String> {
    let mut cfg = match &o.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            RunConfig::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => RunConfig::default(),
    };
    cfg.mode = mode;
    let pairs = o.pairs();
    cfg.apply_overrides(pairs.iter().map(String::as_str)).map_err(|e| e.to_string())?;
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn run(cli: Cli) -> Result<bool, String> {
    let (mode, overrides) = match &cli.command {
        Command::Spectrum(o) => (Mode::Spectrum, o),
        Command::Evolve(o) => (Mode::Evolve, o),
        Command::Sweep(o) => (Mode::Sweep, o),
        Command::Verify(o) => (Mode::Verify, o),
    };
    let cfg = load(mode, overrides)?;
    let (table, passed) = match mode {
        Mode::Spectrum => (run_spectrum(&cfg).map_err(|e| e.to_string())?, true),
        Mode::Evolve => (run_evolve(&cfg).map_err(|e| e.to_string())?, true),
        Mode::Sweep => (run_sweep(&cfg).map_err(|e| e.to_string())?.to_table(&cfg), true),
        Mode::Verify => run_verify(&cfg),
    };
    emit(&table, cfg.format, cfg.output_path.as_deref()).map_err(|e| e.to_string())?;
    Ok(passed)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
