//! Scan runner for the wavepacket scattering engine: sweeps one parameter,
//! writes a CSV with a JSON metadata sidecar, and optionally an SVG plot.

// `!(x > 0)` guards are written that way so NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

pub mod config;
pub mod output;
pub mod scan;
mod svg;

pub use config::{Command, RawConfig, ScanSpec};
pub use scan::{run_scan, Cell, ScanOutput};

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Config(String),
    Regime(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 1,
            CliError::Regime(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "config error: {m}"),
            CliError::Regime(m) => write!(f, "numerical regime error: {m}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<coulomb_wavepacket::Error> for CliError {
    fn from(e: coulomb_wavepacket::Error) -> Self {
        match e {
            coulomb_wavepacket::Error::InvalidParameter { .. } => CliError::Config(e.to_string()),
            _ => CliError::Regime(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cwp", version, about = "Partial-wave wavepacket scattering scans")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Head-on probability against Rutherford over a θ grid
    #[command(name = "shadow_zone", alias = "shadow-zone")]
    ShadowZone(ScanArgs),
    /// Forward (θ = 0) probability over a β grid
    #[command(name = "forward_vs_beta", alias = "forward-vs-beta")]
    ForwardVsBeta(ScanArgs),
    /// Free-packet density |Φ(l, m)|² over l and m
    #[command(name = "lm_density", alias = "lm-density")]
    LmDensity(ScanArgs),
    /// Probability over the impact plane at one θ
    #[command(name = "beta_phi_profile", alias = "beta-phi-profile")]
    BetaPhiProfile(ScanArgs),
    /// Impact-averaged probability over a θ grid
    #[command(name = "averaged_points", alias = "averaged-points")]
    AveragedPoints(ScanArgs),
    /// Dimensionless parameters for a laboratory setup
    #[command(name = "physical_map", alias = "physical-map")]
    PhysicalMap(ScanArgs),
}

/// Flags mirror the config keys and take precedence over the file.
#[derive(Debug, Clone, Default, Args)]
pub struct ScanArgs {
    /// key=value config file
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// CSV path; the sidecar and plot are written next to it
    #[arg(long)]
    pub out: Option<String>,
    /// csv or csv+svg
    #[arg(long)]
    pub format: Option<String>,
    /// Worker threads, 0 = all cores
    #[arg(long)]
    pub threads: Option<String>,
    #[arg(long)]
    pub eta: Option<String>,
    #[arg(long)]
    pub eps: Option<String>,
    /// Scattering angle, radians
    #[arg(long)]
    pub theta: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    /// Sweep variable; must match the command
    #[arg(long)]
    pub axis: Option<String>,
    #[arg(long)]
    pub lo: Option<String>,
    #[arg(long)]
    pub hi: Option<String>,
    #[arg(long)]
    pub steps: Option<String>,
    #[arg(long)]
    pub phi_steps: Option<String>,
    #[arg(long)]
    pub delta: Option<String>,
    /// zero, maximize, maximize_at_origin or fixed
    #[arg(long)]
    pub delta_policy: Option<String>,
    /// exact, small_angle or uniform_m0
    #[arg(long)]
    pub source: Option<String>,
    /// auto, small_angle, exact or general_small_angle
    #[arg(long)]
    pub kernel: Option<String>,
    #[arg(long)]
    pub window_sigmas: Option<String>,
    #[arg(long)]
    pub m_cut: Option<String>,
    #[arg(long)]
    pub term_floor: Option<String>,
    #[arg(long)]
    pub beta_max: Option<String>,
    #[arg(long)]
    pub n_beta: Option<String>,
    #[arg(long)]
    pub n_phi: Option<String>,
    #[arg(long)]
    pub z1: Option<String>,
    #[arg(long)]
    pub z2: Option<String>,
    /// Kinetic energy, MeV
    #[arg(long)]
    pub energy: Option<String>,
    /// Projectile rest mass, MeV
    #[arg(long)]
    pub mass: Option<String>,
}

impl ScanArgs {
    fn pairs(&self) -> [(&'static str, &Option<String>); 26] {
        [
            ("out", &self.out),
            ("format", &self.format),
            ("threads", &self.threads),
            ("eta", &self.eta),
            ("eps", &self.eps),
            ("theta", &self.theta),
            ("beta", &self.beta),
            ("axis", &self.axis),
            ("lo", &self.lo),
            ("hi", &self.hi),
            ("steps", &self.steps),
            ("phi_steps", &self.phi_steps),
            ("delta", &self.delta),
            ("delta_policy", &self.delta_policy),
            ("source", &self.source),
            ("kernel", &self.kernel),
            ("window_sigmas", &self.window_sigmas),
            ("m_cut", &self.m_cut),
            ("term_floor", &self.term_floor),
            ("beta_max", &self.beta_max),
            ("n_beta", &self.n_beta),
            ("n_phi", &self.n_phi),
            ("z1", &self.z1),
            ("z2", &self.z2),
            ("energy", &self.energy),
            ("mass", &self.mass),
        ]
    }

    /// Config file (if any) overlaid with the flags.
    pub fn raw_config(&self) -> Result<RawConfig, CliError> {
        let mut raw = match &self.config {
            Some(p) => RawConfig::from_file(p)?,
            None => RawConfig::default(),
        };
        for (key, value) in self.pairs() {
            if let Some(v) = value {
                raw.set_flag(key, v)?;
            }
        }
        Ok(raw)
    }
}

impl CliCommand {
    pub fn split(&self) -> (Command, &ScanArgs) {
        match self {
            CliCommand::ShadowZone(a) => (Command::ShadowZone, a),
            CliCommand::ForwardVsBeta(a) => (Command::ForwardVsBeta, a),
            CliCommand::LmDensity(a) => (Command::LmDensity, a),
            CliCommand::BetaPhiProfile(a) => (Command::BetaPhiProfile, a),
            CliCommand::AveragedPoints(a) => (Command::AveragedPoints, a),
            CliCommand::PhysicalMap(a) => (Command::PhysicalMap, a),
        }
    }
}

/// Resolves, runs and writes one scan; returns the files written.
pub fn execute(command: Command, args: &ScanArgs) -> Result<(ScanOutput, Vec<PathBuf>), CliError> {
    let spec = ScanSpec::resolve(command, &args.raw_config()?)?;
    let start = Instant::now();
    let out = run_scan(&spec)?;
    let written = output::write_outputs(&spec, &out, start.elapsed().as_secs_f64())?;
    Ok((out, written))
}

/// Parses `args` (program name first) and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (command, args) = cli.command.split();
    match execute(command, args) {
        Ok((out, written)) => {
            for line in &out.summary {
                println!("{line}");
            }
            for p in written {
                println!("wrote {}", p.display());
            }
            0
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
