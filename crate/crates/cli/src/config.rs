//! Flat `key=value` scan configuration and its resolution into a [`ScanSpec`].

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use coulomb_wavepacket::{DeltaSearch, KernelChoice, PhysicalParams, TruncationPolicy, WignerSource};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Command {
    ShadowZone,
    ForwardVsBeta,
    LmDensity,
    BetaPhiProfile,
    AveragedPoints,
    PhysicalMap,
}

impl Command {
    pub const ALL: [Command; 6] = [
        Command::ShadowZone,
        Command::ForwardVsBeta,
        Command::LmDensity,
        Command::BetaPhiProfile,
        Command::AveragedPoints,
        Command::PhysicalMap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::ShadowZone => "shadow_zone",
            Command::ForwardVsBeta => "forward_vs_beta",
            Command::LmDensity => "lm_density",
            Command::BetaPhiProfile => "beta_phi_profile",
            Command::AveragedPoints => "averaged_points",
            Command::PhysicalMap => "physical_map",
        }
    }

    /// Sweep variable of the command's grid.
    pub fn axis(self) -> Option<&'static str> {
        match self {
            Command::ShadowZone | Command::AveragedPoints => Some("theta"),
            Command::ForwardVsBeta | Command::BetaPhiProfile => Some("beta"),
            Command::LmDensity => Some("l"),
            Command::PhysicalMap => None,
        }
    }

    /// Keys the command accepts, with their defaults (`None`: unset unless given).
    fn keys(self) -> &'static [(&'static str, Option<&'static str>)] {
        match self {
            Command::ShadowZone => &[
                ("eta", Some("22.8")),
                ("eps", Some("0.001")),
                ("axis", Some("theta")),
                ("lo", Some("0.001")),
                ("hi", Some("0.5")),
                ("steps", Some("200")),
                ("delta_policy", Some("maximize")),
                ("delta", None),
                ("source", Some("exact")),
                ("window_sigmas", Some("6")),
                ("term_floor", Some("1e-14")),
            ],
            Command::ForwardVsBeta => &[
                ("eta", Some("22.8")),
                ("eps", Some("0.001")),
                ("axis", Some("beta")),
                ("lo", Some("10")),
                ("hi", Some("250")),
                ("steps", Some("25")),
                ("delta_policy", Some("zero")),
                ("delta", None),
                ("window_sigmas", Some("6")),
                ("term_floor", Some("1e-14")),
            ],
            Command::LmDensity => &[
                ("eps", Some("0.001")),
                ("beta", Some("10")),
                ("axis", Some("l")),
                ("lo", Some("auto")),
                ("hi", Some("auto")),
                ("steps", Some("201")),
                ("m_cut", Some("auto")),
            ],
            Command::BetaPhiProfile => &[
                ("eta", Some("22.8")),
                ("eps", Some("0.001")),
                ("theta", Some("1.5707963267948966")),
                ("axis", Some("beta")),
                ("lo", Some("0")),
                ("hi", Some("3")),
                ("steps", Some("31")),
                ("phi_steps", Some("16")),
                ("delta_policy", Some("maximize_at_origin")),
                ("delta", None),
                ("kernel", Some("auto")),
                ("window_sigmas", Some("6")),
                ("m_cut", Some("auto")),
                ("term_floor", Some("1e-14")),
            ],
            Command::AveragedPoints => &[
                ("eta", Some("22.8")),
                ("eps", Some("0.001")),
                ("axis", Some("theta")),
                ("lo", Some("0.1")),
                ("hi", Some("0.2")),
                ("steps", Some("3")),
                ("beta_max", Some("3")),
                ("n_beta", Some("32")),
                ("n_phi", Some("16")),
                ("delta_policy", Some("maximize_at_origin")),
                ("delta", None),
                ("kernel", Some("auto")),
                ("window_sigmas", Some("6")),
                ("m_cut", Some("auto")),
                ("term_floor", Some("1e-14")),
            ],
            Command::PhysicalMap => &[
                ("z1", Some("79")),
                ("z2", Some("2")),
                ("energy", Some("4.8")),
                ("mass", Some("3727.379")),
                ("eps", Some("0.001")),
            ],
        }
    }

    fn accepts(self, key: &str) -> bool {
        COMMON_KEYS.iter().any(|(k, _)| *k == key) || self.keys().iter().any(|(k, _)| *k == key)
    }

    fn allows_origin_delta(self) -> bool {
        matches!(self, Command::BetaPhiProfile | Command::AveragedPoints)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const COMMON_KEYS: &[(&str, Option<&str>)] = &[("out", None), ("format", Some("csv")), ("threads", Some("0"))];

/// Every key any command understands.
pub const KNOWN_KEYS: &[&str] = &[
    "axis",
    "beta",
    "beta_max",
    "delta",
    "delta_policy",
    "energy",
    "eps",
    "eta",
    "format",
    "hi",
    "kernel",
    "lo",
    "m_cut",
    "mass",
    "n_beta",
    "n_phi",
    "out",
    "phi_steps",
    "source",
    "steps",
    "term_floor",
    "theta",
    "threads",
    "window_sigmas",
    "z1",
    "z2",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Default,
    File { line: usize },
    Flag,
}

impl Origin {
    pub fn label(&self) -> String {
        match self {
            Origin::Default => "default".into(),
            Origin::File { line } => format!("config line {line}"),
            Origin::Flag => "flag".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub value: String,
    pub origin: Origin,
}

/// Unresolved key/value pairs from a config file and command-line flags.
#[derive(Debug, Clone, Default)]
pub struct RawConfig {
    entries: BTreeMap<String, Entry>,
}

impl RawConfig {
    pub fn parse_str(text: &str) -> Result<Self, CliError> {
        let mut entries: BTreeMap<String, Entry> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((k, v)) = content.split_once('=') else {
                return Err(CliError::Config(format!("line {line}: expected key=value, found `{content}`")));
            };
            let (key, value) = (k.trim(), v.trim());
            if !KNOWN_KEYS.contains(&key) {
                return Err(CliError::Config(format!("line {line}: unknown key `{key}`")));
            }
            if value.is_empty() {
                return Err(CliError::Config(format!("line {line}: missing value for `{key}`")));
            }
            if let Some(prev) = entries.get(key) {
                let Origin::File { line: first } = prev.origin else { unreachable!() };
                return Err(CliError::Config(format!("duplicate key `{key}` on lines {first} and {line}")));
            }
            entries.insert(key.to_string(), Entry { value: value.to_string(), origin: Origin::File { line } });
        }
        Ok(Self { entries })
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse_str(&text)
    }

    /// Flag values replace file values.
    pub fn set_flag(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        if !KNOWN_KEYS.contains(&key) {
            return Err(CliError::Config(format!("unknown key `{key}`")));
        }
        self.entries.insert(key.to_string(), Entry { value: value.trim().to_string(), origin: Origin::Flag });
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.get(key)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    CsvSvg,
}

/// How each grid point picks `δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DeltaChoice {
    Zero,
    /// Maximized separately at every output point.
    Maximize,
    /// Maximized at `β = 0, φ = 0` and held over the grid.
    MaximizeAtOrigin,
    Fixed(f64),
}

impl DeltaChoice {
    pub fn describe(self) -> String {
        match self {
            DeltaChoice::Zero => "zero".into(),
            DeltaChoice::Maximize => "maximized at every grid point".into(),
            DeltaChoice::MaximizeAtOrigin => "maximized at beta = 0, phi = 0 and held over the grid".into(),
            DeltaChoice::Fixed(d) => format!("fixed at {d}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        let n = self.steps - 1;
        (0..self.steps)
            .map(|i| if i == n { self.hi } else { self.lo + (self.hi - self.lo) * (i as f64 / n as f64) })
            .collect()
    }
}

/// Fully resolved scan description.
#[derive(Debug, Clone)]
pub struct ScanSpec {
    pub command: Command,
    pub eta: f64,
    pub eps: f64,
    pub theta: f64,
    pub beta: f64,
    /// `None` for `lm_density` with an automatic range and for `physical_map`.
    pub grid: Option<Grid>,
    pub phi_steps: usize,
    pub delta: DeltaChoice,
    pub source: WignerSource,
    pub kernel: KernelChoice,
    pub truncation: TruncationPolicy<f64>,
    pub delta_search: DeltaSearch<f64>,
    pub beta_max: f64,
    pub n_beta: usize,
    pub n_phi: usize,
    pub physical: PhysicalParams<f64>,
    pub out: PathBuf,
    pub format: Format,
    pub threads: usize,
    /// Effective value and origin of every key the command accepts.
    pub resolved: BTreeMap<String, (Option<String>, Origin)>,
}

struct Resolver<'a> {
    command: Command,
    raw: &'a RawConfig,
    resolved: BTreeMap<String, (Option<String>, Origin)>,
}

impl Resolver<'_> {
    fn entry(&mut self, key: &'static str) -> Option<(String, Origin)> {
        let default = COMMON_KEYS
            .iter()
            .chain(self.command.keys())
            .find(|(k, _)| *k == key)
            .unwrap_or_else(|| panic!("{key} is not a key of {}", self.command))
            .1;
        let (value, origin) = match self.raw.get(key) {
            Some(e) => (Some(e.value.clone()), e.origin.clone()),
            None => (default.map(str::to_string), Origin::Default),
        };
        self.resolved.insert(key.to_string(), (value.clone(), origin.clone()));
        value.map(|v| (v, origin))
    }

    fn parse<T: std::str::FromStr>(&mut self, key: &'static str, expected: &str) -> Result<Option<T>, CliError> {
        match self.entry(key) {
            None => Ok(None),
            Some((v, origin)) => v.parse().map(Some).map_err(|_| bad_value(key, &v, &origin, expected)),
        }
    }

    fn real(&mut self, key: &'static str) -> Result<f64, CliError> {
        let v: f64 = self.parse(key, "a number")?.expect("key has a default");
        if !v.is_finite() {
            return Err(CliError::Config(format!("{key}: must be finite, got {v}")));
        }
        Ok(v)
    }

    fn count(&mut self, key: &'static str) -> Result<usize, CliError> {
        Ok(self.parse(key, "a non-negative integer")?.expect("key has a default"))
    }

    fn choice(&mut self, key: &'static str, options: &[&str]) -> Result<String, CliError> {
        let (v, origin) = self.entry(key).expect("key has a default");
        if options.contains(&v.as_str()) {
            Ok(v)
        } else {
            Err(bad_value(key, &v, &origin, &format!("one of {}", options.join(", "))))
        }
    }

    /// `auto` or a value.
    fn auto<T: std::str::FromStr>(&mut self, key: &'static str, expected: &str) -> Result<Option<T>, CliError> {
        let (v, origin) = self.entry(key).expect("key has a default");
        if v == "auto" {
            return Ok(None);
        }
        v.parse().map(Some).map_err(|_| bad_value(key, &v, &origin, &format!("`auto` or {expected}")))
    }
}

fn bad_value(key: &str, value: &str, origin: &Origin, expected: &str) -> CliError {
    let at = match origin {
        Origin::File { line } => format!("line {line}: "),
        Origin::Flag => "flag ".into(),
        Origin::Default => String::new(),
    };
    CliError::Config(format!("{at}invalid value `{value}` for {key}: expected {expected}"))
}

impl ScanSpec {
    pub fn resolve(command: Command, raw: &RawConfig) -> Result<Self, CliError> {
        for (key, e) in &raw.entries {
            if !command.accepts(key) {
                let at = match e.origin {
                    Origin::File { line } => format!("line {line}: "),
                    _ => String::new(),
                };
                return Err(CliError::Config(format!("{at}key `{key}` does not apply to {command}")));
            }
        }
        let mut r = Resolver { command, raw, resolved: BTreeMap::new() };
        let has = |k: &str| command.keys().iter().any(|(key, _)| *key == k);

        let out = match r.entry("out") {
            Some((v, _)) => PathBuf::from(v),
            None => PathBuf::from(format!("{}.csv", command.name())),
        };
        let format = match r.choice("format", &["csv", "csv+svg"])?.as_str() {
            "csv" => Format::Csv,
            _ => Format::CsvSvg,
        };
        if format == Format::CsvSvg && command == Command::PhysicalMap {
            return Err(CliError::Config("format: physical_map has no plot; use format=csv".into()));
        }
        let threads = r.count("threads")?;

        let eta = if has("eta") { r.real("eta")? } else { 0.0 };
        let eps = r.real("eps")?;
        let theta = if has("theta") { r.real("theta")? } else { 0.0 };
        let beta = if has("beta") { r.real("beta")? } else { 0.0 };

        let mut truncation = TruncationPolicy::default();
        if has("window_sigmas") {
            truncation.window_sigmas = r.real("window_sigmas")?;
        }
        if has("term_floor") {
            truncation.term_floor = r.real("term_floor")?;
        }
        if has("m_cut") {
            truncation.m_cut = r.auto("m_cut", "a non-negative integer")?;
        }
        truncation.validate().map_err(|e| CliError::Config(e.to_string()))?;

        let grid = match command.axis() {
            None => None,
            Some(axis) => {
                let (v, origin) = r.entry("axis").expect("axis has a default");
                if v != axis {
                    return Err(bad_value("axis", &v, &origin, &format!("`{axis}` for {command}")));
                }
                let steps = r.count("steps")?;
                if steps < 2 {
                    return Err(CliError::Config(format!("steps: must be at least 2, got {steps}")));
                }
                let (lo, hi) = if command == Command::LmDensity {
                    (
                        r.auto::<u32>("lo", "an integer")?.map(f64::from),
                        r.auto::<u32>("hi", "an integer")?.map(f64::from),
                    )
                } else {
                    (Some(r.real("lo")?), Some(r.real("hi")?))
                };
                match (lo, hi) {
                    (Some(lo), Some(hi)) => {
                        if !(lo < hi) {
                            return Err(CliError::Config(format!("lo: must be below hi, got lo = {lo}, hi = {hi}")));
                        }
                        Some(Grid { lo, hi, steps })
                    }
                    (None, None) => Some(Grid { lo: f64::NAN, hi: f64::NAN, steps }),
                    _ => return Err(CliError::Config("lo/hi: give both or neither for lm_density".into())),
                }
            }
        };

        let phi_steps = if has("phi_steps") { r.count("phi_steps")? } else { 0 };
        if has("phi_steps") && phi_steps < 9 {
            return Err(CliError::Config(format!("phi_steps: must be at least 9, got {phi_steps}")));
        }

        let delta = if has("delta_policy") {
            let mut options = vec!["zero", "maximize", "fixed"];
            if command.allows_origin_delta() {
                options.push("maximize_at_origin");
            }
            let explicit_policy = raw.get("delta_policy").is_some();
            let fixed: Option<f64> = r.parse("delta", "a number")?;
            let policy = r.choice("delta_policy", &options)?;
            match (policy.as_str(), fixed) {
                (_, Some(d)) if !explicit_policy => {
                    r.resolved.insert("delta_policy".into(), (Some("fixed".into()), Origin::Default));
                    DeltaChoice::Fixed(d)
                }
                ("fixed", Some(d)) => DeltaChoice::Fixed(d),
                ("fixed", None) => {
                    return Err(CliError::Config("delta: delta_policy=fixed needs a delta value".into()))
                }
                (p, Some(_)) => {
                    return Err(CliError::Config(format!("delta: only used with delta_policy=fixed, not {p}")))
                }
                ("zero", None) => DeltaChoice::Zero,
                ("maximize", None) => DeltaChoice::Maximize,
                _ => DeltaChoice::MaximizeAtOrigin,
            }
        } else {
            DeltaChoice::Zero
        };

        let source = if has("source") {
            match r.choice("source", &["exact", "small_angle", "uniform_m0"])?.as_str() {
                "exact" => WignerSource::Exact,
                "small_angle" => WignerSource::SmallAngle,
                _ => WignerSource::UniformM0,
            }
        } else {
            WignerSource::Exact
        };
        let kernel = if has("kernel") {
            match r.choice("kernel", &["auto", "small_angle", "exact", "general_small_angle"])?.as_str() {
                "auto" => KernelChoice::Auto,
                "small_angle" => KernelChoice::SmallAngle,
                "exact" => KernelChoice::General(WignerSource::Exact),
                _ => KernelChoice::General(WignerSource::SmallAngle),
            }
        } else {
            KernelChoice::Auto
        };

        let (beta_max, n_beta, n_phi) =
            if has("beta_max") { (r.real("beta_max")?, r.count("n_beta")?, r.count("n_phi")?) } else { (3.0, 32, 16) };

        let physical = if has("z1") {
            PhysicalParams {
                z1: r.parse("z1", "a positive integer")?.expect("default"),
                z2: r.parse("z2", "a positive integer")?.expect("default"),
                kinetic_energy: r.real("energy")?,
                projectile_mass: r.real("mass")?,
                eps,
            }
        } else {
            PhysicalParams { z1: 0, z2: 0, kinetic_energy: 0.0, projectile_mass: 0.0, eps }
        };

        Ok(ScanSpec {
            command,
            eta,
            eps,
            theta,
            beta,
            grid,
            phi_steps,
            delta,
            source,
            kernel,
            truncation,
            delta_search: DeltaSearch::default(),
            beta_max,
            n_beta,
            n_phi,
            physical,
            out,
            format,
            threads,
            resolved: r.resolved,
        })
    }
}
