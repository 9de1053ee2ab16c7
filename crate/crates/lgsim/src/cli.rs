//! Command-line interface: argument parsing, config-file merging, and the
//! deterministic output formats.
//!
//! Every parameter can come from a config file (one `key=value` per line,
//! `#` starts a comment) or from a flag of the same name; flags override
//! file values. Parsing is strict: unknown keys, malformed values,
//! out-of-range values, and missing required fields each fail with their own
//! exit code so scripts can tell the failure modes apart.

use std::fmt;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::correlations::{k_lg, maximally_mixed, DynamicsParams, LgiResult};
use crate::error::Error;
use crate::halfint::HalfInt;
use crate::measurability::{MeasurabilityParam, MeasurabilityPovm};
use crate::selfcheck;
use crate::sweep::{
    sweep_f_vs_sigma, sweep_k_vs_b, violation_threshold, FSigmaRow, PartitionChoice, SweepRow,
    SweepSpec, ThresholdOutcome,
};

pub const EXIT_IO: i32 = 1;
pub const EXIT_UNKNOWN_KEY: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;
pub const EXIT_OUT_OF_RANGE: i32 = 4;
pub const EXIT_MISSING: i32 = 5;
pub const EXIT_ILL_POSED: i32 = 6;
pub const EXIT_CHECK_FAILED: i32 = 7;

/// CLI failure carrying its exit code; the message goes to stderr.
#[derive(Debug)]
pub enum CliError {
    Io(String),
    UnknownKey(String),
    Malformed(String),
    OutOfRange(String),
    Missing(String),
    IllPosed(String),
    ChecksFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => EXIT_IO,
            CliError::UnknownKey(_) => EXIT_UNKNOWN_KEY,
            CliError::Malformed(_) => EXIT_MALFORMED,
            CliError::OutOfRange(_) => EXIT_OUT_OF_RANGE,
            CliError::Missing(_) => EXIT_MISSING,
            CliError::IllPosed(_) => EXIT_ILL_POSED,
            CliError::ChecksFailed(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(msg) => write!(f, "{msg}"),
            CliError::UnknownKey(msg) => write!(f, "unknown key: {msg}"),
            CliError::Malformed(msg) => write!(f, "malformed value: {msg}"),
            CliError::OutOfRange(msg) => write!(f, "{msg}"),
            CliError::Missing(msg) => write!(f, "missing required field: {msg}"),
            CliError::IllPosed(msg) => write!(f, "{msg}"),
            CliError::ChecksFailed(n) => write!(f, "{n} check(s) failed"),
        }
    }
}

/// Library errors surfacing after configuration are domain failures (exit 4),
/// except ill-posed conditioning (exit 6).
fn domain_error(err: Error) -> CliError {
    match err {
        Error::OutcomeImpossible { .. } => CliError::IllPosed(err.to_string()),
        other => CliError::OutOfRange(other.to_string()),
    }
}

/// Payload of a library parse error, without the variant prefix that the
/// `CliError` display would repeat.
fn parse_detail(err: Error) -> String {
    match err {
        Error::Malformed(inner) => inner,
        other => other.to_string(),
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "lgsim",
    version,
    about = "Leggett-Garg inequality simulator for spin-j systems under \
             measurability-limited parity measurements"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate the Leggett-Garg correlator K at one parameter point
    Klg(RawOptions),
    /// CSV table of K versus b, one section per θ/π value
    SweepKb(RawOptions),
    /// CSV table of the profile values f(0), f(1), f(2) versus σ
    SweepFsigma(RawOptions),
    /// Bisect the measurability threshold b* where |K| = 2 at fixed θ
    Threshold(RawOptions),
    /// Run the internal consistency checks and report PASS/FAIL per check
    Check(RawOptions),
}

/// Raw option strings; values are parsed after merging with the config file
/// so that every diagnostic can name the offending key.
#[derive(Args, Debug, Default, Clone)]
pub struct RawOptions {
    /// Config file with one key=value per line ('#' comments allowed)
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Spin magnitude, e.g. "5/2" or "2"
    #[arg(long)]
    pub j: Option<String>,
    /// Block layout: "edge5_2" or "uniform:<odd size>"
    #[arg(long)]
    pub partition: Option<String>,
    /// Measurability values in [0, 1], comma-separated
    #[arg(long)]
    pub b: Option<String>,
    /// Inclusive measurability grid
    #[arg(long, value_name = "MIN,MAX,STEP")]
    pub b_range: Option<String>,
    /// Gaussian widths σ > 0, comma-separated
    #[arg(long)]
    pub sigma: Option<String>,
    /// Inclusive width grid
    #[arg(long, value_name = "MIN,MAX,STEP")]
    pub sigma_range: Option<String>,
    /// Gap rotation angles as θ/π, comma-separated
    #[arg(long)]
    pub theta_over_pi: Option<String>,
    /// Explicit time gaps, replacing the equal-gap protocol
    #[arg(long, value_name = "DT12,DT23,DT34")]
    pub gaps: Option<String>,
    /// J_x drive frequency ω (default 1)
    #[arg(long)]
    pub omega: Option<String>,
    /// J² frequency Ω (default 0)
    #[arg(long)]
    pub big_omega: Option<String>,
    /// Write output to this file instead of stdout
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Significant digits in numeric output, 1 to 17 (default 12)
    #[arg(long)]
    pub precision: Option<String>,
}

const CONFIG_KEYS: [&str; 12] = [
    "j",
    "partition",
    "b",
    "b-range",
    "sigma",
    "sigma-range",
    "theta-over-pi",
    "gaps",
    "omega",
    "big-omega",
    "output",
    "precision",
];

/// Strict key=value parser for config files. Returns pairs in file order;
/// duplicate and unknown keys are errors.
fn parse_config_file(path: &PathBuf) -> Result<Vec<(String, String)>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
    let mut pairs: Vec<(String, String)> = Vec::new();
    for (line_no, raw_line) in text.lines().enumerate() {
        let line = match raw_line.split_once('#') {
            Some((before, _)) => before.trim(),
            None => raw_line.trim(),
        };
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Malformed(format!(
                "config line {}: expected key=value, got {raw_line:?}",
                line_no + 1
            ))
        })?;
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(CliError::UnknownKey(format!(
                "'{key}' (config line {})",
                line_no + 1
            )));
        }
        if pairs.iter().any(|(k, _)| *k == key) {
            return Err(CliError::Malformed(format!(
                "config line {}: duplicate key '{key}'",
                line_no + 1
            )));
        }
        pairs.push((key, value));
    }
    Ok(pairs)
}

/// Raw options after overlaying CLI flags onto config-file values.
fn merge(raw: &RawOptions) -> Result<RawOptions, CliError> {
    let mut merged = RawOptions::default();
    if let Some(path) = &raw.config {
        for (key, value) in parse_config_file(path)? {
            match key.as_str() {
                "j" => merged.j = Some(value),
                "partition" => merged.partition = Some(value),
                "b" => merged.b = Some(value),
                "b-range" => merged.b_range = Some(value),
                "sigma" => merged.sigma = Some(value),
                "sigma-range" => merged.sigma_range = Some(value),
                "theta-over-pi" => merged.theta_over_pi = Some(value),
                "gaps" => merged.gaps = Some(value),
                "omega" => merged.omega = Some(value),
                "big-omega" => merged.big_omega = Some(value),
                "output" => merged.output = Some(PathBuf::from(value)),
                "precision" => merged.precision = Some(value),
                _ => unreachable!("key validated against CONFIG_KEYS"),
            }
        }
    }
    let overlay = raw.clone();
    merged.j = overlay.j.or(merged.j);
    merged.partition = overlay.partition.or(merged.partition);
    merged.b = overlay.b.or(merged.b);
    merged.b_range = overlay.b_range.or(merged.b_range);
    merged.sigma = overlay.sigma.or(merged.sigma);
    merged.sigma_range = overlay.sigma_range.or(merged.sigma_range);
    merged.theta_over_pi = overlay.theta_over_pi.or(merged.theta_over_pi);
    merged.gaps = overlay.gaps.or(merged.gaps);
    merged.omega = overlay.omega.or(merged.omega);
    merged.big_omega = overlay.big_omega.or(merged.big_omega);
    merged.output = overlay.output.or(merged.output);
    merged.precision = overlay.precision.or(merged.precision);
    Ok(merged)
}

fn parse_f64(key: &str, text: &str) -> Result<f64, CliError> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| CliError::Malformed(format!("key '{key}': {text:?} is not a number")))?;
    if !v.is_finite() {
        return Err(CliError::OutOfRange(format!("key '{key}': value must be finite")));
    }
    Ok(v)
}

fn parse_list(key: &str, text: &str) -> Result<Vec<f64>, CliError> {
    let items: Vec<&str> = text.split(',').collect();
    if items.iter().any(|s| s.trim().is_empty()) {
        return Err(CliError::Malformed(format!(
            "key '{key}': expected a comma-separated list of numbers, got {text:?}"
        )));
    }
    items.iter().map(|s| parse_f64(key, s)).collect()
}

/// Expands "min,max,step" into an inclusive ascending grid. The last point is
/// clamped to max so endpoint rounding cannot push it past the bound.
fn parse_range(key: &str, text: &str) -> Result<Vec<f64>, CliError> {
    let parts = parse_list(key, text)?;
    let [min, max, step]: [f64; 3] = parts.try_into().map_err(|_| {
        CliError::Malformed(format!("key '{key}': expected exactly min,max,step"))
    })?;
    if step <= 0.0 {
        return Err(CliError::OutOfRange(format!(
            "key '{key}': step must be positive, got {step}"
        )));
    }
    if min > max {
        return Err(CliError::OutOfRange(format!(
            "key '{key}': min {min} exceeds max {max}"
        )));
    }
    let count = ((max - min) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| (min + i as f64 * step).min(max)).collect())
}

fn parse_precision(text: &str) -> Result<usize, CliError> {
    let p: usize = text.trim().parse().map_err(|_| {
        CliError::Malformed(format!("key 'precision': {text:?} is not a positive integer"))
    })?;
    if !(1..=17).contains(&p) {
        return Err(CliError::OutOfRange(format!(
            "key 'precision': must lie in [1, 17], got {p}"
        )));
    }
    Ok(p)
}

/// Fully parsed configuration; presence requirements are checked per command.
struct TypedConfig {
    j: Option<HalfInt>,
    partition: Option<PartitionChoice>,
    b_list: Option<Vec<f64>>,
    sigma_list: Option<Vec<f64>>,
    theta_over_pi: Option<Vec<f64>>,
    gaps: Option<[f64; 3]>,
    omega: f64,
    big_omega: f64,
    output: Option<PathBuf>,
    precision: usize,
}

impl TypedConfig {
    fn from_raw(raw: &RawOptions) -> Result<Self, CliError> {
        let merged = merge(raw)?;

        let j = merged
            .j
            .as_deref()
            .map(|s| {
                s.parse::<HalfInt>()
                    .map_err(|e| CliError::Malformed(format!("key 'j': {}", parse_detail(e))))
            })
            .transpose()?;
        if let Some(j) = j {
            if j.twice() < 0 {
                return Err(CliError::OutOfRange(format!(
                    "key 'j': spin must be ≥ 0, got {j}"
                )));
            }
        }

        let partition = merged
            .partition
            .as_deref()
            .map(|s| {
                s.parse::<PartitionChoice>().map_err(|e| {
                    CliError::Malformed(format!("key 'partition': {}", parse_detail(e)))
                })
            })
            .transpose()?;

        if merged.b.is_some() && merged.b_range.is_some() {
            return Err(CliError::OutOfRange(
                "keys 'b' and 'b-range' conflict; give one of them".into(),
            ));
        }
        if merged.sigma.is_some() && merged.sigma_range.is_some() {
            return Err(CliError::OutOfRange(
                "keys 'sigma' and 'sigma-range' conflict; give one of them".into(),
            ));
        }
        let b_list = match (&merged.b, &merged.b_range) {
            (Some(text), _) => Some(parse_list("b", text)?),
            (_, Some(text)) => Some(parse_range("b-range", text)?),
            _ => None,
        };
        if let Some(bs) = &b_list {
            if let Some(bad) = bs.iter().find(|b| !(0.0..=1.0).contains(*b)) {
                return Err(CliError::OutOfRange(format!(
                    "key 'b': values must lie in [0, 1], got {bad}"
                )));
            }
        }
        let sigma_list = match (&merged.sigma, &merged.sigma_range) {
            (Some(text), _) => Some(parse_list("sigma", text)?),
            (_, Some(text)) => Some(parse_range("sigma-range", text)?),
            _ => None,
        };
        if let Some(sigmas) = &sigma_list {
            if let Some(bad) = sigmas.iter().find(|s| **s <= 0.0) {
                return Err(CliError::OutOfRange(format!(
                    "key 'sigma': widths must be positive, got {bad}"
                )));
            }
        }
        if b_list.is_some() && sigma_list.is_some() {
            return Err(CliError::OutOfRange(
                "keys 'b' and 'sigma' conflict; the width determines b".into(),
            ));
        }

        let theta_over_pi = merged
            .theta_over_pi
            .as_deref()
            .map(|s| parse_list("theta-over-pi", s))
            .transpose()?;

        let gaps = merged
            .gaps
            .as_deref()
            .map(|s| -> Result<[f64; 3], CliError> {
                let parts = parse_list("gaps", s)?;
                let gaps: [f64; 3] = parts.try_into().map_err(|_| {
                    CliError::Malformed("key 'gaps': expected exactly dt12,dt23,dt34".into())
                })?;
                if let Some(bad) = gaps.iter().find(|g| **g <= 0.0) {
                    return Err(CliError::OutOfRange(format!(
                        "key 'gaps': gaps must be positive, got {bad}"
                    )));
                }
                Ok(gaps)
            })
            .transpose()?;

        let omega = match merged.omega.as_deref() {
            Some(text) => parse_f64("omega", text)?,
            None => 1.0,
        };
        let big_omega = match merged.big_omega.as_deref() {
            Some(text) => parse_f64("big-omega", text)?,
            None => 0.0,
        };
        let precision = match merged.precision.as_deref() {
            Some(text) => parse_precision(text)?,
            None => 12,
        };

        Ok(TypedConfig {
            j,
            partition,
            b_list,
            sigma_list,
            theta_over_pi,
            gaps,
            omega,
            big_omega,
            output: merged.output,
            precision,
        })
    }

    fn require_j(&self) -> Result<HalfInt, CliError> {
        self.j.ok_or_else(|| CliError::Missing("'j'".into()))
    }

    fn require_partition(&self) -> Result<PartitionChoice, CliError> {
        self.partition.ok_or_else(|| CliError::Missing("'partition'".into()))
    }

    /// The b values for this run, converting widths when σ was given instead.
    fn b_values(&self) -> Result<Vec<f64>, CliError> {
        if let Some(bs) = &self.b_list {
            return Ok(bs.clone());
        }
        if let Some(sigmas) = &self.sigma_list {
            return sigmas
                .iter()
                .map(|&s| Ok(MeasurabilityParam::from_sigma(s).map_err(domain_error)?.b()))
                .collect();
        }
        Err(CliError::Missing("'b' (or 'b-range' or 'sigma')".into()))
    }

    fn single(&self, key: &str, values: Vec<f64>) -> Result<f64, CliError> {
        match values.as_slice() {
            [v] => Ok(*v),
            more => Err(CliError::OutOfRange(format!(
                "key '{key}': this command takes exactly one value, got {}",
                more.len()
            ))),
        }
    }
}

/// Formats with `sig` significant digits, keeping trailing zeros, switching
/// to exponential notation outside the %g positional window.
pub fn format_sig(x: f64, sig: usize) -> String {
    assert!(sig >= 1, "at least one significant digit");
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exponential = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp_text) = exponential.split_once('e').expect("exponential form");
    let exp: i32 = exp_text.parse().expect("integer exponent");
    if exp < -4 || exp >= sig as i32 {
        return format!("{mantissa}e{exp}");
    }
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp >= 0 {
        let int_len = exp as usize + 1;
        out.push_str(&digits[..int_len]);
        if int_len < digits.len() {
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    } else {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    }
    out
}

fn kb_csv(rows: &[SweepRow], sig: usize) -> String {
    let mut text = String::from("theta_over_pi,b,C_theta,C_3theta,K,violated\n");
    for r in rows {
        text.push_str(&format!(
            "{},{},{},{},{},{}\n",
            format_sig(r.theta_over_pi, sig),
            format_sig(r.b, sig),
            format_sig(r.c_theta, sig),
            format_sig(r.c_3theta, sig),
            format_sig(r.k, sig),
            r.violated
        ));
    }
    text
}

fn fsigma_csv(rows: &[FSigmaRow], sig: usize) -> String {
    let mut text = String::from("sigma,a,b,c\n");
    for r in rows {
        text.push_str(&format!(
            "{},{},{},{}\n",
            format_sig(r.sigma, sig),
            format_sig(r.a, sig),
            format_sig(r.b, sig),
            format_sig(r.c, sig)
        ));
    }
    text
}

fn klg_line(result: &LgiResult, sig: usize) -> String {
    format!(
        "theta_over_pi={} b={} C12={} C23={} C34={} C14={} K={} violated={}\n",
        format_sig(result.theta / std::f64::consts::PI, sig),
        format_sig(result.b, sig),
        format_sig(result.c12, sig),
        format_sig(result.c23, sig),
        format_sig(result.c34, sig),
        format_sig(result.c14, sig),
        format_sig(result.k, sig),
        result.violated
    )
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_klg(cfg: &TypedConfig) -> Result<i32, CliError> {
    let j = cfg.require_j()?;
    let partition = cfg.require_partition()?;
    let b = cfg.single("b", cfg.b_values()?)?;
    if cfg.theta_over_pi.is_some() && cfg.gaps.is_some() {
        return Err(CliError::OutOfRange(
            "keys 'theta-over-pi' and 'gaps' conflict; give one of them".into(),
        ));
    }
    let gaps = match cfg.gaps {
        Some(gaps) => gaps,
        None => {
            let theta_over_pi = cfg.single(
                "theta-over-pi",
                cfg.theta_over_pi
                    .clone()
                    .ok_or_else(|| CliError::Missing("'theta-over-pi' (or 'gaps')".into()))?,
            )?;
            if cfg.omega == 0.0 {
                return Err(CliError::OutOfRange(
                    "key 'omega': the equal-gap protocol needs a nonzero drive".into(),
                ));
            }
            let dt = theta_over_pi * std::f64::consts::PI / cfg.omega;
            [dt; 3]
        }
    };
    let sys = crate::spin::SpinSystem::new(j).map_err(domain_error)?;
    let povm = MeasurabilityPovm::build(
        partition.build(sys).map_err(domain_error)?,
        MeasurabilityParam::from_b(b).map_err(domain_error)?,
    );
    let params = DynamicsParams::new(j, cfg.omega, cfg.big_omega).map_err(domain_error)?;
    let rho0 = maximally_mixed(sys);
    let result = k_lg(&povm, &rho0, &params, gaps).map_err(domain_error)?;
    emit(&klg_line(&result, cfg.precision), &cfg.output)?;
    Ok(0)
}

fn run_sweep_kb(cfg: &TypedConfig) -> Result<i32, CliError> {
    let spec = SweepSpec {
        j: cfg.require_j()?,
        partition: cfg.require_partition()?,
        theta_over_pi: cfg
            .theta_over_pi
            .clone()
            .ok_or_else(|| CliError::Missing("'theta-over-pi'".into()))?,
        b_grid: cfg.b_values()?,
    };
    let rows = sweep_k_vs_b(&spec).map_err(domain_error)?;
    emit(&kb_csv(&rows, cfg.precision), &cfg.output)?;
    Ok(0)
}

fn run_sweep_fsigma(cfg: &TypedConfig) -> Result<i32, CliError> {
    let sigmas = cfg
        .sigma_list
        .clone()
        .ok_or_else(|| CliError::Missing("'sigma' (or 'sigma-range')".into()))?;
    let rows = sweep_f_vs_sigma(&sigmas).map_err(domain_error)?;
    emit(&fsigma_csv(&rows, cfg.precision), &cfg.output)?;
    Ok(0)
}

fn run_threshold(cfg: &TypedConfig) -> Result<i32, CliError> {
    let j = cfg.require_j()?;
    let partition = cfg.require_partition()?;
    let theta_over_pi = cfg.single(
        "theta-over-pi",
        cfg.theta_over_pi
            .clone()
            .ok_or_else(|| CliError::Missing("'theta-over-pi'".into()))?,
    )?;
    let theta = theta_over_pi * std::f64::consts::PI;
    let outcome = violation_threshold(j, partition, theta).map_err(domain_error)?;
    let text = match outcome {
        ThresholdOutcome::Found(b_star) => {
            format!("b_star={}\n", format_sig(b_star, cfg.precision))
        }
        ThresholdOutcome::Absent => "b_star=absent\n".to_string(),
        ThresholdOutcome::Ambiguous(brackets) => {
            let list: Vec<String> = brackets
                .iter()
                .map(|(lo, hi)| {
                    format!("[{},{}]", format_sig(*lo, cfg.precision), format_sig(*hi, cfg.precision))
                })
                .collect();
            format!("b_star=ambiguous brackets={}\n", list.join(";"))
        }
    };
    emit(&text, &cfg.output)?;
    Ok(0)
}

fn run_check(cfg: &TypedConfig) -> Result<i32, CliError> {
    let outcomes = selfcheck::run_all();
    let mut text = String::new();
    let mut failed = 0usize;
    for outcome in &outcomes {
        if outcome.passed {
            text.push_str(&format!("PASS {} ({})\n", outcome.name, outcome.detail));
        } else {
            failed += 1;
            text.push_str(&format!("FAIL {}: {}\n", outcome.name, outcome.detail));
        }
    }
    text.push_str(&format!(
        "checks: {} passed, {} failed\n",
        outcomes.len() - failed,
        failed
    ));
    emit(&text, &cfg.output)?;
    if failed > 0 {
        Err(CliError::ChecksFailed(failed))
    } else {
        Ok(0)
    }
}

fn run_command(command: Command) -> Result<i32, CliError> {
    let (raw, handler): (&RawOptions, fn(&TypedConfig) -> Result<i32, CliError>) =
        match &command {
            Command::Klg(raw) => (raw, run_klg),
            Command::SweepKb(raw) => (raw, run_sweep_kb),
            Command::SweepFsigma(raw) => (raw, run_sweep_fsigma),
            Command::Threshold(raw) => (raw, run_threshold),
            Command::Check(raw) => (raw, run_check),
        };
    let cfg = TypedConfig::from_raw(raw)?;
    handler(&cfg)
}

/// Entry point for the binary; returns the process exit code.
pub fn execute() -> i32 {
    use clap::error::ErrorKind;
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_UNKNOWN_KEY,
            };
            let _ = e.print();
            return code;
        }
    };
    match run_command(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
