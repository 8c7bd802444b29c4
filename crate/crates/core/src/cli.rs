//! `gauss-factor` command-line front end.
//!
//! Exit codes: `0` success, `1` wave-packet mode found nothing for a
//! composite input, `2` usage or domain error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::gauss::{gauss_closed, gauss_direct};
use crate::numtheory::brute_factor;
use crate::numtheory::{isqrt, primes_up_to};
use crate::output::{float, Format, OutputRecord};
use crate::rotor::{extract_factors, scan};
use crate::wavepacket::{
    detect_factor_candidates, riddle_trace, scan_candidates, DetectorConfig, WavePacketSpec, DEFAULT_DELTA_M,
};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOTHING_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gauss-factor",
    version,
    about = "Factor integers from quadratic-phase autocorrelation functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the normalized Gauss sum G(a, b)
    Gauss(GaussArgs),
    /// Rotor autocorrelation for n = 1..N
    Scan(ScanArgs),
    /// Factor N with the rotor scan or the wave-packet riddle
    Factor(FactorArgs),
    /// Wave-packet |S|^2 traces around candidate integers
    Riddle(RiddleArgs),
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Closed,
    Both,
}

#[derive(Debug, Args)]
struct GaussArgs {
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    #[arg(long)]
    b: u64,
    /// Defaults to `both` for odd b and `direct` for even b
    #[arg(long, value_enum)]
    method: Option<Method>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long = "n")]
    n: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Rotor,
    Wavepacket,
}

#[derive(Debug, Args)]
struct DetectorArgs {
    /// Gaussian width of the wave packet
    #[arg(long, default_value_t = DEFAULT_DELTA_M)]
    dm: f64,
    /// Half-width of the time window around each candidate
    #[arg(long, default_value_t = DetectorConfig::default().half_window)]
    window: f64,
    /// Samples per trace (odd)
    #[arg(long, default_value_t = DetectorConfig::default().samples)]
    samples: usize,
    /// Largest relative asymmetry accepted for a flag
    #[arg(long, default_value_t = DetectorConfig::default().sym_tol)]
    sym_tol: f64,
}

#[derive(Debug, Args)]
struct FactorArgs {
    #[arg(long = "n")]
    n: u64,
    #[arg(long, value_enum, default_value = "rotor")]
    mode: Mode,
    #[command(flatten)]
    detector: DetectorArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct RiddleArgs {
    #[arg(long = "n")]
    n: u64,
    /// Comma-separated integers; defaults to the primes up to sqrt(N)
    #[arg(long, value_delimiter = ',')]
    candidates: Vec<u64>,
    #[command(flatten)]
    detector: DetectorArgs,
    #[command(flatten)]
    output: OutputArgs,
}

/// A finished command: the record to print and the exit code.
struct Outcome {
    record: OutputRecord,
    summary: Option<String>,
    code: i32,
}

impl Outcome {
    fn ok(record: OutputRecord) -> Self {
        Outcome {
            record,
            summary: None,
            code: EXIT_OK,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let (result, output) = match &cli.command {
        Command::Gauss(a) => (cmd_gauss(a), &a.output),
        Command::Scan(a) => (cmd_scan(a), &a.output),
        Command::Factor(a) => (cmd_factor(a), &a.output),
        Command::Riddle(a) => (cmd_riddle(a), &a.output),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut text = outcome.record.render(output.format);
    if output.format == Format::Table {
        if let Some(summary) = &outcome.summary {
            text = format!("{summary}\n\n{text}");
        }
    }
    let written = match &output.out {
        Some(path) => fs::write(path, text.as_bytes()).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_USAGE;
    }
    outcome.code
}

fn cmd_gauss(args: &GaussArgs) -> Result<Outcome, Error> {
    let method = args
        .method
        .unwrap_or(if args.b % 2 == 1 { Method::Both } else { Method::Direct });
    let mut rec = OutputRecord::new("gauss", &["method", "re", "im", "mod2", "coefficient", "reduced_b"]);
    rec.param("a", args.a).param("b", args.b).param(
        "method",
        match method {
            Method::Direct => "direct",
            Method::Closed => "closed",
            Method::Both => "both",
        },
    );

    let closed = match method {
        Method::Closed | Method::Both => Some(gauss_closed(args.a, args.b)?),
        Method::Direct => None,
    };
    let direct = match method {
        Method::Direct | Method::Both => Some(gauss_direct(args.a, args.b)?),
        Method::Closed => None,
    };
    if let Some(g) = direct {
        rec.push_row([
            ("method", Value::from("direct")),
            ("re", float(g.re)),
            ("im", float(g.im)),
            ("mod2", float(g.norm_sqr())),
        ]);
    }
    if let Some(v) = closed {
        let g = v.to_complex();
        rec.push_row([
            ("method", Value::from("closed")),
            ("re", float(g.re)),
            ("im", float(g.im)),
            ("mod2", float(v.modulus_squared())),
            ("coefficient", Value::from(v.coefficient.label())),
            ("reduced_b", Value::from(v.denominator)),
        ]);
    }
    if let (Some(g), Some(v)) = (direct, closed) {
        let diff = g - v.to_complex();
        rec.push_row([
            ("method", Value::from("difference")),
            ("re", float(diff.re.abs())),
            ("im", float(diff.im.abs())),
        ]);
    }
    Ok(Outcome::ok(rec))
}

fn cmd_scan(args: &ScanArgs) -> Result<Outcome, Error> {
    let rows = scan(args.n)?;
    let mut rec = OutputRecord::new("scan", &["n", "re", "im", "mod2", "gcd", "class"]);
    rec.param("n", args.n);
    for r in rows {
        rec.push_row([
            ("n", Value::from(r.n)),
            ("re", float(r.re)),
            ("im", float(r.im)),
            ("mod2", float(r.mod2)),
            ("gcd", Value::from(r.d)),
            ("class", Value::from(r.classification.map_or("none", |c| c.label()))),
        ]);
    }
    Ok(Outcome::ok(rec))
}

fn detector_setup(n: u64, d: &DetectorArgs) -> Result<(WavePacketSpec, DetectorConfig), Error> {
    let spec = WavePacketSpec::new(n, d.dm)?;
    let config = DetectorConfig {
        half_window: d.window,
        samples: d.samples,
        sym_tol: d.sym_tol,
    };
    if !(config.half_window.is_finite() && config.half_window > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "--window must be positive, got {}",
            config.half_window
        )));
    }
    if config.samples.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "--samples must be odd, got {}",
            config.samples
        )));
    }
    if !(config.sym_tol.is_finite() && config.sym_tol >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "--sym-tol must be non-negative, got {}",
            config.sym_tol
        )));
    }
    Ok((spec, config))
}

fn cmd_factor(args: &FactorArgs) -> Result<Outcome, Error> {
    if args.n < 2 {
        return Err(Error::InvalidParameter(format!(
            "cannot factor N = {}; need N >= 2",
            args.n
        )));
    }
    match args.mode {
        Mode::Rotor => factor_rotor(args.n),
        Mode::Wavepacket => factor_wavepacket(args),
    }
}

fn factor_rotor(n: u64) -> Result<Outcome, Error> {
    let report = extract_factors(n)?;
    let mut rec = OutputRecord::new("factor", &["prime", "exponent", "evidence_n", "evidence_d", "signal"]);
    rec.param("n", n)
        .param("mode", "rotor")
        .param("two_exponent", report.two_exponent);
    rec.param("prime", report.is_prime());
    if report.two_exponent > 0 {
        rec.push_row([
            ("prime", Value::from(2)),
            ("exponent", Value::from(report.two_exponent)),
            ("signal", Value::from("strip_twos")),
        ]);
    }
    for &(p, e) in &report.odd_factors {
        let mut cells = vec![("prime", Value::from(p)), ("exponent", Value::from(e))];
        if let Some(ev) = report.evidence.iter().find(|ev| ev.d == p) {
            cells.push(("evidence_n", Value::from(ev.n)));
            cells.push(("evidence_d", Value::from(ev.d)));
            cells.push(("signal", Value::from(ev.part.label())));
        }
        rec.push_row(cells);
    }
    let summary = if report.is_prime() {
        format!("{n} is prime")
    } else {
        let parts: Vec<String> = report
            .factors()
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        format!("{n} = {}", parts.join(" x "))
    };
    Ok(Outcome {
        record: rec,
        summary: Some(summary),
        code: EXIT_OK,
    })
}

fn factor_wavepacket(args: &FactorArgs) -> Result<Outcome, Error> {
    let (spec, config) = detector_setup(args.n, &args.detector)?;
    let verdicts = scan_candidates(&spec, &config)?;
    let mut rec = OutputRecord::new("factor", &["ell", "flagged", "peak_score", "asymmetry"]);
    rec.param("n", args.n)
        .param("mode", "wavepacket")
        .param("dm", float(args.detector.dm))
        .param("window", float(config.half_window))
        .param("samples", config.samples)
        .param("sym_tol", float(config.sym_tol));
    for v in &verdicts {
        rec.push_row([
            ("ell", Value::from(v.ell)),
            ("flagged", Value::from(v.flagged)),
            ("peak_score", float(v.peak_score)),
            ("asymmetry", float(v.asymmetry)),
        ]);
    }
    let flagged: Vec<String> = verdicts
        .iter()
        .filter(|v| v.flagged)
        .map(|v| v.ell.to_string())
        .collect();
    let composite = brute_factor(args.n).map(|f| !f.is_prime()).unwrap_or(true);
    let (summary, code) = if !flagged.is_empty() {
        (format!("flagged: {}", flagged.join(", ")), EXIT_OK)
    } else if composite {
        (
            format!("no candidate flagged for composite {}", args.n),
            EXIT_NOTHING_FOUND,
        )
    } else {
        (format!("{} is prime; no candidate flagged", args.n), EXIT_OK)
    };
    Ok(Outcome {
        record: rec,
        summary: Some(summary),
        code,
    })
}

fn cmd_riddle(args: &RiddleArgs) -> Result<Outcome, Error> {
    let (spec, config) = detector_setup(args.n, &args.detector)?;
    let candidates = if args.candidates.is_empty() {
        primes_up_to(isqrt(args.n))
    } else {
        args.candidates.clone()
    };
    if candidates.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "no default candidates for N = {}; pass --candidates",
            args.n
        )));
    }
    let verdicts = detect_factor_candidates(&spec, &candidates, &config)?;
    let mut rec = OutputRecord::new("riddle", &["ell", "dtau", "mod2"]);
    rec.param("n", args.n)
        .param("dm", float(args.detector.dm))
        .param("window", float(config.half_window))
        .param("samples", config.samples)
        .param("candidates", candidates.clone());
    for &ell in &candidates {
        let trace = riddle_trace(&spec, ell, config.half_window, config.samples)?;
        for (dtau, mod2) in trace.offsets.iter().zip(&trace.values) {
            rec.push_row([
                ("ell", Value::from(ell)),
                ("dtau", float(*dtau)),
                ("mod2", float(*mod2)),
            ]);
        }
    }
    let flagged: Vec<String> = verdicts
        .iter()
        .filter(|v| v.flagged)
        .map(|v| v.ell.to_string())
        .collect();
    let summary = format!(
        "symmetric maximum at: {}",
        if flagged.is_empty() {
            "none".to_string()
        } else {
            flagged.join(", ")
        }
    );
    Ok(Outcome {
        record: rec,
        summary: Some(summary),
        code: EXIT_OK,
    })
}
