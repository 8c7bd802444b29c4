//! Gaussian wave packet in a quadratic spectrum.
//!
//! With the spectrum expanded to second order around the packet centre and
//! the revival time fixed at `T = N * T_cl`, the autocorrelation in units of
//! the classical period `tau = t / T_cl` is
//!
//! ```text
//! S_N(tau) = sum_m W_m exp(-2 pi i (m + m^2 / N) tau),   W_m ~ exp(-m^2 / (2 dm^2))
//! ```
//!
//! with the global phase of the mean energy dropped. At integer `tau = l`
//! the packet undergoes a fractional revival; when `l` divides `N` the
//! revival humps are separated enough that `|S|^2` shows a clean symmetric
//! maximum at `l`.

use std::f64::consts::TAU;

use crate::numtheory::{isqrt, primes_up_to};
use crate::{ComplexSample, Error, Result};

/// Default Gaussian width of the weights.
pub const DEFAULT_DELTA_M: f64 = 10.0;

/// Truncation at this many widths leaves a tail mass around `2e-9`.
const DEFAULT_TRUNCATION_WIDTHS: f64 = 6.0;
/// Smallest truncation accepted; the tail mass is below `1e-6`.
const MIN_TRUNCATION_WIDTHS: f64 = 5.0;

#[derive(Debug, Clone, PartialEq)]
pub struct WavePacketSpec {
    /// Encoded number `N = T / T_cl`.
    pub modulus: u64,
    pub delta_m: f64,
    /// Weights cover `m` in `-m_max..=m_max`.
    pub m_max: u32,
}

impl WavePacketSpec {
    pub fn new(modulus: u64, delta_m: f64) -> Result<Self> {
        Self::validate_width(delta_m)?;
        let m_max = (DEFAULT_TRUNCATION_WIDTHS * delta_m).ceil().max(1.0);
        if m_max > u32::MAX as f64 {
            return Err(Error::OutOfRange(format!("delta_m = {delta_m}")));
        }
        Self::with_m_max(modulus, delta_m, m_max as u32)
    }

    pub fn with_m_max(modulus: u64, delta_m: f64, m_max: u32) -> Result<Self> {
        Self::validate_width(delta_m)?;
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if m_max == 0 || (m_max as f64) < MIN_TRUNCATION_WIDTHS * delta_m {
            return Err(Error::InvalidParameter(format!(
                "m_max = {m_max} must be at least {MIN_TRUNCATION_WIDTHS} * delta_m = {}",
                MIN_TRUNCATION_WIDTHS * delta_m
            )));
        }
        Ok(WavePacketSpec {
            modulus,
            delta_m,
            m_max,
        })
    }

    fn validate_width(delta_m: f64) -> Result<()> {
        if !(delta_m.is_finite() && delta_m > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "delta_m must be positive, got {delta_m}"
            )));
        }
        Ok(())
    }
}

/// Normalized Gaussian weights `(m, W_m)` for `m = -m_max..=m_max`.
pub fn weights(spec: &WavePacketSpec) -> Vec<(i64, f64)> {
    let m_max = spec.m_max as i64;
    let two_var = 2.0 * spec.delta_m * spec.delta_m;
    let mut w: Vec<(i64, f64)> = (-m_max..=m_max)
        .map(|m| (m, (-((m * m) as f64) / two_var).exp()))
        .collect();
    let total: f64 = w.iter().map(|&(_, x)| x).sum();
    for (_, x) in &mut w {
        *x /= total;
    }
    w
}

/// Evaluates `S_N(whole + frac)` with the integer part of the time handled
/// exactly: `(m N + m^2) * whole / N` contributes only `(m^2 whole mod N) / N`.
fn evaluate(spec: &WavePacketSpec, w: &[(i64, f64)], whole: i64, frac: f64) -> ComplexSample {
    let modulus = spec.modulus as i128;
    let n = spec.modulus as f64;
    let mut sum = ComplexSample::new(0.0, 0.0);
    for &(m, weight) in w {
        let m2 = (m as i128) * (m as i128);
        let exact = (m2 * whole as i128).rem_euclid(modulus) as f64 / n;
        let mf = m as f64;
        let x = exact + mf * frac + mf * mf * frac / n;
        let (s, c) = (TAU * (x - x.round())).sin_cos();
        sum += ComplexSample::new(weight * c, -weight * s);
    }
    sum
}

fn split_time(tau: f64) -> (i64, f64) {
    let whole = tau.floor();
    (whole as i64, tau - whole)
}

/// `S_N(tau)` for dimensionless time `tau = t / T_cl`.
pub fn autocorrelation(spec: &WavePacketSpec, tau: f64) -> ComplexSample {
    let w = weights(spec);
    let (whole, frac) = split_time(tau);
    evaluate(spec, &w, whole, frac)
}

/// `|S_N(ell + dtau)|^2` sampled on a symmetric grid around an integer.
#[derive(Debug, Clone, PartialEq)]
pub struct RiddleTrace {
    pub center: u64,
    pub offsets: Vec<f64>,
    pub values: Vec<f64>,
}

impl RiddleTrace {
    fn center_index(&self) -> usize {
        self.offsets.len() / 2
    }

    pub fn center_value(&self) -> f64 {
        self.values[self.center_index()]
    }

    /// Whether the `dtau = 0` sample exceeds every other sample.
    pub fn has_strict_central_maximum(&self) -> bool {
        let c = self.center_index();
        let center = self.values[c];
        self.values.iter().enumerate().all(|(i, &v)| i == c || v < center)
    }

    /// `max_k |A(dtau_k) - A(-dtau_k)| / A(0)`.
    pub fn asymmetry(&self) -> f64 {
        let c = self.center_index();
        let center = self.values[c];
        (1..=c)
            .map(|k| (self.values[c + k] - self.values[c - k]).abs())
            .fold(0.0, f64::max)
            / center
    }

    /// `A(0)` over the largest off-centre sample; infinite for a single sample.
    pub fn peak_score(&self) -> f64 {
        let c = self.center_index();
        let rest = self
            .values
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != c)
            .map(|(_, &v)| v)
            .fold(f64::NEG_INFINITY, f64::max);
        if rest == f64::NEG_INFINITY {
            f64::INFINITY
        } else {
            self.values[c] / rest
        }
    }
}

pub fn riddle_trace(spec: &WavePacketSpec, ell: u64, half_window: f64, samples: usize) -> Result<RiddleTrace> {
    if !(half_window.is_finite() && half_window > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "half window must be positive, got {half_window}"
        )));
    }
    if samples.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "sample count must be odd, got {samples}"
        )));
    }
    let whole = i64::try_from(ell).map_err(|_| Error::OutOfRange(format!("ell = {ell}")))?;
    let c = (samples / 2) as i64;
    let offsets: Vec<f64> = (-c..=c)
        .map(|k| if c == 0 { 0.0 } else { half_window * k as f64 / c as f64 })
        .collect();
    let w = weights(spec);
    let values = offsets
        .iter()
        .map(|&dtau| {
            // keep the fractional part in [0, 1) so the exact integer path is used
            let (shift, frac) = split_time(dtau);
            evaluate(spec, &w, whole + shift, frac).norm_sqr()
        })
        .collect();
    Ok(RiddleTrace {
        center: ell,
        offsets,
        values,
    })
}

/// Symmetric-maximum decision rule.
///
/// The defaults look at the central revival hump only: at `dm = 10` a hump
/// has an amplitude width of about `1 / (2 pi dm) = 0.016`, and the window
/// of `+-0.05` stops short of the neighbouring humps at `+-1/q` for the
/// cofactors `q <= 11` seen in the `N = 55` riddle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectorConfig {
    pub half_window: f64,
    pub samples: usize,
    pub sym_tol: f64,
}

impl Default for DetectorConfig {
    fn default() -> Self {
        DetectorConfig {
            half_window: 0.05,
            samples: 201,
            sym_tol: 0.2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CandidateVerdict {
    pub ell: u64,
    pub flagged: bool,
    pub peak_score: f64,
    pub asymmetry: f64,
}

/// Flags `ell` when the `dtau = 0` sample is the strict maximum of its trace
/// and the relative asymmetry stays within `sym_tol`.
pub fn detect_factor_candidates(
    spec: &WavePacketSpec,
    candidates: &[u64],
    config: &DetectorConfig,
) -> Result<Vec<CandidateVerdict>> {
    if candidates.is_empty() {
        return Err(Error::InvalidParameter("no candidates given".into()));
    }
    if config.sym_tol.is_nan() || config.sym_tol < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "sym_tol must be non-negative, got {}",
            config.sym_tol
        )));
    }
    candidates
        .iter()
        .map(|&ell| {
            if ell == 0 {
                return Err(Error::InvalidParameter("candidate 0 is not a positive integer".into()));
            }
            let trace = riddle_trace(spec, ell, config.half_window, config.samples)?;
            let asymmetry = trace.asymmetry();
            Ok(CandidateVerdict {
                ell,
                flagged: trace.has_strict_central_maximum() && asymmetry <= config.sym_tol,
                peak_score: trace.peak_score(),
                asymmetry,
            })
        })
        .collect()
}

/// Runs the riddle on every prime up to `sqrt(N)`, then on the cofactor
/// `N / p` of each flagged prime that divides `N`.
pub fn scan_candidates(spec: &WavePacketSpec, config: &DetectorConfig) -> Result<Vec<CandidateVerdict>> {
    let modulus = spec.modulus;
    let primes = primes_up_to(isqrt(modulus));
    if primes.is_empty() {
        return Ok(Vec::new());
    }
    let mut verdicts = detect_factor_candidates(spec, &primes, config)?;
    let mut cofactors: Vec<u64> = verdicts
        .iter()
        .filter(|v| v.flagged && modulus.is_multiple_of(v.ell))
        .map(|v| modulus / v.ell)
        .filter(|q| *q > 1 && !primes.contains(q))
        .collect();
    cofactors.sort_unstable();
    cofactors.dedup();
    if !cofactors.is_empty() {
        verdicts.extend(detect_factor_candidates(spec, &cofactors, config)?);
    }
    Ok(verdicts)
}
