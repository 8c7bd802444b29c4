//! Quantum-rotor autocorrelation and factor extraction.
//!
//! A rotor prepared in the flat superposition of angular-momentum states
//! `0..N` has autocorrelation
//!
//! ```text
//! S_N(t) = (1/N) * sum_{k=0}^{N-1} exp(-2 pi i k^2 t / T)
//! ```
//!
//! At integer scaled times `n = N t / T` this is the Gauss sum `G(n, N)`.
//! For odd `N` the value depends only on `d = gcd(n, N)`: `|S|^2 = d / N`,
//! and it is purely real or purely imaginary according to whether `N / d`
//! is `1` or `3` mod 4.

use std::f64::consts::TAU;
use std::fmt;

use crate::gauss::{gauss_closed, gauss_direct, reduce, GaussValue, SumClass};
use crate::numtheory::{gcd_unchecked, isqrt, residue_class, strip_twos};
use crate::{ComplexSample, Error, Result};

/// Threshold on `|S|^2 * N` separating coprime rows (value 1) from rows
/// sharing a factor (value >= 3 for odd `N`).
pub const MODULUS_THRESHOLD: f64 = 1.5;

/// Exact value of `S_N(n)` for odd `N`, `None` for even `N`.
pub fn exact_value(modulus: u64, n: i64) -> Result<Option<GaussValue>> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    if modulus.is_multiple_of(2) {
        return Ok(None);
    }
    gauss_closed(n, modulus).map(Some)
}

/// `S_N(n) = G(n mod N, N)`.
pub fn autocorrelation(modulus: u64, n: i64) -> Result<ComplexSample> {
    if let Some(v) = exact_value(modulus, n)? {
        return Ok(v.to_complex());
    }
    // Even N: cancel the common factor first so the direct sum runs over N / d terms.
    let (a, b) = reduce(n, modulus)?;
    if b % 2 == 1 {
        Ok(gauss_closed(a as i64, b)?.to_complex())
    } else {
        gauss_direct(a as i64, b)
    }
}

/// `S_N` at an arbitrary dimensionless time `t / T`.
///
/// Only the fractional part of `t / T` matters. Precision degrades like
/// `N^2 * eps` for very large `N`.
pub fn autocorrelation_continuous(modulus: u64, t_over_t: f64) -> Result<ComplexSample> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    if !t_over_t.is_finite() {
        return Err(Error::InvalidParameter(format!("time {t_over_t} is not finite")));
    }
    let frac = t_over_t - t_over_t.floor();
    let mut sum = ComplexSample::new(0.0, 0.0);
    for k in 0..modulus {
        let k2 = (k as f64) * (k as f64);
        let x = k2 * frac;
        let (s, c) = (TAU * (x - x.floor())).sin_cos();
        sum += ComplexSample::new(c, -s);
    }
    Ok(sum / modulus as f64)
}

/// One row of a rotor scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub n: u64,
    pub re: f64,
    pub im: f64,
    pub mod2: f64,
    /// `gcd(n, N)`.
    pub d: u64,
    /// Exact class for odd `N`; `None` when `N` is even.
    pub classification: Option<SumClass>,
}

pub fn scan_row(modulus: u64, n: u64) -> Result<ScanRow> {
    let exact = exact_value(modulus, n as i64)?;
    let value = match exact {
        Some(v) => v.to_complex(),
        None => autocorrelation(modulus, n as i64)?,
    };
    Ok(ScanRow {
        n,
        re: value.re,
        im: value.im,
        mod2: value.norm_sqr(),
        d: gcd_unchecked(n, modulus),
        classification: exact.map(|v| v.classify()),
    })
}

/// Rows for `n = 1..=N`.
pub fn scan(modulus: u64) -> Result<Vec<ScanRow>> {
    if modulus < 2 {
        return Err(Error::InvalidParameter(format!("scan needs N >= 2, got {modulus}")));
    }
    (1..=modulus).map(|n| scan_row(modulus, n)).collect()
}

/// Which part of the autocorrelation flagged a divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignalPart {
    Modulus,
    RealPart,
    ImaginaryPart,
}

impl SignalPart {
    pub fn label(self) -> &'static str {
        match self {
            SignalPart::Modulus => "modulus",
            SignalPart::RealPart => "real",
            SignalPart::ImaginaryPart => "imag",
        }
    }
}

impl fmt::Display for SignalPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evidence {
    /// Scan index of the odd part that carries the signal.
    pub n: u64,
    pub d: u64,
    pub part: SignalPart,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub input: u64,
    pub two_exponent: u32,
    pub odd_factors: Vec<(u64, u32)>,
    pub evidence: Vec<Evidence>,
}

impl FactorReport {
    pub fn is_prime(&self) -> bool {
        matches!(
            (self.two_exponent, self.odd_factors.as_slice()),
            (1, []) | (0, [(_, 1)])
        )
    }

    /// All prime factors including 2, in increasing order.
    pub fn factors(&self) -> Vec<(u64, u32)> {
        let mut out = Vec::with_capacity(self.odd_factors.len() + 1);
        if self.two_exponent > 0 {
            out.push((2, self.two_exponent));
        }
        out.extend_from_slice(&self.odd_factors);
        out
    }
}

/// Smallest `n` in `2..=isqrt(m)` whose row shares a factor with odd `m`,
/// confirmed by the floating-point modulus.
fn first_shared_row(m: u64) -> Result<Option<(u64, u64)>> {
    for n in 2..=isqrt(m) {
        let value = autocorrelation(m, n as i64)?;
        let scaled = value.norm_sqr() * m as f64;
        let d = gcd_unchecked(n, m);
        let flagged = scaled > MODULUS_THRESHOLD;
        if flagged != (d > 1) {
            return Err(Error::SignalMismatch { n, d, scaled });
        }
        if flagged {
            return Ok(Some((n, d)));
        }
    }
    Ok(None)
}

/// Splits odd `m` into primes by repeated scans. A residue with no
/// shared row up to its square root is prime.
fn split_odd(m: u64, primes: &mut Vec<u64>) -> Result<()> {
    if m == 1 {
        return Ok(());
    }
    match first_shared_row(m)? {
        None => primes.push(m),
        Some((_, d)) => {
            split_odd(d, primes)?;
            split_odd(m / d, primes)?;
        }
    }
    Ok(())
}

/// Signal part that carries the divisor `d` in the scan of odd `m`.
///
/// The reduced modulus `m / d` decides: `4s + 3` gives an imaginary value,
/// `4s + 1` a real one. When `m` itself is `4s + 1` every row is real, so a
/// real reduced value only shows up in the modulus.
fn signal_part(m: u64, d: u64) -> Result<SignalPart> {
    let reduced = residue_class(m / d)?;
    if reduced.is_m3() {
        Ok(SignalPart::ImaginaryPart)
    } else if residue_class(m)?.is_m3() {
        Ok(SignalPart::RealPart)
    } else {
        Ok(SignalPart::Modulus)
    }
}

/// Factorizes `N >= 2` from the rotor autocorrelation.
///
/// Twos are stripped first. The odd part `M` is scanned for the first row
/// with `gcd(n, M) > 1`, the divisor found there is split recursively by
/// its own scan, and the cofactor goes through the same procedure. Every
/// prime `p < M` gets one evidence entry: row `n = p` of the scan of `M`.
pub fn extract_factors(input: u64) -> Result<FactorReport> {
    if input < 2 {
        return Err(Error::InvalidParameter(format!(
            "cannot factor N = {input}; need N >= 2"
        )));
    }
    let (two_exponent, odd) = strip_twos(input)?;

    let mut primes = Vec::new();
    split_odd(odd, &mut primes)?;
    primes.sort_unstable();

    let mut odd_factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match odd_factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => odd_factors.push((p, 1)),
        }
    }

    let mut evidence = Vec::new();
    for &(p, _) in &odd_factors {
        if p == odd {
            continue;
        }
        let row = scan_row(odd, p)?;
        debug_assert_eq!(row.d, p);
        evidence.push(Evidence {
            n: p,
            d: row.d,
            part: signal_part(odd, row.d)?,
        });
    }

    Ok(FactorReport {
        input,
        two_exponent,
        odd_factors,
        evidence,
    })
}
