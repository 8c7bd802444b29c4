//! Exact integer arithmetic: gcd, Jacobi symbol, residue classes mod 4,
//! powers-of-two stripping and a trial-division factorization oracle.

use std::fmt;

use crate::{Error, Result};

/// Largest input accepted by [`brute_factor`]. Trial division up to the
/// square root keeps this at a few seconds in the worst case.
pub const ORACLE_LIMIT: u64 = 1_000_000_000_000;

/// Greatest common divisor. `gcd(a, 0) = a`; `gcd(0, 0)` is an error.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    Ok(gcd_unchecked(a, b))
}

pub(crate) fn gcd_unchecked(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Jacobi symbol `(a / b)` for odd positive `b`.
///
/// Uses the binary reduction: strip factors of two with the second
/// supplement, then flip with quadratic reciprocity. `(a / 1) = 1`, and the
/// result is `0` exactly when `gcd(a, b) > 1`.
pub fn jacobi(a: i64, b: u64) -> Result<i8> {
    if b == 0 || b.is_multiple_of(2) {
        return Err(Error::EvenArgument {
            what: "Jacobi modulus",
            value: b,
        });
    }
    Ok(jacobi_reduced((a as i128).rem_euclid(b as i128) as u64, b))
}

/// Jacobi symbol for `0 <= a < b`, `b` odd.
pub(crate) fn jacobi_reduced(mut a: u64, mut b: u64) -> i8 {
    debug_assert!(b % 2 == 1 && a < b);
    let mut sign = 1i8;
    while a != 0 {
        let twos = a.trailing_zeros();
        a >>= twos;
        // (2 / b) = -1 iff b = 3, 5 (mod 8)
        if twos % 2 == 1 && matches!(b % 8, 3 | 5) {
            sign = -sign;
        }
        if a % 4 == 3 && b % 4 == 3 {
            sign = -sign;
        }
        (a, b) = (b % a, a);
    }
    if b == 1 {
        sign
    } else {
        0
    }
}

/// Membership of an odd positive integer in `M1 = {4s + 1}` or `M3 = {4s + 3}`.
/// The payload is the witness `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResidueClass {
    M1(u64),
    M3(u64),
}

impl ResidueClass {
    pub fn witness(self) -> u64 {
        match self {
            ResidueClass::M1(s) | ResidueClass::M3(s) => s,
        }
    }

    /// Reconstructs `4s + 1` or `4s + 3`.
    pub fn value(self) -> u64 {
        match self {
            ResidueClass::M1(s) => 4 * s + 1,
            ResidueClass::M3(s) => 4 * s + 3,
        }
    }

    pub fn is_m1(self) -> bool {
        matches!(self, ResidueClass::M1(_))
    }

    pub fn is_m3(self) -> bool {
        matches!(self, ResidueClass::M3(_))
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueClass::M1(s) => write!(f, "M1 (4*{s}+1)"),
            ResidueClass::M3(s) => write!(f, "M3 (4*{s}+3)"),
        }
    }
}

pub fn residue_class(r: u64) -> Result<ResidueClass> {
    match r % 4 {
        1 => Ok(ResidueClass::M1(r / 4)),
        3 => Ok(ResidueClass::M3(r / 4)),
        _ => Err(Error::EvenArgument {
            what: "residue class argument",
            value: r,
        }),
    }
}

/// Splits `n = 2^k * odd_part`. Returns `(k, odd_part)`.
pub fn strip_twos(n: u64) -> Result<(u32, u64)> {
    if n == 0 {
        return Err(Error::InvalidParameter("strip_twos needs n >= 1".into()));
    }
    let k = n.trailing_zeros();
    Ok((k, n >> k))
}

/// Prime factorization as `(prime, exponent)` pairs with increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn product(&self) -> u128 {
        self.factors.iter().map(|&(p, e)| (p as u128).pow(e)).product()
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Complete factorization by trial division. Test oracle only.
pub fn brute_factor(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidParameter("cannot factor 0".into()));
    }
    if n > ORACLE_LIMIT {
        return Err(Error::OutOfRange(format!("{n} (oracle limit {ORACLE_LIMIT})")));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut push = |rest: &mut u64, p: u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(&mut rest, 2);
    let mut p = 3;
    while p * p <= rest {
        push(&mut rest, p);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// Primes `<= limit` by a sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}
