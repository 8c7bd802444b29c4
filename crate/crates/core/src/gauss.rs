//! Normalized quadratic Gauss sums
//!
//! ```text
//! G(a, b) = (1/b) * sum_{m=0}^{b-1} exp(-2 pi i m^2 a / b)
//! ```
//!
//! evaluated two ways: by direct summation in floating point, and exactly
//! for odd `b` as `jacobi(2a', b') * exp(i pi (b' - 1) / 4) / sqrt(b')`
//! after cancelling the common factor of `a` and `b`.

use std::f64::consts::TAU;
use std::fmt;

use crate::numtheory::{gcd_unchecked, jacobi_reduced, residue_class};
use crate::{ComplexSample, Error, Result};

/// Direct summation. The phase `m^2 a mod b` is reduced in exact integer
/// arithmetic before the trigonometric call, so the only rounding is in
/// `sin`/`cos` and the accumulation.
pub fn gauss_direct(a: i64, b: u64) -> Result<ComplexSample> {
    if b == 0 {
        return Err(Error::ZeroModulus);
    }
    let a = (a as i128).rem_euclid(b as i128) as u64;
    let step = TAU / b as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    let mut add = |r: u64| {
        let (s, c) = (step * r as f64).sin_cos();
        re += c;
        im -= s;
    };
    if b <= u32::MAX as u64 {
        for m in 0..b {
            add((m * m % b) * a % b);
        }
    } else {
        let (a, modulus) = (a as u128, b as u128);
        for m in 0..modulus {
            add(((m * m % modulus) * a % modulus) as u64);
        }
    }
    Ok(ComplexSample::new(re / b as f64, im / b as f64))
}

/// Cancels the common factor: `(a mod b) / d` and `b / d` with
/// `d = gcd(a mod b, b)`. A multiple of `b` reduces to `(0, 1)`.
///
/// `G(a, b) = G(a', b')` holds exactly: each residue mod `b'` appears `d`
/// times in the length-`b` sum and the `1/b` prefactor absorbs that.
pub fn reduce(a: i64, b: u64) -> Result<(u64, u64)> {
    if b == 0 {
        return Err(Error::ZeroModulus);
    }
    let a = (a as i128).rem_euclid(b as i128) as u64;
    if a == 0 {
        return Ok((0, 1));
    }
    let d = gcd_unchecked(a, b);
    Ok((a / d, b / d))
}

/// An exact fourth root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitRoot {
    One,
    I,
    MinusOne,
    MinusI,
}

impl UnitRoot {
    /// `i^k`.
    pub fn i_pow(k: u64) -> Self {
        match k % 4 {
            0 => UnitRoot::One,
            1 => UnitRoot::I,
            2 => UnitRoot::MinusOne,
            _ => UnitRoot::MinusI,
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, UnitRoot::One | UnitRoot::MinusOne)
    }

    pub fn to_complex(self) -> ComplexSample {
        match self {
            UnitRoot::One => ComplexSample::new(1.0, 0.0),
            UnitRoot::I => ComplexSample::new(0.0, 1.0),
            UnitRoot::MinusOne => ComplexSample::new(-1.0, 0.0),
            UnitRoot::MinusI => ComplexSample::new(0.0, -1.0),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            UnitRoot::One => "+1",
            UnitRoot::I => "+i",
            UnitRoot::MinusOne => "-1",
            UnitRoot::MinusI => "-i",
        }
    }
}

impl std::ops::Neg for UnitRoot {
    type Output = UnitRoot;

    fn neg(self) -> Self {
        match self {
            UnitRoot::One => UnitRoot::MinusOne,
            UnitRoot::I => UnitRoot::MinusI,
            UnitRoot::MinusOne => UnitRoot::One,
            UnitRoot::MinusI => UnitRoot::I,
        }
    }
}

impl fmt::Display for UnitRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Exact value `coefficient / sqrt(denominator)` of a reduced Gauss sum with
/// odd denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussValue {
    pub coefficient: UnitRoot,
    pub denominator: u64,
}

impl GaussValue {
    pub const UNITY: GaussValue = GaussValue {
        coefficient: UnitRoot::One,
        denominator: 1,
    };

    /// True when the reduced modulus is 1 and the value is exactly 1.
    pub fn is_unity(&self) -> bool {
        self.denominator == 1
    }

    pub fn to_complex(&self) -> ComplexSample {
        self.coefficient.to_complex() / (self.denominator as f64).sqrt()
    }

    /// `|G|^2 = 1 / denominator`.
    pub fn modulus_squared(&self) -> f64 {
        1.0 / self.denominator as f64
    }

    pub fn classify(&self) -> SumClass {
        classify(self)
    }
}

impl fmt::Display for GaussValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unity() {
            f.write_str("1")
        } else {
            write!(f, "{}/sqrt({})", self.coefficient, self.denominator)
        }
    }
}

/// Closed-form evaluation for odd `b`. Even `b` is rejected; use
/// [`gauss_direct`] there.
pub fn gauss_closed(a: i64, b: u64) -> Result<GaussValue> {
    if b == 0 {
        return Err(Error::ZeroModulus);
    }
    if b.is_multiple_of(2) {
        return Err(Error::ClosedFormEvenModulus(b));
    }
    let (a, b) = reduce(a, b)?;
    if b == 1 {
        return Ok(GaussValue::UNITY);
    }
    // exp(i pi (b - 1) / 4) = i^((b - 1) / 2)
    let phase = UnitRoot::i_pow((b - 1) / 2);
    let two_a = ((2 * a as u128) % b as u128) as u64;
    let coefficient = match jacobi_reduced(two_a, b) {
        1 => phase,
        -1 => -phase,
        _ => unreachable!("reduced arguments are coprime"),
    };
    Ok(GaussValue {
        coefficient,
        denominator: b,
    })
}

/// Exact reality class of a Gauss sum value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumClass {
    PurelyReal,
    PurelyImaginary,
    Unity,
}

impl SumClass {
    pub fn label(self) -> &'static str {
        match self {
            SumClass::PurelyReal => "real",
            SumClass::PurelyImaginary => "imag",
            SumClass::Unity => "unity",
        }
    }
}

impl fmt::Display for SumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Real iff the reduced modulus is `4s + 1`, imaginary iff it is `4s + 3`.
pub fn classify(v: &GaussValue) -> SumClass {
    if v.is_unity() {
        return SumClass::Unity;
    }
    match residue_class(v.denominator) {
        Ok(c) if c.is_m1() => SumClass::PurelyReal,
        Ok(_) => SumClass::PurelyImaginary,
        Err(_) => unreachable!("GaussValue denominators are odd"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const TOL: f64 = 1e-9;

    #[test]
    fn direct_examples() {
        let g = gauss_direct(0, 7).unwrap();
        assert_abs_diff_eq!(g.re, 1.0, epsilon = TOL);
        assert_abs_diff_eq!(g.im, 0.0, epsilon = TOL);
        let g = gauss_direct(1, 1).unwrap();
        assert_eq!(g, ComplexSample::new(1.0, 0.0));
        // 1 + 2 exp(-2 pi i / 3) = -i sqrt(3), divided by 3
        let g = gauss_direct(1, 3).unwrap();
        assert_abs_diff_eq!(g.re, 0.0, epsilon = TOL);
        assert_abs_diff_eq!(g.im, -0.577_350_269_189_625_8, epsilon = TOL);
        assert_eq!(gauss_direct(1, 0), Err(Error::ZeroModulus));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(3, 21), Ok((1, 7)));
        assert_eq!(reduce(5, 15), Ok((1, 3)));
        assert_eq!(reduce(15, 15), Ok((0, 1)));
        assert_eq!(reduce(-3, 21), Ok((6, 7)));
        assert_eq!(reduce(0, 9), Ok((0, 1)));
        assert_eq!(reduce(4, 1), Ok((0, 1)));
    }

    #[test]
    fn closed_examples() {
        let v = gauss_closed(1, 5).unwrap();
        assert_eq!(
            v,
            GaussValue {
                coefficient: UnitRoot::One,
                denominator: 5
            }
        );
        let v = gauss_closed(1, 7).unwrap();
        assert_eq!(
            v,
            GaussValue {
                coefficient: UnitRoot::MinusI,
                denominator: 7
            }
        );
        let v = gauss_closed(3, 21).unwrap();
        assert_eq!(
            v,
            GaussValue {
                coefficient: UnitRoot::MinusI,
                denominator: 7
            }
        );
        assert!(gauss_closed(0, 9).unwrap().is_unity());
        assert_eq!(gauss_closed(2, 4), Err(Error::ClosedFormEvenModulus(4)));
        for (a, b) in [(1, 5), (1, 7), (3, 21), (0, 9)] {
            let diff = gauss_closed(a, b).unwrap().to_complex() - gauss_direct(a, b).unwrap();
            assert!(diff.re.abs() < TOL && diff.im.abs() < TOL, "G({a},{b})");
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(gauss_closed(1, 5).unwrap().classify(), SumClass::PurelyReal);
        assert_eq!(gauss_closed(1, 7).unwrap().classify(), SumClass::PurelyImaginary);
        assert_eq!(gauss_closed(0, 9).unwrap().classify(), SumClass::Unity);
    }

    #[test]
    fn closed_form_coefficient_is_real_exactly_on_m1() {
        for b in (3..200u64).step_by(2) {
            for a in 1..b as i64 {
                let v = gauss_closed(a, b).unwrap();
                if v.is_unity() {
                    continue;
                }
                assert_eq!(v.coefficient.is_real(), v.denominator % 4 == 1);
            }
        }
    }

    #[test]
    fn negative_a_is_conjugate() {
        for b in (1..60u64).step_by(2) {
            for a in 0..b as i64 {
                let pos = gauss_direct(a, b).unwrap();
                let neg = gauss_direct(-a, b).unwrap();
                assert_abs_diff_eq!(pos.re, neg.re, epsilon = TOL);
                assert_abs_diff_eq!(pos.im, -neg.im, epsilon = TOL);
            }
        }
    }

    #[test]
    fn direct_handles_large_modulus() {
        // 1_000_003 is prime and 3 mod 4: G(1, b) = -i / sqrt(b) up to the Jacobi sign
        let b = 1_000_003u64;
        let g = gauss_direct(1, b).unwrap();
        let exact = gauss_closed(1, b).unwrap().to_complex();
        assert!((g - exact).norm() < TOL, "{g} vs {exact}");
    }
}
