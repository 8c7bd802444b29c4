//! Integer factorization read off quadratic-phase autocorrelation functions.
//!
//! Two physical models are covered, both in dimensionless time:
//!
//! * [`rotor`]: the quantum rotor with a flat initial state. At integer scaled
//!   times its autocorrelation is the normalized quadratic Gauss sum
//!   `G(n, N)`, whose modulus and real/imaginary structure expose the divisors
//!   of `N` exactly.
//! * [`wavepacket`]: a Gaussian wave packet in a weakly anharmonic spectrum
//!   with `T / T_cl = N`. Its autocorrelation shows a clean symmetric maximum
//!   at integer times that divide `N`.
//!
//! The number-theoretic layer lives in [`numtheory`] (gcd, Jacobi symbol,
//! residue classes mod 4, a trial-division oracle) and [`gauss`] (direct and
//! closed-form Gauss sums). [`output`] and [`cli`] turn results into CSV, JSON
//! or plain tables for the `gauss-factor` binary.
//!
//! ```
//! use gauss_factor::rotor;
//!
//! let report = rotor::extract_factors(21).unwrap();
//! assert_eq!(report.odd_factors, vec![(3, 1), (7, 1)]);
//! ```

pub mod cli;
pub mod error;
pub mod gauss;
pub mod numtheory;
pub mod output;
pub mod rotor;
pub mod wavepacket;

pub use error::{Error, Result};

/// Complex amplitude of an autocorrelation value.
pub type ComplexSample = num_complex::Complex64;
