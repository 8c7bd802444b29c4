use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{what} must be odd, got {value}")]
    EvenArgument { what: &'static str, value: u64 },
    #[error("closed form requires odd b, got b = {0}")]
    ClosedFormEvenModulus(u64),
    #[error("{0} is outside the supported range")]
    OutOfRange(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("autocorrelation signal at n = {n} disagrees with gcd = {d} (mod2 * N = {scaled})")]
    SignalMismatch { n: u64, d: u64, scaled: f64 },
}
