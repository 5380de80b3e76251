use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors produced by the toolkit.
///
/// Size guards get their own variant so callers (notably the CLI) can map
/// "the requested enumeration is too large" to a distinct exit path from
/// ordinary validation and domain failures.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A matrix constructor was handed a NaN or infinite entry.
    NonFinite { context: &'static str },
    /// Two matrices (or a matrix and a scenario) disagree on dimensions.
    ShapeMismatch {
        context: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// A matrix that must be Hermitian is not, within tolerance.
    NotHermitian { deviation: f64 },
    /// An argument lies outside the mathematical domain of an operation.
    Domain(String),
    /// Data violates a structural invariant (probabilities, POVMs, ranges).
    Validation(String),
    /// An enumeration or construction would exceed the caller's size cap.
    SizeExceeded { required: u128, cap: u128 },
    /// An iterative routine failed to converge within its sweep budget.
    NoConvergence { context: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite { context } => {
                write!(f, "non-finite entry in {context}")
            }
            Error::ShapeMismatch {
                context,
                expected,
                found,
            } => write!(
                f,
                "shape mismatch in {context}: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::NotHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (max deviation {deviation:e})")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Validation(msg) => write!(f, "validation error: {msg}"),
            Error::SizeExceeded { required, cap } => {
                write!(f, "size guard exceeded: {required} > {cap}")
            }
            Error::NoConvergence { context } => {
                write!(f, "{context} did not converge")
            }
        }
    }
}

impl core::error::Error for Error {}
