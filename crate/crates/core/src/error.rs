use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("gamma pole at z = {re}{im:+}i")]
    Pole { re: f64, im: f64 },
    #[error("result overflows f64 (log magnitude {0})")]
    Overflow(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("denominator parameter hits -{index} before the series terminates")]
    DenominatorPole { index: usize },
    #[error("series does not terminate and does not converge: {0}")]
    NonTerminating(String),
    #[error("quadrature did not converge: last change {delta:e} vs tolerance {tol:e}")]
    QuadratureNonConvergence { delta: f64, tol: f64 },
    #[error("config error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
