use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("polynomial contains even-index variable t_{0}; the Q-side pairing needs odd-supported input")]
    EvenVariable(usize),

    #[error("rho = 1 is not allowed")]
    RhoOne,

    #[error("rho = {0} is not supported here (only 0 and -1)")]
    UnsupportedRho(String),

    #[error("no explicit mode formula for k = {0} (only k <= 3)")]
    ModesUnavailable(usize),

    #[error("operator {name} requires {parity} m, got {m}")]
    Parity {
        name: &'static str,
        parity: &'static str,
        m: i64,
    },

    #[error("zero denominator applying D_{index} to label {label:?}")]
    ZeroDenominator { index: usize, label: Vec<i64> },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cross-check discrepancy: {0}")]
    Discrepancy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
