use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("enumeration limit exceeded: n = {requested} is above the ceiling {ceiling}")]
    ResourceLimit { requested: usize, ceiling: usize },

    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("series is not invertible: constant term {0} is not a unit")]
    SingularSeries(String),

    #[error("equidistribution violated at n = {n}: {from} avoiders vs {to} avoiders")]
    EquidistributionViolation { n: usize, from: usize, to: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
