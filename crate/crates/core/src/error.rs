use thiserror::Error;

/// Errors raised across the crate. Each variant names the failing check.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system type `{0}`")]
    UnsupportedType(String),
    #[error("{0}")]
    GroupTooLarge(String),
    #[error("elements belong to different root systems")]
    MixedRootSystems,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("{m} is not a regular number for {label}")]
    NotRegular { label: String, m: usize },
    #[error("slope {d}/{m} is not in lowest terms")]
    NotCoprime { d: usize, m: usize },
    #[error("invalid slope: {0}")]
    InvalidSlope(String),
    #[error("element has no eigenvalue exp(2πi/{0}) on the reflection representation")]
    EigenvalueAbsent(usize),
    #[error("non-integral q-exponent {exponent} with nonzero coefficient for irreducible {irrep}")]
    NonIntegralExponent { irrep: String, exponent: String },
    #[error("data asset missing: {0}")]
    MissingAsset(String),
    #[error("data asset invalid: {0}")]
    InvalidAsset(String),
    #[error("tier unavailable: {0}")]
    TierUnavailable(String),
    #[error("braid is not nice: {0}")]
    NotNice(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
