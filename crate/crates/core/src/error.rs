use thiserror::Error;

/// Errors surfaced by the public operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    Rank(usize),
    #[error("q-binomial [{m} choose {n}] requires 0 <= n <= m")]
    QBinomialRange { m: i64, n: i64 },
    #[error("element has a pole at q = 0; not in the local ring A")]
    NotInA,
    #[error("weight is not antidominant: {0}")]
    NotAntidominant(String),
    #[error("weight {0} is atypical (omega_0 coefficient must be >= 1)")]
    Atypical(String),
    #[error("summaries have different caps: {0} vs {1}")]
    CapMismatch(i64, i64),
    #[error("unsupported crystal factor: {0}")]
    UnsupportedFactor(String),
    #[error("invalid family/parity combination: {0}")]
    InvalidCombination(String),
    #[error("root expansion is not a non-negative integer combination: {0}")]
    BadRootExpansion(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed tableau column: {0}")]
    BadColumn(String),
}
