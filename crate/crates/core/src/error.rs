use thiserror::Error;

use crate::exact::Rat;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rational function was evaluated at a root of its denominator.
    #[error("pole: denominator vanishes at k = {at}")]
    Pole { at: Rat },

    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,

    #[error("critical level: {what} at k = {level}")]
    CriticalLevel { what: String, level: Rat },

    #[error("weight has {got} coordinates, sl({n}) needs {expected}")]
    Dimension { n: usize, expected: usize, got: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// The embedding is not conformal at the requested level.
    #[error("not a conformal level: k = {level}, c(k) = {w_charge}, c_coset(k) = {coset_charge}")]
    NotConformal {
        level: Rat,
        w_charge: Rat,
        coset_charge: Rat,
    },

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    /// A structural hypothesis failed; `known` names a result that covers the case, if any.
    #[error("hypothesis failed: {condition}{}", known.as_ref().map(|k| format!(" ({k})")).unwrap_or_default())]
    Hypothesis {
        condition: String,
        known: Option<String>,
    },
}
