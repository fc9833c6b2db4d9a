use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A hypergeometric series hits a zero denominator before it terminates.
    #[error("denominator parameter #{index} = {value} vanishes at summation index {term}")]
    Pole {
        index: usize,
        value: String,
        term: usize,
    },

    /// A sum of surds does not collapse to a single `i^k · q · √s`.
    #[error("sum is not representable as a single phase · rational · square root")]
    NotRepresentable,

    /// A route is not defined for the requested basis pair.
    #[error("route {route} is not admissible for pair {pair}")]
    InadmissibleRoute { route: String, pair: String },

    /// An assembled coefficient matrix violates one of its invariants.
    #[error("integrity violation between rows {row_a} and {row_b}: {detail}")]
    Integrity {
        row_a: usize,
        row_b: usize,
        detail: String,
    },
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
