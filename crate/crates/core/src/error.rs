use thiserror::Error;

/// Errors surfaced by the engine.
///
/// Exact arithmetic never produces NaN or infinities: anything that would
/// (a vanishing denominator, an order cap, a divergent limit) is an `Error`.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Input violates a documented precondition (order caps, empty data, n > N, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A rational function was evaluated at a zero of its denominator.
    /// `factor` names the vanishing factor, `hint` the smallest usable n when known.
    #[error("pole: denominator factor {factor} vanishes at n={n}, N={pop}{}", hint_str(.hint))]
    Pole {
        factor: String,
        n: String,
        pop: String,
        hint: Option<u64>,
    },

    /// Limit of a rational function that grows without bound.
    #[error("divergent limit: {0}")]
    Divergence(String),

    /// Malformed partition, rational-function, target or CSV input.
    #[error("parse error: {0}")]
    Parse(String),

    /// A verification suite found a counterexample.
    #[error("verification failed: {0}")]
    Verification(String),
}

fn hint_str(hint: &Option<u64>) -> String {
    match hint {
        Some(k) => format!(" (requires a sample of at least {k})"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
