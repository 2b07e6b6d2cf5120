use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the engine.
///
/// Domain and parameter errors reject inputs outside an operation's contract;
/// regime errors flag inputs that are well formed but outside the validity
/// range of an approximation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{func}: argument outside the domain ({detail})")]
    Domain { func: &'static str, detail: String },

    #[error("invalid `{field}`: {detail}")]
    InvalidParameter { field: &'static str, detail: String },

    #[error("{func}: outside the validity regime ({detail})")]
    Regime { func: &'static str, detail: String },

    #[error("relativistic input: kinetic energy / mass = {ratio:.4} (must be below 0.01)")]
    Relativistic { ratio: f64 },

    #[error("objective is flat over the search grid (max/min = {ratio})")]
    FlatObjective { ratio: f64 },

    #[error("fit failed: {0}")]
    FitFailure(String),
}

impl Error {
    pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain { func, detail: detail.into() }
    }

    pub(crate) fn param(field: &'static str, detail: impl Into<String>) -> Self {
        Error::InvalidParameter { field, detail: detail.into() }
    }

    pub(crate) fn regime(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Regime { func, detail: detail.into() }
    }

    /// True for errors caused by a numerical-regime violation rather than a
    /// malformed parameter.
    pub fn is_regime(&self) -> bool {
        matches!(
            self,
            Error::Regime { .. } | Error::Relativistic { .. } | Error::FlatObjective { .. } | Error::FitFailure(_)
        )
    }
}
