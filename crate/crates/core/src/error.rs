use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Laguerre parameter must satisfy alpha > -1, got {0}")]
    InvalidAlpha(String),

    #[error("Bessel order must satisfy nu > -1, got {0}")]
    InvalidOrder(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("value out of binary64 range while computing {0}")]
    NumericRange(String),

    #[error("bisection did not converge within {iterations} iterations (bracket [{lo}, {hi}])")]
    NonConvergence { iterations: usize, lo: f64, hi: f64 },

    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    #[error("J_{nu}({x}) is outside the certified series envelope: {reason}")]
    OutsideEnvelope { nu: f64, x: f64, reason: String },

    #[error(
        "J_{nu} has no sign change on [{lo}, {hi}] (J(lo) = {f_lo:e}, J(hi) = {f_hi:e}); \
         either the series lost precision or the zero escaped its bracket"
    )]
    SameSignBracket {
        nu: f64,
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
}
