use thiserror::Error;

/// Errors produced by model construction and evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown generator family `{0}`")]
    UnknownGenerator(String),

    #[error("generator `{family}`: parameter `{param}` = {value} outside admissible range {range}")]
    ParamOutOfRange {
        family: String,
        param: String,
        value: f64,
        range: String,
    },

    #[error("generator `{family}`: missing parameter `{param}`")]
    MissingParam { family: String, param: String },

    #[error("unknown baseline family `{0}`")]
    UnknownBaseline(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate grid: need at least {need} points, got {got}")]
    DegenerateGrid { need: usize, got: usize },

    #[error("vectors have mismatched lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("p-larger comparison requires strictly positive entries")]
    NonPositiveEntry,

    #[error("scenario does not match theorem `{theorem}`: {reason}")]
    ScenarioMismatch { theorem: String, reason: String },

    #[error("sampler: {0}")]
    Sampler(String),
}

pub type Result<T> = std::result::Result<T, Error>;
