use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("scenario schema violation at `{path}`: {message}")]
    Schema { path: String, message: String },

    #[error(transparent)]
    Core(#[from] porel_core::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Usage and i/o problems exit with code 1.
    pub fn exit_code(&self) -> i32 {
        1
    }
}
