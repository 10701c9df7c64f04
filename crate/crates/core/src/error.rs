use thiserror::Error;

/// Errors surfaced by graph construction, parsing, decoding and enumeration.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {pos}: {msg}")]
    Graph6 { pos: usize, msg: String },

    #[error("invalid construction: {0}")]
    Construction(String),

    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),

    #[error("input is not the spectrum of a nice graph: {0}")]
    NotNice(String),

    #[error("not cospectral to a nice graph: {0}")]
    NotLocalisable(String),

    #[error("invalid parameters: {0}")]
    Params(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
