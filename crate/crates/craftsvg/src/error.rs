//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Array or tensor dimensions disagree.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Numerically degenerate input (zero variance, vanishing denominator,
    /// empty attention mass, ...).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// An SVG element outside the supported subset grammar.
    #[error("unsupported SVG element <{0}>")]
    UnsupportedSvgElement(String),

    /// Malformed SVG document or path data; `offset` is a byte offset into
    /// the document.
    #[error("SVG parse error at byte {offset}: {message}")]
    SvgParse { offset: usize, message: String },

    /// A layout generator backend failed; carries the iteration at which
    /// the correction loop was interrupted.
    #[error("layout backend failed at iteration {iteration}: {message}")]
    Backend { iteration: usize, message: String },

    /// A pipeline stage failed.
    #[error("pipeline stage '{stage}' failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("image encode/decode error: {0}")]
    Image(#[from] image::ImageError),
}

impl Error {
    /// Wrap an error with the pipeline stage it occurred in.
    pub fn in_stage(self, stage: &'static str) -> Error {
        Error::Stage { stage, source: Box::new(self) }
    }
}
