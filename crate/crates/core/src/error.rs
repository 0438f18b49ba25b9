use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("image has zero width or height")]
    EmptyImage,

    #[error("dimension mismatch: expected {expected_width}x{expected_height}, got {width}x{height}")]
    DimensionMismatch {
        expected_width: usize,
        expected_height: usize,
        width: usize,
        height: usize,
    },

    #[error("buffer length {actual} does not match {expected}")]
    BufferLength { expected: usize, actual: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid label map: {0}")]
    InvalidLabels(String),

    #[error("query set is empty")]
    EmptyQuerySet,

    /// Threshold-based query selection picked no superpixel.
    #[error("no superpixel passed the saliency threshold")]
    NoQueriesSelected,

    #[error("no cluster touches the image border")]
    NoBorderCluster,

    #[error("at least {needed} samples required, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("scribble mask has neither object nor background scribbles")]
    EmptyScribbles,

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("unknown config key `{0}`")]
    UnknownConfigKey(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("failed to decode {path}: {message}")]
    Decode { path: PathBuf, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
