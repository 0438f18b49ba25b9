//! The saliency and superpixel loop.

pub mod config;
pub mod run;

pub use config::{PipelineConfig, QueryStrategy, PRESETS};
pub use run::{run, IterationTrace, QuerySelection, RunTrace};
