//! Iterative saliency estimation over object-based superpixels.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod automaton;
pub mod error;
pub mod model;
pub mod pipeline;
pub mod graph;
pub mod metrics;
pub mod priors;
pub mod queries;
pub mod superpixels;

pub use error::{Error, Result};
