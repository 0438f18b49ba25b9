//! Image and map representations shared by every stage.

pub mod distance;
pub mod io;
pub mod lab;
pub mod map;
pub mod palette;

pub use lab::{lab_to_srgb, srgb_to_lab, LabImage};
pub use map::{minmax_normalize, LabelMap, SaliencyMap};
pub use palette::{quantize, QuantizedPalette, DEFAULT_BINS};
