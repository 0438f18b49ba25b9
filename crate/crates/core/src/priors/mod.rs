//! Prior maps: top-down per-superpixel scores in `[0, 1]`.

pub mod center;
pub mod channel;
pub mod ellipse;
pub mod focus;
pub mod saliency_color;
pub mod scribble;
pub mod uniqueness;

use std::fmt;
use std::str::FromStr;

pub use center::center_prior;
pub use channel::{channel_combination_prior, ChannelPreset};
pub use ellipse::{ellipse_prior, fit_ellipse, EllipseFit};
pub use focus::{focus_prior, otsu};
pub use saliency_color::saliency_color_prior;
pub use scribble::{scribble_prior, ScribbleSet};
pub use uniqueness::color_uniqueness_prior;

use crate::error::{Error, Result};
use crate::model::{LabImage, QuantizedPalette, SaliencyMap};
use crate::superpixels::SuperpixelSegmentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prior {
    Center,
    Uniqueness,
    RedYellow,
    White,
    Black,
    SaliencyColor,
    Focus,
    Ellipse,
    Scribble,
}

impl Prior {
    pub const ALL: [Prior; 9] = [
        Prior::Center,
        Prior::Uniqueness,
        Prior::RedYellow,
        Prior::White,
        Prior::Black,
        Prior::SaliencyColor,
        Prior::Focus,
        Prior::Ellipse,
        Prior::Scribble,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Prior::Center => "center",
            Prior::Uniqueness => "uniqueness",
            Prior::RedYellow => "red_yellow",
            Prior::White => "white",
            Prior::Black => "black",
            Prior::SaliencyColor => "saliency_color",
            Prior::Focus => "focus",
            Prior::Ellipse => "ellipse",
            Prior::Scribble => "scribble",
        }
    }
}

impl fmt::Display for Prior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Prior {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Prior::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown prior '{s}'")))
    }
}

/// Prior bandwidths and the ellipse size range.
#[derive(Debug, Clone, PartialEq)]
pub struct PriorParams {
    pub sigma1: f64,
    pub sigma2: f64,
    /// Red/yellow channel prior.
    pub sigma3: f64,
    /// White and black channel priors.
    pub sigma3_prime: f64,
    pub sigma4: f64,
    pub sigma5: f64,
    pub sigma_scribble: f64,
    pub s0: f64,
    pub s1: f64,
}

impl Default for PriorParams {
    fn default() -> Self {
        Self {
            sigma1: 0.2,
            sigma2: 0.5,
            sigma3: 0.2,
            sigma3_prime: 0.5,
            sigma4: 0.5,
            sigma5: 1.0,
            sigma_scribble: 0.2,
            s0: 1500.0,
            s1: 5000.0,
        }
    }
}

impl PriorParams {
    pub fn validate(&self) -> Result<()> {
        let sigmas = [
            ("sigma1", self.sigma1),
            ("sigma2", self.sigma2),
            ("sigma3", self.sigma3),
            ("sigma3_prime", self.sigma3_prime),
            ("sigma4", self.sigma4),
            ("sigma5", self.sigma5),
            ("sigma_scribble", self.sigma_scribble),
        ];
        for (name, v) in sigmas {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidParameter(format!("{name} must be positive, got {v}")));
            }
        }
        if !(self.s0 < self.s1) {
            return Err(Error::InvalidParameter(format!(
                "size range ({}, {}) is empty",
                self.s0, self.s1
            )));
        }
        Ok(())
    }
}

/// One computed prior.
#[derive(Debug, Clone, PartialEq)]
pub struct PriorLayer {
    pub prior: Prior,
    pub scores: Vec<f64>,
    pub raster: SaliencyMap,
}

/// Priors computed on one segmentation, in configuration order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PriorStack {
    layers: Vec<PriorLayer>,
}

impl PriorStack {
    pub fn layers(&self) -> &[PriorLayer] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn get(&self, prior: Prior) -> Option<&PriorLayer> {
        self.layers.iter().find(|l| l.prior == prior)
    }

    pub fn push(&mut self, layer: PriorLayer) {
        self.layers.push(layer);
    }
}

/// Extra inputs some priors need.
#[derive(Debug, Clone, Copy, Default)]
pub struct PriorInputs<'a> {
    /// Previous saliency map, for the saliency-color prior.
    pub previous: Option<&'a SaliencyMap>,
    pub scribbles: Option<&'a ScribbleSet>,
}

/// Computes one prior. Returns `None` for the saliency-color prior when no
/// previous map exists yet.
pub fn compute_prior(
    prior: Prior,
    image: &LabImage,
    seg: &SuperpixelSegmentation,
    palette: &QuantizedPalette,
    params: &PriorParams,
    inputs: PriorInputs<'_>,
) -> Result<Option<PriorLayer>> {
    let scores = match prior {
        Prior::Center => center_prior(seg, params.sigma1),
        Prior::Uniqueness => color_uniqueness_prior(seg, palette, params.sigma2),
        Prior::RedYellow => channel_combination_prior(seg, palette, ChannelPreset::RedYellow, params.sigma3),
        Prior::White => channel_combination_prior(seg, palette, ChannelPreset::White, params.sigma3_prime),
        Prior::Black => channel_combination_prior(seg, palette, ChannelPreset::Black, params.sigma3_prime),
        Prior::SaliencyColor => match inputs.previous {
            Some(prev) => saliency_color_prior(seg, palette, prev)?,
            None => return Ok(None),
        },
        Prior::Focus => focus_prior(image, seg, params.sigma4),
        Prior::Ellipse => ellipse_prior(seg, params.sigma5, params.s0, params.s1),
        Prior::Scribble => {
            let scribbles = inputs.scribbles.ok_or(Error::EmptyScribbles)?;
            let raster = scribble_prior(seg.width(), seg.height(), scribbles, params.sigma_scribble)?;
            let scores = seg.superpixel_means(raster.values());
            return Ok(Some(PriorLayer { prior, scores, raster }));
        }
    };
    let raster = SaliencyMap::new(seg.width(), seg.height(), seg.rasterize(&scores))?;
    Ok(Some(PriorLayer { prior, scores, raster }))
}

/// Computes every enabled prior that has its inputs available.
pub fn compute_priors(
    priors: &[Prior],
    image: &LabImage,
    seg: &SuperpixelSegmentation,
    palette: &QuantizedPalette,
    params: &PriorParams,
    inputs: PriorInputs<'_>,
) -> Result<PriorStack> {
    let mut stack = PriorStack::default();
    for &prior in priors {
        if let Some(layer) = compute_prior(prior, image, seg, palette, params, inputs)? {
            stack.push(layer);
        }
    }
    Ok(stack)
}
