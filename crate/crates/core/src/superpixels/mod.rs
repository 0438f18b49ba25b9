//! Object-based superpixels: OSMOX seeding, IFT delineation, medoid seed
//! recomputation and the superpixel-count schedule.

pub mod ift;
pub mod seeds;
pub mod segmentation;

pub use ift::{ift_delineate, ift_forest, ForestState, PathCost, NIL};
pub use seeds::{osmox_sample, SeedSet};
pub use segmentation::{Superpixel, SuperpixelSegmentation};

use crate::error::{Error, Result};
use crate::model::lab::normalized_distance;
use crate::model::{LabImage, QuantizedPalette, SaliencyMap};

/// How many of the seeds are drawn from the salient region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ObjectSeeds {
    Count(usize),
    /// Fraction rho of n, rounded up.
    Fraction(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OisfParams {
    pub n: usize,
    pub n_object: ObjectSeeds,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub inner_iters: usize,
    pub kappa: f64,
}

impl Default for OisfParams {
    fn default() -> Self {
        Self {
            n: 200,
            n_object: ObjectSeeds::Count(3),
            alpha: 0.8,
            beta: 12.0,
            gamma: 2.0,
            inner_iters: 3,
            kappa: 1.0,
        }
    }
}

impl OisfParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.n < 1 {
            return bad("n must be at least 1".into());
        }
        if !(self.kappa > 0.0 && self.kappa <= 1.0) {
            return bad(format!("kappa must lie in (0, 1], got {}", self.kappa));
        }
        if self.inner_iters < 1 {
            return bad("inner_iters must be at least 1".into());
        }
        for (name, v) in [("alpha", self.alpha), ("beta", self.beta), ("gamma", self.gamma)] {
            if !(v >= 0.0 && v.is_finite()) {
                return bad(format!("{name} must be a finite non-negative number, got {v}"));
            }
        }
        if let ObjectSeeds::Fraction(rho) = self.n_object {
            if !(0.0..=1.0).contains(&rho) {
                return bad(format!("object seed fraction must lie in [0, 1], got {rho}"));
            }
        }
        Ok(())
    }

    /// Object seeds for `n` superpixels, never more than `n`.
    pub fn object_seed_count(&self, n: usize) -> usize {
        match self.n_object {
            ObjectSeeds::Count(k) => k.min(n),
            ObjectSeeds::Fraction(rho) => ((n as f64 * rho).ceil() as usize).min(n),
        }
    }
}

/// One seed per superpixel: the member whose color is nearest the superpixel
/// mean, first in raster order on ties. Flags follow the superpixel's old seed.
pub fn recompute_seeds(
    segmentation: &SuperpixelSegmentation,
    image: &LabImage,
    previous: &SeedSet,
) -> Result<SeedSet> {
    if previous.len() != segmentation.len() {
        return Err(Error::InvalidParameter(format!(
            "{} seeds for {} superpixels",
            previous.len(),
            segmentation.len()
        )));
    }
    let n = segmentation.len();
    let mut best = vec![(f64::INFINITY, usize::MAX); n];
    for (p, &l) in segmentation.labels().labels().iter().enumerate() {
        let l = l as usize;
        let d = normalized_distance(image.normalized(p), &segmentation.superpixel(l).mean_color);
        if d < best[l].0 {
            best[l] = (d, p);
        }
    }
    SeedSet::new(
        image.width(),
        best.into_iter().map(|(_, p)| p).collect(),
        previous.object_flags().to_vec(),
    )
}

/// Samples seeds once, then alternates delineation and seed recomputation
/// `inner_iters` times; returns the last forest.
pub fn oisf_segment(
    image: &LabImage,
    object_map: &SaliencyMap,
    palette: &QuantizedPalette,
    params: &OisfParams,
) -> Result<SuperpixelSegmentation> {
    params.validate()?;
    let mut seeds = osmox_sample(object_map, params.n, params.object_seed_count(params.n))?;
    let mut segmentation = ift_delineate(image, object_map, palette, &seeds, params)?;
    for _ in 1..params.inner_iters {
        seeds = recompute_seeds(&segmentation, image, &seeds)?;
        segmentation = ift_delineate(image, object_map, palette, &seeds, params)?;
    }
    Ok(segmentation)
}

/// `max(2, round(n * kappa))`; counts below 2 are left unchanged.
pub fn next_scale(n_current: usize, kappa: f64) -> usize {
    ((n_current as f64 * kappa).round() as usize).max(n_current.min(2))
}
