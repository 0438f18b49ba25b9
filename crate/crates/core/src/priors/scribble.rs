use crate::error::{Error, Result};
use crate::model::distance::squared_distance_transform;
use crate::model::SaliencyMap;

/// User scribbles as raster indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScribbleSet {
    pub object: Vec<usize>,
    pub background: Vec<usize>,
}

impl ScribbleSet {
    /// Reads an indexed mask: 0 unlabeled, 1 background, 2 object.
    pub fn from_mask(mask: &[u8]) -> Self {
        let mut set = Self::default();
        for (p, &v) in mask.iter().enumerate() {
            match v {
                1 => set.background.push(p),
                2 => set.object.push(p),
                _ => {}
            }
        }
        set
    }

    pub fn is_empty(&self) -> bool {
        self.object.is_empty() && self.background.is_empty()
    }
}

fn normalized_sq_distances(width: usize, height: usize, pixels: &[usize]) -> Result<Vec<f64>> {
    let mut feature = vec![false; width * height];
    for &p in pixels {
        *feature.get_mut(p).ok_or_else(|| {
            Error::InvalidParameter(format!("scribble pixel {p} outside the image"))
        })? = true;
    }
    let diag2 = (width * width + height * height) as f64;
    Ok(squared_distance_transform(width, height, &feature)
        .into_iter()
        .map(|d| d / diag2)
        .collect())
}

/// Close to object scribbles and far from background ones. Distances are
/// in units of the image diagonal.
pub fn scribble_prior(width: usize, height: usize, scribbles: &ScribbleSet, sigma: f64) -> Result<SaliencyMap> {
    if scribbles.is_empty() {
        return Err(Error::EmptyScribbles);
    }
    if scribbles.object.iter().any(|p| scribbles.background.contains(p)) {
        return Err(Error::InvalidParameter("scribble sets overlap".into()));
    }
    let s2 = sigma * sigma;
    let mut score = vec![1.0; width * height];
    if !scribbles.object.is_empty() {
        let d = normalized_sq_distances(width, height, &scribbles.object)?;
        for (s, d) in score.iter_mut().zip(d) {
            *s *= (-d / s2).exp();
        }
    }
    if !scribbles.background.is_empty() {
        let d = normalized_sq_distances(width, height, &scribbles.background)?;
        for (s, d) in score.iter_mut().zip(d) {
            *s *= 1.0 - (-d / s2).exp();
        }
    }
    SaliencyMap::from_unnormalized(width, height, &score)
}
