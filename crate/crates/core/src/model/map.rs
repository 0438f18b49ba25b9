use crate::error::{Error, Result};

/// Affine rescale to `[0, 1]`. A constant input maps to 0.5 everywhere.
pub fn minmax_normalize(values: &[f64]) -> Vec<f64> {
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let span = hi - lo;
    if !(span > 0.0) || !span.is_finite() {
        return vec![0.5; values.len()];
    }
    values
        .iter()
        .map(|&v| ((v - lo) / span).clamp(0.0, 1.0))
        .collect()
}

/// Per-pixel scores in `[0, 1]`; also used for priors and ground truths.
#[derive(Debug, Clone, PartialEq)]
pub struct SaliencyMap {
    width: usize,
    height: usize,
    values: Vec<f64>,
}

impl SaliencyMap {
    /// Wraps values that must already lie in `[0, 1]`.
    pub fn new(width: usize, height: usize, values: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyImage);
        }
        if values.len() != width * height {
            return Err(Error::BufferLength {
                expected: width * height,
                actual: values.len(),
            });
        }
        if let Some(v) = values.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(Error::InvalidParameter(format!(
                "saliency value {v} outside [0, 1]"
            )));
        }
        Ok(Self {
            width,
            height,
            values,
        })
    }

    /// Min-max normalizes arbitrary finite values into a map.
    pub fn from_unnormalized(width: usize, height: usize, values: &[f64]) -> Result<Self> {
        Self::new(width, height, minmax_normalize(values))
    }

    pub fn constant(width: usize, height: usize, value: f64) -> Result<Self> {
        Self::new(width, height, vec![value; width * height])
    }

    /// Binary mask to a 0/1 map.
    pub fn from_mask(width: usize, height: usize, mask: &[bool]) -> Result<Self> {
        Self::new(
            width,
            height,
            mask.iter().map(|&m| if m { 1.0 } else { 0.0 }).collect(),
        )
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, p: usize) -> f64 {
        self.values[p]
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    pub fn normalized(&self) -> Self {
        Self {
            width: self.width,
            height: self.height,
            values: minmax_normalize(&self.values),
        }
    }

    pub fn inverted(&self) -> Self {
        Self {
            width: self.width,
            height: self.height,
            values: self.values.iter().map(|v| 1.0 - v).collect(),
        }
    }

    /// Mask of pixels with value above 0.5.
    pub fn to_mask(&self) -> Vec<bool> {
        self.values.iter().map(|&v| v > 0.5).collect()
    }

    /// `round(255 * s)` per pixel.
    pub fn to_gray8(&self) -> Vec<u8> {
        self.values
            .iter()
            .map(|v| (v * 255.0).round().clamp(0.0, 255.0) as u8)
            .collect()
    }

    pub fn same_dims(&self, width: usize, height: usize) -> Result<()> {
        if self.width == width && self.height == height {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected_width: width,
                expected_height: height,
                width: self.width,
                height: self.height,
            })
        }
    }
}

/// Per-pixel superpixel ids in `[0, count)`, each id used at least once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap {
    width: usize,
    height: usize,
    count: usize,
    labels: Vec<u32>,
}

impl LabelMap {
    pub fn new(width: usize, height: usize, labels: Vec<u32>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyImage);
        }
        if labels.len() != width * height {
            return Err(Error::BufferLength {
                expected: width * height,
                actual: labels.len(),
            });
        }
        let count = labels.iter().max().map_or(0, |&m| m as usize + 1);
        let mut seen = vec![false; count];
        for &l in &labels {
            seen[l as usize] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidLabels(format!("label {missing} is unused")));
        }
        Ok(Self {
            width,
            height,
            count,
            labels,
        })
    }

    /// Relabels arbitrary ids to `0..k` in order of first appearance.
    pub fn compact(width: usize, height: usize, raw: &[u32]) -> Result<Self> {
        let mut map = std::collections::HashMap::new();
        let labels = raw
            .iter()
            .map(|&l| {
                let next = map.len() as u32;
                *map.entry(l).or_insert(next)
            })
            .collect();
        Self::new(width, height, labels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Number of distinct labels.
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, p: usize) -> usize {
        self.labels[p] as usize
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Paints per-label values onto the pixel grid.
    pub fn rasterize(&self, per_label: &[f64]) -> Vec<f64> {
        self.labels.iter().map(|&l| per_label[l as usize]).collect()
    }

    /// Mean of a pixel field over each label.
    pub fn label_means(&self, field: &[f64]) -> Vec<f64> {
        let mut sum = vec![0.0; self.count];
        let mut n = vec![0usize; self.count];
        for (&l, &v) in self.labels.iter().zip(field) {
            sum[l as usize] += v;
            n[l as usize] += 1;
        }
        sum.iter().zip(n).map(|(s, k)| s / k as f64).collect()
    }
}
