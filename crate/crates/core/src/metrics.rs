//! Evaluation of saliency maps against binary ground truths.

use crate::error::{Error, Result};
use crate::model::distance::distance_transform;
use crate::model::SaliencyMap;

/// Variance of the Gaussian that spreads foreground errors.
pub const FOREGROUND_SIGMA2: f64 = 5.0;
/// Distance (pixels) at which background errors weigh 1.5.
pub const BACKGROUND_HALF_DISTANCE: f64 = 5.0;

fn check_dims(map: &SaliencyMap, gt: &[bool]) -> Result<()> {
    if map.len() != gt.len() {
        return Err(Error::BufferLength {
            expected: map.len(),
            actual: gt.len(),
        });
    }
    Ok(())
}

/// Mean absolute difference to the ground truth.
pub fn mae(map: &SaliencyMap, gt: &[bool]) -> Result<f64> {
    check_dims(map, gt)?;
    let sum: f64 = map
        .values()
        .iter()
        .zip(gt)
        .map(|(&v, &g)| (v - if g { 1.0 } else { 0.0 }).abs())
        .sum();
    Ok(sum / map.len() as f64)
}

/// `map > mean(map)`.
pub fn threshold_by_mean(map: &SaliencyMap) -> Vec<bool> {
    let mean = map.mean();
    map.values().iter().map(|&v| v > mean).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedPrf {
    pub precision: f64,
    pub recall: f64,
    pub f: f64,
    /// The ground truth had no foreground; recall is reported as 0.
    pub empty_foreground: bool,
}

fn ratio(num: f64, den: f64) -> f64 {
    if den > 0.0 {
        num / den
    } else {
        0.0
    }
}

/// Full-extent Gaussian blur along rows then columns (separable form of the
/// 2-D kernel `exp(-d^2 / (2 sigma^2))`).
fn gaussian_blur(width: usize, height: usize, data: &[f64]) -> Vec<f64> {
    let kernel: Vec<f64> = (0..width.max(height))
        .map(|d| (-((d * d) as f64) / (2.0 * FOREGROUND_SIGMA2)).exp())
        .collect();
    let mut rows = vec![0.0; width * height];
    for y in 0..height {
        let line = &data[y * width..(y + 1) * width];
        for x in 0..width {
            rows[y * width + x] = line
                .iter()
                .enumerate()
                .map(|(j, v)| v * kernel[x.abs_diff(j)])
                .sum();
        }
    }
    let mut out = vec![0.0; width * height];
    for x in 0..width {
        for y in 0..height {
            out[y * width + x] = (0..height).map(|j| rows[j * width + x] * kernel[y.abs_diff(j)]).sum();
        }
    }
    out
}

/// Weighted precision, recall and F-measure.
///
/// Foreground errors are replaced by their Gaussian-weighted average over
/// foreground pixels when that is smaller; background errors grow with the
/// distance to the foreground as `2 - exp(ln(0.5) / 5 * distance)`.
pub fn weighted_prf(map: &SaliencyMap, gt: &[bool]) -> Result<WeightedPrf> {
    check_dims(map, gt)?;
    let (w, h) = (map.width(), map.height());
    let error: Vec<f64> = map
        .values()
        .iter()
        .zip(gt)
        .map(|(&v, &g)| (if g { 1.0 } else { 0.0 } - v).abs())
        .collect();
    let fg: Vec<f64> = gt.iter().map(|&g| if g { 1.0 } else { 0.0 }).collect();
    let masked: Vec<f64> = error.iter().zip(&fg).map(|(e, f)| e * f).collect();
    let num = gaussian_blur(w, h, &masked);
    let den = gaussian_blur(w, h, &fg);
    let dist = distance_transform(w, h, gt);
    let alpha = 0.5f64.ln() / BACKGROUND_HALF_DISTANCE;

    let (mut tp, mut fp, mut fneg) = (0.0, 0.0, 0.0);
    for p in 0..w * h {
        if gt[p] {
            let ew = error[p].min(num[p] / den[p]);
            tp += 1.0 - ew;
            fneg += ew;
        } else {
            fp += error[p] * (2.0 - (alpha * dist[p]).exp());
        }
    }
    let precision = ratio(tp, tp + fp);
    let recall = ratio(tp, tp + fneg);
    let f = ratio(2.0 * precision * recall, precision + recall);
    Ok(WeightedPrf {
        precision,
        recall,
        f,
        empty_foreground: !gt.iter().any(|&g| g),
    })
}

/// Pixels with a 4-neighbor of the opposite value.
pub fn mask_boundary(width: usize, height: usize, mask: &[bool]) -> Vec<bool> {
    (0..width * height)
        .map(|p| {
            let (x, y) = (p % width, p / width);
            let v = mask[p];
            (x > 0 && mask[p - 1] != v)
                || (x + 1 < width && mask[p + 1] != v)
                || (y > 0 && mask[p - width] != v)
                || (y + 1 < height && mask[p + width] != v)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ToleranceMetric {
    #[default]
    Chebyshev,
    Euclidean,
}

/// Fraction of ground-truth boundary pixels with a predicted boundary pixel
/// within `tolerance`. 1 when the ground truth has no boundary.
pub fn boundary_recall(
    width: usize,
    height: usize,
    pred: &[bool],
    gt: &[bool],
    tolerance: usize,
    metric: ToleranceMetric,
) -> Result<f64> {
    if pred.len() != width * height || gt.len() != width * height {
        return Err(Error::BufferLength {
            expected: width * height,
            actual: if pred.len() != width * height { pred.len() } else { gt.len() },
        });
    }
    let pb = mask_boundary(width, height, pred);
    let gb = mask_boundary(width, height, gt);
    let t = tolerance as i64;
    let (mut total, mut hit) = (0usize, 0usize);
    for p in (0..width * height).filter(|&p| gb[p]) {
        total += 1;
        let (x, y) = ((p % width) as i64, (p / width) as i64);
        let found = (-t..=t).any(|dy| {
            (-t..=t).any(|dx| {
                let (nx, ny) = (x + dx, y + dy);
                let inside = nx >= 0 && ny >= 0 && nx < width as i64 && ny < height as i64;
                let near = match metric {
                    ToleranceMetric::Chebyshev => true,
                    ToleranceMetric::Euclidean => dx * dx + dy * dy <= t * t,
                };
                inside && near && pb[ny as usize * width + nx as usize]
            })
        });
        if found {
            hit += 1;
        }
    }
    Ok(if total == 0 { 1.0 } else { hit as f64 / total as f64 })
}

/// Per-image scores.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricReport {
    pub wf: f64,
    pub w_precision: f64,
    pub w_recall: f64,
    pub mae: f64,
    pub boundary_recall: f64,
}

impl MetricReport {
    /// Field-wise mean.
    pub fn mean(reports: &[MetricReport]) -> Option<MetricReport> {
        if reports.is_empty() {
            return None;
        }
        let n = reports.len() as f64;
        let avg = |f: fn(&MetricReport) -> f64| reports.iter().map(f).sum::<f64>() / n;
        Some(MetricReport {
            wf: avg(|r| r.wf),
            w_precision: avg(|r| r.w_precision),
            w_recall: avg(|r| r.w_recall),
            mae: avg(|r| r.mae),
            boundary_recall: avg(|r| r.boundary_recall),
        })
    }
}

/// All metrics; boundary recall uses the mean-thresholded map and a 2 px
/// Chebyshev tolerance.
pub fn evaluate(map: &SaliencyMap, gt: &SaliencyMap) -> Result<MetricReport> {
    gt.same_dims(map.width(), map.height())?;
    let mask = gt.to_mask();
    let prf = weighted_prf(map, &mask)?;
    Ok(MetricReport {
        wf: prf.f,
        w_precision: prf.precision,
        w_recall: prf.recall,
        mae: mae(map, &mask)?,
        boundary_recall: boundary_recall(
            map.width(),
            map.height(),
            &threshold_by_mean(map),
            &mask,
            2,
            ToleranceMetric::Chebyshev,
        )?,
    })
}
