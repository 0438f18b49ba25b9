use crate::model::{minmax_normalize, QuantizedPalette};
use crate::superpixels::SuperpixelSegmentation;

/// Smoothed per-color uniqueness: `US(c) = exp(-p(c) / sigma2^2)` averaged
/// over all colors with weights `exp(-d(c_i, c_j) / sigma2^2)`.
pub fn smoothed_uniqueness(palette: &QuantizedPalette, sigma2: f64) -> Vec<f64> {
    let s2 = sigma2 * sigma2;
    let n = palette.len();
    let us: Vec<f64> = palette.frequencies().iter().map(|p| (-p / s2).exp()).collect();
    let ws = palette.distance_table(|d| (-d / s2).exp());
    (0..n)
        .map(|i| {
            let row = &ws[i * n..(i + 1) * n];
            let num: f64 = row.iter().zip(&us).map(|(w, u)| w * u).sum();
            num / row.iter().sum::<f64>()
        })
        .collect()
}

/// `GP(S) = (1 / |C_S|) sum_c p(c, S) US'(c)`, min-max normalized.
pub fn color_uniqueness_prior(
    seg: &SuperpixelSegmentation,
    palette: &QuantizedPalette,
    sigma2: f64,
) -> Vec<f64> {
    let us = smoothed_uniqueness(palette, sigma2);
    let gp: Vec<f64> = seg
        .superpixels()
        .iter()
        .map(|s| {
            let sum: f64 = s.histogram.iter().map(|&(c, p)| p * us[c]).sum();
            sum / s.histogram.len() as f64
        })
        .collect();
    minmax_normalize(&gp)
}
