use crate::error::Result;
use crate::model::{minmax_normalize, QuantizedPalette, SaliencyMap};
use crate::superpixels::SuperpixelSegmentation;

/// Mean saliency of the pixels of each palette color.
pub fn color_saliency(palette: &QuantizedPalette, previous: &SaliencyMap) -> Vec<f64> {
    let mut sum = vec![0.0; palette.len()];
    let mut count = vec![0usize; palette.len()];
    for (p, &c) in palette.pixel_colors().iter().enumerate() {
        sum[c as usize] += previous.get(p);
        count[c as usize] += 1;
    }
    sum.iter().zip(count).map(|(s, n)| s / n as f64).collect()
}

/// Unweighted mean of `SC(c)` over the colors present in each superpixel,
/// min-max normalized.
pub fn saliency_color_prior(
    seg: &SuperpixelSegmentation,
    palette: &QuantizedPalette,
    previous: &SaliencyMap,
) -> Result<Vec<f64>> {
    previous.same_dims(seg.width(), seg.height())?;
    let sc = color_saliency(palette, previous);
    let cs: Vec<f64> = seg
        .superpixels()
        .iter()
        .map(|s| s.histogram.iter().map(|&(c, _)| sc[c]).sum::<f64>() / s.histogram.len() as f64)
        .collect();
    Ok(minmax_normalize(&cs))
}
