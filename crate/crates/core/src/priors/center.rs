use crate::superpixels::SuperpixelSegmentation;

/// Mean distance of each superpixel's pixels to the image center, in units
/// of half the image diagonal.
pub fn center_distance(seg: &SuperpixelSegmentation) -> Vec<f64> {
    let (w, h) = (seg.width(), seg.height());
    let (cx, cy) = ((w as f64 - 1.0) / 2.0, (h as f64 - 1.0) / 2.0);
    let half_diagonal = (w as f64).hypot(h as f64) / 2.0;
    let field: Vec<f64> = (0..w * h)
        .map(|p| ((p % w) as f64 - cx).hypot((p / w) as f64 - cy) / half_diagonal)
        .collect();
    seg.superpixel_means(&field)
}

/// `exp(-CD(S) / sigma1^2)`; 1 for a superpixel sitting on the center.
pub fn center_prior(seg: &SuperpixelSegmentation, sigma1: f64) -> Vec<f64> {
    let s2 = sigma1 * sigma1;
    center_distance(seg).into_iter().map(|d| (-d / s2).exp()).collect()
}
