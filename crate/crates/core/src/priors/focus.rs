//! Focus prior: how well superpixel borders follow sharp image edges.

use crate::model::LabImage;
use crate::superpixels::SuperpixelSegmentation;

/// Largest normalized color distance to a 4-neighbor.
pub fn gradient(image: &LabImage) -> Vec<f64> {
    let (w, h) = (image.width(), image.height());
    let mut out = vec![0.0; w * h];
    for y in 0..h {
        for x in 0..w {
            let p = y * w + x;
            let mut g: f64 = 0.0;
            if x > 0 {
                g = g.max(image.color_distance(p, p - 1));
            }
            if x + 1 < w {
                g = g.max(image.color_distance(p, p + 1));
            }
            if y > 0 {
                g = g.max(image.color_distance(p, p - w));
            }
            if y + 1 < h {
                g = g.max(image.color_distance(p, p + w));
            }
            out[p] = g;
        }
    }
    out
}

/// Otsu threshold over a histogram: the last bin of the lower class. `None`
/// when fewer than two bins are occupied.
pub fn otsu(histogram: &[usize]) -> Option<usize> {
    if histogram.iter().filter(|&&c| c > 0).count() < 2 {
        return None;
    }
    let total: f64 = histogram.iter().sum::<usize>() as f64;
    let weighted: f64 = histogram.iter().enumerate().map(|(i, &c)| i as f64 * c as f64).sum();
    let (mut w0, mut sum0) = (0.0, 0.0);
    let mut best = (f64::NEG_INFINITY, 0);
    for (k, &c) in histogram.iter().enumerate().take(histogram.len() - 1) {
        w0 += c as f64;
        sum0 += k as f64 * c as f64;
        let w1 = total - w0;
        if w0 == 0.0 || w1 == 0.0 {
            continue;
        }
        let (m0, m1) = (sum0 / w0, (weighted - sum0) / w1);
        let between = w0 * w1 * (m0 - m1) * (m0 - m1);
        if between > best.0 {
            best = (between, k);
        }
    }
    Some(best.1)
}

const GRADIENT_BINS: usize = 256;

fn gradient_bin(g: f64) -> usize {
    ((g * GRADIENT_BINS as f64) as usize).min(GRADIENT_BINS - 1)
}

/// Pixels whose gradient lies above the Otsu threshold.
pub fn edge_pixels(image: &LabImage) -> Vec<bool> {
    let grad = gradient(image);
    let mut hist = vec![0usize; GRADIENT_BINS];
    for &g in &grad {
        hist[gradient_bin(g)] += 1;
    }
    match otsu(&hist) {
        Some(k) => grad.iter().map(|&g| gradient_bin(g) > k).collect(),
        None => vec![false; grad.len()],
    }
}

/// `FP(S) = 1 - exp(-FS(S) / sigma4^2)` with `FS` the fraction of boundary
/// pixels that are edge pixels.
pub fn focus_prior(image: &LabImage, seg: &SuperpixelSegmentation, sigma4: f64) -> Vec<f64> {
    let edges = edge_pixels(image);
    let s2 = sigma4 * sigma4;
    seg.superpixels()
        .iter()
        .map(|s| {
            if s.boundary.is_empty() {
                return 0.0;
            }
            let fs = s.boundary.iter().filter(|&&p| edges[p]).count() as f64 / s.boundary.len() as f64;
            1.0 - (-fs / s2).exp()
        })
        .collect()
}
