//! Color priors built from simple operations on the L*a*b* channels.

use crate::model::lab::NEUTRAL_CHROMA;
use crate::model::{minmax_normalize, QuantizedPalette};
use crate::superpixels::SuperpixelSegmentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelPreset {
    /// Favors red and yellow tones: `a + b`.
    RedYellow,
    /// Favors bright achromatic colors.
    White,
    /// Favors dark achromatic colors; dark regions connected to the image
    /// border are suppressed.
    Black,
}

fn lab3(color: &[f64]) -> [f64; 3] {
    match color {
        [l] => [*l, NEUTRAL_CHROMA, NEUTRAL_CHROMA],
        [l, a, b, ..] => [*l, *a, *b],
        _ => [0.0, NEUTRAL_CHROMA, NEUTRAL_CHROMA],
    }
}

impl ChannelPreset {
    /// Exponent argument of the per-color score on normalized channels.
    pub fn combine(self, color: &[f64]) -> f64 {
        let [l, a, b] = lab3(color);
        let chroma = (a - NEUTRAL_CHROMA).abs() + (b - NEUTRAL_CHROMA).abs();
        match self {
            ChannelPreset::RedYellow => a + b,
            ChannelPreset::White => l - chroma,
            ChannelPreset::Black => (1.0 - l) - chroma,
        }
    }
}

/// Per-color score `exp(combine(c) / sigma^2)`.
pub fn color_scores(palette: &QuantizedPalette, preset: ChannelPreset, sigma: f64) -> Vec<f64> {
    let s2 = sigma * sigma;
    (0..palette.len())
        .map(|c| (preset.combine(palette.color(c)) / s2).exp())
        .collect()
}

/// `RP'(S) = sum_c p(c, S) score(c)`, min-max normalized.
pub fn channel_combination_prior(
    seg: &SuperpixelSegmentation,
    palette: &QuantizedPalette,
    preset: ChannelPreset,
    sigma: f64,
) -> Vec<f64> {
    let scores = color_scores(palette, preset, sigma);
    let raw: Vec<f64> = seg
        .superpixels()
        .iter()
        .map(|s| s.histogram.iter().map(|&(c, p)| p * scores[c]).sum())
        .collect();
    let normalized = minmax_normalize(&raw);
    if preset != ChannelPreset::Black {
        return normalized;
    }
    suppress_border_connected(seg, normalized)
}

/// Zeroes above-mean superpixels reachable from the border through
/// above-mean neighbors.
fn suppress_border_connected(seg: &SuperpixelSegmentation, mut scores: Vec<f64>) -> Vec<f64> {
    let mean = scores.iter().sum::<f64>() / scores.len() as f64;
    let dark: Vec<bool> = scores.iter().map(|&s| s > mean).collect();
    let mut reached = vec![false; scores.len()];
    let mut stack: Vec<usize> = (0..scores.len())
        .filter(|&s| dark[s] && seg.superpixel(s).touches_border)
        .collect();
    for &s in &stack {
        reached[s] = true;
    }
    while let Some(s) = stack.pop() {
        for &r in seg.neighbors(s) {
            if dark[r] && !reached[r] {
                reached[r] = true;
                stack.push(r);
            }
        }
    }
    if !reached.iter().any(|&r| r) {
        return scores;
    }
    for (s, r) in scores.iter_mut().zip(&reached) {
        if *r {
            *s = 0.0;
        }
    }
    if scores.iter().all(|&s| s == 0.0) {
        scores
    } else {
        minmax_normalize(&scores)
    }
}
