//! Uniform color quantization over normalized L*a*b*.

use super::lab::{normalized_distance, LabImage};
use crate::error::{Error, Result};

/// Bins per channel used when nothing else is configured (at most 512 colors).
pub const DEFAULT_BINS: usize = 8;

/// The occupied bins of a uniform quantization of an image.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantizedPalette {
    bins_per_channel: usize,
    channels: usize,
    /// Mean normalized color of the pixels falling in each occupied bin.
    colors: Vec<f64>,
    pixel_to_color: Vec<u32>,
    frequency: Vec<f64>,
}

impl QuantizedPalette {
    pub fn bins_per_channel(&self) -> usize {
        self.bins_per_channel
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    /// Number of palette entries.
    pub fn len(&self) -> usize {
        self.frequency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequency.is_empty()
    }

    /// Representative normalized color of entry `c`.
    pub fn color(&self, c: usize) -> &[f64] {
        &self.colors[c * self.channels..(c + 1) * self.channels]
    }

    /// Palette index of pixel `p`.
    pub fn color_of(&self, p: usize) -> usize {
        self.pixel_to_color[p] as usize
    }

    pub fn pixel_colors(&self) -> &[u32] {
        &self.pixel_to_color
    }

    /// Global frequency p(c) = |P_c| / |P|.
    pub fn frequency(&self, c: usize) -> f64 {
        self.frequency[c]
    }

    pub fn frequencies(&self) -> &[f64] {
        &self.frequency
    }

    /// Distance between two entries, scaled to `[0, 1]`.
    pub fn distance(&self, a: usize, b: usize) -> f64 {
        normalized_distance(self.color(a), self.color(b))
    }

    /// Row-major `len() x len()` table of `f(distance(i, j))`.
    pub fn distance_table(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        let n = self.len();
        let mut table = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(self.distance(i, j));
                table[i * n + j] = v;
                table[j * n + i] = v;
            }
        }
        table
    }
}

fn bin_of(v: f64, bins: usize) -> usize {
    ((v * bins as f64) as usize).min(bins - 1)
}

/// Uniformly bins every normalized channel into `bins_per_channel` cells and
/// keeps the occupied cells, ordered by cell index.
pub fn quantize(image: &LabImage, bins_per_channel: usize) -> Result<QuantizedPalette> {
    if bins_per_channel < 2 {
        return Err(Error::InvalidParameter(format!(
            "bins_per_channel must be >= 2, got {bins_per_channel}"
        )));
    }
    let channels = image.channels();
    let cells = bins_per_channel.pow(channels as u32);
    let mut cell_of_pixel = Vec::with_capacity(image.len());
    let mut count = vec![0usize; cells];
    let mut sum = vec![0.0; cells * channels];
    for p in 0..image.len() {
        let v = image.normalized(p);
        let cell = v
            .iter()
            .fold(0, |acc, &x| acc * bins_per_channel + bin_of(x, bins_per_channel));
        cell_of_pixel.push(cell);
        count[cell] += 1;
        for (k, &x) in v.iter().enumerate() {
            sum[cell * channels + k] += x;
        }
    }

    let mut entry_of_cell = vec![u32::MAX; cells];
    let mut colors = Vec::new();
    let mut frequency = Vec::new();
    let total = image.len() as f64;
    for cell in 0..cells {
        if count[cell] == 0 {
            continue;
        }
        entry_of_cell[cell] = frequency.len() as u32;
        let n = count[cell] as f64;
        colors.extend(sum[cell * channels..(cell + 1) * channels].iter().map(|s| s / n));
        frequency.push(n / total);
    }
    let pixel_to_color = cell_of_pixel.iter().map(|&c| entry_of_cell[c]).collect();

    Ok(QuantizedPalette {
        bins_per_channel,
        channels,
        colors,
        pixel_to_color,
        frequency,
    })
}
