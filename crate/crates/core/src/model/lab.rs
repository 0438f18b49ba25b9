//! sRGB (D65) to CIE L*a*b* conversion and the [`LabImage`] raster.
//!
//! Every pixel carries its raw L*a*b* value (L in `[0, 100]`, a/b roughly in
//! `[-128, 127]`) and a normalized copy with each channel mapped to `[0, 1]`.
//! Grayscale rasters keep only the L channel.

use crate::error::{Error, Result};

const WHITE_X: f64 = 0.950_47;
const WHITE_Y: f64 = 1.0;
const WHITE_Z: f64 = 1.088_83;

const EPSILON: f64 = 216.0 / 24_389.0;
const KAPPA: f64 = 24_389.0 / 27.0;

/// Offset and span used to bring a*/b* into `[0, 1]`.
const AB_OFFSET: f64 = 128.0;
const AB_SPAN: f64 = 255.0;

/// Normalized value of a zero a*/b* component.
pub const NEUTRAL_CHROMA: f64 = AB_OFFSET / AB_SPAN;

fn srgb_to_linear(v: u8) -> f64 {
    let c = f64::from(v) / 255.0;
    if c <= 0.040_45 {
        c / 12.92
    } else {
        ((c + 0.055) / 1.055).powf(2.4)
    }
}

fn linear_to_srgb(c: f64) -> u8 {
    let c = c.clamp(0.0, 1.0);
    let v = if c <= 0.003_130_8 {
        12.92 * c
    } else {
        1.055 * c.powf(1.0 / 2.4) - 0.055
    };
    (v * 255.0).round().clamp(0.0, 255.0) as u8
}

fn lab_f(t: f64) -> f64 {
    if t > EPSILON {
        t.cbrt()
    } else {
        (KAPPA * t + 16.0) / 116.0
    }
}

fn lab_f_inv(f: f64) -> f64 {
    let f3 = f * f * f;
    if f3 > EPSILON {
        f3
    } else {
        (116.0 * f - 16.0) / KAPPA
    }
}

/// Converts one 8-bit sRGB triplet to L*a*b* under the D65 white point.
pub fn srgb_to_lab(rgb: [u8; 3]) -> [f64; 3] {
    let r = srgb_to_linear(rgb[0]);
    let g = srgb_to_linear(rgb[1]);
    let b = srgb_to_linear(rgb[2]);

    let x = 0.412_456_4 * r + 0.357_576_1 * g + 0.180_437_5 * b;
    let y = 0.212_672_9 * r + 0.715_152_2 * g + 0.072_175_0 * b;
    let z = 0.019_333_9 * r + 0.119_192_0 * g + 0.950_304_1 * b;

    let fx = lab_f(x / WHITE_X);
    let fy = lab_f(y / WHITE_Y);
    let fz = lab_f(z / WHITE_Z);

    [116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)]
}

/// Inverse of [`srgb_to_lab`], rounding to the nearest 8-bit value.
pub fn lab_to_srgb(lab: [f64; 3]) -> [u8; 3] {
    let fy = (lab[0] + 16.0) / 116.0;
    let fx = fy + lab[1] / 500.0;
    let fz = fy - lab[2] / 200.0;

    let x = WHITE_X * lab_f_inv(fx);
    let y = WHITE_Y * lab_f_inv(fy);
    let z = WHITE_Z * lab_f_inv(fz);

    let r = 3.240_454_2 * x - 1.537_138_5 * y - 0.498_531_4 * z;
    let g = -0.969_266_0 * x + 1.876_010_8 * y + 0.041_556_0 * z;
    let b = 0.055_643_4 * x - 0.204_025_9 * y + 1.057_225_2 * z;

    [linear_to_srgb(r), linear_to_srgb(g), linear_to_srgb(b)]
}

/// Lightness of an 8-bit gray level (the L* of `(g, g, g)`).
pub fn gray_to_lightness(gray: u8) -> f64 {
    srgb_to_lab([gray, gray, gray])[0]
}

fn normalize_channel(channel: usize, value: f64) -> f64 {
    let v = if channel == 0 {
        value / 100.0
    } else {
        (value + AB_OFFSET) / AB_SPAN
    };
    v.clamp(0.0, 1.0)
}

/// A raster in L*a*b*, either 3-channel color or 1-channel lightness.
#[derive(Debug, Clone, PartialEq)]
pub struct LabImage {
    width: usize,
    height: usize,
    channels: usize,
    lab: Vec<f64>,
    norm: Vec<f64>,
}

impl LabImage {
    /// Builds a color image from packed 8-bit RGB.
    pub fn from_rgb8(width: usize, height: usize, rgb: &[u8]) -> Result<Self> {
        check_dims(width, height)?;
        if rgb.len() != width * height * 3 {
            return Err(Error::BufferLength {
                expected: width * height * 3,
                actual: rgb.len(),
            });
        }
        let mut lab = Vec::with_capacity(rgb.len());
        for px in rgb.chunks_exact(3) {
            lab.extend_from_slice(&srgb_to_lab([px[0], px[1], px[2]]));
        }
        Ok(Self::from_lab_data(width, height, 3, lab))
    }

    /// Builds a lightness-only image from 8-bit gray levels.
    pub fn from_gray8(width: usize, height: usize, gray: &[u8]) -> Result<Self> {
        check_dims(width, height)?;
        if gray.len() != width * height {
            return Err(Error::BufferLength {
                expected: width * height,
                actual: gray.len(),
            });
        }
        let mut table = [0.0; 256];
        for (g, slot) in table.iter_mut().enumerate() {
            *slot = gray_to_lightness(g as u8);
        }
        let lab = gray.iter().map(|&g| table[g as usize]).collect();
        Ok(Self::from_lab_data(width, height, 1, lab))
    }

    /// Wraps raw L*a*b* data (`channels` values per pixel).
    pub fn from_lab(width: usize, height: usize, channels: usize, lab: Vec<f64>) -> Result<Self> {
        check_dims(width, height)?;
        if channels != 1 && channels != 3 {
            return Err(Error::InvalidParameter(format!(
                "channels must be 1 or 3, got {channels}"
            )));
        }
        if lab.len() != width * height * channels {
            return Err(Error::BufferLength {
                expected: width * height * channels,
                actual: lab.len(),
            });
        }
        Ok(Self::from_lab_data(width, height, channels, lab))
    }

    fn from_lab_data(width: usize, height: usize, channels: usize, lab: Vec<f64>) -> Self {
        let norm = lab
            .iter()
            .enumerate()
            .map(|(i, &v)| normalize_channel(i % channels, v))
            .collect();
        Self {
            width,
            height,
            channels,
            lab,
            norm,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    /// Number of pixels.
    pub fn len(&self) -> usize {
        self.width * self.height
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn lab(&self, p: usize) -> &[f64] {
        &self.lab[p * self.channels..(p + 1) * self.channels]
    }

    pub fn normalized(&self, p: usize) -> &[f64] {
        &self.norm[p * self.channels..(p + 1) * self.channels]
    }

    pub fn lab_data(&self) -> &[f64] {
        &self.lab
    }

    pub fn normalized_data(&self) -> &[f64] {
        &self.norm
    }

    /// Normalized channel triple with missing chroma filled as neutral.
    pub fn normalized_lab3(&self, p: usize) -> [f64; 3] {
        let v = self.normalized(p);
        if self.channels == 3 {
            [v[0], v[1], v[2]]
        } else {
            [v[0], NEUTRAL_CHROMA, NEUTRAL_CHROMA]
        }
    }

    /// Euclidean distance between raw L*a*b* values.
    pub fn lab_distance(&self, p: usize, q: usize) -> f64 {
        euclidean(self.lab(p), self.lab(q))
    }

    /// Euclidean distance in normalized space, scaled to `[0, 1]`.
    pub fn color_distance(&self, p: usize, q: usize) -> f64 {
        normalized_distance(self.normalized(p), self.normalized(q))
    }

    /// Converts back to 8-bit sRGB (gray images expand to equal channels).
    pub fn to_rgb8(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.len() * 3);
        for p in 0..self.len() {
            let v = self.lab(p);
            let lab = if self.channels == 3 {
                [v[0], v[1], v[2]]
            } else {
                [v[0], 0.0, 0.0]
            };
            out.extend_from_slice(&lab_to_srgb(lab));
        }
        out
    }
}

pub(crate) fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Distance between two normalized colors divided by `sqrt(channels)`.
pub fn normalized_distance(a: &[f64], b: &[f64]) -> f64 {
    euclidean(a, b) / (a.len() as f64).sqrt()
}

fn check_dims(width: usize, height: usize) -> Result<()> {
    if width == 0 || height == 0 {
        Err(Error::EmptyImage)
    } else {
        Ok(())
    }
}
