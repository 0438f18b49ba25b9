//! OSMOX: seed sampling by ordered extraction from a saliency map.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::model::SaliencyMap;

/// Seed pixels (raster indices) with their object/background flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedSet {
    width: usize,
    pixels: Vec<usize>,
    object: Vec<bool>,
}

impl SeedSet {
    pub fn new(width: usize, pixels: Vec<usize>, object: Vec<bool>) -> Result<Self> {
        if pixels.len() != object.len() {
            return Err(Error::BufferLength {
                expected: pixels.len(),
                actual: object.len(),
            });
        }
        let mut sorted = pixels.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("duplicate seed pixel".into()));
        }
        Ok(Self {
            width,
            pixels,
            object,
        })
    }

    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    pub fn pixels(&self) -> &[usize] {
        &self.pixels
    }

    pub fn pixel(&self, i: usize) -> usize {
        self.pixels[i]
    }

    pub fn is_object(&self, i: usize) -> bool {
        self.object[i]
    }

    pub fn object_flags(&self) -> &[bool] {
        &self.object
    }

    pub fn object_count(&self) -> usize {
        self.object.iter().filter(|&&o| o).count()
    }

    /// `(x, y)` of seed `i`.
    pub fn coords(&self, i: usize) -> (usize, usize) {
        (self.pixels[i] % self.width, self.pixels[i] / self.width)
    }
}

#[derive(PartialEq)]
struct Entry {
    priority: f64,
    pixel: usize,
}

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.priority
            .total_cmp(&other.priority)
            .then_with(|| other.pixel.cmp(&self.pixel))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Mean over the 3x3 window around each pixel, clipped at the border.
fn neighborhood_mean(map: &SaliencyMap) -> Vec<f64> {
    let (w, h) = (map.width(), map.height());
    let mut out = vec![0.0; w * h];
    for y in 0..h {
        for x in 0..w {
            let mut sum = 0.0;
            let mut n = 0usize;
            for ny in y.saturating_sub(1)..(y + 2).min(h) {
                for nx in x.saturating_sub(1)..(x + 2).min(w) {
                    sum += map.get(ny * w + nx);
                    n += 1;
                }
            }
            out[y * w + x] = sum / n as f64;
        }
    }
    out
}

struct Sampler {
    width: usize,
    height: usize,
    radius: f64,
    /// Product of the distance penalties of every seed picked so far.
    penalty: Vec<f64>,
    taken: Vec<bool>,
}

impl Sampler {
    /// Pops `count` seeds by descending `base * penalty`.
    fn extract(&mut self, base: &[f64], count: usize, out: &mut Vec<usize>) {
        let mut current: Vec<f64> = base.iter().zip(&self.penalty).map(|(b, p)| b * p).collect();
        let mut heap: BinaryHeap<Entry> = current
            .iter()
            .enumerate()
            .filter(|(p, _)| !self.taken[*p])
            .map(|(pixel, &priority)| Entry { priority, pixel })
            .collect();
        let reach = self.radius.floor() as i64;
        let r2 = self.radius * self.radius;
        let mut picked = 0;
        while picked < count {
            let Some(Entry { priority, pixel }) = heap.pop() else {
                break;
            };
            if self.taken[pixel] || priority != current[pixel] {
                continue;
            }
            self.taken[pixel] = true;
            out.push(pixel);
            picked += 1;

            let (sx, sy) = ((pixel % self.width) as i64, (pixel / self.width) as i64);
            for dy in -reach..=reach {
                for dx in -reach..=reach {
                    let (x, y) = (sx + dx, sy + dy);
                    if x < 0 || y < 0 || x >= self.width as i64 || y >= self.height as i64 {
                        continue;
                    }
                    let d2 = (dx * dx + dy * dy) as f64;
                    if d2 > r2 {
                        continue;
                    }
                    let q = y as usize * self.width + x as usize;
                    let factor = 1.0 - (-d2 / r2).exp();
                    self.penalty[q] *= factor;
                    if !self.taken[q] {
                        current[q] = base[q] * self.penalty[q];
                        heap.push(Entry {
                            priority: current[q],
                            pixel: q,
                        });
                    }
                }
            }
        }
    }
}

/// Draws `n_object` seeds by descending neighborhood saliency, then
/// `n - n_object` background seeds from the inverted map. Every pick damps the
/// priority of pixels within `R = sqrt(|P| / (n pi))` by `1 - exp(-d^2 / R^2)`.
pub fn osmox_sample(object_map: &SaliencyMap, n: usize, n_object: usize) -> Result<SeedSet> {
    let total = object_map.len();
    if n == 0 || n > total {
        return Err(Error::InvalidParameter(format!(
            "seed count {n} must lie in [1, {total}]"
        )));
    }
    if n_object > n {
        return Err(Error::InvalidParameter(format!(
            "object seed count {n_object} exceeds seed count {n}"
        )));
    }
    let mean = neighborhood_mean(object_map);
    let mut sampler = Sampler {
        width: object_map.width(),
        height: object_map.height(),
        radius: (total as f64 / (n as f64 * std::f64::consts::PI)).sqrt(),
        penalty: vec![1.0; total],
        taken: vec![false; total],
    };
    let mut pixels = Vec::with_capacity(n);
    sampler.extract(&mean, n_object, &mut pixels);
    let inverted: Vec<f64> = mean.iter().map(|m| 1.0 - m).collect();
    sampler.extract(&inverted, n - n_object, &mut pixels);

    let object = (0..n).map(|i| i < n_object).collect();
    SeedSet::new(object_map.width(), pixels, object)
}
