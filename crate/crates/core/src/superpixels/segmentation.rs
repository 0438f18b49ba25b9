use crate::error::{Error, Result};
use crate::model::{LabImage, LabelMap, QuantizedPalette};

/// Offsets of the 8-neighborhood, 4-neighbors first.
pub(crate) const NEIGHBORS_8: [(i64, i64); 8] = [
    (1, 0),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, 1),
    (-1, -1),
    (1, -1),
    (-1, 1),
];

pub(crate) fn neighbors(
    width: usize,
    height: usize,
    p: usize,
    offsets: &[(i64, i64)],
) -> impl Iterator<Item = usize> + '_ {
    let (x, y) = ((p % width) as i64, (p / width) as i64);
    offsets.iter().filter_map(move |&(dx, dy)| {
        let (nx, ny) = (x + dx, y + dy);
        (nx >= 0 && ny >= 0 && nx < width as i64 && ny < height as i64)
            .then(|| ny as usize * width + nx as usize)
    })
}

/// Statistics of one superpixel.
#[derive(Debug, Clone, PartialEq)]
pub struct Superpixel {
    pub size: usize,
    /// Mean normalized L*a*b* color.
    pub mean_color: Vec<f64>,
    /// Sparse histogram p(c, S): `(palette index, fraction)`, sorted by index.
    pub histogram: Vec<(usize, f64)>,
    /// Member pixels with an 8-neighbor in another superpixel.
    pub boundary: Vec<usize>,
    /// Mean `(x, y)` of member pixels.
    pub center: (f64, f64),
    pub touches_border: bool,
}

/// A label map with per-superpixel statistics and 8-adjacency.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperpixelSegmentation {
    labels: LabelMap,
    superpixels: Vec<Superpixel>,
    adjacency: Vec<Vec<usize>>,
}

impl SuperpixelSegmentation {
    pub fn new(image: &LabImage, palette: &QuantizedPalette, labels: LabelMap) -> Result<Self> {
        let (w, h) = (labels.width(), labels.height());
        if image.width() != w || image.height() != h {
            return Err(Error::DimensionMismatch {
                expected_width: image.width(),
                expected_height: image.height(),
                width: w,
                height: h,
            });
        }
        if palette.pixel_colors().len() != w * h {
            return Err(Error::BufferLength {
                expected: w * h,
                actual: palette.pixel_colors().len(),
            });
        }
        let n = labels.count();
        let channels = image.channels();
        let mut size = vec![0usize; n];
        let mut color_sum = vec![0.0; n * channels];
        let mut xy_sum = vec![(0.0, 0.0); n];
        let mut counts: Vec<std::collections::BTreeMap<usize, usize>> = vec![Default::default(); n];
        let mut boundary = vec![Vec::new(); n];
        let mut touches_border = vec![false; n];
        let mut adjacency = vec![Vec::new(); n];

        for p in 0..w * h {
            let l = labels.label(p);
            let (x, y) = (p % w, p / w);
            size[l] += 1;
            for (k, v) in image.normalized(p).iter().enumerate() {
                color_sum[l * channels + k] += v;
            }
            xy_sum[l].0 += x as f64;
            xy_sum[l].1 += y as f64;
            *counts[l].entry(palette.color_of(p)).or_default() += 1;
            if x == 0 || y == 0 || x + 1 == w || y + 1 == h {
                touches_border[l] = true;
            }
            let mut on_boundary = false;
            for q in neighbors(w, h, p, &NEIGHBORS_8) {
                let m = labels.label(q);
                if m != l {
                    on_boundary = true;
                    adjacency[l].push(m);
                }
            }
            if on_boundary {
                boundary[l].push(p);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }

        let superpixels = (0..n)
            .map(|l| {
                let s = size[l] as f64;
                Superpixel {
                    size: size[l],
                    mean_color: color_sum[l * channels..(l + 1) * channels]
                        .iter()
                        .map(|v| v / s)
                        .collect(),
                    histogram: counts[l]
                        .iter()
                        .map(|(&c, &k)| (c, k as f64 / s))
                        .collect(),
                    boundary: std::mem::take(&mut boundary[l]),
                    center: (xy_sum[l].0 / s, xy_sum[l].1 / s),
                    touches_border: touches_border[l],
                }
            })
            .collect();

        Ok(Self {
            labels,
            superpixels,
            adjacency,
        })
    }

    pub fn labels(&self) -> &LabelMap {
        &self.labels
    }

    pub fn width(&self) -> usize {
        self.labels.width()
    }

    pub fn height(&self) -> usize {
        self.labels.height()
    }

    /// Number of superpixels.
    pub fn len(&self) -> usize {
        self.superpixels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.superpixels.is_empty()
    }

    pub fn superpixel(&self, s: usize) -> &Superpixel {
        &self.superpixels[s]
    }

    pub fn superpixels(&self) -> &[Superpixel] {
        &self.superpixels
    }

    /// Sorted ids of the 8-adjacent superpixels of `s`.
    pub fn neighbors(&self, s: usize) -> &[usize] {
        &self.adjacency[s]
    }

    /// Member pixel lists, each in raster order.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.len()];
        for (p, &l) in self.labels.labels().iter().enumerate() {
            out[l as usize].push(p);
        }
        out
    }

    /// Paints per-superpixel values onto the pixel grid.
    pub fn rasterize(&self, per_superpixel: &[f64]) -> Vec<f64> {
        self.labels.rasterize(per_superpixel)
    }

    /// Mean of a pixel field over each superpixel.
    pub fn superpixel_means(&self, field: &[f64]) -> Vec<f64> {
        self.labels.label_means(field)
    }

    /// Whether every superpixel is a single 8-connected region.
    pub fn is_connected(&self) -> bool {
        let (w, h) = (self.width(), self.height());
        let mut seen = vec![false; w * h];
        let mut components = vec![0usize; self.len()];
        let mut stack = Vec::new();
        for start in 0..w * h {
            if seen[start] {
                continue;
            }
            let l = self.labels.label(start);
            components[l] += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(p) = stack.pop() {
                for q in neighbors(w, h, p, &NEIGHBORS_8) {
                    if !seen[q] && self.labels.label(q) == l {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
        components.iter().all(|&c| c == 1)
    }
}
