//! Cellular-automaton fusion of pixel-aligned maps.
//!
//! Each map becomes a layer of log-saliency cells. A step moves every cell by
//! `lambda` per neighboring cell that lies above its own layer's mean, and
//! against it per cell below. Neighbors are the 4-adjacent positions in every
//! layer.

use crate::error::{Error, Result};
use crate::model::{minmax_normalize, SaliencyMap};

/// Lower clamp applied before taking logarithms.
pub const EPSILON: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
struct Layer {
    name: String,
    cells: Vec<f64>,
    /// Mean of the clamped source map.
    mean: f64,
}

fn clamped_mean(values: &[f64]) -> f64 {
    // Offsetting by the first value keeps constant maps exact.
    let v0 = values[0];
    v0 + values.iter().map(|v| v - v0).sum::<f64>() / values.len() as f64
}

impl Layer {
    fn new(name: String, map: &SaliencyMap) -> Self {
        let clamped: Vec<f64> = map.values().iter().map(|v| v.clamp(EPSILON, 1.0)).collect();
        Self {
            name,
            mean: clamped_mean(&clamped),
            cells: clamped.iter().map(|v| v.ln()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AutomatonGrid {
    width: usize,
    height: usize,
    lambda: f64,
    recompute_means: bool,
    steps: usize,
    layers: Vec<Layer>,
}

impl AutomatonGrid {
    /// One layer per map, named by position.
    pub fn new(maps: &[SaliencyMap], lambda: f64) -> Result<Self> {
        let named: Vec<(String, &SaliencyMap)> = maps
            .iter()
            .enumerate()
            .map(|(i, m)| (i.to_string(), m))
            .collect();
        Self::with_names(&named, lambda)
    }

    pub fn with_names(maps: &[(String, &SaliencyMap)], lambda: f64) -> Result<Self> {
        let Some((_, first)) = maps.first() else {
            return Err(Error::InvalidParameter("automaton needs at least one map".into()));
        };
        if !(lambda > 0.0 && lambda <= 1.0) {
            return Err(Error::InvalidParameter(format!("lambda must lie in (0, 1], got {lambda}")));
        }
        let (width, height) = (first.width(), first.height());
        let mut grid = Self {
            width,
            height,
            lambda,
            recompute_means: false,
            steps: 0,
            layers: Vec::new(),
        };
        grid.sync_layers(maps)?;
        Ok(grid)
    }

    /// Recompute each layer's mean from its current cells before every step.
    pub fn set_recompute_means(&mut self, on: bool) {
        self.recompute_means = on;
    }

    /// Keeps the state of layers whose name reappears, initializes new
    /// names from their maps and drops names that are gone. Layer order
    /// follows `maps`.
    pub fn sync_layers(&mut self, maps: &[(String, &SaliencyMap)]) -> Result<()> {
        let mut old = std::mem::take(&mut self.layers);
        for (name, map) in maps {
            map.same_dims(self.width, self.height)?;
            match old.iter().position(|l| &l.name == name) {
                Some(i) => self.layers.push(old.swap_remove(i)),
                None => self.layers.push(Layer::new(name.clone(), map)),
            }
        }
        if self.layers.is_empty() {
            return Err(Error::InvalidParameter("automaton needs at least one map".into()));
        }
        Ok(())
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn layer_names(&self) -> Vec<&str> {
        self.layers.iter().map(|l| l.name.as_str()).collect()
    }

    /// Cell values of layer `i`.
    pub fn cells(&self, i: usize) -> &[f64] {
        &self.layers[i].cells
    }

    /// Linear-domain mean of layer `i`.
    pub fn mean(&self, i: usize) -> f64 {
        self.layers[i].mean
    }

    pub fn steps_taken(&self) -> usize {
        self.steps
    }

    /// One synchronous update of every cell.
    pub fn step(&mut self) {
        if self.recompute_means {
            for layer in &mut self.layers {
                let lin: Vec<f64> = layer.cells.iter().map(|c| c.exp()).collect();
                layer.mean = clamped_mean(&lin);
            }
        }
        let (w, h) = (self.width, self.height);
        // Net vote of each position: sum over layers of sign(cell - ln mean).
        let mut vote = vec![0.0; w * h];
        for layer in &self.layers {
            let log_mean = layer.mean.ln();
            for (v, &c) in vote.iter_mut().zip(&layer.cells) {
                let d = c - log_mean;
                if d > 0.0 {
                    *v += 1.0;
                } else if d < 0.0 {
                    *v -= 1.0;
                }
            }
        }
        let mut delta = vec![0.0; w * h];
        for y in 0..h {
            for x in 0..w {
                let mut sum = 0.0;
                if x > 0 {
                    sum += vote[y * w + x - 1];
                }
                if x + 1 < w {
                    sum += vote[y * w + x + 1];
                }
                if y > 0 {
                    sum += vote[(y - 1) * w + x];
                }
                if y + 1 < h {
                    sum += vote[(y + 1) * w + x];
                }
                delta[y * w + x] = self.lambda * sum;
            }
        }
        for layer in &mut self.layers {
            for (c, d) in layer.cells.iter_mut().zip(&delta) {
                *c += d;
            }
        }
        self.steps += 1;
    }

    pub fn run(&mut self, steps: usize) {
        for _ in 0..steps {
            self.step();
        }
    }

    /// Logistic per cell, mean over layers, then min-max normalization.
    pub fn finalize(&self) -> SaliencyMap {
        let m = self.layers.len() as f64;
        let mut avg = vec![0.0; self.width * self.height];
        for layer in &self.layers {
            for (a, &c) in avg.iter_mut().zip(&layer.cells) {
                *a += 1.0 / (1.0 + (-c).exp());
            }
        }
        for a in &mut avg {
            *a /= m;
        }
        SaliencyMap::new(self.width, self.height, minmax_normalize(&avg))
            .expect("normalized values lie in [0, 1]")
    }
}

/// Fresh automaton over `maps`, `steps` updates, final map.
pub fn integrate(maps: &[SaliencyMap], lambda: f64, steps: usize) -> Result<SaliencyMap> {
    let mut grid = AutomatonGrid::new(maps, lambda)?;
    grid.run(steps);
    Ok(grid.finalize())
}
