//! Brute-force reference implementations.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itself::superpixels::{ForestState, SeedSet, NIL};

/// Automaton state: per layer, log cells and linear mean.
#[derive(Debug, Clone)]
pub struct CaState {
    pub width: usize,
    pub height: usize,
    pub cells: Vec<Vec<f64>>,
    pub means: Vec<f64>,
}

impl CaState {
    pub fn new(width: usize, height: usize, maps: &[Vec<f64>]) -> Self {
        let clamped: Vec<Vec<f64>> = maps
            .iter()
            .map(|m| m.iter().map(|v| v.clamp(1e-6, 1.0)).collect())
            .collect();
        let means = clamped
            .iter()
            .map(|m| {
                let v0 = m[0];
                v0 + m.iter().map(|v| v - v0).sum::<f64>() / m.len() as f64
            })
            .collect();
        let cells = clamped.iter().map(|m| m.iter().map(|v| v.ln()).collect()).collect();
        Self { width, height, cells, means }
    }

    /// Every cell moves by `lambda` per 4-neighbor position and layer whose
    /// cell lies above that layer's log mean, and by `-lambda` per one below.
    pub fn step(&mut self, lambda: f64) {
        let (w, h) = (self.width as i64, self.height as i64);
        let old = self.cells.clone();
        for layer in 0..self.cells.len() {
            for y in 0..h {
                for x in 0..w {
                    let mut votes = 0.0;
                    for (dx, dy) in [(-1, 0), (1, 0), (0, -1), (0, 1)] {
                        let (nx, ny) = (x + dx, y + dy);
                        if nx < 0 || ny < 0 || nx >= w || ny >= h {
                            continue;
                        }
                        let q = (ny * w + nx) as usize;
                        for (j, cells) in old.iter().enumerate() {
                            let d = cells[q] - self.means[j].ln();
                            if d > 0.0 {
                                votes += 1.0;
                            } else if d < 0.0 {
                                votes -= 1.0;
                            }
                        }
                    }
                    self.cells[layer][(y * w + x) as usize] += lambda * votes;
                }
            }
        }
    }

    pub fn finalize(&self) -> Vec<f64> {
        let n = self.width * self.height;
        let avg: Vec<f64> = (0..n)
            .map(|p| {
                self.cells.iter().map(|c| 1.0 / (1.0 + (-c[p]).exp())).sum::<f64>() / self.cells.len() as f64
            })
            .collect();
        minmax(&avg)
    }
}

pub fn minmax(v: &[f64]) -> Vec<f64> {
    let lo = v.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if hi - lo <= 0.0 {
        vec![0.5; v.len()]
    } else {
        v.iter().map(|x| (x - lo) / (hi - lo)).collect()
    }
}

/// Weighted precision, recall and F with dense pixel-to-pixel matrices.
pub fn dense_weighted_prf(width: usize, map: &[f64], gt: &[bool]) -> (f64, f64, f64) {
    let n = map.len();
    let coord = |p: usize| ((p % width) as f64, (p / width) as f64);
    let err: Vec<f64> = (0..n).map(|p| (if gt[p] { 1.0 } else { 0.0 } - map[p]).abs()).collect();
    let (mut tp, mut fp, mut fneg) = (0.0, 0.0, 0.0);
    for p in 0..n {
        let (px, py) = coord(p);
        if gt[p] {
            let (mut num, mut den) = (0.0, 0.0);
            for q in (0..n).filter(|&q| gt[q]) {
                let (qx, qy) = coord(q);
                let g = (-((px - qx).powi(2) + (py - qy).powi(2)) / 10.0).exp();
                num += g * err[q];
                den += g;
            }
            let ew = err[p].min(num / den);
            tp += 1.0 - ew;
            fneg += ew;
        } else {
            let dist = (0..n)
                .filter(|&q| gt[q])
                .map(|q| {
                    let (qx, qy) = coord(q);
                    ((px - qx).powi(2) + (py - qy).powi(2)).sqrt()
                })
                .fold(f64::INFINITY, f64::min);
            let weight = if dist.is_finite() {
                2.0 - (0.5f64.ln() / 5.0 * dist).exp()
            } else {
                2.0
            };
            fp += err[p] * weight;
        }
    }
    let r = |a: f64, b: f64| if b > 0.0 { a / b } else { 0.0 };
    let (pre, rec) = (r(tp, tp + fp), r(tp, tp + fneg));
    (pre, rec, r(2.0 * pre * rec, pre + rec))
}

/// Label pairs `(s, r)`, `s < r`, with 8-adjacent pixels.
pub fn adjacent_pairs(width: usize, labels: &[u32]) -> BTreeSet<(usize, usize)> {
    let height = labels.len() / width;
    let mut out = BTreeSet::new();
    for p in 0..labels.len() {
        for q in 0..labels.len() {
            let (dx, dy) = ((p % width).abs_diff(q % width), (p / width).abs_diff(q / width));
            if dx <= 1 && dy <= 1 && labels[p] < labels[q] && p / width < height {
                out.insert((labels[p] as usize, labels[q] as usize));
            }
        }
    }
    out
}

/// Pairs two adjacency hops apart that are neither adjacent nor equal.
pub fn transitive_pairs(adjacent: &BTreeSet<(usize, usize)>, count: usize) -> BTreeSet<(usize, usize)> {
    let linked = |a: usize, b: usize| adjacent.contains(&(a.min(b), a.max(b)));
    let mut out = BTreeSet::new();
    for s in 0..count {
        for r in s + 1..count {
            if !linked(s, r) && (0..count).any(|m| m != s && m != r && linked(s, m) && linked(m, r)) {
                out.insert((s, r));
            }
        }
    }
    out
}

/// Checks coverage, label count, acyclicity, 8-adjacent predecessor links
/// and per-tree connectivity of an optimum-path forest.
pub fn check_forest(width: usize, height: usize, seeds: &SeedSet, forest: &ForestState) -> Result<(), String> {
    let n = width * height;
    if forest.root.len() != n || forest.predecessor.len() != n || forest.cost.len() != n {
        return Err("wrong buffer sizes".into());
    }
    for p in 0..n {
        if forest.root[p] as usize >= seeds.len() || !forest.cost[p].is_finite() {
            return Err(format!("pixel {p} not conquered"));
        }
    }
    let used: BTreeSet<u32> = forest.root.iter().copied().collect();
    if used.len() != seeds.len() {
        return Err(format!("{} labels for {} seeds", used.len(), seeds.len()));
    }
    for (i, &s) in seeds.pixels().iter().enumerate() {
        if forest.predecessor[s] != NIL || forest.root[s] as usize != i {
            return Err(format!("seed {i} is not a root"));
        }
    }
    for start in 0..n {
        let mut p = start;
        let mut steps = 0;
        while forest.predecessor[p] != NIL {
            let q = forest.predecessor[p];
            let adjacent = (p % width).abs_diff(q % width) <= 1 && (p / width).abs_diff(q / width) <= 1 && p != q;
            if !adjacent {
                return Err(format!("predecessor of {p} is not adjacent"));
            }
            if forest.root[q] != forest.root[p] {
                return Err(format!("predecessor of {p} lies in another tree"));
            }
            p = q;
            steps += 1;
            if steps > n {
                return Err(format!("cycle through pixel {start}"));
            }
        }
        if seeds.pixels()[forest.root[start] as usize] != p {
            return Err(format!("pixel {start} does not reach its root seed"));
        }
    }
    Ok(())
}

/// Number of 8-connected components of every label, by flood fill.
pub fn components_per_label(width: usize, labels: &[u32]) -> Vec<usize> {
    let height = labels.len() / width;
    let count = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
    let mut comps = vec![0; count];
    let mut seen = vec![false; labels.len()];
    for start in 0..labels.len() {
        if seen[start] {
            continue;
        }
        comps[labels[start] as usize] += 1;
        let mut queue = std::collections::VecDeque::from([start]);
        seen[start] = true;
        while let Some(p) = queue.pop_front() {
            let (x, y) = ((p % width) as i64, (p / width) as i64);
            for dy in -1..=1 {
                for dx in -1..=1 {
                    let (nx, ny) = (x + dx, y + dy);
                    if nx < 0 || ny < 0 || nx >= width as i64 || ny >= height as i64 {
                        continue;
                    }
                    let q = ny as usize * width + nx as usize;
                    if !seen[q] && labels[q] == labels[p] {
                        seen[q] = true;
                        queue.push_back(q);
                    }
                }
            }
        }
    }
    comps
}

/// Brute-force recall with an explicit distance test.
pub fn recall_oracle(w: usize, pred: &[bool], gt: &[bool], tol: f64, euclid: bool) -> f64 {
    let boundary = |m: &[bool]| -> Vec<usize> {
        (0..m.len())
            .filter(|&p| {
                let (x, y) = ((p % w) as i64, (p / w) as i64);
                [(-1i64, 0i64), (1, 0), (0, -1), (0, 1)].iter().any(|(dx, dy)| {
                    let (nx, ny) = (x + dx, y + dy);
                    nx >= 0 && ny >= 0 && (nx as usize) < w && (ny as usize) < m.len() / w
                        && m[ny as usize * w + nx as usize] != m[p]
                })
            })
            .collect()
    };
    let (gb, pb) = (boundary(gt), boundary(pred));
    if gb.is_empty() {
        return 1.0;
    }
    let hit = gb
        .iter()
        .filter(|&&g| {
            pb.iter().any(|&p| {
                let dx = (g % w).abs_diff(p % w) as f64;
                let dy = (g / w).abs_diff(p / w) as f64;
                if euclid { dx.hypot(dy) <= tol } else { dx.max(dy) <= tol }
            })
        })
        .count();
    hit as f64 / gb.len() as f64
}
