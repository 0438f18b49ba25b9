//! Unsupervised optimum-path forest clustering.
//!
//! Samples are linked to their k nearest neighbors (squared Euclidean arc
//! weights). Each sample gets a Gaussian density estimate, and clusters are
//! the trees of a forest that maximizes the minimum density along paths
//! rooted at density maxima. k is chosen in `[1, ceil(sqrt(N))]` by the
//! smallest normalized cut.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const MAX_DENSITY: f64 = 1000.0;

fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Result of a clustering: contiguous cluster ids from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clustering {
    labels: Vec<usize>,
    count: usize,
    k: usize,
}

impl Clustering {
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    /// Number of clusters.
    pub fn count(&self) -> usize {
        self.count
    }

    /// Neighborhood size that was selected.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Member ids per cluster, ascending.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l].push(i);
        }
        out
    }
}

struct KnnGraph {
    distances: Vec<Vec<f64>>,
    /// Neighbors of each sample sorted by distance, lower index first on ties.
    neighbors: Vec<Vec<usize>>,
}

impl KnnGraph {
    fn new(samples: &[Vec<f64>], kmax: usize) -> Self {
        let n = samples.len();
        let distances: Vec<Vec<f64>> = samples
            .iter()
            .map(|a| samples.iter().map(|b| squared_distance(a, b)).collect())
            .collect();
        let neighbors = (0..n)
            .map(|i| {
                let mut order: Vec<usize> = (0..n).filter(|&j| j != i).collect();
                order.sort_by(|&a, &b| distances[i][a].total_cmp(&distances[i][b]).then(a.cmp(&b)));
                order.truncate(kmax);
                order
            })
            .collect();
        Self {
            distances,
            neighbors,
        }
    }

    /// Largest k-th neighbor distance over all samples.
    fn bandwidth(&self, k: usize) -> f64 {
        self.neighbors
            .iter()
            .enumerate()
            .map(|(i, nb)| self.distances[i][nb[k - 1]])
            .fold(0.0, f64::max)
    }

    /// Densities scaled to `[1, 1000]`.
    fn densities(&self, k: usize) -> Vec<f64> {
        let mut df = self.bandwidth(k);
        if df < 1e-5 {
            df = 1.0;
        }
        let kernel = 2.0 * df / 9.0;
        let pdf: Vec<f64> = (0..self.neighbors.len())
            .map(|i| {
                let s: f64 = self.neighbors[i][..k]
                    .iter()
                    .map(|&j| (-self.distances[i][j] / kernel).exp())
                    .sum();
                s / (k + 1) as f64
            })
            .collect();
        let lo = pdf.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = pdf.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if lo == hi {
            return vec![MAX_DENSITY; pdf.len()];
        }
        pdf.iter()
            .map(|p| (MAX_DENSITY - 1.0) * (p - lo) / (hi - lo) + 1.0)
            .collect()
    }

    /// k-NN lists extended so that equal-density neighbors are mutual.
    fn adjacency(&self, k: usize, density: &[f64]) -> Vec<Vec<usize>> {
        let mut adj: Vec<Vec<usize>> = self.neighbors.iter().map(|nb| nb[..k].to_vec()).collect();
        for i in 0..adj.len() {
            for t in 0..k {
                let j = self.neighbors[i][t];
                if density[i] == density[j] && !adj[j].contains(&i) {
                    adj[j].push(i);
                }
            }
        }
        adj
    }
}

#[derive(PartialEq)]
struct Entry {
    cost: f64,
    node: usize,
}

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cost
            .total_cmp(&other.cost)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Max-min forest over the adjacency; labels in order of root discovery.
fn forest(adj: &[Vec<usize>], density: &[f64]) -> (Vec<usize>, usize) {
    let n = adj.len();
    let mut cost: Vec<f64> = density.iter().map(|d| d - 1.0).collect();
    let mut label = vec![usize::MAX; n];
    let mut has_pred = vec![false; n];
    let mut done = vec![false; n];
    let mut heap: BinaryHeap<Entry> = (0..n).map(|node| Entry { cost: cost[node], node }).collect();
    let mut count = 0;
    while let Some(Entry { cost: c, node: p }) = heap.pop() {
        if done[p] || c != cost[p] {
            continue;
        }
        done[p] = true;
        if !has_pred[p] {
            cost[p] = density[p];
            label[p] = count;
            count += 1;
        }
        for &q in &adj[p] {
            if done[q] {
                continue;
            }
            let tmp = cost[p].min(density[q]);
            if tmp > cost[q] {
                cost[q] = tmp;
                label[q] = label[p];
                has_pred[q] = true;
                heap.push(Entry { cost: tmp, node: q });
            }
        }
    }
    (label, count)
}

fn normalized_cut(graph: &KnnGraph, adj: &[Vec<usize>], labels: &[usize], count: usize) -> f64 {
    let mut internal = vec![0.0; count];
    let mut external = vec![0.0; count];
    for (i, list) in adj.iter().enumerate() {
        for &j in list {
            let d = graph.distances[i][j];
            if d > 0.0 {
                if labels[i] == labels[j] {
                    internal[labels[i]] += 1.0 / d;
                } else {
                    external[labels[i]] += 1.0 / d;
                }
            }
        }
    }
    internal
        .iter()
        .zip(&external)
        .filter(|(i, e)| *i + *e > 0.0)
        .map(|(i, e)| e / (i + e))
        .sum()
}

/// Clusters with a fixed neighborhood size; also returns the cut value.
fn cluster_with_k(graph: &KnnGraph, k: usize) -> (Vec<usize>, usize, f64) {
    let density = graph.densities(k);
    let adj = graph.adjacency(k, &density);
    let (labels, count) = forest(&adj, &density);
    let cut = normalized_cut(graph, &adj, &labels, count);
    (labels, count, cut)
}

/// Clusters with a fixed k in `[1, N - 1]`.
pub fn opf_cluster_fixed_k(samples: &[Vec<f64>], k: usize) -> Result<Clustering> {
    check(samples)?;
    if k < 1 || k >= samples.len() {
        return Err(Error::InvalidParameter(format!(
            "k must lie in [1, {}], got {k}",
            samples.len() - 1
        )));
    }
    let graph = KnnGraph::new(samples, k);
    let (labels, count, _) = cluster_with_k(&graph, k);
    Ok(Clustering { labels, count, k })
}

fn check(samples: &[Vec<f64>]) -> Result<()> {
    if samples.len() < 2 {
        return Err(Error::TooFewSamples {
            needed: 2,
            got: samples.len(),
        });
    }
    Ok(())
}

/// Clusters with the k in `[1, ceil(sqrt(N))]` of smallest normalized cut
/// (the first one on ties; the search stops at a zero cut).
pub fn opf_cluster_samples(samples: &[Vec<f64>]) -> Result<Clustering> {
    check(samples)?;
    let n = samples.len();
    let kmax = ((n as f64).sqrt().ceil() as usize).clamp(1, n - 1);
    let graph = KnnGraph::new(samples, kmax);
    let mut best: Option<(f64, Clustering)> = None;
    for k in 1..=kmax {
        let (labels, count, cut) = cluster_with_k(&graph, k);
        if best.as_ref().is_none_or(|(c, _)| cut < *c) {
            best = Some((cut, Clustering { labels, count, k }));
        }
        if cut == 0.0 {
            break;
        }
    }
    Ok(best.expect("kmax >= 1").1)
}
