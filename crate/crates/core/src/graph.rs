//! Superpixel graph: adjacency, transitive and query edges weighted by color
//! similarity, and the per-vertex saliency score derived from them.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{QuantizedPalette, SaliencyMap};
use crate::superpixels::SuperpixelSegmentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Adjacency,
    Transitive,
    Query,
}

impl EdgeClass {
    pub fn name(self) -> &'static str {
        match self {
            EdgeClass::Adjacency => "adjacency",
            EdgeClass::Transitive => "transitive",
            EdgeClass::Query => "query",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    Foreground,
    Background,
}

/// Query superpixels, all of one polarity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuerySet {
    members: Vec<usize>,
    polarity: Polarity,
}

impl QuerySet {
    /// Sorts and deduplicates `members`; an empty set is rejected.
    pub fn new(mut members: Vec<usize>, polarity: Polarity) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyQuerySet);
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { members, polarity })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: usize) -> bool {
        self.members.binary_search(&s).is_ok()
    }
}

/// One edge. Adjacency and transitive edges are undirected and stored with
/// `source < target`; query edges point from any vertex to a query.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub class: EdgeClass,
    /// Query edge towards a foreground query.
    pub foreground: bool,
    /// Initial weight e: psi for query edges, 1 - psi otherwise.
    pub base: f64,
    /// Current weight; `base` times the color similarity once weighted.
    pub weight: f64,
}

impl Edge {
    /// `base - weight`: the part of the initial weight explained by color
    /// difference.
    pub fn dissimilarity(&self) -> f64 {
        self.base - self.weight
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuperpixelGraph {
    vertices: usize,
    edges: Vec<Edge>,
}

impl SuperpixelGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edges_of(&self, class: EdgeClass) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.class == class)
    }

    /// Same graph with every base and current weight multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        let mut out = self.clone();
        for e in &mut out.edges {
            e.base *= factor;
            e.weight *= factor;
        }
        out
    }

    /// One line per edge: `source target class weight`.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let _ = writeln!(out, "{} {} {} {:.12}", e.source, e.target, e.class.name(), e.weight);
        }
        out
    }
}

/// Builds the three edge sets with initial weights `psi` (query) and
/// `1 - psi` (adjacency and transitive).
pub fn build_graph(seg: &SuperpixelSegmentation, queries: &QuerySet, psi: f64) -> Result<SuperpixelGraph> {
    if queries.is_empty() {
        return Err(Error::EmptyQuerySet);
    }
    if !(0.0..=1.0).contains(&psi) {
        return Err(Error::InvalidParameter(format!("psi must lie in [0, 1], got {psi}")));
    }
    let n = seg.len();
    if let Some(&bad) = queries.members().iter().find(|&&q| q >= n) {
        return Err(Error::InvalidParameter(format!(
            "query {bad} out of range for {n} superpixels"
        )));
    }

    let mut edges = Vec::new();
    let undirected = |s: usize, r: usize, class| Edge {
        source: s,
        target: r,
        class,
        foreground: false,
        base: 1.0 - psi,
        weight: 1.0 - psi,
    };
    for s in 0..n {
        for &r in seg.neighbors(s) {
            if s < r {
                edges.push(undirected(s, r, EdgeClass::Adjacency));
            }
        }
    }
    let mut mark = vec![usize::MAX; n];
    for s in 0..n {
        for &r in seg.neighbors(s) {
            mark[r] = s;
        }
        mark[s] = s;
        let mut hop2: Vec<usize> = seg
            .neighbors(s)
            .iter()
            .flat_map(|&w| seg.neighbors(w).iter().copied())
            .filter(|&r| r > s && mark[r] != s)
            .collect();
        hop2.sort_unstable();
        hop2.dedup();
        edges.extend(hop2.into_iter().map(|r| undirected(s, r, EdgeClass::Transitive)));
    }
    let foreground = queries.polarity() == Polarity::Foreground;
    for s in 0..n {
        for &q in queries.members() {
            if q != s {
                edges.push(Edge {
                    source: s,
                    target: q,
                    class: EdgeClass::Query,
                    foreground,
                    base: psi,
                    weight: psi,
                });
            }
        }
    }
    Ok(SuperpixelGraph { vertices: n, edges })
}

/// `sum_i sum_j exp(-d(c_i, c_j) / sigma_s) p(c_i, S) p(c_j, R)` from a
/// precomputed similarity table.
fn histogram_similarity(a: &[(usize, f64)], b: &[(usize, f64)], table: &[f64], colors: usize) -> f64 {
    let mut sum = 0.0;
    for &(ci, pi) in a {
        let row = &table[ci * colors..(ci + 1) * colors];
        for &(cj, pj) in b {
            sum += row[cj] * pi * pj;
        }
    }
    sum
}

/// Replaces every edge weight by `e * similarity(S, R)`.
pub fn weight_edges(
    graph: &SuperpixelGraph,
    seg: &SuperpixelSegmentation,
    palette: &QuantizedPalette,
    sigma_s: f64,
) -> Result<SuperpixelGraph> {
    if !(sigma_s > 0.0) {
        return Err(Error::InvalidParameter(format!("sigma_s must be positive, got {sigma_s}")));
    }
    let table = palette.distance_table(|d| (-d / sigma_s).exp());
    let colors = palette.len();
    let mut out = graph.clone();
    for e in &mut out.edges {
        let sim = histogram_similarity(
            &seg.superpixel(e.source).histogram,
            &seg.superpixel(e.target).histogram,
            &table,
            colors,
        );
        e.weight = e.base * sim;
    }
    Ok(out)
}

/// Per-vertex saliency, min-max normalized. A vertex collects the
/// dissimilarity of its adjacency and transitive edges, of its query edges
/// towards background queries, and one minus the dissimilarity towards
/// foreground queries.
pub fn vertex_saliency(graph: &SuperpixelGraph) -> Vec<f64> {
    let mut score = vec![0.0; graph.vertices];
    for e in &graph.edges {
        let d = e.dissimilarity();
        match e.class {
            EdgeClass::Adjacency | EdgeClass::Transitive => {
                score[e.source] += d;
                score[e.target] += d;
            }
            EdgeClass::Query if e.foreground => score[e.source] += 1.0 - d,
            EdgeClass::Query => score[e.source] += d,
        }
    }
    crate::model::minmax_normalize(&score)
}

/// Multiplies vertex saliency by the prior, min-max normalizes and paints
/// the result onto the pixels. All-zero products stay zero.
pub fn apply_prior(seg: &SuperpixelSegmentation, vs: &[f64], prior: &[f64]) -> Result<SaliencyMap> {
    if vs.len() != seg.len() || prior.len() != seg.len() {
        return Err(Error::BufferLength {
            expected: seg.len(),
            actual: if vs.len() != seg.len() { vs.len() } else { prior.len() },
        });
    }
    let product: Vec<f64> = vs.iter().zip(prior).map(|(v, p)| v * p).collect();
    let scores = if product.iter().all(|&v| v == 0.0) {
        product
    } else {
        crate::model::minmax_normalize(&product)
    };
    SaliencyMap::new(seg.width(), seg.height(), seg.rasterize(&scores))
}

/// Build, weight and score in one call.
pub fn graph_saliency(
    seg: &SuperpixelSegmentation,
    palette: &QuantizedPalette,
    queries: &QuerySet,
    psi: f64,
    sigma_s: f64,
) -> Result<Vec<f64>> {
    let graph = build_graph(seg, queries, psi)?;
    Ok(vertex_saliency(&weight_edges(&graph, seg, palette, sigma_s)?))
}
