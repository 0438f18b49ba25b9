//! Query selection: border clusters and saliency thresholding.

pub mod opf;

pub use opf::{opf_cluster_fixed_k, opf_cluster_samples, Clustering};

use crate::error::{Error, Result};
use crate::graph::{graph_saliency, Polarity, QuerySet};
use crate::model::{QuantizedPalette, SaliencyMap};
use crate::superpixels::SuperpixelSegmentation;

/// Clusters superpixels by their mean color.
pub fn opf_cluster(seg: &SuperpixelSegmentation) -> Result<Clustering> {
    let samples: Vec<Vec<f64>> = seg.superpixels().iter().map(|s| s.mean_color.clone()).collect();
    opf_cluster_samples(&samples)
}

/// `sum_g w_g SM_g / sum_g w_g`, per element.
pub fn weighted_average(maps: &[(f64, Vec<f64>)]) -> Vec<f64> {
    let total: f64 = maps.iter().map(|(w, _)| w).sum();
    let len = maps.first().map_or(0, |(_, m)| m.len());
    let mut out = vec![0.0; len];
    for (w, m) in maps {
        for (o, v) in out.iter_mut().zip(m) {
            *o += w * v;
        }
    }
    out.iter_mut().for_each(|o| *o /= total);
    out
}

/// Per-cluster border queries.
#[derive(Debug, Clone, PartialEq)]
pub struct BorderCluster {
    pub members: Vec<usize>,
    pub border: Vec<usize>,
    /// Boundary connectivity `|B_g| / |S_g|`.
    pub weight: f64,
}

pub fn border_clusters(seg: &SuperpixelSegmentation, clusters: &Clustering) -> Vec<BorderCluster> {
    clusters
        .members()
        .into_iter()
        .filter_map(|members| {
            let border: Vec<usize> = members
                .iter()
                .copied()
                .filter(|&s| seg.superpixel(s).touches_border)
                .collect();
            (!border.is_empty()).then(|| BorderCluster {
                weight: border.len() as f64 / members.len() as f64,
                members,
                border,
            })
        })
        .collect()
}

/// Runs the graph saliency once per cluster touching the border, with that
/// cluster's border superpixels as background queries, and averages the
/// per-superpixel maps weighted by boundary connectivity.
pub fn border_query_saliency(
    seg: &SuperpixelSegmentation,
    palette: &QuantizedPalette,
    clusters: &Clustering,
    psi: f64,
    sigma_s: f64,
) -> Result<Vec<f64>> {
    let groups = border_clusters(seg, clusters);
    if groups.is_empty() {
        return Err(Error::NoBorderCluster);
    }
    let maps = groups
        .into_iter()
        .map(|g| {
            let queries = QuerySet::new(g.border, Polarity::Background)?;
            Ok((g.weight, graph_saliency(seg, palette, &queries, psi, sigma_s)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(weighted_average(&maps))
}

/// Superpixels whose mean saliency lies strictly above (foreground) or below
/// (background) the mean of all superpixel means.
pub fn saliency_queries(seg: &SuperpixelSegmentation, map: &SaliencyMap, polarity: Polarity) -> Result<QuerySet> {
    map.same_dims(seg.width(), seg.height())?;
    threshold_queries(&seg.superpixel_means(map.values()), polarity)
}

pub fn threshold_queries(means: &[f64], polarity: Polarity) -> Result<QuerySet> {
    let mu = means.iter().sum::<f64>() / means.len() as f64;
    let selected: Vec<usize> = means
        .iter()
        .enumerate()
        .filter(|(_, &m)| match polarity {
            Polarity::Foreground => m > mu,
            Polarity::Background => m < mu,
        })
        .map(|(s, _)| s)
        .collect();
    if selected.is_empty() {
        return Err(Error::NoQueriesSelected);
    }
    QuerySet::new(selected, polarity)
}
