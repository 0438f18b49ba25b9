//! Image foresting transform with the object-based additive path cost.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use super::segmentation::{neighbors, SuperpixelSegmentation, NEIGHBORS_8};
use super::seeds::SeedSet;
use super::OisfParams;
use crate::error::{Error, Result};
use crate::model::{LabImage, LabelMap, QuantizedPalette, SaliencyMap};

/// Marks a pixel without predecessor (a root).
pub const NIL: usize = usize::MAX;

/// Optimum-path forest produced by one delineation.
#[derive(Debug, Clone, PartialEq)]
pub struct ForestState {
    pub cost: Vec<f64>,
    /// Seed index of each pixel's root.
    pub root: Vec<u32>,
    pub predecessor: Vec<usize>,
}

impl ForestState {
    /// Labels equal root seed indices.
    pub fn labels(&self) -> &[u32] {
        &self.root
    }
}

/// Path-cost increment for extending a path rooted at `r` from `p` to `q`.
#[derive(Debug, Clone, Copy)]
pub struct PathCost {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl PathCost {
    pub fn from_params(params: &OisfParams) -> Self {
        Self {
            alpha: params.alpha,
            beta: params.beta,
            gamma: params.gamma,
        }
    }

    /// `spatial + [alpha * color * gamma^|ds| + gamma * |ds|]^beta`.
    pub fn increment(&self, spatial: f64, color: f64, saliency_diff: f64) -> f64 {
        let ds = saliency_diff.abs();
        let base = self.alpha * color * self.gamma.powf(ds) + self.gamma * ds;
        spatial + base.powf(self.beta)
    }
}

fn spatial_step(width: usize, p: usize, q: usize) -> f64 {
    if p % width != q % width && p / width != q / width {
        std::f64::consts::SQRT_2
    } else {
        1.0
    }
}

#[derive(PartialEq)]
struct Node {
    cost: f64,
    order: u64,
    pixel: usize,
}

impl Eq for Node {}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cost
            .total_cmp(&other.cost)
            .then(self.order.cmp(&other.order))
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn check_inputs(image: &LabImage, object_map: &SaliencyMap, seeds: &SeedSet) -> Result<()> {
    object_map.same_dims(image.width(), image.height())?;
    if seeds.is_empty() {
        return Err(Error::InvalidParameter("no seeds".into()));
    }
    if let Some(&p) = seeds.pixels().iter().find(|&&p| p >= image.len()) {
        return Err(Error::InvalidParameter(format!("seed pixel {p} out of bounds")));
    }
    Ok(())
}

/// Multi-source best-first search over the 8-neighborhood. Cost ties are
/// resolved first-in-first-out; a pixel is only taken over by a strictly
/// cheaper path.
pub fn ift_forest(
    image: &LabImage,
    object_map: &SaliencyMap,
    seeds: &SeedSet,
    cost_fn: PathCost,
) -> Result<ForestState> {
    check_inputs(image, object_map, seeds)?;
    let (w, h) = (image.width(), image.height());
    let total = w * h;
    let mut cost = vec![f64::INFINITY; total];
    let mut root = vec![u32::MAX; total];
    let mut predecessor = vec![NIL; total];
    let mut done = vec![false; total];
    let mut heap = BinaryHeap::new();
    let mut order = 0u64;

    for (i, &s) in seeds.pixels().iter().enumerate() {
        cost[s] = 0.0;
        root[s] = i as u32;
        heap.push(Reverse(Node {
            cost: 0.0,
            order,
            pixel: s,
        }));
        order += 1;
    }

    while let Some(Reverse(Node { cost: c, pixel: p, .. })) = heap.pop() {
        if done[p] || c != cost[p] {
            continue;
        }
        done[p] = true;
        let r = seeds.pixel(root[p] as usize);
        let (root_color, root_saliency) = (image.lab(r), object_map.get(r));
        for q in neighbors(w, h, p, &NEIGHBORS_8) {
            if done[q] {
                continue;
            }
            let color = crate::model::lab::euclidean(root_color, image.lab(q));
            let tmp = c + cost_fn.increment(
                spatial_step(w, p, q),
                color,
                root_saliency - object_map.get(q),
            );
            if tmp < cost[q] {
                cost[q] = tmp;
                root[q] = root[p];
                predecessor[q] = p;
                heap.push(Reverse(Node {
                    cost: tmp,
                    order,
                    pixel: q,
                }));
                order += 1;
            }
        }
    }

    Ok(ForestState {
        cost,
        root,
        predecessor,
    })
}

/// Delineates one superpixel per seed; superpixel `i` is the tree of seed `i`.
pub fn ift_delineate(
    image: &LabImage,
    object_map: &SaliencyMap,
    palette: &QuantizedPalette,
    seeds: &SeedSet,
    params: &OisfParams,
) -> Result<SuperpixelSegmentation> {
    let forest = ift_forest(image, object_map, seeds, PathCost::from_params(params))?;
    let labels = LabelMap::new(image.width(), image.height(), forest.root)?;
    SuperpixelSegmentation::new(image, palette, labels)
}
