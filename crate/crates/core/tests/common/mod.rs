//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use itself::model::{LabImage, SaliencyMap};
use itself::superpixels::{PathCost, SeedSet};
use rand::Rng;

pub fn random_image(rng: &mut impl Rng, w: usize, h: usize) -> LabImage {
    let rgb: Vec<u8> = (0..w * h * 3).map(|_| rng.gen()).collect();
    LabImage::from_rgb8(w, h, &rgb).unwrap()
}

pub fn random_map(rng: &mut impl Rng, w: usize, h: usize) -> SaliencyMap {
    SaliencyMap::new(w, h, (0..w * h).map(|_| rng.gen::<f64>()).collect()).unwrap()
}

/// Distinct random seed pixels.
pub fn random_seeds(rng: &mut impl Rng, w: usize, h: usize, n: usize) -> SeedSet {
    let mut pixels = Vec::new();
    while pixels.len() < n {
        let p = rng.gen_range(0..w * h);
        if !pixels.contains(&p) {
            pixels.push(p);
        }
    }
    SeedSet::new(w, pixels, vec![false; n]).unwrap()
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

/// Single-source shortest paths from `seed`, every step priced with the
/// seed's own color and saliency. Plain Dijkstra with a binary heap.
pub fn single_source_costs(
    image: &LabImage,
    map: &SaliencyMap,
    seed: usize,
    cost: PathCost,
) -> Vec<f64> {
    let (w, h) = (image.width(), image.height());
    let mut best = vec![f64::INFINITY; w * h];
    let mut heap = BinaryHeap::new();
    best[seed] = 0.0;
    heap.push(Reverse((0u64, seed)));
    // f64 bits order like the values for non-negative finite numbers.
    while let Some(Reverse((bits, p))) = heap.pop() {
        let c = f64::from_bits(bits);
        if c > best[p] {
            continue;
        }
        let (px, py) = ((p % w) as i64, (p / w) as i64);
        for dy in -1i64..=1 {
            for dx in -1i64..=1 {
                let (x, y) = (px + dx, py + dy);
                if (dx, dy) == (0, 0) || x < 0 || y < 0 || x >= w as i64 || y >= h as i64 {
                    continue;
                }
                let q = y as usize * w + x as usize;
                let spatial = ((dx * dx + dy * dy) as f64).sqrt();
                let c2 = c + cost.increment(
                    spatial,
                    dist(image.lab(seed), image.lab(q)),
                    map.get(seed) - map.get(q),
                );
                if c2 < best[q] {
                    best[q] = c2;
                    heap.push(Reverse((c2.to_bits(), q)));
                }
            }
        }
    }
    best
}

/// Labels each pixel with the seed of least single-source cost (lowest
/// index on ties).
pub fn per_seed_oracle(image: &LabImage, map: &SaliencyMap, seeds: &SeedSet, cost: PathCost) -> Vec<u32> {
    let tables: Vec<Vec<f64>> = seeds
        .pixels()
        .iter()
        .map(|&s| single_source_costs(image, map, s, cost))
        .collect();
    (0..image.len())
        .map(|p| {
            let mut best = 0;
            for s in 1..tables.len() {
                if tables[s][p] < tables[best][p] {
                    best = s;
                }
            }
            best as u32
        })
        .collect()
}

pub fn random_cost(rng: &mut impl Rng) -> PathCost {
    PathCost {
        alpha: rng.gen_range(0.1..2.0),
        beta: rng.gen_range(1.0..12.0),
        gamma: rng.gen_range(0.0..3.0),
    }
}

pub mod oracles;
pub mod scenes;
