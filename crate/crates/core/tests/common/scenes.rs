//! Synthetic scenes with known answers.
#![allow(dead_code)]

use itself::model::{quantize, LabImage, LabelMap};
use itself::superpixels::SuperpixelSegmentation;
use rand::Rng;

/// Red disc on a gray background, with its mask.
pub fn red_disc(size: usize, radius: f64) -> (LabImage, Vec<bool>) {
    let c = (size as f64 - 1.0) / 2.0;
    let mut rgb = Vec::with_capacity(size * size * 3);
    let mut mask = Vec::with_capacity(size * size);
    for y in 0..size {
        for x in 0..size {
            let inside = (x as f64 - c).hypot(y as f64 - c) <= radius;
            mask.push(inside);
            rgb.extend_from_slice(if inside { &[220, 30, 30] } else { &[128, 128, 128] });
        }
    }
    (LabImage::from_rgb8(size, size, &rgb).unwrap(), mask)
}

/// Pixels of an ellipse centered at `(cx, cy)`, semi-axes `a` (along the
/// direction `theta` from the x axis) and `b`.
pub fn ellipse_pixels(w: usize, h: usize, cx: f64, cy: f64, a: f64, b: f64, theta: f64) -> Vec<bool> {
    let (s, c) = theta.sin_cos();
    (0..w * h)
        .map(|p| {
            let (x, y) = ((p % w) as f64 - cx, (p / w) as f64 - cy);
            let (u, v) = (x * c + y * s, -x * s + y * c);
            (u / a).powi(2) + (v / b).powi(2) <= 1.0
        })
        .collect()
}

pub struct ShapeScene {
    pub segmentation: SuperpixelSegmentation,
    /// Label of the ellipse.
    pub ellipse: usize,
    pub ellipse_area: usize,
}

/// One ellipse and three rectangles, all within the (1500, 5000) size range,
/// on a 200x200 background. Each shape is its own superpixel.
pub fn ellipse_among_rectangles(rng: &mut impl Rng) -> ShapeScene {
    let (w, h) = (200usize, 200usize);
    loop {
        let mut labels = vec![0u32; w * h];
        let a = rng.gen_range(26.0..36.0);
        let b = rng.gen_range(18.0..a * 0.95);
        let theta = rng.gen_range(0.0..std::f64::consts::PI);
        let (cx, cy) = (rng.gen_range(45.0..155.0), rng.gen_range(45.0..155.0));
        let ellipse = ellipse_pixels(w, h, cx, cy, a, b, theta);
        let ellipse_area = ellipse.iter().filter(|&&v| v).count();
        if !(1500..5000).contains(&ellipse_area) {
            continue;
        }
        for (l, e) in labels.iter_mut().zip(&ellipse) {
            if *e {
                *l = 1;
            }
        }
        let mut placed = 0;
        let mut attempts = 0;
        while placed < 3 && attempts < 500 {
            attempts += 1;
            let rw = rng.gen_range(30..80usize);
            let rh = rng.gen_range(1600 / rw + 1..(4900 / rw).min(90));
            if rw * rh <= 1500 || rw * rh >= 5000 || rw + 2 >= w || rh + 2 >= h {
                continue;
            }
            let (x0, y0) = (rng.gen_range(1..w - rw - 1), rng.gen_range(1..h - rh - 1));
            // Keep a one-pixel gap so shapes never touch.
            let free = (y0 - 1..y0 + rh + 1).all(|y| (x0 - 1..x0 + rw + 1).all(|x| labels[y * w + x] == 0));
            if !free {
                continue;
            }
            placed += 1;
            for y in y0..y0 + rh {
                for x in x0..x0 + rw {
                    labels[y * w + x] = 1 + placed;
                }
            }
        }
        if placed < 3 {
            continue;
        }
        let colors = [[128u8, 128, 128], [200, 160, 40], [60, 90, 200], [40, 160, 80], [150, 50, 150]];
        let rgb: Vec<u8> = labels.iter().flat_map(|&l| colors[l as usize]).collect();
        let image = LabImage::from_rgb8(w, h, &rgb).unwrap();
        let palette = quantize(&image, 8).unwrap();
        let map = LabelMap::new(w, h, labels).unwrap();
        // The background may be split by shapes only if it stays connected.
        let segmentation = SuperpixelSegmentation::new(&image, &palette, map).unwrap();
        if !segmentation.is_connected() {
            continue;
        }
        return ShapeScene {
            segmentation,
            ellipse: 1,
            ellipse_area,
        };
    }
}
