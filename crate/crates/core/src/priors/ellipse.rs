//! Ellipse matching prior for roughly elliptical objects.

use crate::model::minmax_normalize;
use crate::superpixels::SuperpixelSegmentation;

/// Moment-matched ellipse of a pixel set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseFit {
    pub center: (f64, f64),
    /// Angle of the major axis to the image y axis, in `[0, pi)`.
    pub orientation: f64,
    pub semi_major: f64,
    pub semi_minor: f64,
    pub foci: [(f64, f64); 2],
}

impl EllipseFit {
    pub fn anisotropy(&self) -> f64 {
        self.semi_major / self.semi_minor
    }

    /// Whether `(x, y)` lies strictly inside the ellipse (sum of focal
    /// distances below the major axis).
    pub fn contains(&self, x: f64, y: f64) -> bool {
        let [f1, f2] = self.foci;
        (x - f1.0).hypot(y - f1.1) + (x - f2.0).hypot(y - f2.1) < 2.0 * self.semi_major
    }
}

/// Fits an ellipse from second-order central moments; semi-axes are
/// `2 sqrt(lambda)`. `None` below 5 pixels or for collinear pixels.
pub fn fit_points(points: &[(f64, f64)]) -> Option<EllipseFit> {
    if points.len() < 5 {
        return None;
    }
    let n = points.len() as f64;
    let cx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let cy = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut mxx, mut myy, mut mxy) = (0.0, 0.0, 0.0);
    for &(x, y) in points {
        mxx += (x - cx) * (x - cx);
        myy += (y - cy) * (y - cy);
        mxy += (x - cx) * (y - cy);
    }
    let (mxx, myy, mxy) = (mxx / n, myy / n, mxy / n);
    let half_trace = (mxx + myy) / 2.0;
    let root = (((mxx - myy) / 2.0).powi(2) + mxy * mxy).sqrt();
    let (l1, l2) = (half_trace + root, half_trace - root);
    if !(l2 > 1e-12) {
        return None;
    }
    let (vx, vy) = if mxy.abs() > 1e-15 {
        (l1 - myy, mxy)
    } else if mxx >= myy {
        (1.0, 0.0)
    } else {
        (0.0, 1.0)
    };
    let norm = vx.hypot(vy);
    let (ux, uy) = (vx / norm, vy / norm);
    let (a, b) = (2.0 * l1.sqrt(), 2.0 * l2.sqrt());
    let c = (a * a - b * b).max(0.0).sqrt();
    let mut orientation = ux.atan2(uy);
    if orientation < 0.0 {
        orientation += std::f64::consts::PI;
    }
    if orientation >= std::f64::consts::PI {
        orientation -= std::f64::consts::PI;
    }
    Some(EllipseFit {
        center: (cx, cy),
        orientation,
        semi_major: a,
        semi_minor: b,
        foci: [(cx - c * ux, cy - c * uy), (cx + c * ux, cy + c * uy)],
    })
}

pub fn fit_ellipse(seg: &SuperpixelSegmentation, superpixel: usize) -> Option<EllipseFit> {
    let w = seg.width();
    let points: Vec<(f64, f64)> = seg
        .labels()
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, &l)| l as usize == superpixel)
        .map(|(p, _)| ((p % w) as f64, (p / w) as f64))
        .collect();
    fit_points(&points)
}

/// Fraction of each superpixel's pixels inside its fitted ellipse; 0 when no
/// ellipse fits.
pub fn ellipse_matching(seg: &SuperpixelSegmentation) -> Vec<f64> {
    let w = seg.width();
    seg.members()
        .iter()
        .map(|members| {
            let points: Vec<(f64, f64)> = members
                .iter()
                .map(|&p| ((p % w) as f64, (p / w) as f64))
                .collect();
            match fit_points(&points) {
                Some(fit) => {
                    points.iter().filter(|&&(x, y)| fit.contains(x, y)).count() as f64
                        / points.len() as f64
                }
                None => 0.0,
            }
        })
        .collect()
}

/// `EP = 1 - exp(-EM / sigma5^2)`; superpixels outside the open size range
/// `(s0, s1)` get the smallest EP of the image. Min-max normalized.
pub fn ellipse_prior(seg: &SuperpixelSegmentation, sigma5: f64, s0: f64, s1: f64) -> Vec<f64> {
    let s2 = sigma5 * sigma5;
    let ep: Vec<f64> = ellipse_matching(seg)
        .into_iter()
        .map(|em| 1.0 - (-em / s2).exp())
        .collect();
    let floor = ep.iter().copied().fold(f64::INFINITY, f64::min);
    let filtered: Vec<f64> = ep
        .iter()
        .zip(seg.superpixels())
        .map(|(&v, s)| {
            let size = s.size as f64;
            if size > s0 && size < s1 {
                v
            } else {
                floor
            }
        })
        .collect();
    minmax_normalize(&filtered)
}
