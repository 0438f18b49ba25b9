//! Exact Euclidean distance transform (Felzenszwalb & Huttenlocher lower
//! envelope of parabolas, one pass per axis).

fn transform_1d(f: &[f64], out: &mut [f64], v: &mut [usize], z: &mut [f64]) {
    let n = f.len();
    let mut k = 0usize;
    let Some(first) = f.iter().position(|x| x.is_finite()) else {
        out.iter_mut().for_each(|o| *o = f64::INFINITY);
        return;
    };
    v[0] = first;
    z[0] = f64::NEG_INFINITY;
    z[1] = f64::INFINITY;
    for q in first + 1..n {
        if !f[q].is_finite() {
            continue;
        }
        loop {
            let p = v[k];
            let s = ((f[q] + (q * q) as f64) - (f[p] + (p * p) as f64)) / (2.0 * (q as f64 - p as f64));
            if s <= z[k] {
                // k == 0 cannot reach here: z[0] is -inf.
                k -= 1;
            } else {
                k += 1;
                v[k] = q;
                z[k] = s;
                z[k + 1] = f64::INFINITY;
                break;
            }
        }
    }
    k = 0;
    for (q, o) in out.iter_mut().enumerate() {
        while z[k + 1] < q as f64 {
            k += 1;
        }
        let d = q as f64 - v[k] as f64;
        *o = d * d + f[v[k]];
    }
}

/// Squared distance from every pixel to the nearest pixel where `feature` is
/// true. All entries are `+inf` when there is no feature pixel.
pub fn squared_distance_transform(width: usize, height: usize, feature: &[bool]) -> Vec<f64> {
    let n = width.max(height);
    let mut v = vec![0usize; n];
    let mut z = vec![0.0; n + 1];
    let mut col_in = vec![0.0; height];
    let mut col_out = vec![0.0; height];
    let mut grid: Vec<f64> = feature
        .iter()
        .map(|&f| if f { 0.0 } else { f64::INFINITY })
        .collect();

    for x in 0..width {
        for y in 0..height {
            col_in[y] = grid[y * width + x];
        }
        transform_1d(&col_in, &mut col_out, &mut v, &mut z);
        for y in 0..height {
            grid[y * width + x] = col_out[y];
        }
    }
    let mut row_out = vec![0.0; width];
    for y in 0..height {
        let row = &grid[y * width..(y + 1) * width];
        transform_1d(row, &mut row_out, &mut v, &mut z);
        grid[y * width..(y + 1) * width].copy_from_slice(&row_out);
    }
    grid
}

/// Euclidean (not squared) distance transform.
pub fn distance_transform(width: usize, height: usize, feature: &[bool]) -> Vec<f64> {
    squared_distance_transform(width, height, feature)
        .into_iter()
        .map(f64::sqrt)
        .collect()
}
