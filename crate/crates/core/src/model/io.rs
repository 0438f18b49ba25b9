//! Raster input/output. Reads PNG, JPEG, BMP and binary PNM; writes PNG, PPM (P6) and PGM (P5).

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use image::{DynamicImage, GrayImage, ImageBuffer, RgbImage};

use super::lab::LabImage;
use super::map::{LabelMap, SaliencyMap};
use crate::error::{Error, Result};

fn decode(path: &Path) -> Result<DynamicImage> {
    let bytes = fs::read(path)?;
    image::load_from_memory(&bytes).map_err(|e| Error::Decode {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn is_gray(img: &DynamicImage) -> bool {
    matches!(
        img,
        DynamicImage::ImageLuma8(_)
            | DynamicImage::ImageLumaA8(_)
            | DynamicImage::ImageLuma16(_)
            | DynamicImage::ImageLumaA16(_)
    )
}

/// Converts a decoded raster; gray inputs keep a single L channel.
pub fn lab_from_dynamic(img: &DynamicImage) -> Result<LabImage> {
    let (w, h) = (img.width() as usize, img.height() as usize);
    if is_gray(img) {
        LabImage::from_gray8(w, h, img.to_luma8().as_raw())
    } else {
        LabImage::from_rgb8(w, h, img.to_rgb8().as_raw())
    }
}

pub fn read_image(path: impl AsRef<Path>) -> Result<LabImage> {
    lab_from_dynamic(&decode(path.as_ref())?)
}

/// Reads any raster as 8-bit gray levels; returns `(width, height, data)`.
pub fn read_gray8(path: impl AsRef<Path>) -> Result<(usize, usize, Vec<u8>)> {
    let img = decode(path.as_ref())?;
    let gray = img.to_luma8();
    Ok((gray.width() as usize, gray.height() as usize, gray.into_raw()))
}

/// Reads a ground-truth mask, binarized at 128.
pub fn read_mask(path: impl AsRef<Path>) -> Result<SaliencyMap> {
    let (w, h, data) = read_gray8(path)?;
    let mask: Vec<bool> = data.iter().map(|&v| v >= 128).collect();
    SaliencyMap::from_mask(w, h, &mask)
}

/// Reads an 8-bit saliency map as values `v / 255`.
pub fn read_map(path: impl AsRef<Path>) -> Result<SaliencyMap> {
    let (w, h, data) = read_gray8(path)?;
    SaliencyMap::new(w, h, data.iter().map(|&v| f64::from(v) / 255.0).collect())
}

fn has_extension(path: &Path, ext: &str) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case(ext))
}

fn encode_error(path: &Path, e: image::ImageError) -> Error {
    Error::Decode {
        path: path.to_path_buf(),
        message: e.to_string(),
    }
}

/// Writes 8-bit gray data as PNG when the path ends in `.png`, binary PGM otherwise.
pub fn write_gray8(path: impl AsRef<Path>, width: usize, height: usize, data: &[u8]) -> Result<()> {
    let path = path.as_ref();
    if has_extension(path, "png") {
        let img = GrayImage::from_raw(width as u32, height as u32, data.to_vec())
            .ok_or(Error::BufferLength {
                expected: width * height,
                actual: data.len(),
            })?;
        img.save_with_format(path, image::ImageFormat::Png)
            .map_err(|e| encode_error(path, e))
    } else {
        let mut w = BufWriter::new(fs::File::create(path)?);
        write!(w, "P5\n{width} {height}\n255\n")?;
        w.write_all(data)?;
        w.flush()?;
        Ok(())
    }
}

/// Writes a saliency map with `round(255 * s)` gray levels.
pub fn write_map(path: impl AsRef<Path>, map: &SaliencyMap) -> Result<()> {
    write_gray8(path, map.width(), map.height(), &map.to_gray8())
}

pub fn write_rgb8(path: impl AsRef<Path>, width: usize, height: usize, rgb: &[u8]) -> Result<()> {
    let path = path.as_ref();
    let img: RgbImage = ImageBuffer::from_raw(width as u32, height as u32, rgb.to_vec()).ok_or(
        Error::BufferLength {
            expected: width * height * 3,
            actual: rgb.len(),
        },
    )?;
    let format = if has_extension(path, "png") {
        image::ImageFormat::Png
    } else {
        image::ImageFormat::Pnm
    };
    img.save_with_format(path, format)
        .map_err(|e| encode_error(path, e))
}

/// 16-bit binary PGM (maxval 65535, big-endian samples).
pub fn write_labels_pgm16(path: impl AsRef<Path>, labels: &LabelMap) -> Result<()> {
    if labels.count() > 65_536 {
        return Err(Error::InvalidParameter(format!(
            "{} labels do not fit 16 bits",
            labels.count()
        )));
    }
    let mut w = BufWriter::new(fs::File::create(path.as_ref())?);
    write!(w, "P5\n{} {}\n65535\n", labels.width(), labels.height())?;
    for &l in labels.labels() {
        w.write_all(&(l as u16).to_be_bytes())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_labels(path: impl AsRef<Path>) -> Result<LabelMap> {
    let path = path.as_ref();
    let img = decode(path)?;
    let (w, h) = (img.width() as usize, img.height() as usize);
    let raw: Vec<u32> = match img {
        DynamicImage::ImageLuma16(buf) => buf.into_raw().into_iter().map(u32::from).collect(),
        other => other.to_luma16().into_raw().into_iter().map(u32::from).collect(),
    };
    LabelMap::new(w, h, raw)
}

/// Pixels with an 8-neighbor carrying a different label.
pub fn boundary_mask(labels: &LabelMap) -> Vec<bool> {
    let (w, h) = (labels.width(), labels.height());
    let mut out = vec![false; w * h];
    for y in 0..h {
        for x in 0..w {
            let l = labels.label(y * w + x);
            'scan: for dy in -1i64..=1 {
                for dx in -1i64..=1 {
                    let (nx, ny) = (x as i64 + dx, y as i64 + dy);
                    if nx < 0 || ny < 0 || nx >= w as i64 || ny >= h as i64 {
                        continue;
                    }
                    if labels.label(ny as usize * w + nx as usize) != l {
                        out[y * w + x] = true;
                        break 'scan;
                    }
                }
            }
        }
    }
    out
}

/// Superpixel boundaries painted green over the image.
pub fn boundary_overlay(image: &LabImage, labels: &LabelMap) -> Vec<u8> {
    let mut rgb = image.to_rgb8();
    for (p, b) in boundary_mask(labels).into_iter().enumerate() {
        if b {
            rgb[p * 3..p * 3 + 3].copy_from_slice(&[0, 255, 0]);
        }
    }
    rgb
}

/// Blue-green-yellow-red heat map of a `[0, 1]` map.
pub fn heat_map(map: &SaliencyMap) -> Vec<u8> {
    const STOPS: [[f64; 3]; 5] = [
        [0.0, 0.0, 255.0],
        [0.0, 255.0, 255.0],
        [0.0, 255.0, 0.0],
        [255.0, 255.0, 0.0],
        [255.0, 0.0, 0.0],
    ];
    let mut out = Vec::with_capacity(map.len() * 3);
    for &v in map.values() {
        let t = v.clamp(0.0, 1.0) * 4.0;
        let i = (t.floor() as usize).min(3);
        let f = t - i as f64;
        for (a, b) in STOPS[i].iter().zip(&STOPS[i + 1]) {
            out.push((a * (1.0 - f) + b * f).round() as u8);
        }
    }
    out
}
