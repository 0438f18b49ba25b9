use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context};
use rayon::prelude::*;

use itself::metrics::{evaluate as score, MetricReport};
use itself::model::io::{
    boundary_overlay, heat_map, read_gray8, read_image, read_map, read_mask, write_labels_pgm16, write_map,
    write_rgb8,
};
use itself::model::{quantize, LabImage, SaliencyMap, DEFAULT_BINS};
use itself::pipeline::{run, PipelineConfig};
use itself::priors::{compute_priors, PriorInputs, ScribbleSet};
use itself::superpixels::oisf_segment;

use crate::dataset::{find_by_stem, list_images, stem};
use crate::output::{write_atomic, write_text_atomic};
use crate::ConfigArgs;

pub const EXIT_INPUT: u8 = 1;
pub const EXIT_CONFIG: u8 = 2;
pub const EXIT_PIPELINE: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

trait Classify<T> {
    fn or_exit(self, code: u8) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> Classify<T> for Result<T, E> {
    fn or_exit(self, code: u8) -> Result<T, Failure> {
        self.map_err(|e| Failure { code, error: e.into() })
    }
}

fn load_config(args: &ConfigArgs) -> Result<PipelineConfig, Failure> {
    let mut config = match (&args.config, &args.preset) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))
                .or_exit(EXIT_INPUT)?;
            PipelineConfig::parse(&text)
                .with_context(|| format!("in {}", path.display()))
                .or_exit(EXIT_CONFIG)?
        }
        (None, Some(name)) => PipelineConfig::preset(name).or_exit(EXIT_CONFIG)?,
        (None, None) => PipelineConfig::default(),
    };
    if !args.overrides.is_empty() {
        config
            .apply(&args.overrides.join("\n"))
            .context("in --set overrides")
            .or_exit(EXIT_CONFIG)?;
    }
    Ok(config)
}

fn load_image(path: &Path) -> Result<LabImage, Failure> {
    read_image(path)
        .with_context(|| format!("reading {}", path.display()))
        .or_exit(EXIT_INPUT)
}

fn load_scribbles(path: &Path, image: &LabImage) -> Result<ScribbleSet, Failure> {
    let (w, h, data) = read_gray8(path)
        .with_context(|| format!("reading scribbles {}", path.display()))
        .or_exit(EXIT_INPUT)?;
    if (w, h) != (image.width(), image.height()) {
        return Err(anyhow!(
            "scribble mask {} is {w}x{h}, image is {}x{}",
            path.display(),
            image.width(),
            image.height()
        ))
        .or_exit(EXIT_INPUT);
    }
    Ok(ScribbleSet::from_mask(&data))
}

fn load_object_map(path: Option<&Path>, image: &LabImage) -> Result<SaliencyMap, Failure> {
    match path {
        Some(p) => {
            let map = read_map(p)
                .with_context(|| format!("reading map {}", p.display()))
                .or_exit(EXIT_INPUT)?;
            map.same_dims(image.width(), image.height())
                .with_context(|| format!("map {}", p.display()))
                .or_exit(EXIT_INPUT)?;
            Ok(map)
        }
        None => SaliencyMap::constant(image.width(), image.height(), 0.5).or_exit(EXIT_PIPELINE),
    }
}

fn create_dir(dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir)
        .with_context(|| format!("creating {}", dir.display()))
        .or_exit(EXIT_PIPELINE)
}

pub fn saliency(
    image_path: &Path,
    args: &ConfigArgs,
    scribbles: Option<&Path>,
    out: &Path,
    trace_dir: Option<&Path>,
) -> Result<(), Failure> {
    let config = load_config(args)?;
    let image = load_image(image_path)?;
    let scribbles = scribbles.map(|p| load_scribbles(p, &image)).transpose()?;
    let trace = run(&image, &config, scribbles.as_ref())
        .with_context(|| format!("processing {}", image_path.display()))
        .or_exit(EXIT_PIPELINE)?;
    if let Some(dir) = trace_dir {
        create_dir(dir)?;
        for (t, it) in trace.iterations.iter().enumerate() {
            let prefix = format!("iter{:02}", t + 1);
            let (w, h) = (image.width(), image.height());
            write_atomic(&dir.join(format!("{prefix}_saliency.png")), |p| write_map(p, &it.saliency))
                .or_exit(EXIT_PIPELINE)?;
            write_atomic(&dir.join(format!("{prefix}_superpixels.png")), |p| {
                write_rgb8(p, w, h, &boundary_overlay(&image, it.segmentation.labels()))
            })
            .or_exit(EXIT_PIPELINE)?;
            write_atomic(&dir.join(format!("{prefix}_prior_map.png")), |p| {
                write_rgb8(p, w, h, &heat_map(&it.prior_map))
            })
            .or_exit(EXIT_PIPELINE)?;
            for layer in it.priors.layers() {
                write_atomic(&dir.join(format!("{prefix}_prior_{}.png", layer.prior)), |p| {
                    write_rgb8(p, w, h, &heat_map(&layer.raster))
                })
                .or_exit(EXIT_PIPELINE)?;
            }
        }
    }
    write_atomic(out, |p| write_map(p, &trace.final_map)).or_exit(EXIT_PIPELINE)
}

fn worker_count(jobs: Option<usize>) -> Result<usize, Failure> {
    let mut n = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if let Ok(cap) = std::env::var("ITSELF_THREADS") {
        let cap: usize = cap
            .trim()
            .parse()
            .map_err(|_| anyhow!("ITSELF_THREADS must be a positive integer, got '{cap}'"))
            .or_exit(EXIT_CONFIG)?;
        n = n.min(cap);
    }
    if n == 0 {
        return Err(anyhow!("at least one worker is needed")).or_exit(EXIT_CONFIG);
    }
    Ok(n)
}

fn batch_one(
    path: &Path,
    scribble_dir: Option<&Path>,
    config: &PipelineConfig,
    out_dir: &Path,
) -> Result<(), Failure> {
    let image = load_image(path)?;
    let name = stem(path);
    let scribbles = match scribble_dir {
        Some(dir) => match find_by_stem(dir, &name).or_exit(EXIT_INPUT)? {
            Some(p) => Some(load_scribbles(&p, &image)?),
            None => None,
        },
        None => None,
    };
    let trace = run(&image, config, scribbles.as_ref()).or_exit(EXIT_PIPELINE)?;
    write_atomic(&out_dir.join(format!("{name}.png")), |p| write_map(p, &trace.final_map))
        .or_exit(EXIT_PIPELINE)
}

pub fn batch(
    images: &Path,
    scribbles: Option<&Path>,
    args: &ConfigArgs,
    out: &Path,
    jobs: Option<usize>,
) -> Result<(), Failure> {
    let config = load_config(args)?;
    let files = list_images(images).or_exit(EXIT_INPUT)?;
    let workers = worker_count(jobs)?;
    create_dir(out)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .or_exit(EXIT_PIPELINE)?;
    let results: Vec<Result<(), Failure>> =
        pool.install(|| files.par_iter().map(|f| batch_one(f, scribbles, &config, out)).collect());
    let mut failed = 0;
    for (file, result) in files.iter().zip(results) {
        if let Err(f) = result {
            failed += 1;
            eprintln!("failed: {}: {:#}", file.display(), f.error);
        }
    }
    if failed > 0 {
        return Err(anyhow!("{failed} of {} images failed", files.len())).or_exit(EXIT_PIPELINE);
    }
    Ok(())
}

fn csv_row(name: &str, r: &MetricReport) -> [String; 6] {
    [
        name.to_string(),
        r.wf.to_string(),
        r.w_precision.to_string(),
        r.w_recall.to_string(),
        r.mae.to_string(),
        r.boundary_recall.to_string(),
    ]
}

pub fn evaluate(maps: &Path, gt: &Path, out: &Path) -> Result<(), Failure> {
    let files = list_images(maps).or_exit(EXIT_INPUT)?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    let header = ["filename", "wf", "w_precision", "w_recall", "mae", "boundary_recall"];
    writer.write_record(header).or_exit(EXIT_PIPELINE)?;
    let mut reports = Vec::with_capacity(files.len());
    for file in &files {
        let name = stem(file);
        let gt_path = find_by_stem(gt, &name)
            .or_exit(EXIT_INPUT)?
            .ok_or_else(|| anyhow!("no ground truth for {name} in {}", gt.display()))
            .or_exit(EXIT_INPUT)?;
        let map = read_map(file)
            .with_context(|| format!("reading {}", file.display()))
            .or_exit(EXIT_INPUT)?;
        let mask = read_mask(&gt_path)
            .with_context(|| format!("reading {}", gt_path.display()))
            .or_exit(EXIT_INPUT)?;
        let report = score(&map, &mask)
            .with_context(|| format!("scoring {name}"))
            .or_exit(EXIT_INPUT)?;
        let file_name = file.file_name().and_then(|n| n.to_str()).unwrap_or(&name);
        writer.write_record(csv_row(file_name, &report)).or_exit(EXIT_PIPELINE)?;
        reports.push(report);
    }
    let mean = MetricReport::mean(&reports).expect("at least one image");
    writer.write_record(csv_row("mean", &mean)).or_exit(EXIT_PIPELINE)?;
    let bytes = writer.into_inner().map_err(|e| anyhow!("{e}")).or_exit(EXIT_PIPELINE)?;
    let text = String::from_utf8(bytes).or_exit(EXIT_PIPELINE)?;
    write_text_atomic(out, &text).or_exit(EXIT_PIPELINE)
}

pub fn superpixels(
    image_path: &Path,
    args: &ConfigArgs,
    map: Option<&Path>,
    out: &Path,
) -> Result<(), Failure> {
    let config = load_config(args)?;
    let image = load_image(image_path)?;
    let object_map = load_object_map(map, &image)?;
    let palette = quantize(&image, DEFAULT_BINS).or_exit(EXIT_PIPELINE)?;
    let mut params = config.oisf.clone();
    params.n = params.n.min(image.len());
    let seg = oisf_segment(&image, &object_map, &palette, &params).or_exit(EXIT_PIPELINE)?;
    create_dir(out)?;
    let name = stem(image_path);
    write_atomic(&out.join(format!("{name}_labels.pgm")), |p| {
        write_labels_pgm16(p, seg.labels())
    })
    .or_exit(EXIT_PIPELINE)?;
    write_atomic(&out.join(format!("{name}_overlay.png")), |p| {
        write_rgb8(p, image.width(), image.height(), &boundary_overlay(&image, seg.labels()))
    })
    .or_exit(EXIT_PIPELINE)
}

pub fn priors(
    image_path: &Path,
    args: &ConfigArgs,
    map: Option<&Path>,
    scribbles: Option<&Path>,
    out: &Path,
) -> Result<(), Failure> {
    let config = load_config(args)?;
    let image = load_image(image_path)?;
    let object_map = load_object_map(map, &image)?;
    let scribbles = scribbles.map(|p| load_scribbles(p, &image)).transpose()?;
    let palette = quantize(&image, DEFAULT_BINS).or_exit(EXIT_PIPELINE)?;
    let mut params = config.oisf.clone();
    params.n = params.n.min(image.len());
    let seg = oisf_segment(&image, &object_map, &palette, &params).or_exit(EXIT_PIPELINE)?;
    let inputs = PriorInputs {
        previous: map.map(|_| &object_map),
        scribbles: scribbles.as_ref(),
    };
    let stack = compute_priors(&config.priors, &image, &seg, &palette, &config.prior_params, inputs)
        .or_exit(EXIT_PIPELINE)?;
    create_dir(out)?;
    let name = stem(image_path);
    let (w, h) = (image.width(), image.height());
    for layer in stack.layers() {
        write_atomic(&out.join(format!("{name}_{}.png", layer.prior)), |p| {
            write_rgb8(p, w, h, &heat_map(&layer.raster))
        })
        .or_exit(EXIT_PIPELINE)?;
    }
    if !stack.is_empty() {
        let rasters: Vec<SaliencyMap> = stack.layers().iter().map(|l| l.raster.clone()).collect();
        let combined =
            itself::automaton::integrate(&rasters, config.lambda, config.ca_steps).or_exit(EXIT_PIPELINE)?;
        write_atomic(&out.join(format!("{name}_combined.png")), |p| {
            write_rgb8(p, w, h, &heat_map(&combined))
        })
        .or_exit(EXIT_PIPELINE)?;
    }
    Ok(())
}
