use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod dataset;
mod output;

use commands::Failure;

#[derive(Parser)]
#[command(name = "itself", version, about = "Iterative saliency estimation over object-based superpixels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
pub struct ConfigArgs {
    /// Configuration file (`key = value` lines).
    #[arg(long, conflicts_with = "preset")]
    pub config: Option<PathBuf>,
    /// Bundled preset: ecssd, dut_omron, icoseg, msra10k, lungs or parasites.
    #[arg(long)]
    pub preset: Option<String>,
    /// Extra `key=value` override, applied after the file or preset.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub overrides: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Computes the saliency map of one image.
    Saliency {
        image: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
        /// Indexed scribble mask: 0 unlabeled, 1 background, 2 object.
        #[arg(long)]
        scribbles: Option<PathBuf>,
        /// Output map (.png, or PGM for any other extension).
        #[arg(long)]
        out: PathBuf,
        /// Directory for per-iteration maps, overlays and prior heat maps.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Computes maps for every image of a directory.
    Batch {
        #[arg(long)]
        images: PathBuf,
        /// Directory of scribble masks named after the images.
        #[arg(long)]
        scribbles: Option<PathBuf>,
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads; ITSELF_THREADS caps the value.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Scores saliency maps against ground-truth masks and writes a CSV.
    Evaluate {
        #[arg(long)]
        maps: PathBuf,
        #[arg(long)]
        gt: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Writes the superpixel labels (16-bit PGM) and a boundary overlay.
    Superpixels {
        image: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
        /// Object map for seeding; uniform when absent.
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Writes a heat map per enabled prior and for their integration.
    Priors {
        image: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
        /// Object map for seeding, also fed to the saliency-color prior.
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long)]
        scribbles: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Saliency {
            image,
            config,
            scribbles,
            out,
            trace,
        } => commands::saliency(&image, &config, scribbles.as_deref(), &out, trace.as_deref()),
        Command::Batch {
            images,
            scribbles,
            config,
            out,
            jobs,
        } => commands::batch(&images, scribbles.as_deref(), &config, &out, jobs),
        Command::Evaluate { maps, gt, out } => commands::evaluate(&maps, &gt, &out),
        Command::Superpixels { image, config, map, out } => {
            commands::superpixels(&image, &config, map.as_deref(), &out)
        }
        Command::Priors {
            image,
            config,
            map,
            scribbles,
            out,
        } => commands::priors(&image, &config, map.as_deref(), scribbles.as_deref(), &out),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
