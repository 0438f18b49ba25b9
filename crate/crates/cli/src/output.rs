use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

/// Sibling path used while a file is being written. Keeps the extension so
/// encoders pick the same format.
fn partial_path(path: &Path) -> PathBuf {
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("output");
    let tmp = match path.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!(".{name}.partial.{ext}"),
        None => format!(".{name}.partial"),
    };
    path.with_file_name(tmp)
}

/// Writes through a temporary sibling and renames it into place, so a failed
/// write never leaves a truncated file at `path`.
pub fn write_atomic<F>(path: &Path, write: F) -> Result<()>
where
    F: FnOnce(&Path) -> itself::Result<()>,
{
    let tmp = partial_path(path);
    if let Err(e) = write(&tmp) {
        let _ = fs::remove_file(&tmp);
        return Err(e).with_context(|| format!("writing {}", path.display()));
    }
    fs::rename(&tmp, path).with_context(|| format!("moving output into {}", path.display()))
}

pub fn write_text_atomic(path: &Path, text: &str) -> Result<()> {
    write_atomic(path, |tmp| Ok(fs::write(tmp, text)?))
}
