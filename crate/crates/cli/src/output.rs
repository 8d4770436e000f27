use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::Failure;

/// Writes `bytes` to `path` via a sibling temp file and rename, so readers
/// never observe a half-written output.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    let parent = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(parent).map_err(|e| io_failure(path, e))?;
    tmp.write_all(bytes).map_err(|e| io_failure(path, e))?;
    tmp.as_file().sync_all().map_err(|e| io_failure(path, e))?;
    tmp.persist(path).map_err(|e| io_failure(path, e.error))?;
    Ok(())
}

pub fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| io_failure(path, e))
}

pub fn create_dir(path: &Path) -> Result<(), Failure> {
    fs::create_dir_all(path).map_err(|e| io_failure(path, e))
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Lib(sfc_core::Error::Io(io::Error::new(
        e.kind(),
        format!("{}: {e}", path.display()),
    )))
}

/// Pretty JSON with a trailing newline.
pub fn json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>, Failure> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Lib(sfc_core::Error::Internal(e.to_string())))?;
    s.push('\n');
    Ok(s.into_bytes())
}

/// Sends the payload to `out` (atomically, summary line on stdout) or, when
/// no path is given, to stdout with the summary on stderr.
pub fn emit(out: Option<&Path>, payload: &[u8], mut summary: Value) -> Result<(), Failure> {
    match out {
        Some(path) => {
            write_atomic(path, payload)?;
            summary["output"] = Value::String(path.display().to_string());
            println!("{summary}");
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(payload)
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Lib(e.into()))?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}
