//! Artifact sink: stdout by default, a file with --out. Content is built
//! fully in memory first so a failed run never leaves a partial file.

use std::io::Write;
use std::path::PathBuf;

use crate::CliError;

pub fn emit(out: &Option<PathBuf>, artifact: &str) -> Result<(), CliError> {
    let mut text = artifact.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Run(format!("cannot write to stdout: {e}")))
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Run(format!("cannot write {}: {e}", path.display()))),
    }
}
