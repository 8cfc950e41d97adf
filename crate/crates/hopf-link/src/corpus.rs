//! The fixture corpus: generation, reload and verification.

use std::path::{Path, PathBuf};

use hopf_link_core::report::Report;

use crate::analysis::{full, AnalysisReport, Session};
use crate::format::{from_json, to_json};
use crate::generate::{generate, CORPUS};
use crate::CliError;

pub fn fixture_path(dir: &Path, id: &str) -> PathBuf {
    dir.join(format!("{}.json", id))
}

/// Writes every fixture; returns the paths written.
pub fn regen(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {}", dir.display(), e)))?;
    let mut written = Vec::new();
    for (id, spec) in CORPUS {
        let g = generate(spec)?;
        let path = fixture_path(dir, id);
        std::fs::write(&path, to_json(&g.hopf)).map_err(|e| CliError::Io(format!("{}: {}", path.display(), e)))?;
        written.push(path);
    }
    Ok(written)
}

/// Reloads one fixture, compares it with a fresh construction and runs the
/// full analysis on the loaded structure.
pub fn verify_one(dir: &Path, id: &str, spec: &str) -> Result<AnalysisReport, CliError> {
    let path = fixture_path(dir, id);
    let text = std::fs::read_to_string(&path).map_err(|e| CliError::Io(format!("{}: {}", path.display(), e)))?;
    let loaded = from_json(&text, None)?;
    let fresh = generate(spec)?;
    let mut rt = Report::new();
    rt.check("matches-generator", loaded == fresh.hopf, format!("spec {}", spec));
    rt.check("bytes-stable", to_json(&loaded) == text, "save(load(file)) reproduces the file");
    let mut session = Session::new(id, loaded, fresh.smash);
    let mut report = full(&mut session)?;
    report.add("corpus", rt);
    Ok(report)
}

pub fn verify_all(dir: &Path) -> Result<Vec<AnalysisReport>, CliError> {
    CORPUS.iter().map(|(id, spec)| verify_one(dir, id, spec)).collect()
}
