use std::fs;
use std::path::{Path, PathBuf};

use wlpairs_core::dataset::{load_pairs, GraphPair};
use wlpairs_core::graph::parse_graph6_lines;
use wlpairs_core::Graph;

use crate::error::CliError;

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

pub fn write(path: &Path, content: &str) -> Result<(), CliError> {
    fs::write(path, content).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

pub fn read_graphs(path: &Path) -> Result<Vec<Graph>, CliError> {
    parse_graph6_lines(&read(path)?).map_err(|(line, e)| CliError::Input(format!("{}:{line}: {e}", path.display())))
}

pub fn read_pairs(path: &Path, sidecar: Option<&Path>) -> Result<Vec<GraphPair>, CliError> {
    let text = read(path)?;
    let side = sidecar.map(read).transpose()?;
    Ok(load_pairs(&text, side.as_deref())?)
}

/// `prefix` plus an extension, keeping any dots already in the prefix.
pub fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_os_string();
    s.push(suffix);
    PathBuf::from(s)
}

/// Main output goes to `out` when given, otherwise to stdout. The summary
/// goes to stdout when the main output is in a file, otherwise to stderr.
pub struct Sink<'a> {
    out: Option<&'a Path>,
}

impl<'a> Sink<'a> {
    pub fn new(out: Option<&'a Path>) -> Self {
        Sink { out }
    }

    pub fn data(&self, content: &str) -> Result<(), CliError> {
        match self.out {
            Some(p) => write(p, content),
            None => {
                print!("{content}");
                Ok(())
            }
        }
    }

    pub fn summary(&self, line: &str) {
        if self.out.is_some() {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
}
