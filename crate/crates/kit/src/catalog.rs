//! Catalogue files: generation runs with manifests, and graph6 input.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use snarkcore::generate::{generate_orders, GenerationSpec, GenerationStats, GraphClass, SpecError};
use snarkcore::CubicGraph;
use thiserror::Error;

use crate::codec::{decode_graph6, encode_graph6, CodecError};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{path}:{line}: {error}")]
    Parse { path: String, line: usize, error: CodecError },
    #[error("{0}")]
    Spec(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<SpecError> for CatalogError {
    fn from(e: SpecError) -> Self {
        CatalogError::Spec(e.to_string())
    }
}

/// Summary written next to a generated catalogue.
#[derive(Clone, Debug, Serialize)]
pub struct Manifest {
    pub class: String,
    pub order: usize,
    pub shard: usize,
    pub shards: usize,
    pub count: usize,
    pub complete: bool,
    /// Graphs expanded per intermediate order.
    pub expanded: BTreeMap<usize, u64>,
    pub colour_tests: u64,
    pub lookahead_fraction: f64,
    pub seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

impl Manifest {
    fn new(spec: &GenerationSpec, count: usize, stats: &GenerationStats, seconds: f64, output: Option<&Path>) -> Self {
        Manifest {
            class: spec.class.name().to_string(),
            order: spec.order,
            shard: spec.shard.index,
            shards: spec.shard.count,
            count,
            complete: stats.complete,
            expanded: stats.expanded.clone(),
            colour_tests: stats.colour_tests,
            lookahead_fraction: stats.lookahead_fraction(),
            seconds,
            output: output.map(|p| p.display().to_string()),
        }
    }
}

/// Path of the manifest belonging to a catalogue file.
pub fn manifest_path(output: &Path) -> PathBuf {
    let mut s = output.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

/// Runs the generator and writes one graph6 line per graph to `out`.
pub fn generate_to(spec: &GenerationSpec, out: &mut dyn Write, output: Option<&Path>) -> Result<Manifest, CatalogError> {
    let start = Instant::now();
    let (mut by_order, stats) = generate_orders(&[spec.order], spec.class, spec.shard, spec.node_budget)?;
    let codes = by_order.remove(&spec.order).unwrap_or_default();
    for code in &codes {
        writeln!(out, "{}", encode_graph6(&code.to_graph()))?;
    }
    out.flush()?;
    Ok(Manifest::new(spec, codes.len(), &stats, crate::record::seconds(start.elapsed()), output))
}

/// Writes the catalogue to `path` and its manifest beside it.
pub fn generate_file(spec: &GenerationSpec, path: &Path) -> Result<Manifest, CatalogError> {
    let mut out = BufWriter::new(File::create(path)?);
    let manifest = generate_to(spec, &mut out, Some(path))?;
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serialises");
    std::fs::write(manifest_path(path), text + "\n")?;
    Ok(manifest)
}

/// Graphs of `class` at every even order from 4 up to `n_max`, in canonical
/// labelling and canonical-code order.
pub fn catalog_up_to(class: GraphClass, n_max: usize) -> Result<BTreeMap<usize, Vec<CubicGraph>>, CatalogError> {
    let orders: Vec<usize> = (4..=n_max).step_by(2).collect();
    let (by_order, _) = generate_orders(&orders, class, snarkcore::generate::Shard::WHOLE, None)?;
    Ok(by_order.into_iter().map(|(n, codes)| (n, codes.iter().map(|c| c.to_graph()).collect())).collect())
}

/// Reads graph6 lines, skipping blank lines and a `>>graph6<<` header.
pub fn read_graph6(path: &Path) -> Result<Vec<CubicGraph>, CatalogError> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(File::open(path)?).lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line == ">>graph6<<" {
            continue;
        }
        let g = decode_graph6(line).map_err(|error| CatalogError::Parse {
            path: path.display().to_string(),
            line: i + 1,
            error,
        })?;
        out.push(g);
    }
    Ok(out)
}
