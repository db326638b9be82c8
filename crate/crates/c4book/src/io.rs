//! graph6 files and construction manifests.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use c4book_core::construct::ConstructionResult;
use c4book_core::graph::graph6;
use c4book_core::Graph;
use serde_json::{json, Value};

/// Reads the first graph of a graph6 file.
pub fn read_graph6(path: &Path) -> Result<Graph> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let line = bytes
        .split(|&b| b == b'\n')
        .find(|l| !l.is_empty() && l != b"\r")
        .with_context(|| format!("{} holds no graph", path.display()))?;
    graph6::decode(line).with_context(|| format!("decoding {}", path.display()))
}

/// Writes `g` as one graph6 line.
pub fn write_graph6(path: &Path, g: &Graph) -> Result<()> {
    let mut bytes = graph6::encode(g)?;
    bytes.push(b'\n');
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

/// Construction parameters, the point behind every vertex, and the graph.
pub fn manifest(c: &ConstructionResult) -> Result<Value> {
    let labels: Vec<[u32; 3]> = c.labels.iter().map(|p| p.values()).collect();
    Ok(json!({
        "family": c.family.to_string(),
        "q": c.q,
        "t": c.t,
        "order": c.order(),
        "n": c.target_book,
        "certified_lower": c.certified_lower,
        "labels": labels,
        "graph6": String::from_utf8(graph6::encode(&c.graph)?)?,
    }))
}

pub fn write_manifest(path: &Path, c: &ConstructionResult) -> Result<()> {
    let text = serde_json::to_string_pretty(&manifest(c)?)? + "\n";
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
