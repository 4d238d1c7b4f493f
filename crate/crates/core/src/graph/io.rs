use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use super::Graph;
use crate::{Error, Result};

/// Parses the edge-list text format: one edge per line as two
/// whitespace-separated non-negative integers, `#` comment lines and blank
/// lines ignored.
///
/// Vertex ids are remapped to `0..n` in ascending order of the original ids;
/// ids that are already dense (`0..n`, all used) therefore keep their value.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut raw = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let mut next_id = || -> Result<u64> {
            let tok = tokens.next().ok_or_else(|| Error::Parse {
                line: line_no,
                msg: "expected two vertex ids".into(),
            })?;
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("invalid vertex id {tok:?}"),
            })
        };
        let u = next_id()?;
        let v = next_id()?;
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("unexpected token {extra:?}"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        raw.push((line_no, u, v));
    }

    let mut ids = BTreeMap::new();
    for &(_, u, v) in &raw {
        ids.insert(u, 0);
        ids.insert(v, 0);
    }
    for (i, slot) in ids.values_mut().enumerate() {
        *slot = i;
    }

    let mut seen = BTreeMap::new();
    for &(line, u, v) in &raw {
        if let Some(first) = seen.insert((u.min(v), u.max(v)), line) {
            return Err(Error::Parse {
                line,
                msg: format!("duplicate edge {{{u}, {v}}} (first on line {first})"),
            });
        }
    }
    Graph::from_edges(ids.len(), raw.iter().map(|&(_, u, v)| (ids[&u], ids[&v])))
}

pub fn load_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_edge_list(&text)
}

/// Writes `g` in edge-list format. A header comment records the vertex count
/// so isolated vertices are visible to readers, though the loader itself
/// only sees vertices that occur in some edge.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "# n={} m={}", g.n(), g.edge_count())?;
    for (u, v) in g.canonical_edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn save_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).map_err(|e| Error::io(path, e))?;
    fs::write(path, buf).map_err(|e| Error::io(path, e))
}
