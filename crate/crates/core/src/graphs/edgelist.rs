//! Plain-text edge lists.
//!
//! One edge per line as two whitespace-separated labels. Lines starting with
//! `#` and blank lines are skipped. A line holding a single label declares an
//! isolated vertex. Labels are numbered in order of first appearance.

use std::collections::HashMap;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |s: &str| -> usize {
        if let Some(&k) = index.get(s) {
            return k;
        }
        let k = labels.len();
        labels.push(s.to_string());
        index.insert(s.to_string(), k);
        k
    };
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| Error::Parse {
            line: lineno + 1,
            message,
        };
        match tokens.as_slice() {
            [v] => {
                intern(v);
            }
            [u, v] => {
                if u == v {
                    return Err(err(format!("self-loop on '{u}'")));
                }
                let a = intern(u);
                let b = intern(v);
                edges.push((a, b));
            }
            _ => {
                return Err(err(format!(
                    "expected 'u v', found {} fields",
                    tokens.len()
                )))
            }
        }
    }
    let n = labels.len();
    Graph::new(n, edges, Some(labels))
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

/// Writes `g` so that [`parse_edge_list`] recovers the same labeled graph,
/// provided every vertex appears in an edge or is declared before use.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let label = |v: usize| g.label(v).replace(char::is_whitespace, "_");
    // declare vertices first so that first-appearance order is the index order
    for v in 0..g.vertex_count() {
        out.push_str(&label(v));
        out.push('\n');
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", label(u), label(v)));
    }
    out
}
