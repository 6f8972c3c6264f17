//! Text format for complexes.
//!
//! ```text
//! dim 1 vertices 4
//! 0
//! 1
//! 0 1
//! 2 3
//! ```
//!
//! The header is `dim <d> vertices <N>`; each further line is one face as
//! space-separated vertex indices. Listing only the facets is enough: the
//! reader closes the list under subsets and then checks the declared
//! dimension. `dim -1` with no face lines is `{∅}`; `dim void` is the void
//! complex. Lines starting with `#` are comments.

use std::path::Path;

use super::SimplicialComplex;
use crate::error::{Error, Result};

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing header 'dim <d> vertices <N>'".into(),
    })?;
    let perr = |line: usize, message: String| Error::Parse { line, message };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let (dim, vertex_count) = match tokens.as_slice() {
        ["dim", d, "vertices", n] => {
            let n: usize = n
                .parse()
                .map_err(|_| perr(hline, format!("bad vertex count '{n}'")))?;
            let d: Option<isize> = if *d == "void" {
                None
            } else {
                Some(d.parse().map_err(|_| perr(hline, format!("bad dimension '{d}'")))?)
            };
            (d, n)
        }
        _ => return Err(perr(hline, "expected 'dim <d> vertices <N>'".into())),
    };
    let mut faces = Vec::new();
    for (line, l) in lines {
        let face: Vec<usize> = l
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| perr(line, format!("bad vertex index '{t}'"))))
            .collect::<Result<_>>()?;
        faces.push((line, face));
    }
    let Some(dim) = dim else {
        if let Some((line, _)) = faces.first() {
            return Err(perr(*line, "the void complex has no faces".into()));
        }
        return Ok(SimplicialComplex::void(vertex_count));
    };
    let complex = SimplicialComplex::from_faces(vertex_count, faces.iter().map(|(_, f)| f))
        .map_err(|e| perr(hline, e.to_string()))?;
    if complex.dim() != dim {
        return Err(perr(
            hline,
            format!("header says dimension {dim}, faces give {}", complex.dim()),
        ));
    }
    Ok(complex)
}

pub fn read_complex(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    parse_complex(&std::fs::read_to_string(path)?)
}

/// Writes every nonempty face, by dimension then lexicographically.
pub fn write_complex(c: &SimplicialComplex) -> String {
    let dim = if c.is_void() {
        "void".to_string()
    } else {
        c.dim().to_string()
    };
    let mut out = format!("dim {dim} vertices {}\n", c.vertex_count());
    for f in c.iter_faces() {
        let line: Vec<String> = f.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
