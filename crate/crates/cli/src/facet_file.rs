//! Facet files.
//!
//! ```text
//! # two disjoint edges
//! n 4
//! 1 2
//! 3 4
//! ```
//!
//! The first non-comment line must be `n <count>`. Every later non-blank line
//! is one facet of whitespace-separated 1-based vertices. Lines whose first
//! non-space character is `#` are comments.

use std::fmt::Write as _;
use std::path::Path;

use extshift_core::{FaceSet, SimplicialComplex, MAX_VERTICES};

use crate::error::CliError;

pub fn parse(text: &str, source: &str) -> Result<SimplicialComplex, CliError> {
    let err = |line: usize, message: String| CliError::Parse { path: source.to_string(), line, message };
    let mut n: Option<usize> = None;
    let mut facets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(n) = n else {
            let mut parts = line.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some("n"), Some(count), None) => {
                    let count: usize =
                        count.parse().map_err(|_| err(line_no, format!("invalid vertex count `{count}`")))?;
                    if count > MAX_VERTICES {
                        return Err(err(line_no, format!("n = {count} exceeds the limit of {MAX_VERTICES}")));
                    }
                    n = Some(count);
                    continue;
                }
                _ => return Err(err(line_no, "expected header `n <count>`".into())),
            }
        };
        let mut vertices = Vec::new();
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| err(line_no, format!("invalid vertex token `{tok}`")))?;
            if v == 0 || v > n {
                return Err(err(line_no, format!("vertex {v} outside 1..={n}")));
            }
            vertices.push(v);
        }
        facets.push(FaceSet::from_vertices(vertices).map_err(|e| err(line_no, e.to_string()))?);
    }
    let n = n.ok_or_else(|| err(0, "missing header `n <count>`".into()))?;
    Ok(SimplicialComplex::from_facets(n, facets)?)
}

pub fn read(path: &Path) -> Result<SimplicialComplex, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    parse(&text, &path.display().to_string())
}

/// Inverse of [`parse`]: header plus one line per facet, in mask order.
pub fn format(complex: &SimplicialComplex) -> String {
    let mut out = format!("n {}\n", complex.n());
    for facet in complex.facets() {
        if facet.is_empty() {
            continue;
        }
        let verts: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", verts.join(" ")).unwrap();
    }
    out
}
