//! Textual instance and coloring formats.
//!
//! Instance files are DIMACS-adjacent:
//!
//! ```text
//! c optional comment
//! p hg <vertices> <edges>
//! e <v1> <v2> ... <vk>
//! ```
//!
//! Vertex ids are 0-based. When a file references ids at or above the
//! declared vertex count, all ids are treated as sparse labels and
//! remapped to contiguous 0-based ids (ascending by original label); the
//! mapping is reported back to the caller. Ids below the declared count
//! must cover every declared vertex, since isolated vertices are invalid.
//!
//! Coloring files carry a palette header and one assignment per line:
//!
//! ```text
//! s <palette_size>
//! v <vertex> <color>
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use efl_core::{Hypergraph, ModelError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: ModelError,
    },
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

#[derive(Debug)]
pub struct ParsedInstance {
    pub hypergraph: Hypergraph,
    /// `Some(labels)` when sparse ids were remapped: `labels[new] = old`.
    pub original_labels: Option<Vec<usize>>,
}

impl ParsedInstance {
    /// Translates an original vertex label to the in-memory id.
    pub fn resolve_label(&self, label: usize) -> Option<usize> {
        match &self.original_labels {
            None => (label < self.hypergraph.vertex_count()).then_some(label),
            Some(labels) => labels.binary_search(&label).ok(),
        }
    }
}

pub fn parse_instance(text: &str) -> Result<ParsedInstance, FormatError> {
    let mut header: Option<(usize, usize, usize)> = None; // (vertices, edges, line)
    let mut edges: Vec<(usize, Vec<usize>)> = Vec::new(); // (line, ids)

    for (index, raw_line) in text.lines().enumerate() {
        let line = index + 1;
        let mut tokens = raw_line.split_ascii_whitespace();
        match tokens.next() {
            None => continue,
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate p header"));
                }
                if tokens.next() != Some("hg") {
                    return Err(syntax(line, "expected `p hg <vertices> <edges>`"));
                }
                let vertices = parse_count(tokens.next(), line, "vertex count")?;
                let edge_count = parse_count(tokens.next(), line, "edge count")?;
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after p header"));
                }
                header = Some((vertices, edge_count, line));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(syntax(line, "edge line before p header"));
                }
                let ids = tokens
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| syntax(line, format!("bad vertex id `{t}`")))
                    })
                    .collect::<Result<Vec<usize>, FormatError>>()?;
                if ids.is_empty() {
                    return Err(syntax(line, "edge line lists no vertices"));
                }
                edges.push((line, ids));
            }
            Some(other) => {
                return Err(syntax(line, format!("unknown line type `{other}`")));
            }
        }
    }

    let (declared_vertices, declared_edges, header_line) =
        header.ok_or_else(|| syntax(1, "missing `p hg` header"))?;
    if edges.len() != declared_edges {
        return Err(syntax(
            header_line,
            format!("header declares {declared_edges} edges, file has {}", edges.len()),
        ));
    }

    let sparse = edges
        .iter()
        .any(|(_, ids)| ids.iter().any(|&v| v >= declared_vertices));
    let (vertex_count, edge_lists, original_labels) = if sparse {
        let mut labels: Vec<usize> = edges.iter().flat_map(|(_, ids)| ids.iter().copied()).collect();
        labels.sort_unstable();
        labels.dedup();
        let remapped = edges
            .iter()
            .map(|(line, ids)| {
                let ids = ids
                    .iter()
                    .map(|v| labels.binary_search(v).expect("label collected above"))
                    .collect();
                (*line, ids)
            })
            .collect::<Vec<_>>();
        (labels.len(), remapped, Some(labels))
    } else {
        (declared_vertices, edges, None)
    };

    let line_of_edge: Vec<usize> = edge_lists.iter().map(|(line, _)| *line).collect();
    let hypergraph = Hypergraph::build(
        vertex_count,
        edge_lists.into_iter().map(|(_, ids)| ids).collect(),
    )
    .map_err(|source| match source {
        ModelError::DuplicateVertexInEdge { edge, .. } | ModelError::EmptyEdge { edge } => {
            FormatError::Invalid {
                line: line_of_edge[edge],
                source,
            }
        }
        other => FormatError::Invalid {
            line: header_line,
            source: other,
        },
    })?;
    Ok(ParsedInstance {
        hypergraph,
        original_labels,
    })
}

fn parse_count(token: Option<&str>, line: usize, what: &str) -> Result<usize, FormatError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token
        .parse::<usize>()
        .map_err(|_| syntax(line, format!("bad {what} `{token}`")))
}

/// Canonical serialization: header, then one `e` line per edge in family
/// order with ascending vertex ids. `parse_instance` of this output
/// reproduces the hypergraph exactly.
pub fn serialize_instance(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "p hg {} {}", h.vertex_count(), h.edge_count()).expect("string write");
    for edge in h.edges() {
        out.push('e');
        for v in edge {
            write!(out, " {v}").expect("string write");
        }
        out.push('\n');
    }
    out
}

/// Parsed coloring file: palette size plus `(vertex, color)` assignments
/// in file order.
#[derive(Debug)]
pub struct ParsedColoring {
    pub palette_size: usize,
    pub assignments: Vec<(usize, usize)>,
}

pub fn parse_coloring(text: &str) -> Result<ParsedColoring, FormatError> {
    let mut palette: Option<usize> = None;
    let mut assignments = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for (index, raw_line) in text.lines().enumerate() {
        let line = index + 1;
        let mut tokens = raw_line.split_ascii_whitespace();
        match tokens.next() {
            None => continue,
            Some("c") => continue,
            Some("s") => {
                if palette.is_some() {
                    return Err(syntax(line, "duplicate s header"));
                }
                palette = Some(parse_count(tokens.next(), line, "palette size")?);
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after s header"));
                }
            }
            Some("v") => {
                if palette.is_none() {
                    return Err(syntax(line, "v line before s header"));
                }
                let vertex = parse_count(tokens.next(), line, "vertex id")?;
                let color = parse_count(tokens.next(), line, "color")?;
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after v line"));
                }
                if seen.contains(&vertex) {
                    return Err(syntax(line, format!("vertex {vertex} assigned twice")));
                }
                seen.push(vertex);
                assignments.push((vertex, color));
            }
            Some(other) => {
                return Err(syntax(line, format!("unknown line type `{other}`")));
            }
        }
    }
    let palette_size = palette.ok_or_else(|| syntax(1, "missing `s` header"))?;
    Ok(ParsedColoring {
        palette_size,
        assignments,
    })
}

pub fn serialize_coloring(coloring: &efl_core::Coloring) -> String {
    let mut out = String::new();
    writeln!(out, "s {}", coloring.palette_size()).expect("string write");
    for (v, color) in coloring.iter() {
        if let Some(color) = color {
            writeln!(out, "v {v} {color}").expect("string write");
        }
    }
    out
}
