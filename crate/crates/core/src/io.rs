//! Line-oriented edge-list format.
//!
//! ```text
//! # comment
//! 0 1 w=strong
//! 1 2
//! #vertices
//! 0 type=A
//! 5
//! ```
//!
//! Edge lines are `src dst [key=value]*`. After a `#vertices` line, lines
//! are `vid [key=value]*` (an `#edges` line switches back). The vertex count
//! is one more than the largest id mentioned anywhere. Other lines starting
//! with `#` are comments; fields are whitespace-delimited.

use std::fs;
use std::path::Path;

use crate::error::{GraphError, IoError};
use crate::graph::{AttributeSet, PropertyGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoadOptions {
    pub allow_self_loops: bool,
}

impl LoadOptions {
    /// Target graphs may carry self-loops.
    pub fn target() -> Self {
        Self {
            allow_self_loops: true,
        }
    }

    /// Pattern graphs may not.
    pub fn pattern() -> Self {
        Self {
            allow_self_loops: false,
        }
    }
}

impl Default for LoadOptions {
    fn default() -> Self {
        Self::target()
    }
}

pub fn load_edge_list(path: impl AsRef<Path>, options: LoadOptions) -> Result<PropertyGraph, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_edge_list(&text, options)
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Edges,
    Vertices,
}

pub fn parse_edge_list(text: &str, options: LoadOptions) -> Result<PropertyGraph, IoError> {
    let mut section = Section::Edges;
    let mut edges = Vec::new();
    let mut edge_attrs = Vec::new();
    let mut vertex_lines: Vec<(VertexId, AttributeSet, usize)> = Vec::new();
    let mut vertex_count = 0usize;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            match rest.split_whitespace().next() {
                Some("vertices") if rest.starts_with("vertices") => section = Section::Vertices,
                Some("edges") if rest.starts_with("edges") => section = Section::Edges,
                _ => {}
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let parse_id = |field: Option<&str>, what: &str| -> Result<VertexId, IoError> {
            let field = field.ok_or_else(|| IoError::Parse {
                line: line_no,
                message: format!("missing {what}"),
            })?;
            field.parse().map_err(|_| IoError::Parse {
                line: line_no,
                message: format!("invalid {what} {field:?}"),
            })
        };
        match section {
            Section::Edges => {
                let u = parse_id(fields.next(), "source vertex")?;
                let v = parse_id(fields.next(), "destination vertex")?;
                if u == v && !options.allow_self_loops {
                    return Err(GraphError::SelfLoop(u).into());
                }
                vertex_count = vertex_count.max(u.max(v) as usize + 1);
                edges.push((u, v));
                edge_attrs.push(parse_attrs(fields, line_no)?);
            }
            Section::Vertices => {
                let v = parse_id(fields.next(), "vertex id")?;
                vertex_count = vertex_count.max(v as usize + 1);
                vertex_lines.push((v, parse_attrs(fields, line_no)?, line_no));
            }
        }
    }

    let mut vertex_attrs = vec![AttributeSet::new(); vertex_count];
    for (v, attrs, line) in vertex_lines {
        let slot = &mut vertex_attrs[v as usize];
        if !slot.is_empty() && !attrs.is_empty() {
            return Err(IoError::Parse {
                line,
                message: format!("vertex {v} listed twice"),
            });
        }
        if !attrs.is_empty() {
            *slot = attrs;
        }
    }
    Ok(PropertyGraph::build(vertex_count, edges, vertex_attrs, edge_attrs)?)
}

fn parse_attrs<'a>(fields: impl Iterator<Item = &'a str>, line: usize) -> Result<AttributeSet, IoError> {
    let mut set = AttributeSet::new();
    for field in fields {
        let (k, v) = field.split_once('=').ok_or_else(|| IoError::Parse {
            line,
            message: format!("expected key=value, got {field:?}"),
        })?;
        if k.is_empty() {
            return Err(IoError::Parse {
                line,
                message: format!("empty attribute key in {field:?}"),
            });
        }
        if set.get(k).is_some() {
            return Err(IoError::Parse {
                line,
                message: format!("attribute {k:?} repeated"),
            });
        }
        set.insert(k, v);
    }
    Ok(set)
}

pub fn save_edge_list(g: &PropertyGraph, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    let text = format_edge_list(g)?;
    fs::write(path, text).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn format_edge_list(g: &PropertyGraph) -> Result<String, IoError> {
    use std::fmt::Write;

    let mut out = String::with_capacity(g.edge_count() * 12 + 64);
    writeln!(out, "# {} vertices, {} edges", g.vertex_count(), g.edge_count()).unwrap();
    let mut implied = 0usize;
    for (e, (u, v)) in g.edges().enumerate() {
        implied = implied.max(u.max(v) as usize + 1);
        write!(out, "{u} {v}").unwrap();
        write_attrs(&mut out, g.edge_attrs(e as u32))?;
        out.push('\n');
    }
    let n = g.vertex_count();
    let listed: Vec<VertexId> = (0..n as VertexId)
        .filter(|&v| !g.vertex_attrs(v).is_empty() || (v as usize == n - 1 && implied < n))
        .collect();
    if !listed.is_empty() {
        out.push_str("#vertices\n");
        for v in listed {
            write!(out, "{v}").unwrap();
            write_attrs(&mut out, g.vertex_attrs(v))?;
            out.push('\n');
        }
    }
    Ok(out)
}

fn write_attrs(out: &mut String, attrs: &AttributeSet) -> Result<(), IoError> {
    for (k, v) in attrs.iter() {
        let bad = k.is_empty() || k.contains('=') || k.contains(char::is_whitespace) || v.contains(char::is_whitespace);
        if bad {
            return Err(IoError::Unwritable {
                key: k.to_string(),
                value: v.to_string(),
            });
        }
        out.push(' ');
        out.push_str(k);
        out.push('=');
        out.push_str(v);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_path() {
        let g = parse_edge_list("0 1\n1 2\n", LoadOptions::default()).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_attribute() {
        let g = parse_edge_list("0 1 w=strong\n", LoadOptions::default()).unwrap();
        assert_eq!(g.edge_attrs(0).get("w"), Some("strong"));
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_edge_list("0 1\n# fine\n0\n", LoadOptions::default()).unwrap_err();
        assert!(matches!(err, IoError::Parse { line: 3, .. }), "{err}");
        let err = parse_edge_list("0 x\n", LoadOptions::default()).unwrap_err();
        assert!(matches!(err, IoError::Parse { line: 1, .. }));
        let err = parse_edge_list("0 1 novalue\n", LoadOptions::default()).unwrap_err();
        assert!(matches!(err, IoError::Parse { line: 1, .. }));
    }

    #[test]
    fn duplicate_edge_surfaces() {
        let err = parse_edge_list("0 1\n0 1\n", LoadOptions::default()).unwrap_err();
        assert!(matches!(err, IoError::Graph(GraphError::DuplicateEdge(0, 1))));
    }

    #[test]
    fn pattern_self_loop_rejected() {
        assert!(parse_edge_list("0 0\n", LoadOptions::target()).is_ok());
        let err = parse_edge_list("1 1\n", LoadOptions::pattern()).unwrap_err();
        assert!(matches!(err, IoError::Graph(GraphError::SelfLoop(1))));
    }

    #[test]
    fn vertex_section_and_isolated_tail() {
        let text = "0 1\n#vertices\n0 type=A size=3\n4\n#edges\n2 3 w=x\n";
        let g = parse_edge_list(text, LoadOptions::default()).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.vertex_attrs(0).get("size"), Some("3"));
        assert_eq!(g.edge_count(), 2);
        let again = parse_edge_list(&format_edge_list(&g).unwrap(), LoadOptions::default()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn unwritable_attribute() {
        let attrs: AttributeSet = [("k", "has space")].into_iter().collect();
        let g = PropertyGraph::build(1, vec![], vec![attrs], vec![]).unwrap();
        assert!(matches!(format_edge_list(&g), Err(IoError::Unwritable { .. })));
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.el");
        let g = parse_edge_list("0 1 w=a\n1 2\n2 0 w=b\n#vertices\n1 t=X\n6\n", LoadOptions::default()).unwrap();
        save_edge_list(&g, &path).unwrap();
        assert_eq!(load_edge_list(&path, LoadOptions::default()).unwrap(), g);
        assert!(matches!(
            load_edge_list(dir.path().join("missing.el"), LoadOptions::default()),
            Err(IoError::Io { .. })
        ));
    }
}
