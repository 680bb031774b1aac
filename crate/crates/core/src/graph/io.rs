//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 0-based ids. Blank lines and `#` comments are skipped when reading.

use std::io::{BufRead, Write};

use super::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    read_edge_list(text.as_bytes())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| GraphError::Io(e.to_string()))?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut fields = content.split_whitespace();
        let a = parse_field(fields.next(), line_no)?;
        let b = parse_field(fields.next(), line_no)?;
        if fields.next().is_some() {
            return Err(GraphError::Parse {
                line: line_no,
                msg: "expected exactly two integers".into(),
            });
        }
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a >= n || b >= n {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: format!("edge ({a}, {b}) out of range for n = {n}"),
                    });
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or(GraphError::Parse {
        line: 0,
        msg: "missing `n m` header".into(),
    })?;
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: 0,
            msg: format!("header announces {m} edges but {} were listed", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

fn parse_field(field: Option<&str>, line: usize) -> Result<usize, GraphError> {
    let field = field.ok_or(GraphError::Parse {
        line,
        msg: "expected two integers".into(),
    })?;
    field.parse().map_err(|_| GraphError::Parse {
        line,
        msg: format!("`{field}` is not a non-negative integer"),
    })
}

/// Writes the canonical form: LF endings, edges `u < v` in lexicographic order.
pub fn write_edge_list<W: Write>(graph: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{} {}", graph.n(), graph.edge_count())?;
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}
