//! Plain-text graph formats.
//!
//! * Edge list: a header line `n m`, then `m` lines `u v` with 0-based labels.
//! * DIMACS: `c` comment lines, a `p edge n m` header, then `e u v` lines
//!   with 1-based labels.
//!
//! Blank lines are ignored in both formats.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::{Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" | "el" => Ok(GraphFormat::EdgeList),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            other => Err(Error::precondition(format!("unknown graph format `{other}`"))),
        }
    }
}

impl GraphFormat {
    /// Guesses the format from the first meaningful line.
    pub fn detect(text: &str) -> GraphFormat {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty());
        match first {
            Some(l) if l.starts_with('c') || l.starts_with('p') => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn field<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

fn check_edge(u: usize, v: usize, n: usize, line: usize) -> Result<()> {
    if u >= n || v >= n {
        return Err(parse_err(line, format!("edge ({u}, {v}) references a vertex outside 0..{n}")));
    }
    if u == v {
        return Err(parse_err(line, format!("self-loop at vertex {u}")));
    }
    Ok(())
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let mut toks = header.split_whitespace();
    let n: usize = field(toks.next(), hline, "vertex count")?;
    let m: usize = field(toks.next(), hline, "edge count")?;
    if toks.next().is_some() {
        return Err(parse_err(hline, "trailing tokens after `n m` header"));
    }
    let mut g = Graph::empty(n);
    let mut found = 0;
    for (line, l) in lines {
        let mut toks = l.split_whitespace();
        let u: usize = field(toks.next(), line, "endpoint")?;
        let v: usize = field(toks.next(), line, "endpoint")?;
        if toks.next().is_some() {
            return Err(parse_err(line, "expected exactly two endpoints"));
        }
        check_edge(u, v, n, line)?;
        g.add_edge_unchecked(u, v);
        found += 1;
    }
    if found != m {
        return Err(Error::HeaderMismatch { declared: m, found });
    }
    Ok(g)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut found = 0;
    for (i, l) in text.lines().enumerate() {
        let line = i + 1;
        let l = l.trim();
        let mut toks = l.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(parse_err(line, "duplicate `p` header"));
                }
                let kind: String = field(toks.next(), line, "problem kind")?;
                if kind != "edge" && kind != "col" {
                    return Err(parse_err(line, format!("unsupported problem kind `{kind}`")));
                }
                let n: usize = field(toks.next(), line, "vertex count")?;
                let m: usize = field(toks.next(), line, "edge count")?;
                graph = Some((Graph::empty(n), m));
            }
            Some("e") => {
                let (g, _) = graph.as_mut().ok_or_else(|| parse_err(line, "edge line before `p` header"))?;
                let u: usize = field(toks.next(), line, "endpoint")?;
                let v: usize = field(toks.next(), line, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(parse_err(line, "DIMACS vertex labels start at 1"));
                }
                check_edge(u - 1, v - 1, g.n(), line)?;
                g.add_edge_unchecked(u - 1, v - 1);
                found += 1;
            }
            Some(other) => return Err(parse_err(line, format!("unexpected line tag `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    let (g, m) = graph.ok_or_else(|| parse_err(1, "missing `p edge n m` header"))?;
    if found != m {
        return Err(Error::HeaderMismatch { declared: m, found });
    }
    Ok(g)
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

pub fn format_graph(g: &Graph, format: GraphFormat) -> String {
    let edges = g.edges();
    let mut out = String::new();
    match format {
        GraphFormat::EdgeList => {
            out.push_str(&format!("{} {}\n", g.n(), edges.len()));
            for (u, v) in edges {
                out.push_str(&format!("{u} {v}\n"));
            }
        }
        GraphFormat::Dimacs => {
            out.push_str(&format!("p edge {} {}\n", g.n(), edges.len()));
            for (u, v) in edges {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
        }
    }
    out
}

/// Reads a graph file; `format = None` detects the format from the content.
pub fn read_graph(path: &Path, format: Option<GraphFormat>) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_graph(&text, format.unwrap_or_else(|| GraphFormat::detect(&text)))
}

pub fn write_graph(path: &Path, g: &Graph, format: GraphFormat) -> Result<()> {
    write_all_or_nothing(&[(path.to_path_buf(), format_graph(g, format).into_bytes())])
}

/// Writes every file or none: each payload goes to a temporary file beside its
/// target and all are renamed into place only after every write succeeded.
pub fn write_all_or_nothing(files: &[(PathBuf, Vec<u8>)]) -> Result<()> {
    let mut staged = Vec::with_capacity(files.len());
    for (path, bytes) in files {
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(path, e))?;
        tmp.write_all(bytes).and_then(|_| tmp.flush()).map_err(|e| Error::io(path, e))?;
        staged.push((tmp, path));
    }
    for (tmp, path) in staged {
        tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    }
    Ok(())
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_round_trip() {
        let k3 = Graph::complete(3);
        for f in [GraphFormat::EdgeList, GraphFormat::Dimacs] {
            let text = format_graph(&k3, f);
            assert_eq!(GraphFormat::detect(&text), f);
            assert_eq!(parse_graph(&text, f).unwrap(), k3);
        }
    }

    #[test]
    fn dimacs_header_only() {
        let g = parse_graph("c nothing here\np edge 4 0\n", GraphFormat::Dimacs).unwrap();
        assert_eq!(g, Graph::empty(4));
    }

    #[test]
    fn out_of_range_edges_are_rejected() {
        assert!(matches!(parse_graph("3 1\n0 3\n", GraphFormat::EdgeList), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("p edge 3 1\ne 1 4\n", GraphFormat::Dimacs), Err(Error::Parse { line: 2, .. })));
        assert!(parse_graph("p edge 3 1\ne 0 1\n", GraphFormat::Dimacs).is_err());
    }

    #[test]
    fn malformed_and_inconsistent() {
        assert!(matches!(parse_graph("3 1\n0 x\n", GraphFormat::EdgeList), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("", GraphFormat::EdgeList), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("3 2\n0 1\n", GraphFormat::EdgeList),
            Err(Error::HeaderMismatch { declared: 2, found: 1 })
        ));
        assert!(matches!(
            parse_graph("p edge 3 0\ne 1 2\n", GraphFormat::Dimacs),
            Err(Error::HeaderMismatch { declared: 0, found: 1 })
        ));
        assert!(parse_graph("e 1 2\n", GraphFormat::Dimacs).is_err());
    }

    #[test]
    fn failed_staging_leaves_nothing() {
        let dir = tempfile::tempdir().unwrap();
        let good = dir.path().join("a.csv");
        let bad = dir.path().join("missing").join("b.json");
        assert!(write_all_or_nothing(&[(good.clone(), b"x".to_vec()), (bad, b"y".to_vec())]).is_err());
        assert!(!good.exists());
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
    }
}
