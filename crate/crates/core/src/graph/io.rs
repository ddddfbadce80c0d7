//! Edge-list and DOT text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based
//! endpoints, ASCII with LF line endings. Writers emit edges with `u < v` in
//! lexicographic order.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .split('\n')
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r').trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(line, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            if edges.len() == m {
                return Err(Error::Parse { line, message: format!("more than {m} edge lines") });
            }
            let (u, v) = parse_pair(line, l)?;
            if u >= n || v >= n || u == v {
                return Err(Error::Parse { line, message: format!("invalid edge {u} {v}") });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: 1,
                message: format!("header promises {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    /// Undirected DOT with vertex labels equal to their indices.
    pub fn to_dot(&self) -> String {
        self.to_dot_with(|_| None)
    }

    /// DOT with an optional colour attribute per vertex.
    pub fn to_dot_with(&self, colour: impl Fn(usize) -> Option<String>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            match colour(v) {
                Some(c) => {
                    let _ = writeln!(out, "  {v} [style=filled, fillcolor=\"{c}\"];");
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_ascii_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::Parse { line, message: "expected two integers".into() })?
            .parse()
            .map_err(|e| Error::Parse { line, message: format!("{e}") })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Parse { line, message: "trailing tokens".into() });
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_edge_list_is_exact() {
        assert_eq!(Graph::complete(3).to_edge_list(), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn path_dot() {
        assert_eq!(Graph::path(2).to_dot(), "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }

    #[test]
    fn parse_round_trip() {
        let g = Graph::cycle(7);
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn parse_rejects_count_mismatch() {
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 3\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }
}
