//! Immutable simple undirected graphs with contiguous vertex ids,
//! plus the text file format used by the CLI.
//!
//! Every `Graph` is connected, loop-free, and has at least two vertices;
//! all constructors enforce this.

use std::collections::BTreeMap;
use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A connected simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted; optional per-vertex labels record
/// provenance (product pair, gadget role).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list, validating every invariant.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Self::build(n, edges, None, false)
    }

    /// As [`Graph::from_edges`], attaching one label per vertex.
    pub fn from_edges_labeled(
        n: usize,
        edges: &[(usize, usize)],
        labels: Vec<String>,
    ) -> Result<Graph> {
        if labels.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} vertices",
                labels.len(),
                n
            )));
        }
        Self::build(n, edges, Some(labels), false)
    }

    /// Crate-internal: builds without the connectivity requirement.
    ///
    /// The hardness gadget is a disjoint union whenever a variable appears
    /// in no clause; the reduction module decomposes it into components
    /// itself. Everything else keeps the connected contract.
    pub(crate) fn from_edges_labeled_any(
        n: usize,
        edges: &[(usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<Graph> {
        Self::build(n, edges, labels, true)
    }

    fn build(
        n: usize,
        edges: &[(usize, usize)],
        labels: Option<Vec<String>>,
        skip_connectivity: bool,
    ) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "graphs must have at least 2 vertices, got {n}"
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = std::collections::BTreeSet::new();
        for (idx, &(u, v)) in edges.iter().enumerate() {
            let line = idx + 1;
            if u >= n {
                return Err(Error::VertexOutOfRange { line, v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { line, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { line, v: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge {
                    line,
                    u: key.0,
                    v: key.1,
                });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let g = Graph { adjacency, labels };
        if !skip_connectivity {
            if let Some(unreached) = g.first_unreachable_from(0) {
                return Err(Error::Disconnected { u: 0, v: unreached });
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// BFS hop distances from `start`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[start] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    fn first_unreachable_from(&self, start: usize) -> Option<usize> {
        self.bfs_distances(start)
            .iter()
            .position(|&d| d == usize::MAX)
    }
}

/// Parses the graph text format: optional `#` comment lines, a header
/// `n m`, then exactly `m` edge lines `u v`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None; // (n, m, header line)
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Malformed {
                line: line_no,
                msg: format!("expected two integers, got {:?}", line),
            });
        }
        let a: usize = fields[0].parse().map_err(|_| Error::Malformed {
            line: line_no,
            msg: format!("not an integer: {:?}", fields[0]),
        })?;
        let b: usize = fields[1].parse().map_err(|_| Error::Malformed {
            line: line_no,
            msg: format!("not an integer: {:?}", fields[1]),
        })?;
        match header {
            None => {
                header = Some((a, b, line_no));
            }
            Some((n, m, _)) => {
                if edges.len() == m {
                    return Err(Error::Malformed {
                        line: line_no,
                        msg: format!("more than the declared {m} edges"),
                    });
                }
                if a >= n {
                    return Err(Error::VertexOutOfRange {
                        line: line_no,
                        v: a,
                        n,
                    });
                }
                if b >= n {
                    return Err(Error::VertexOutOfRange {
                        line: line_no,
                        v: b,
                        n,
                    });
                }
                if a == b {
                    return Err(Error::SelfLoop {
                        line: line_no,
                        v: a,
                    });
                }
                let key = (a.min(b), a.max(b));
                if edges.contains(&key) {
                    return Err(Error::DuplicateEdge {
                        line: line_no,
                        u: key.0,
                        v: key.1,
                    });
                }
                edges.push(key);
                edge_lines.push(line_no);
            }
        }
    }

    let (n, m, header_line) = header.ok_or(Error::Malformed {
        line: 1,
        msg: "missing 'n m' header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Malformed {
            line: header_line,
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

/// Serializes to the canonical text form: `n m` then edges sorted
/// lexicographically, one per line.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    let _ = writeln!(out, "{} {}", g.vertex_count(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Labels as a JSON object `{vertex_id: label}`, or `None` when unlabeled.
pub fn serialize_labels(g: &Graph) -> Option<String> {
    let labels = g.labels()?;
    let map: BTreeMap<String, &str> = labels
        .iter()
        .enumerate()
        .map(|(v, l)| (v.to_string(), l.as_str()))
        .collect();
    Some(serde_json::to_string_pretty(&map).expect("label map serializes"))
}
