//! Undirected graphs with dense adjacency matrices.
//!
//! Everything downstream (spectral bounds, walk dynamics) works on the dense
//! symmetric adjacency matrix, so the representation is a dense `Array2<f64>`
//! of 0/1 entries. That caps practical sizes around a few thousand vertices,
//! which is exactly the regime the verification suite targets.

use std::fmt::Write as _;
use std::path::Path;

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// An undirected simple graph on vertices `0..n`.
///
/// `p_nominal` records the edge probability a random graph was sampled with;
/// deterministic constructions and edge-list files carry `None`.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    adj: Array2<f64>,
    p_nominal: Option<f64>,
}

/// Equality is structural: same vertex count and same adjacency matrix.
/// The nominal sampling probability is metadata and deliberately ignored,
/// so a loaded copy of a stored graph compares equal to the original.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Graph {
    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dense symmetric 0/1 adjacency matrix with zero diagonal.
    pub fn adjacency(&self) -> &Array2<f64> {
        &self.adj
    }

    /// Edge probability the graph was sampled with, if any.
    pub fn p_nominal(&self) -> Option<f64> {
        self.p_nominal
    }

    /// Attach a nominal edge probability to a graph that was not sampled
    /// (deterministic constructions, edge-list files) so that p-dependent
    /// analyses can treat it as a `G(n, p)` draw.
    pub fn assume_p_nominal(mut self, p: f64) -> Result<Graph> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        self.p_nominal = Some(p);
        Ok(self)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[[i, j]] != 0.0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row(v).iter().filter(|&&x| x != 0.0).count()
    }

    pub fn edge_count(&self) -> usize {
        let nonzero = self.adj.iter().filter(|&&x| x != 0.0).count();
        nonzero / 2
    }

    /// Breadth-first connectivity check. The empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in 0..self.n {
                if self.adj[[v, u]] != 0.0 && !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    /// Serialize as an edge list: a header line with the vertex count, then
    /// one `i j` line per edge with `i < j`, 0-based, in row-major order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.adj[[i, j]] != 0.0 {
                    let _ = writeln!(out, "{i} {j}");
                }
            }
        }
        out
    }

    pub fn store_edge_list(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_edge_list())?;
        Ok(())
    }

    /// Parse the edge-list format produced by [`Graph::to_edge_list`].
    ///
    /// Blank lines and lines starting with `#` are ignored. Errors carry
    /// 1-based line numbers. Edges must satisfy `i < j` and may not repeat.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut adj: Option<Array2<f64>> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: String| Error::EdgeList {
                line: line_no,
                reason,
            };
            if n.is_none() {
                let count: usize = line
                    .parse()
                    .map_err(|_| bad(format!("expected vertex count, got {line:?}")))?;
                if count == 0 {
                    return Err(bad("vertex count must be positive".into()));
                }
                n = Some(count);
                adj = Some(Array2::zeros((count, count)));
                continue;
            }
            let n = n.unwrap();
            let adj = adj.as_mut().unwrap();
            let mut fields = line.split_whitespace();
            let (i, j) = match (fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), None) => {
                    let i: usize = a
                        .parse()
                        .map_err(|_| bad(format!("bad vertex index {a:?}")))?;
                    let j: usize = b
                        .parse()
                        .map_err(|_| bad(format!("bad vertex index {b:?}")))?;
                    (i, j)
                }
                _ => return Err(bad(format!("expected `i j`, got {line:?}"))),
            };
            if i >= j {
                return Err(bad(format!("edges must have i < j, got {i} {j}")));
            }
            if j >= n {
                return Err(bad(format!("vertex {j} out of range for n = {n}")));
            }
            if adj[[i, j]] != 0.0 {
                return Err(bad(format!("duplicate edge {i} {j}")));
            }
            adj[[i, j]] = 1.0;
            adj[[j, i]] = 1.0;
        }
        match (n, adj) {
            (Some(n), Some(adj)) => Ok(Graph {
                n,
                adj,
                p_nominal: None,
            }),
            _ => Err(Error::EdgeList {
                line: text.lines().count().max(1),
                reason: "missing vertex count header".into(),
            }),
        }
    }

    pub fn load_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
        let text = std::fs::read_to_string(path)?;
        Graph::from_edge_list(&text)
    }
}

/// Sample an Erdős–Rényi graph `G(n, p)`.
///
/// Each unordered pair `{i, j}` with `i < j`, visited in row-major order,
/// consumes exactly one uniform draw from a fresh [`SplitMix64`] seeded with
/// `seed`; the edge is present iff the draw is `< p`. This fixed consumption
/// order is part of the reproducibility contract.
pub fn sample_er(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("graph must have at least one vertex"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = SplitMix64::new(seed);
    let mut adj = Array2::zeros((n, n));
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.next_f64() < p {
                adj[[i, j]] = 1.0;
                adj[[j, i]] = 1.0;
            }
        }
    }
    Ok(Graph {
        n,
        adj,
        p_nominal: Some(p),
    })
}

/// Complete graph `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("graph must have at least one vertex"));
    }
    let mut adj = Array2::from_elem((n, n), 1.0);
    for i in 0..n {
        adj[[i, i]] = 0.0;
    }
    Ok(Graph {
        n,
        adj,
        p_nominal: None,
    })
}

/// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::invalid("both parts must be non-empty"));
    }
    let n = a + b;
    let mut adj = Array2::zeros((n, n));
    for i in 0..a {
        for j in a..n {
            adj[[i, j]] = 1.0;
            adj[[j, i]] = 1.0;
        }
    }
    Ok(Graph {
        n,
        adj,
        p_nominal: None,
    })
}
