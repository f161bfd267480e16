//! Undirected simple graphs and zero-divisor graphs of rings.

mod canon;
mod dot;

pub use canon::{canonical_form, canonical_labeling, graph_isomorphic, GraphCertificate};
pub use dot::{export_dot, parse_dot};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ring::FiniteRing;
use crate::structure::zero_divisors;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    /// Builds a graph from unordered vertex pairs. Self-loops and endpoints
    /// out of range are rejected; duplicate pairs collapse.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<SimpleGraph> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {a}")));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a}, {b}) out of range for {vertex_count} vertices"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(SimpleGraph {
            vertex_count,
            edges: set,
            labels: None,
        })
    }

    pub fn empty(vertex_count: usize) -> SimpleGraph {
        SimpleGraph {
            vertex_count,
            edges: BTreeSet::new(),
            labels: None,
        }
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        SimpleGraph::new(n, edges).expect("complete graph edges are valid")
    }

    pub fn path(n: usize) -> SimpleGraph {
        SimpleGraph::new(n, (1..n).map(|b| (b - 1, b))).expect("path edges are valid")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<SimpleGraph> {
        if labels.len() != self.vertex_count {
            return Err(Error::InvalidParameter("one label per vertex required".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.vertex_count]; self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        adj
    }
}

/// `Γ(R)`: vertices are the nonzero zero divisors (in index order), with an
/// edge `{x, y}` for distinct `x, y` whenever `xy = 0` or `yx = 0`.
///
/// Vertex labels are the ring's element names.
pub fn zero_divisor_graph(r: &FiniteRing) -> SimpleGraph {
    let vertices = zero_divisors(r);
    let mut edges = Vec::new();
    for (i, &x) in vertices.iter().enumerate() {
        for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
            if r.mul(x, y) == 0 || r.mul(y, x) == 0 {
                edges.push((i, j));
            }
        }
    }
    let labels = vertices.iter().map(|&x| r.element_name(x)).collect();
    SimpleGraph::new(vertices.len(), edges)
        .and_then(|g| g.with_labels(labels))
        .expect("zero-divisor graph is simple")
}

/// Ring elements behind the vertices of [`zero_divisor_graph`].
pub fn zero_divisor_vertices(r: &FiniteRing) -> Vec<usize> {
    zero_divisors(r)
}

/// `Some(n)` when `g` is the complete graph `K_n`.
pub fn is_complete(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    (g.edge_count() == n * n.saturating_sub(1) / 2).then_some(n)
}
