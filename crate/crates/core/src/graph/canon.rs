//! Canonical labeling by colour refinement and individualization.
//!
//! Colours are refined to a fixed point, where a vertex's new colour is the
//! rank of (old colour, sorted neighbour colours). Branching individualizes
//! each vertex of the first smallest non-singleton cell in turn. Leaves are
//! compared by their upper-triangle adjacency bits and the minimum wins.
//! Vertices of one cell with identical neighbourhoods are interchangeable, so
//! only one of them is tried.

use std::fmt;

use crate::error::{Error, Result};
use crate::limits;

use super::SimpleGraph;

/// Vertex count (u16 BE) followed by the packed upper-triangle adjacency
/// bits of the canonical relabeling, row-major, most significant bit first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphCertificate(Vec<u8>);

impl GraphCertificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s.trim()).map_err(|e| Error::InvalidParameter(format!("bad certificate hex: {e}")))?;
        if bytes.len() < 2 {
            return Err(Error::InvalidParameter("truncated graph certificate".into()));
        }
        let n = u16::from_be_bytes([bytes[0], bytes[1]]) as usize;
        if bytes.len() != 2 + packed_len(n) {
            return Err(Error::InvalidParameter("graph certificate length mismatch".into()));
        }
        Ok(GraphCertificate(bytes))
    }

    pub fn vertex_count(&self) -> usize {
        u16::from_be_bytes([self.0[0], self.0[1]]) as usize
    }

    /// The canonical representative graph.
    pub fn to_graph(&self) -> SimpleGraph {
        let n = self.vertex_count();
        let bits = &self.0[2..];
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 0..n {
            for b in a + 1..n {
                if bits[k / 8] >> (7 - k % 8) & 1 == 1 {
                    edges.push((a, b));
                }
                k += 1;
            }
        }
        SimpleGraph::new(n, edges).expect("certificate edges are in range")
    }
}

impl fmt::Debug for GraphCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphCertificate({})", self.to_hex())
    }
}

impl fmt::Display for GraphCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

fn packed_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(8)
}

struct Canon<'a> {
    adj: &'a [Vec<bool>],
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Canon<'_> {
    fn n(&self) -> usize {
        self.adj.len()
    }

    /// Refines `colour` in place to the coarsest equitable refinement.
    fn refine(&self, colour: &mut [usize]) {
        let n = self.n();
        let mut classes = colour.iter().max().map_or(0, |m| m + 1);
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> = (0..n).filter(|&w| self.adj[v][w]).map(|w| colour[w]).collect();
                    nb.sort_unstable();
                    (colour[v], nb)
                })
                .collect();
            let mut ranked: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
            ranked.sort();
            ranked.dedup();
            for v in 0..n {
                colour[v] = ranked.binary_search(&&sigs[v]).expect("signature present");
            }
            if ranked.len() == classes {
                return;
            }
            classes = ranked.len();
        }
    }

    fn leaf_bits(&self, colour: &[usize]) -> Vec<u8> {
        let n = self.n();
        let mut vertex_at = vec![0; n];
        for (v, &c) in colour.iter().enumerate() {
            vertex_at[c] = v;
        }
        let mut bits = vec![0u8; packed_len(n)];
        let mut k = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.adj[vertex_at[a]][vertex_at[b]] {
                    bits[k / 8] |= 1 << (7 - k % 8);
                }
                k += 1;
            }
        }
        bits
    }

    fn search(&mut self, mut colour: Vec<usize>) {
        self.refine(&mut colour);
        let n = self.n();
        let mut sizes = vec![0usize; n];
        for &c in &colour {
            sizes[c] += 1;
        }
        let target = (0..n).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c));
        let Some(cell) = target else {
            let bits = self.leaf_bits(&colour);
            if self.best.as_ref().is_none_or(|(b, _)| bits < *b) {
                self.best = Some((bits, colour));
            }
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&v| colour[v] == cell).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = colour.clone();
            for c in next.iter_mut() {
                if *c > cell {
                    *c += 1;
                } else if *c == cell {
                    *c = cell + 1;
                }
            }
            next[v] = cell;
            self.search(next);
        }
    }

    /// Same neighbourhood apart from each other.
    fn twins(&self, u: usize, v: usize) -> bool {
        (0..self.n()).all(|w| w == u || w == v || self.adj[u][w] == self.adj[v][w])
    }
}

fn check_cap(g: &SimpleGraph) -> Result<()> {
    let cap = limits::graph_cap() as usize;
    if g.vertex_count() > cap {
        return Err(Error::GraphCapExceeded {
            vertices: g.vertex_count(),
            cap,
        });
    }
    Ok(())
}

/// Canonical position of every vertex together with the certificate.
pub fn canonical_labeling(g: &SimpleGraph) -> Result<(Vec<usize>, GraphCertificate)> {
    check_cap(g)?;
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut canon = Canon { adj: &adj, best: None };
    canon.search(vec![0; n]);
    let (bits, labeling) = canon.best.unwrap_or_default();
    let mut bytes = (n as u16).to_be_bytes().to_vec();
    bytes.extend(bits);
    Ok((labeling, GraphCertificate(bytes)))
}

/// Labels are ignored; two graphs get the same certificate iff isomorphic.
pub fn canonical_form(g: &SimpleGraph) -> Result<GraphCertificate> {
    canonical_labeling(g).map(|(_, cert)| cert)
}

/// A vertex bijection `g -> h` preserving adjacency, if one exists.
pub fn graph_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    check_cap(g)?;
    check_cap(h)?;
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let (lg, cg) = canonical_labeling(g)?;
    let (lh, ch) = canonical_labeling(h)?;
    if cg != ch {
        return Ok(None);
    }
    let mut h_at = vec![0; lh.len()];
    for (v, &pos) in lh.iter().enumerate() {
        h_at[pos] = v;
    }
    let map: Vec<usize> = lg.iter().map(|&pos| h_at[pos]).collect();
    debug_assert!(g.edges().all(|(a, b)| h.has_edge(map[a], map[b])));
    Ok(Some(map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn empty_and_small_certificates() {
        assert_eq!(canonical_form(&SimpleGraph::empty(0)).unwrap().to_hex(), "0000");
        assert_eq!(canonical_form(&SimpleGraph::complete(2)).unwrap().to_hex(), "000280");
        assert_ne!(
            canonical_form(&SimpleGraph::path(3)).unwrap(),
            canonical_form(&SimpleGraph::complete(3)).unwrap()
        );
    }

    #[test]
    fn relabeled_graphs_agree() {
        let a = SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = SimpleGraph::new(4, [(3, 0), (0, 2), (2, 1)]).unwrap();
        let map = graph_isomorphic(&a, &b).unwrap().unwrap();
        for (x, y) in a.edges() {
            assert!(b.has_edge(map[x], map[y]));
        }
        assert!(graph_isomorphic(&cycle(6), &SimpleGraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn certificate_round_trip() {
        let c = canonical_form(&cycle(5)).unwrap();
        assert_eq!(GraphCertificate::from_hex(&c.to_hex()).unwrap(), c);
        assert_eq!(canonical_form(&c.to_graph()).unwrap(), c);
    }

    #[test]
    fn graph_cap_enforced() {
        let big = SimpleGraph::empty(limits::HARD_GRAPH_CAP as usize + 1);
        assert!(matches!(canonical_form(&big), Err(Error::GraphCapExceeded { .. })));
    }
}
