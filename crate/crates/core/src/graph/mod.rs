//! Simple undirected graphs over `0..n` with one-word adjacency rows.

mod families;
mod format;
mod ops;
mod structure;
mod vertex_set;

pub use families::Family;
pub use format::{from_edge_list_text, from_graph6, to_edge_list_text, to_graph6};
pub use structure::StructureReport;
pub use vertex_set::{Iter, VertexSet};

use crate::error::{Error, Result};

/// Largest supported order. Every vertex set fits in one `u64`.
pub const MAX_VERTICES: usize = 64;

/// An immutable simple graph. `adj[v]` is the open neighborhood N(v).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                cap: MAX_VERTICES,
                what: "graph order",
            });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                cap: MAX_VERTICES,
                what: "graph order",
            });
        }
        let mask = vertex_set::full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let bad = (row & !mask).trailing_zeros() as usize;
                return Err(Error::InvalidVertex { vertex: bad, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            let mut rest = row;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Format(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        Graph { n, adj: vec![0; n] }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Raw adjacency row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.n, self.adj[v])
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.n, self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn isolates(&self) -> VertexSet {
        VertexSet::from_vertices(self.n, (0..self.n).filter(|&v| self.adj[v] == 0))
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0).is_full()
    }

    /// Vertices reachable from `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        VertexSet::from_bits(self.n, seen)
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = self.vertices();
        while let Some(v) = left.first() {
            let c = self.component_of(v);
            left = left - c;
            out.push(c);
        }
        out
    }

    /// The subgraph induced by `keep`, relabelled to `0..keep.len()` in
    /// increasing vertex order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let map: Vec<usize> = keep.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                VertexSet::from_bits(self.n, self.adj[v] & keep.bits())
                    .iter()
                    .fold(0u64, |acc, u| acc | 1 << index[u])
            })
            .collect();
        Graph { n: map.len(), adj }
    }

    /// Returns a copy with the edge `uv` removed (no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Graph { n: self.n, adj }
    }

    /// Returns a copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges = self.edges();
        edges.push((u, v));
        Graph::from_edge_list(self.n, &edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    /// True iff this is K_{a,b} for some split `a + b = n` with `a, b >= 1`.
    pub fn is_complete_bipartite(&self, a: usize, b: usize) -> bool {
        if a + b != self.n || a == 0 || b == 0 || self.edge_count() != a * b {
            return false;
        }
        // A complete bipartite graph's complement is two disjoint cliques.
        let side = VertexSet::from_bits(self.n, !self.adj[0] & vertex_set::full_mask(self.n));
        let other = side.complement();
        if !(side.len() == a && other.len() == b || side.len() == b && other.len() == a) {
            return false;
        }
        side.iter().all(|v| self.adj[v] == other.bits())
            && other.iter().all(|v| self.adj[v] == side.bits())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
