//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so neighborhood
//! intersection, BFS frontiers, and induced-subgraph tests are single word
//! operations. Graphs are immutable once built; every constructor validates
//! the no-loop / no-multi-edge invariants.

mod canon;
mod distance;
mod graph6;
mod patterns;

pub use canon::Certificate;
pub use distance::{DistanceTable, UNREACHABLE};
pub use graph6::{parse_graph6, write_graph6, Graph6Error, GRAPH6_MAX_ORDER};
pub use patterns::InducedPattern;

use std::fmt;

/// Hard cap on the number of vertices (one adjacency bit row per `u64`).
pub const MAX_VERTICES: usize = 64;

/// Errors for graph construction and for operations whose preconditions
/// depend on the graph's shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Requested order exceeds [`MAX_VERTICES`].
    TooManyVertices(usize),
    /// Vertex index is outside `0..order`.
    InvalidVertex { vertex: usize, order: usize },
    /// Loops are not representable.
    SelfLoop(usize),
    /// The edge was given twice.
    DuplicateEdge(usize, usize),
    /// The operation requires a connected graph.
    Disconnected,
    /// The vertex pair is not an edge of the graph.
    NotAnEdge(usize, usize),
    /// The operation requires at least one vertex.
    EmptyGraph,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::TooManyVertices(n) => {
                write!(f, "{} vertices exceed the supported maximum of {}", n, MAX_VERTICES)
            }
            GraphError::InvalidVertex { vertex, order } => {
                write!(f, "vertex {} out of range for order {}", vertex, order)
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {}", v),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge {{{}, {}}}", u, v),
            GraphError::Disconnected => write!(f, "graph is disconnected"),
            GraphError::NotAnEdge(u, v) => write!(f, "{{{}, {}}} is not an edge", u, v),
            GraphError::EmptyGraph => write!(f, "graph has no vertices"),
        }
    }
}

impl std::error::Error for GraphError {}

/// An undirected simple graph with adjacency bit rows.
///
/// ```
/// use szpi::Graph;
///
/// let c4 = Graph::cycle(4).unwrap();
/// assert_eq!(c4.order(), 4);
/// assert_eq!(c4.edge_count(), 4);
/// assert!(c4.has_edge(0, 3));
/// assert!(c4.is_bipartite());
/// ```
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Graph with the given edge list. Rejects loops, duplicates, and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Insert the edge `{u, v}`. Intended for construction; algorithms treat
    /// graphs as immutable afterwards.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n;
        if u >= n {
            return Err(GraphError::InvalidVertex { vertex: u, order: n });
        }
        if v >= n {
            return Err(GraphError::InvalidVertex { vertex: v, order: n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u] & bit(v) != 0 {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Internal constructor from raw rows; the caller guarantees symmetry and
    /// an empty diagonal.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        debug_assert!(adj.iter().enumerate().all(|(v, &row)| row & bit(v) == 0));
        debug_assert!((0..n).all(|u| (0..n).all(|v| (adj[u] >> v) & 1 == (adj[v] >> u) & 1)));
        Graph { n, adj }
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Minimum vertex degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighborhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edge list in lexicographic order with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !low_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// True when every vertex is reachable from every other (vacuously true
    /// for orders 0 and 1).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut t = frontier;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen.count_ones() as usize == self.n
    }

    /// Two-colorability, checked per component.
    pub fn is_bipartite(&self) -> bool {
        let mut side = [0u64; 2];
        let mut seen = 0u64;
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut frontier = bit(s);
            let mut parity = 0;
            seen |= frontier;
            side[0] |= frontier;
            while frontier != 0 {
                parity ^= 1;
                let mut next = 0u64;
                let mut t = frontier;
                while t != 0 {
                    let v = t.trailing_zeros() as usize;
                    t &= t - 1;
                    next |= self.adj[v];
                }
                frontier = next & !seen;
                seen |= frontier;
                side[parity] |= frontier;
            }
        }
        // an edge inside either side breaks two-colorability
        (0..self.n).all(|v| {
            let my_side = (side[1] >> v) & 1;
            self.adj[v] & side[my_side as usize] == 0
        })
    }

    /// Complement graph (same order, all non-edges become edges).
    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & mask & !bit(v)).collect();
        Graph::from_rows(adj)
    }

    /// Remove vertex `v`, relabeling higher vertices downwards.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n, "vertex {} out of range for order {}", v, self.n);
        let keep_low = low_mask(v);
        let mut adj = Vec::with_capacity(self.n - 1);
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let row = self.adj[u];
            adj.push((row & keep_low) | ((row >> (v + 1)) << v));
        }
        Graph::from_rows(adj)
    }

    // ---- small named constructors used across tests and families ----

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidVertex { vertex: n, order: 3 });
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    /// Star with one hub and `leaves` pendant vertices.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[inline(always)]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set (`n <= 64`).
#[inline(always)]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the set bits of a mask in ascending order.
#[inline]
pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}
