//! BFS distances with an explicit unreachable sentinel.
//!
//! Distances live in `u8` (orders are at most 64, so eccentricities fit);
//! [`UNREACHABLE`] marks vertices in other components and never enters
//! arithmetic; comparisons against it classify a vertex as equidistant.

use super::{bit, Graph, GraphError};

/// Sentinel distance for vertices not reachable from the source.
pub const UNREACHABLE: u8 = u8::MAX;

impl Graph {
    /// Distances from `source` to every vertex, [`UNREACHABLE`] where there
    /// is no path.
    ///
    /// Panics if `source` is out of range.
    pub fn bfs_distances(&self, source: usize) -> Vec<u8> {
        assert!(source < self.n, "source {} out of range for order {}", source, self.n);
        let mut dist = vec![UNREACHABLE; self.n];
        dist[source] = 0;
        let mut seen = bit(source);
        let mut frontier = seen;
        let mut d = 0u8;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            let mut t = frontier;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
            let mut t = frontier;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                dist[v] = d;
            }
        }
        dist
    }

    /// Largest finite distance over all vertex pairs.
    ///
    /// Orders 0 and 1 have diameter 0; disconnected graphs are an error.
    pub fn diameter(&self) -> Result<u32, GraphError> {
        let mut diam = 0u32;
        for v in 0..self.n {
            let row = self.bfs_distances(v);
            for &d in &row {
                if d == UNREACHABLE {
                    return Err(GraphError::Disconnected);
                }
                diam = diam.max(u32::from(d));
            }
        }
        Ok(diam)
    }
}

/// Dense all-pairs distance table, row-major.
///
/// Exists for callers that genuinely need all pairs at once (and for
/// cross-checking the per-edge BFS path); the invariant computations
/// deliberately do not build it.
pub struct DistanceTable {
    n: usize,
    rows: Vec<u8>,
}

impl DistanceTable {
    pub fn compute(g: &Graph) -> Self {
        let n = g.order();
        let mut rows = Vec::with_capacity(n * n);
        for v in 0..n {
            rows.extend_from_slice(&g.bfs_distances(v));
        }
        DistanceTable { n, rows }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.rows[u * self.n + v]
    }

    pub fn order(&self) -> usize {
        self.n
    }
}
