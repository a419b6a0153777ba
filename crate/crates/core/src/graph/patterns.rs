//! Triangle counts and induced-subgraph detection.

use super::{bit, iter_bits, Graph, GraphError};

/// Patterns recognized by [`Graph::has_induced`].
///
/// `Paw` is the triangle with one pendant edge; `OddHole` is any induced
/// cycle of odd length at least five.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InducedPattern {
    P4,
    C4,
    Paw,
    OddHole,
}

impl Graph {
    /// Number of triangles containing the edge `{u, v}`.
    pub fn triangles_per_edge(&self, u: usize, v: usize) -> Result<u32, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        Ok((self.adj[u] & self.adj[v]).count_ones())
    }

    /// Total number of triangles (each counted once).
    pub fn triangles_total(&self) -> u64 {
        let mut sum = 0u64;
        for (u, v) in self.edges() {
            sum += u64::from((self.adj[u] & self.adj[v]).count_ones());
        }
        debug_assert_eq!(sum % 3, 0, "each triangle is seen from exactly three edges");
        sum / 3
    }

    /// Does the graph contain `pattern` as an induced subgraph?
    ///
    /// The four-vertex patterns scan all four-subsets; the odd-hole scan
    /// grows induced paths. Both are intended for small orders (the
    /// enumeration range), not for dense 64-vertex graphs.
    pub fn has_induced(&self, pattern: InducedPattern) -> bool {
        match pattern {
            InducedPattern::P4 => self.has_induced_quad(3, [1, 1, 2, 2]),
            InducedPattern::C4 => self.has_induced_quad(4, [2, 2, 2, 2]),
            InducedPattern::Paw => self.has_induced_quad(4, [1, 2, 2, 3]),
            InducedPattern::OddHole => self.has_odd_hole(),
        }
    }

    /// Four-vertex patterns are determined by their edge count and sorted
    /// degree sequence, so an induced copy on `{a,b,c,d}` is a pure bit test.
    fn has_induced_quad(&self, edge_count: u32, degrees: [u32; 4]) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let mask = bit(a) | bit(b) | bit(c) | bit(d);
                        let degs = [a, b, c, d].map(|v| (self.adj[v] & mask).count_ones());
                        let edges = degs.iter().sum::<u32>() / 2;
                        if edges != edge_count {
                            continue;
                        }
                        let mut sorted = degs;
                        sorted.sort_unstable();
                        if sorted == degrees {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    fn has_odd_hole(&self) -> bool {
        // Grow induced paths from each start vertex s (the cycle minimum):
        // an extension may touch only the path's last vertex, and touching s
        // instead closes an induced cycle.
        for s in 0..self.n {
            let above = !super::low_mask(s + 1);
            for v1 in iter_bits(self.adj[s] & above) {
                if self.grow_induced_path(s, v1, bit(s) | bit(v1), 0, 2, above) {
                    return true;
                }
            }
        }
        false
    }

    fn grow_induced_path(
        &self,
        s: usize,
        last: usize,
        path: u64,
        inner_adj: u64,
        len: u32,
        above: u64,
    ) -> bool {
        let candidates = self.adj[last] & above & !path & !inner_adj;
        for w in iter_bits(candidates) {
            if self.adj[w] & bit(s) != 0 {
                // closes a cycle on len + 1 vertices; induced by construction
                if len + 1 >= 5 && (len + 1) % 2 == 1 {
                    return true;
                }
            } else if self.grow_induced_path(s, w, path | bit(w), inner_adj | self.adj[last], len + 1, above)
            {
                return true;
            }
        }
        false
    }
}
