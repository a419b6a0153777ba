//! Distance- and degree-based invariants of connected graphs.
//!
//! The central objects are the per-edge splits: an edge `{u, v}` divides the
//! remaining vertices (and edges) into the part strictly closer to `u`, the
//! part strictly closer to `v`, and an equidistant remainder. Summing
//! products or sums of the split sizes over all edges yields the Szeged-type
//! and PI-type indices.

use serde::Serialize;

use crate::graph::{Graph, GraphError, UNREACHABLE};

/// Vertex counts induced by one edge: `n_u` vertices strictly closer to `u`,
/// `n_v` strictly closer to `v`, the rest equidistant. Endpoints count
/// toward their own side, so both parts are at least one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeVertexSplit {
    pub n_u: u64,
    pub n_v: u64,
    pub equidistant: u64,
    /// Triangles through the edge, which is also the number of common
    /// neighbors of its endpoints.
    pub triangles: u32,
}

/// Edge counts induced by one edge, measuring the distance from an edge `f`
/// to an endpoint as the smaller of the two endpoint distances. The edge
/// itself is excluded, so the three parts sum to `m - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeEdgeSplit {
    pub m_u: u64,
    pub m_v: u64,
    pub equidistant: u64,
}

/// Everything the index computations and inequality checks consume, gathered
/// in one pass. Serialized field names are the conventional short symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantVector {
    /// Wiener index: sum of distances over unordered vertex pairs.
    #[serde(rename = "w")]
    pub wiener: u64,
    /// Edge version of the PI index: sum of `m_u + m_v` over edges.
    #[serde(rename = "pi")]
    pub edge_pi: u64,
    /// Vertex PI index: sum of `n_u + n_v` over edges.
    #[serde(rename = "piv")]
    pub vertex_pi: u64,
    /// Szeged index: sum of `n_u * n_v` over edges.
    #[serde(rename = "sz")]
    pub szeged: u64,
    /// Edge Szeged index: sum of `m_u * m_v` over edges.
    #[serde(rename = "sze")]
    pub edge_szeged: u64,
    /// First Zagreb index: sum of squared degrees.
    #[serde(rename = "m1")]
    pub first_zagreb: u64,
    /// Second Zagreb index: sum of `deg(u) * deg(v)` over edges.
    #[serde(rename = "m2")]
    pub second_zagreb: u64,
    #[serde(rename = "t")]
    pub triangles: u64,
    #[serde(rename = "diam")]
    pub diameter: u32,
    #[serde(rename = "min_deg")]
    pub min_degree: u32,
}

impl Graph {
    /// Vertex split along the edge `{u, v}`.
    pub fn vertex_split(&self, u: usize, v: usize) -> Result<EdgeVertexSplit, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let du = self.bfs_distances(u);
        let dv = self.bfs_distances(v);
        if du.contains(&UNREACHABLE) {
            return Err(GraphError::Disconnected);
        }
        Ok(vertex_split_from(self, u, v, &du, &dv))
    }

    /// Edge split along the edge `{u, v}`.
    pub fn edge_split(&self, u: usize, v: usize) -> Result<EdgeEdgeSplit, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let du = self.bfs_distances(u);
        let dv = self.bfs_distances(v);
        if du.contains(&UNREACHABLE) {
            return Err(GraphError::Disconnected);
        }
        Ok(edge_split_from(self, u, v, &du, &dv))
    }

    /// A graph is distance-balanced when every edge splits the vertex set
    /// into equally large sides.
    pub fn is_distance_balanced(&self) -> Result<bool, GraphError> {
        if self.order() == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let rows: Vec<Vec<u8>> = self.vertices().map(|v| self.bfs_distances(v)).collect();
        Ok(self.edges().into_iter().all(|(u, v)| {
            let s = vertex_split_from(self, u, v, &rows[u], &rows[v]);
            s.n_u == s.n_v
        }))
    }
}

fn vertex_split_from(g: &Graph, u: usize, v: usize, du: &[u8], dv: &[u8]) -> EdgeVertexSplit {
    let mut split = EdgeVertexSplit {
        n_u: 0,
        n_v: 0,
        equidistant: 0,
        triangles: g.triangles_per_edge(u, v).expect("edge checked by caller"),
    };
    for x in g.vertices() {
        match du[x].cmp(&dv[x]) {
            std::cmp::Ordering::Less => split.n_u += 1,
            std::cmp::Ordering::Greater => split.n_v += 1,
            std::cmp::Ordering::Equal => split.equidistant += 1,
        }
    }
    split
}

fn edge_split_from(g: &Graph, u: usize, v: usize, du: &[u8], dv: &[u8]) -> EdgeEdgeSplit {
    let mut split = EdgeEdgeSplit {
        m_u: 0,
        m_v: 0,
        equidistant: 0,
    };
    for (a, b) in g.edges() {
        if (a, b) == (u.min(v), u.max(v)) {
            continue;
        }
        let to_u = du[a].min(du[b]);
        let to_v = dv[a].min(dv[b]);
        match to_u.cmp(&to_v) {
            std::cmp::Ordering::Less => split.m_u += 1,
            std::cmp::Ordering::Greater => split.m_v += 1,
            std::cmp::Ordering::Equal => split.equidistant += 1,
        }
    }
    split
}

/// Compute the full invariant vector of a connected graph.
///
/// Runs one breadth-first search per vertex and reuses the distance rows for
/// the Wiener index, the diameter, and every per-edge split.
pub fn compute_invariants(g: &Graph) -> Result<InvariantVector, GraphError> {
    let n = g.order();
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let rows: Vec<Vec<u8>> = g.vertices().map(|v| g.bfs_distances(v)).collect();
    if rows[0].contains(&UNREACHABLE) {
        return Err(GraphError::Disconnected);
    }

    let mut wiener = 0u64;
    let mut diameter = 0u32;
    for u in 0..n {
        for x in u + 1..n {
            let d = u32::from(rows[u][x]);
            wiener += u64::from(d);
            diameter = diameter.max(d);
        }
    }

    let mut vec = InvariantVector {
        wiener,
        edge_pi: 0,
        vertex_pi: 0,
        szeged: 0,
        edge_szeged: 0,
        first_zagreb: 0,
        second_zagreb: 0,
        triangles: 0,
        diameter,
        min_degree: g.min_degree() as u32,
    };
    let mut triangle_incidences = 0u64;
    for (u, v) in g.edges() {
        let vs = vertex_split_from(g, u, v, &rows[u], &rows[v]);
        let es = edge_split_from(g, u, v, &rows[u], &rows[v]);
        vec.vertex_pi += vs.n_u + vs.n_v;
        vec.szeged += vs.n_u * vs.n_v;
        vec.edge_pi += es.m_u + es.m_v;
        vec.edge_szeged += es.m_u * es.m_v;
        vec.second_zagreb += g.degree(u) as u64 * g.degree(v) as u64;
        triangle_incidences += u64::from(vs.triangles);
    }
    vec.triangles = triangle_incidences / 3;
    vec.first_zagreb = g.vertices().map(|v| (g.degree(v) as u64).pow(2)).sum();
    Ok(vec)
}
