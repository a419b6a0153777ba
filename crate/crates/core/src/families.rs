//! Membership tests and constructors for the graph families that show up as
//! equality classes of the inequalities, plus closed forms for strongly
//! regular parameters.

use serde::Serialize;
use std::fmt;

use crate::graph::{Graph, GraphError, InducedPattern};

/// Members of the first equality family: connected graphs in which every
/// edge has a side containing only its own endpoint.
pub fn in_xn(g: &Graph) -> bool {
    if g.order() == 0 || !g.is_connected() {
        return false;
    }
    let rows: Vec<Vec<u8>> = g.vertices().map(|v| g.bfs_distances(v)).collect();
    g.edges().into_iter().all(|(u, v)| {
        let (mut n_u, mut n_v) = (0u64, 0u64);
        for x in g.vertices() {
            match rows[u][x].cmp(&rows[v][x]) {
                std::cmp::Ordering::Less => n_u += 1,
                std::cmp::Ordering::Greater => n_v += 1,
                std::cmp::Ordering::Equal => {}
            }
        }
        n_u.min(n_v) == 1
    })
}

/// Structural description of the same family: connected, diameter at most
/// two, and no induced path or cycle on four vertices. Equivalence with
/// [`in_xn`] is exercised exhaustively in the sweep tests.
pub fn xn_characterization(g: &Graph) -> bool {
    if g.order() == 0 {
        return false;
    }
    match g.diameter() {
        Ok(d) if d <= 2 => {}
        _ => return false,
    }
    !g.has_induced(InducedPattern::P4) && !g.has_induced(InducedPattern::C4)
}

/// True when some vertex is adjacent to all others. Every member of the
/// family above has one.
pub fn has_universal_vertex(g: &Graph) -> bool {
    let n = g.order();
    n >= 1 && g.vertices().any(|v| g.degree(v) == n - 1)
}

/// Members of the second equality family: connected graphs of minimum
/// degree at least two in which every edge has a side containing exactly
/// one other edge.
pub fn in_yn(g: &Graph) -> bool {
    if g.order() == 0 || g.min_degree() < 2 || !g.is_connected() {
        return false;
    }
    let rows: Vec<Vec<u8>> = g.vertices().map(|v| g.bfs_distances(v)).collect();
    let edges = g.edges();
    edges.iter().all(|&(u, v)| {
        let (mut m_u, mut m_v) = (0u64, 0u64);
        for &(a, b) in &edges {
            if (a, b) == (u, v) {
                continue;
            }
            let to_u = rows[u][a].min(rows[u][b]);
            let to_v = rows[v][a].min(rows[v][b]);
            match to_u.cmp(&to_v) {
                std::cmp::Ordering::Less => m_u += 1,
                std::cmp::Ordering::Greater => m_v += 1,
                std::cmp::Ordering::Equal => {}
            }
        }
        m_u.min(m_v) == 1
    })
}

/// One member of the second family, in constructive form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YnMember {
    /// `triangles` three-cycles and `squares` four-cycles sharing one hub
    /// vertex; at least one cycle in total.
    Bouquet { triangles: usize, squares: usize },
    /// Complete bipartite graph with parts of size two and `legs >= 3`.
    K2k { legs: usize },
}

impl YnMember {
    pub fn order(&self) -> usize {
        match *self {
            YnMember::Bouquet { triangles, squares } => 1 + 2 * triangles + 3 * squares,
            YnMember::K2k { legs } => 2 + legs,
        }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            YnMember::Bouquet { triangles, squares } => {
                let mut g = Graph::new(self.order())?;
                let mut next = 1;
                for _ in 0..triangles {
                    let (x, y) = (next, next + 1);
                    next += 2;
                    g.add_edge(0, x)?;
                    g.add_edge(0, y)?;
                    g.add_edge(x, y)?;
                }
                for _ in 0..squares {
                    let (x, y, z) = (next, next + 1, next + 2);
                    next += 3;
                    g.add_edge(0, x)?;
                    g.add_edge(x, y)?;
                    g.add_edge(y, z)?;
                    g.add_edge(z, 0)?;
                }
                Ok(g)
            }
            YnMember::K2k { legs } => Graph::complete_bipartite(2, legs),
        }
    }
}

/// All members of the second family with `n` vertices, bouquets first in
/// order of increasing square count, then the complete bipartite member.
pub fn yn_members(n: usize) -> Vec<YnMember> {
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    // 2a + 3b = n - 1 with a + b >= 1
    for squares in 0..=(n - 1) / 3 {
        let rest = n - 1 - 3 * squares;
        if rest.is_multiple_of(2) && squares + rest / 2 >= 1 {
            out.push(YnMember::Bouquet { triangles: rest / 2, squares });
        }
    }
    if n >= 5 {
        out.push(YnMember::K2k { legs: n - 2 });
    }
    out
}

/// Number of members of the second family with `n` vertices, in closed form.
pub fn yn_count(n: usize) -> u64 {
    match n {
        0..=2 => 0,
        3 | 4 => 1,
        _ => {
            let base = ((n - 1) / 6) as u64;
            if n % 6 == 2 {
                base + 1
            } else {
                base + 2
            }
        }
    }
}

/// Complete multipartite graph with the given part sizes (empty parts are
/// ignored).
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let sizes: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
    let n: usize = sizes.iter().sum();
    let mut g = Graph::new(n)?;
    let mut start_u = 0;
    for (i, &pu) in sizes.iter().enumerate() {
        let mut start_v = start_u + pu;
        for &pv in &sizes[i + 1..] {
            for u in start_u..start_u + pu {
                for v in start_v..start_v + pv {
                    g.add_edge(u, v)?;
                }
            }
            start_v += pv;
        }
        start_u += pu;
    }
    Ok(g)
}

/// A graph is complete multipartite exactly when its complement is a
/// disjoint union of cliques.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    let co = g.complement();
    let mut seen = 0u64;
    for s in co.vertices() {
        if seen >> s & 1 == 1 {
            continue;
        }
        // collect the component of s in the complement
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            let mut t = frontier;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                next |= co.neighbors(v);
            }
            frontier = next & !comp;
            comp |= frontier;
        }
        seen |= comp;
        let mut t = comp;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            t &= t - 1;
            if co.neighbors(v) & comp != comp ^ (1u64 << v) {
                return false;
            }
        }
    }
    true
}

/// Parameters of a connected, non-complete strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

/// Why a parameter tuple cannot belong to a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrgError {
    /// Need `v >= k + 2` and `k >= 1`: some vertex pair is non-adjacent.
    DegreeRange { v: u64, k: u64 },
    /// Adjacent vertices share at most `k - 1` neighbors.
    LambdaRange { k: u64, lambda: u64 },
    /// Non-adjacent vertices share between 1 and `k` neighbors when the
    /// graph is connected.
    MuRange { k: u64, mu: u64 },
    /// Two-way count of paths from a vertex to its non-neighbors:
    /// `k (k - lambda - 1) = (v - k - 1) mu` must hold.
    CountingIdentity { lhs: u64, rhs: u64 },
    /// The degree sum `v k` must be even.
    OddDegreeSum,
    /// The closed-form index values exceed the supported integer range.
    Overflow,
}

impl fmt::Display for SrgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SrgError::DegreeRange { v, k } => {
                write!(f, "need v >= k + 2 and k >= 1, got v = {}, k = {}", v, k)
            }
            SrgError::LambdaRange { k, lambda } => {
                write!(f, "lambda = {} exceeds k - 1 = {}", lambda, k.saturating_sub(1))
            }
            SrgError::MuRange { k, mu } => {
                write!(f, "mu = {} outside 1..={} for a connected graph", mu, k)
            }
            SrgError::CountingIdentity { lhs, rhs } => {
                write!(f, "k(k - lambda - 1) = {} but (v - k - 1) mu = {}", lhs, rhs)
            }
            SrgError::OddDegreeSum => write!(f, "v k is odd"),
            SrgError::Overflow => write!(f, "index values overflow 64 bits"),
        }
    }
}

impl std::error::Error for SrgError {}

impl SrgParams {
    /// Validate the standard feasibility conditions.
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Result<Self, SrgError> {
        if k < 1 || v < k + 2 {
            return Err(SrgError::DegreeRange { v, k });
        }
        if lambda >= k {
            return Err(SrgError::LambdaRange { k, lambda });
        }
        if mu < 1 || mu > k {
            return Err(SrgError::MuRange { k, mu });
        }
        let lhs = k * (k - lambda - 1);
        let rhs = (v - k - 1) * mu;
        if lhs != rhs {
            return Err(SrgError::CountingIdentity { lhs, rhs });
        }
        if !(v * k).is_multiple_of(2) {
            return Err(SrgError::OddDegreeSum);
        }
        Ok(SrgParams { v, k, lambda, mu })
    }
}

/// Index values determined by strongly regular parameters alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgIndexValues {
    #[serde(rename = "piv")]
    pub vertex_pi: u64,
    #[serde(rename = "sz")]
    pub szeged: u64,
}

/// Closed forms for the vertex PI and Szeged indices of a strongly regular
/// graph: every edge splits off `k - lambda` vertices on each side.
pub fn srg_closed_forms(p: SrgParams) -> Result<SrgIndexValues, SrgError> {
    let (v, k, s) = (p.v as u128, p.k as u128, (p.k - p.lambda) as u128);
    let vertex_pi = u64::try_from(v * k * s).map_err(|_| SrgError::Overflow)?;
    let szeged = u64::try_from(v * k / 2 * s * s).map_err(|_| SrgError::Overflow)?;
    Ok(SrgIndexValues { vertex_pi, szeged })
}

/// Szeged index of a diameter-two graph whose edges all lie in the same
/// number of triangles, expressed through the Zagreb indices. Returns
/// `None` when the shape conditions fail.
pub fn sz_closed_form_diam2(g: &Graph) -> Result<Option<u64>, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if g.diameter()? != 2 {
        return Ok(None);
    }
    let edges = g.edges();
    let t = g
        .triangles_per_edge(edges[0].0, edges[0].1)
        .expect("diameter two implies an edge");
    for &(u, v) in &edges[1..] {
        if g.triangles_per_edge(u, v).unwrap() != t {
            return Ok(None);
        }
    }
    let inv = crate::invariants::compute_invariants(g)?;
    let m = edges.len() as i128;
    let t = i128::from(t);
    let value = i128::from(inv.second_zagreb) - t * i128::from(inv.first_zagreb) + t * t * m;
    Ok(Some(u64::try_from(value).expect("index values are nonnegative")))
}
