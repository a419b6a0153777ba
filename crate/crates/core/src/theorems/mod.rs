//! Exact verdicts for the inequalities between the indices.
//!
//! Every check returns the two sides of its inequality as integers, whether
//! the bound holds, whether it is attained, and whether the observed
//! equality pattern matches the characterized equality class. All
//! comparisons are exact; nothing here rounds.

mod polya;

pub use polya::{PolyaError, PolyaInput, PolyaReport, POLYA_RELATIVE_TOLERANCE};

use serde::Serialize;

use crate::families;
use crate::graph::{Graph, GraphError, InducedPattern};
use crate::invariants::{compute_invariants, InvariantVector};

/// Stable identifiers for the seven inequality checks. The serialized names
/// spell out the two sides being compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    /// Vertex PI against Szeged plus edge count.
    #[serde(rename = "piv_sz")]
    VertexPiVsSzeged,
    /// Edge PI against edge Szeged plus edge count, minimum degree two.
    #[serde(rename = "pi_sze")]
    PiVsEdgeSzeged,
    /// Vertex PI against `nm - 3t`.
    #[serde(rename = "piv_nm3t")]
    VertexPiTriangleBound,
    /// Four times Szeged against `n^2 m - 12t`.
    #[serde(rename = "sz_n2m3t")]
    SzegedTriangleBound,
    /// Szeged above the second Zagreb index on triangle-free graphs.
    #[serde(rename = "sz_m2")]
    SzegedVsSecondZagreb,
    /// `(m - 1)` times edge PI against four times edge Szeged.
    #[serde(rename = "pi_sze_ratio")]
    PiEdgeSzegedRatio,
    /// `32 m n` times Szeged against `(n + 2)^2` times vertex PI squared.
    #[serde(rename = "sz_piv_sq")]
    SzegedVsVertexPiSquare,
}

impl TheoremId {
    /// All checks, in the order [`run_all`] reports them.
    pub const ALL: [TheoremId; 7] = [
        TheoremId::VertexPiVsSzeged,
        TheoremId::PiVsEdgeSzeged,
        TheoremId::VertexPiTriangleBound,
        TheoremId::SzegedTriangleBound,
        TheoremId::SzegedVsSecondZagreb,
        TheoremId::PiEdgeSzegedRatio,
        TheoremId::SzegedVsVertexPiSquare,
    ];

    /// The serialized name, for tabular output.
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::VertexPiVsSzeged => "piv_sz",
            TheoremId::PiVsEdgeSzeged => "pi_sze",
            TheoremId::VertexPiTriangleBound => "piv_nm3t",
            TheoremId::SzegedTriangleBound => "sz_n2m3t",
            TheoremId::SzegedVsSecondZagreb => "sz_m2",
            TheoremId::PiEdgeSzegedRatio => "pi_sze_ratio",
            TheoremId::SzegedVsVertexPiSquare => "sz_piv_sq",
        }
    }
}

/// Result of one inequality check on one graph. `detail` is absent when the
/// graph does not satisfy the check's hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub id: TheoremId,
    pub applicable: bool,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub detail: Option<VerdictDetail>,
}

/// The measured sides and the equality bookkeeping.
///
/// `consistent` is the statement actually being verified: the bound holds,
/// attainment agrees with the predicted equality class when the check has a
/// two-sided characterization, and the necessary conditions are met when it
/// only has one-sided ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerdictDetail {
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
    pub equality: bool,
    /// Whether the characterized equality class contains this graph; absent
    /// when the check characterizes equality only by necessary conditions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_equality: Option<bool>,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<SideConditions>,
}

/// Structural facts with forced outcomes for the `nm - 3t` bound: bipartite
/// and complete multipartite graphs attain it, graphs with an induced paw
/// cannot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SideConditions {
    pub bipartite: bool,
    pub complete_multipartite: bool,
    pub induced_paw: bool,
}

fn verdict(id: TheoremId, detail: VerdictDetail) -> TheoremVerdict {
    TheoremVerdict { id, applicable: true, detail: Some(detail) }
}

fn inapplicable(id: TheoremId) -> TheoremVerdict {
    TheoremVerdict { id, applicable: false, detail: None }
}

/// Vertex PI never exceeds Szeged plus the edge count; equality holds
/// exactly for the graphs where every edge has a singleton side.
pub fn vertex_pi_vs_szeged(g: &Graph) -> Result<TheoremVerdict, GraphError> {
    let inv = compute_invariants(g)?;
    Ok(vertex_pi_vs_szeged_with(g, &inv))
}

fn vertex_pi_vs_szeged_with(g: &Graph, inv: &InvariantVector) -> TheoremVerdict {
    let lhs = inv.vertex_pi;
    let rhs = inv.szeged + g.edge_count() as u64;
    let holds = lhs <= rhs;
    let equality = lhs == rhs;
    let predicted = families::in_xn(g);
    verdict(
        TheoremId::VertexPiVsSzeged,
        VerdictDetail {
            lhs,
            rhs,
            holds,
            equality,
            predicted_equality: Some(predicted),
            consistent: holds && equality == predicted,
            side: None,
        },
    )
}

/// On graphs of minimum degree two, edge PI never exceeds edge Szeged plus
/// the edge count; equality holds exactly for the cycle bouquets and the
/// complete bipartite graphs with a part of size two.
pub fn pi_vs_edge_szeged(g: &Graph) -> Result<TheoremVerdict, GraphError> {
    let inv = compute_invariants(g)?;
    Ok(pi_vs_edge_szeged_with(g, &inv))
}

fn pi_vs_edge_szeged_with(g: &Graph, inv: &InvariantVector) -> TheoremVerdict {
    if inv.min_degree < 2 {
        return inapplicable(TheoremId::PiVsEdgeSzeged);
    }
    let lhs = inv.edge_pi;
    let rhs = inv.edge_szeged + g.edge_count() as u64;
    let holds = lhs <= rhs;
    let equality = lhs == rhs;
    let predicted = families::in_yn(g);
    verdict(
        TheoremId::PiVsEdgeSzeged,
        VerdictDetail {
            lhs,
            rhs,
            holds,
            equality,
            predicted_equality: Some(predicted),
            consistent: holds && equality == predicted,
            side: None,
        },
    )
}

/// Vertex PI against `nm - 3t`: each edge contributes at most `n` minus the
/// triangles through it. Equality needs every edge to meet that cap, which
/// bipartite and complete multipartite graphs always do and graphs with an
/// induced paw never do.
pub fn vertex_pi_triangle_bound(g: &Graph) -> Result<TheoremVerdict, GraphError> {
    let inv = compute_invariants(g)?;
    Ok(vertex_pi_triangle_bound_with(g, &inv))
}

fn vertex_pi_triangle_bound_with(g: &Graph, inv: &InvariantVector) -> TheoremVerdict {
    let n = g.order() as u64;
    let m = g.edge_count() as u64;
    let lhs = inv.vertex_pi;
    let rhs = n * m - 3 * inv.triangles;
    let holds = lhs <= rhs;
    let equality = lhs == rhs;

    // the per-edge cap: both sides strict plus the triangles fill the graph
    let rows: Vec<Vec<u8>> = g.vertices().map(|v| g.bfs_distances(v)).collect();
    let predicted = g.edges().into_iter().all(|(u, v)| {
        let mut split = 0u64;
        for x in g.vertices() {
            if rows[u][x] != rows[v][x] {
                split += 1;
            }
        }
        let t_edge = g.triangles_per_edge(u, v).expect("edge of the graph");
        split == n - u64::from(t_edge)
    });

    let side = SideConditions {
        bipartite: g.is_bipartite(),
        complete_multipartite: families::is_complete_multipartite(g),
        induced_paw: g.has_induced(InducedPattern::Paw),
    };
    let forced = (!side.bipartite || equality)
        && (!side.complete_multipartite || equality)
        && (!side.induced_paw || !equality);
    verdict(
        TheoremId::VertexPiTriangleBound,
        VerdictDetail {
            lhs,
            rhs,
            holds,
            equality,
            predicted_equality: Some(predicted),
            consistent: holds && equality == predicted && forced,
            side: Some(side),
        },
    )
}

/// Four times Szeged against `n^2 m - 12t`, on at least three vertices.
/// Attainment is only constrained by necessary conditions: the graph must
/// be bipartite, regular, of even order, and of minimum degree above one.
pub fn szeged_triangle_bound(g: &Graph) -> Result<TheoremVerdict, GraphError> {
    let inv = compute_invariants(g)?;
    Ok(szeged_triangle_bound_with(g, &inv))
}

fn szeged_triangle_bound_with(g: &Graph, inv: &InvariantVector) -> TheoremVerdict {
    if g.order() < 3 {
        // the single edge attains the bound while violating every structural
        // condition; the meaningful range starts at three vertices
        return inapplicable(TheoremId::SzegedTriangleBound);
    }
    let n = g.order() as u64;
    let m = g.edge_count() as u64;
    let lhs = 4 * inv.szeged;
    let rhs = n * n * m - 12 * inv.triangles;
    let holds = lhs <= rhs;
    let equality = lhs == rhs;
    let necessary = g.is_bipartite()
        && g.min_degree() == g.max_degree()
        && n.is_multiple_of(2)
        && g.min_degree() > 1;
    verdict(
        TheoremId::SzegedTriangleBound,
        VerdictDetail {
            lhs,
            rhs,
            holds,
            equality,
            predicted_equality: None,
            consistent: holds && (!equality || necessary),
            side: None,
        },
    )
}

/// On triangle-free graphs with at least three vertices, Szeged dominates
/// the second Zagreb index, with equality exactly at diameter two.
pub fn szeged_vs_zagreb(g: &Graph) -> Result<TheoremVerdict, GraphError> {
    let inv = compute_invariants(g)?;
    Ok(szeged_vs_zagreb_with(g, &inv))
}

fn szeged_vs_zagreb_with(g: &Graph, inv: &InvariantVector) -> TheoremVerdict {
    if g.order() < 3 || inv.triangles > 0 {
        return inapplicable(TheoremId::SzegedVsSecondZagreb);
    }
    let lhs = inv.szeged;
    let rhs = inv.second_zagreb;
    let holds = lhs >= rhs;
    let equality = lhs == rhs;
    let predicted = inv.diameter == 2;
    verdict(
        TheoremId::SzegedVsSecondZagreb,
        VerdictDetail {
            lhs,
            rhs,
            holds,
            equality,
            predicted_equality: Some(predicted),
            consistent: holds && equality == predicted,
            side: None,
        },
    )
}

/// With at least two edges, `(m - 1)` times edge PI dominates four times
/// edge Szeged; equality holds exactly for odd cycles.
pub fn pi_edge_szeged_ratio(g: &Graph) -> Result<TheoremVerdict, GraphError> {
    let inv = compute_invariants(g)?;
    Ok(pi_edge_szeged_ratio_with(g, &inv))
}

fn pi_edge_szeged_ratio_with(g: &Graph, inv: &InvariantVector) -> TheoremVerdict {
    let m = g.edge_count() as u64;
    if m < 2 {
        return inapplicable(TheoremId::PiEdgeSzegedRatio);
    }
    let lhs = (m - 1) * inv.edge_pi;
    let rhs = 4 * inv.edge_szeged;
    let holds = lhs >= rhs;
    let equality = lhs == rhs;
    let predicted = is_odd_cycle(g);
    verdict(
        TheoremId::PiEdgeSzegedRatio,
        VerdictDetail {
            lhs,
            rhs,
            holds,
            equality,
            predicted_equality: Some(predicted),
            consistent: holds && equality == predicted,
            side: None,
        },
    )
}

/// `32 m n` times Szeged against `(n + 2)^2` times vertex PI squared.
/// Equality degenerates to the edgeless graphs and the single edge.
pub fn szeged_vs_vertex_pi_square(g: &Graph) -> Result<TheoremVerdict, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if g.edge_count() == 0 {
        // all terms vanish, connectivity is irrelevant
        return Ok(verdict(
            TheoremId::SzegedVsVertexPiSquare,
            VerdictDetail {
                lhs: 0,
                rhs: 0,
                holds: true,
                equality: true,
                predicted_equality: Some(true),
                consistent: true,
                side: None,
            },
        ));
    }
    let inv = compute_invariants(g)?;
    Ok(szeged_vs_vertex_pi_square_with(g, &inv))
}

fn szeged_vs_vertex_pi_square_with(g: &Graph, inv: &InvariantVector) -> TheoremVerdict {
    let n = g.order() as u64;
    let m = g.edge_count() as u64;
    let lhs = 32 * m * n * inv.szeged;
    let rhs = (n + 2) * (n + 2) * inv.vertex_pi * inv.vertex_pi;
    let holds = lhs <= rhs;
    let equality = lhs == rhs;
    let predicted = m == 0 || n == 2;
    verdict(
        TheoremId::SzegedVsVertexPiSquare,
        VerdictDetail {
            lhs,
            rhs,
            holds,
            equality,
            predicted_equality: Some(predicted),
            consistent: holds && equality == predicted,
            side: None,
        },
    )
}

fn is_odd_cycle(g: &Graph) -> bool {
    let n = g.order();
    n >= 3
        && n % 2 == 1
        && g.edge_count() == n
        && g.min_degree() == 2
        && g.max_degree() == 2
        && g.is_connected()
}

/// Run every check on one connected graph, computing the invariant vector
/// once. Verdicts come back in the order of [`TheoremId::ALL`].
pub fn run_all(g: &Graph) -> Result<Vec<TheoremVerdict>, GraphError> {
    let inv = compute_invariants(g)?;
    Ok(vec![
        vertex_pi_vs_szeged_with(g, &inv),
        pi_vs_edge_szeged_with(g, &inv),
        vertex_pi_triangle_bound_with(g, &inv),
        szeged_triangle_bound_with(g, &inv),
        szeged_vs_zagreb_with(g, &inv),
        pi_edge_szeged_ratio_with(g, &inv),
        szeged_vs_vertex_pi_square_with(g, &inv),
    ])
}
