//! Reference implementations shared by the integration suites. Everything
//! here favors obviousness over speed: cubic all-pairs distances, subset
//! scans, permutation scans. The point is to agree with the definitions by
//! inspection so the optimized library code can be checked against them.

#![allow(dead_code)]

use szpi::Graph;

/// All-pairs shortest path lengths by Floyd-Warshall; `None` marks an
/// unreachable pair.
pub fn naive_distances(g: &Graph) -> Vec<Vec<Option<u64>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for v in 0..n {
        d[v][v] = Some(0);
    }
    for (u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

pub struct NaiveInvariants {
    pub wiener: u64,
    pub edge_pi: u64,
    pub vertex_pi: u64,
    pub szeged: u64,
    pub edge_szeged: u64,
    pub first_zagreb: u64,
    pub second_zagreb: u64,
    pub triangles: u64,
    pub diameter: u32,
    pub min_degree: u32,
}

/// Every index straight from its definition; `None` when the graph is empty
/// or disconnected.
pub fn naive_invariants(g: &Graph) -> Option<NaiveInvariants> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    let d = naive_distances(g);
    if d.iter().any(|row| row.iter().any(|x| x.is_none())) {
        return None;
    }
    let dist = |a: usize, b: usize| d[a][b].unwrap();
    let edges = g.edges();

    let mut wiener = 0u64;
    let mut diameter = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            wiener += dist(i, j);
            diameter = diameter.max(dist(i, j));
        }
    }

    // distance from an edge to a vertex: the nearer endpoint decides
    let edge_dist = |f: (usize, usize), x: usize| dist(f.0, x).min(dist(f.1, x));
    let mut edge_pi = 0u64;
    let mut vertex_pi = 0u64;
    let mut szeged = 0u64;
    let mut edge_szeged = 0u64;
    for &(u, v) in &edges {
        let mut n_u = 0u64;
        let mut n_v = 0u64;
        for x in 0..n {
            if dist(u, x) < dist(v, x) {
                n_u += 1;
            }
            if dist(v, x) < dist(u, x) {
                n_v += 1;
            }
        }
        let mut m_u = 0u64;
        let mut m_v = 0u64;
        for &f in &edges {
            if f == (u, v) {
                continue;
            }
            if edge_dist(f, u) < edge_dist(f, v) {
                m_u += 1;
            }
            if edge_dist(f, v) < edge_dist(f, u) {
                m_v += 1;
            }
        }
        vertex_pi += n_u + n_v;
        szeged += n_u * n_v;
        edge_pi += m_u + m_v;
        edge_szeged += m_u * m_v;
    }

    let mut first_zagreb = 0u64;
    let mut second_zagreb = 0u64;
    for v in 0..n {
        first_zagreb += (g.degree(v) * g.degree(v)) as u64;
    }
    for &(u, v) in &edges {
        second_zagreb += (g.degree(u) * g.degree(v)) as u64;
    }

    Some(NaiveInvariants {
        wiener,
        edge_pi,
        vertex_pi,
        szeged,
        edge_szeged,
        first_zagreb,
        second_zagreb,
        triangles: naive_triangles(g),
        diameter: diameter as u32,
        min_degree: g.min_degree() as u32,
    })
}

/// Triangle count by scanning every vertex triple.
pub fn naive_triangles(g: &Graph) -> u64 {
    let n = g.order();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Brute-force isomorphism test trying every vertex bijection, with a degree
/// sequence prefilter. Usable up to eight vertices or so.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let edges = a.edges();
    let mut perm: Vec<usize> = (0..a.order()).collect();
    try_permutations(&mut perm, 0, &mut |p| {
        edges.iter().all(|&(u, v)| b.has_edge(p[u], p[v]))
    })
}

fn try_permutations(
    perm: &mut Vec<usize>,
    k: usize,
    accept: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if k == perm.len() {
        return accept(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        let hit = try_permutations(perm, k + 1, accept);
        perm.swap(k, i);
        if hit {
            return true;
        }
    }
    false
}

/// Number of isomorphism classes among `graphs`, by pairwise comparison
/// inside degree sequence buckets.
pub fn class_count_by_iso(graphs: &[Graph]) -> usize {
    use std::collections::HashMap;
    let mut buckets: HashMap<Vec<usize>, Vec<&Graph>> = HashMap::new();
    for g in graphs {
        let mut key: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        key.sort_unstable();
        key.push(g.edge_count());
        buckets.entry(key).or_default().push(g);
    }
    let mut classes = 0;
    for members in buckets.values() {
        let mut reps: Vec<&Graph> = Vec::new();
        for g in members {
            if !reps.iter().any(|r| isomorphic(r, g)) {
                reps.push(g);
            }
        }
        classes += reps.len();
    }
    classes
}

/// Every labeled graph on `n` vertices, one per subset of vertex pairs.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    assert!(pairs.len() <= 20, "too many labeled graphs to materialize");
    (0u64..(1 << pairs.len()))
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).expect("pairs are valid edges")
        })
        .collect()
}

/// Second opinion on the graph6 encoding, written against the format
/// description: header byte `n + 63`, then the upper triangle in
/// column-major order, six bits per byte, zero padded.
pub fn graph6_reference(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= 62);
    let mut bits: Vec<bool> = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for &bit in chunk {
            value = value << 1 | bit as u8;
        }
        s.push((value + 63) as char);
    }
    s
}

/// Subset scan for an induced odd cycle of length at least five.
pub fn naive_odd_hole(g: &Graph) -> bool {
    let n = g.order();
    assert!(n < 22);
    for mask in 0u64..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if verts.len() >= 5 && verts.len() % 2 == 1 && induces_single_cycle(g, &verts) {
            return true;
        }
    }
    false
}

fn induces_single_cycle(g: &Graph, verts: &[usize]) -> bool {
    let inside_degree =
        |v: usize| verts.iter().filter(|&&u| u != v && g.has_edge(u, v)).count();
    if verts.iter().any(|&v| inside_degree(v) != 2) {
        return false;
    }
    // degree two everywhere means a disjoint union of cycles; walking back
    // to the start in exactly |verts| steps rules out more than one
    let start = verts[0];
    let mut prev = start;
    let mut cur = *verts
        .iter()
        .find(|&&u| u != start && g.has_edge(start, u))
        .expect("inside degree two");
    let mut len = 1;
    while cur != start {
        let next = *verts
            .iter()
            .find(|&&u| u != prev && u != cur && g.has_edge(cur, u))
            .expect("inside degree two");
        prev = cur;
        cur = next;
        len += 1;
    }
    len == verts.len()
}

/// Triangle with pendant edges at two of its corners.
pub fn bull() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap()
}

/// Triangle with one pendant edge.
pub fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
}

/// The 3-regular graph on ten vertices with girth five: outer five-cycle,
/// inner five-cycle taken with step two, and five spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// K_{2,2,2}, the unique 4-regular graph on six vertices.
pub fn octahedron() -> Graph {
    szpi::families::complete_multipartite(&[2, 2, 2]).unwrap()
}
