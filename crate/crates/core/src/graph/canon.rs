//! Canonical labeling by equitable partition refinement.
//!
//! Two graphs receive the same certificate exactly when they are isomorphic,
//! which turns isomorphism testing into byte comparison and lets the
//! enumerator deduplicate candidates with a hash set.

use super::{bit, iter_bits, Graph};

/// Order byte followed by the upper triangle of the canonically relabeled
/// adjacency matrix, packed column by column, most significant bit first.
pub type Certificate = Vec<u8>;

impl Graph {
    /// Certificate shared by exactly the graphs isomorphic to this one.
    pub fn canonical_form(&self) -> Certificate {
        self.canonical_labeling().0
    }

    /// Certificate together with a witnessing relabeling, `perm[new] = old`.
    ///
    /// Relabeling the graph by the permutation reproduces the adjacency
    /// matrix encoded in the certificate.
    pub fn canonical_labeling(&self) -> (Certificate, Vec<usize>) {
        if self.n == 0 {
            return (vec![0], Vec::new());
        }
        let mut search = Search {
            g: self,
            best_words: None,
            best_perm: Vec::new(),
        };
        search.descend(vec![(0..self.n).collect()]);
        let words = search.best_words.expect("at least one leaf labeling");
        let mut cert = Vec::with_capacity(1 + words.len() * 8);
        cert.push(self.n as u8);
        for w in &words {
            cert.extend_from_slice(&w.to_be_bytes());
        }
        (cert, search.best_perm)
    }
}

struct Search<'a> {
    g: &'a Graph,
    best_words: Option<Vec<u64>>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    /// Refine, then either record the leaf or branch on the first cell that
    /// is still ambiguous.
    fn descend(&mut self, mut cells: Vec<Vec<usize>>) {
        refine(self.g, &mut cells);

        let target = match cells.iter().position(|c| c.len() > 1) {
            None => {
                let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
                let words = packed_rows(self.g, &perm);
                if self.best_words.as_ref().is_none_or(|best| &words < best) {
                    self.best_words = Some(words);
                    self.best_perm = perm;
                }
                return;
            }
            Some(t) => t,
        };

        let candidates = if interchangeable(self.g, &cells[target]) {
            vec![cells[target][0]]
        } else {
            cells[target].clone()
        };
        for v in candidates {
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..target].iter().cloned());
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            next.extend(cells[target + 1..].iter().cloned());
            self.descend(next);
        }
    }
}

/// Split cells by neighbor counts into every other cell until the partition
/// is equitable. Subcells are ordered by ascending count, so the outcome
/// depends only on the graph and the incoming partition, not on labels.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter: u64 = cells[s].iter().fold(0, |m, &v| m | bit(v));
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[c]
                    .iter()
                    .map(|&v| ((g.adj[v] & splitter).count_ones(), v))
                    .collect();
                if keyed.iter().all(|&(k, _)| k == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut pieces: Vec<Vec<usize>> = Vec::new();
                for (k, v) in keyed {
                    match pieces.last_mut() {
                        Some(last) if key_of(g, last[0], splitter) == k => last.push(v),
                        _ => pieces.push(vec![v]),
                    }
                }
                cells.splice(c..=c, pieces);
                continue 'restart;
            }
        }
        return;
    }
}

fn key_of(g: &Graph, v: usize, splitter: u64) -> u32 {
    (g.adj[v] & splitter).count_ones()
}

/// True when every pair of cell members can be swapped by a graph
/// automorphism: identical adjacency outside the cell, and inside it either
/// no edges at all or all edges present. Branching on one representative is
/// then enough.
fn interchangeable(g: &Graph, cell: &[usize]) -> bool {
    let mask: u64 = cell.iter().fold(0, |m, &v| m | bit(v));
    let outside = g.adj[cell[0]] & !mask;
    let empty_inside = cell.iter().all(|&v| g.adj[v] & mask == 0);
    let clique_inside = cell.iter().all(|&v| g.adj[v] & mask == mask ^ bit(v));
    cell.iter().all(|&v| g.adj[v] & !mask == outside) && (empty_inside || clique_inside)
}

/// Upper triangle of the relabeled adjacency matrix, column-major, packed
/// into big-endian bit words so lexicographic word order is bit order.
fn packed_rows(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.n;
    let mut pos = vec![0usize; n];
    for (new_label, &old) in perm.iter().enumerate() {
        pos[old] = new_label;
    }
    let mut rows = vec![0u64; n];
    for old in 0..n {
        for w in iter_bits(g.adj[old]) {
            rows[pos[old]] |= bit(pos[w]);
        }
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mut words = vec![0u64; pairs.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if rows[i] & bit(j) != 0 {
                words[k / 64] |= 1u64 << (63 - (k % 64));
            }
            k += 1;
        }
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    /// Decode the adjacency matrix a certificate encodes.
    fn decode(cert: &Certificate) -> Graph {
        let n = cert[0] as usize;
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = cert[1 + k / 8];
                if byte >> (7 - (k % 8)) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn relabelings_share_a_certificate() {
        let a = Graph::path(4).unwrap();
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());

        let c6 = Graph::cycle(6).unwrap();
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        // same degree sequence, different graphs
        assert_ne!(c6.canonical_form(), two_triangles.canonical_form());

        let pet = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap();
        assert_eq!(pet.canonical_form(), parse_graph6("IheA@GUAo").unwrap().canonical_form());
    }

    #[test]
    fn labeling_witnesses_the_certificate() {
        for g in [
            Graph::path(5).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::complete_bipartite(2, 3).unwrap(),
            Graph::star(6).unwrap(),
            parse_graph6("D{O").unwrap(),
        ] {
            let (cert, perm) = g.canonical_labeling();
            let mut seen = perm.clone();
            seen.sort_unstable();
            assert_eq!(seen, (0..g.order()).collect::<Vec<_>>());
            let decoded = decode(&cert);
            assert_eq!(decoded.order(), g.order());
            for i in 0..g.order() {
                for j in 0..g.order() {
                    assert_eq!(decoded.has_edge(i, j), g.has_edge(perm[i], perm[j]));
                }
            }
        }
    }

    #[test]
    fn certificate_classes_count_unlabeled_graphs() {
        // 11 isomorphism classes of graphs on four vertices
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut certs = std::collections::HashSet::new();
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            certs.insert(Graph::from_edges(4, &edges).unwrap().canonical_form());
        }
        assert_eq!(certs.len(), 11);
    }

    #[test]
    fn highly_symmetric_graphs_stay_cheap() {
        // the interchangeability shortcut collapses these to a single branch
        for g in [
            Graph::complete(30).unwrap(),
            Graph::complete_bipartite(15, 15).unwrap(),
            Graph::star(40).unwrap(),
        ] {
            let (cert, _) = g.canonical_labeling();
            assert_eq!(cert[0] as usize, g.order());
        }
    }
}
