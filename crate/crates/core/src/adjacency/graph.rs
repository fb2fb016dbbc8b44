use std::collections::VecDeque;

use super::ConjugatePair;

/// All conjugate pairs between cycles `a < b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBundle {
    pub a: usize,
    pub b: usize,
    /// States `v` lie on `a`, their conjugates on `b`.
    pub pairs: Vec<ConjugatePair>,
}

impl EdgeBundle {
    pub fn multiplicity(&self) -> usize {
        self.pairs.len()
    }

    pub fn other(&self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }
}

/// Multigraph on the cycles. Parallel edges are kept together as bundles,
/// so the condensed simple graph is the bundle list itself.
#[derive(Clone, Debug)]
pub struct AdjacencyGraph {
    psi: usize,
    bundles: Vec<EdgeBundle>,
    /// Per vertex: `(neighbor, bundle index)` sorted by neighbor.
    neighbors: Vec<Vec<(usize, usize)>>,
}

impl AdjacencyGraph {
    pub fn new(psi: usize, mut bundles: Vec<EdgeBundle>) -> Self {
        for b in &mut bundles {
            if b.a > b.b {
                std::mem::swap(&mut b.a, &mut b.b);
            }
        }
        bundles.sort_by_key(|b| (b.a, b.b));
        let mut neighbors = vec![Vec::new(); psi];
        for (i, b) in bundles.iter().enumerate() {
            neighbors[b.a].push((b.b, i));
            neighbors[b.b].push((b.a, i));
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        AdjacencyGraph {
            psi,
            bundles,
            neighbors,
        }
    }

    pub fn psi(&self) -> usize {
        self.psi
    }

    pub fn bundles(&self) -> &[EdgeBundle] {
        &self.bundles
    }

    pub fn bundle(&self, i: usize) -> &EdgeBundle {
        &self.bundles[i]
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.neighbors[v]
    }

    pub fn find_bundle(&self, a: usize, b: usize) -> Option<usize> {
        self.neighbors[a]
            .binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|pos| self.neighbors[a][pos].1)
    }

    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        self.find_bundle(a, b)
            .map_or(0, |i| self.bundles[i].multiplicity())
    }

    /// Number of incident edges of `G`.
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v]
            .iter()
            .map(|&(_, i)| self.bundles[i].multiplicity())
            .sum()
    }

    /// Number of incident edges of the condensed graph.
    pub fn condensed_degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.bundles.iter().map(EdgeBundle::multiplicity).sum()
    }

    /// Vertices not reachable from vertex 0, ascending.
    pub fn unreachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.psi];
        let mut queue = VecDeque::new();
        if self.psi > 0 {
            seen[0] = true;
            queue.push_back(0);
        }
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        (0..self.psi).filter(|&v| !seen[v]).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.unreachable().is_empty()
    }

    /// Degree matrix minus adjacency counts; with `condensed` every bundle
    /// counts once.
    pub fn laplacian(&self, condensed: bool) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.psi]; self.psi];
        for b in &self.bundles {
            let w = if condensed {
                1
            } else {
                b.multiplicity() as i64
            };
            m[b.a][b.b] -= w;
            m[b.b][b.a] -= w;
            m[b.a][b.a] += w;
            m[b.b][b.b] += w;
        }
        m
    }

    /// `(a, b, multiplicity)` for every bundle, ordered by `(a, b)`.
    pub fn pair_counts(&self) -> Vec<(usize, usize, usize)> {
        self.bundles
            .iter()
            .map(|b| (b.a, b.b, b.multiplicity()))
            .collect()
    }
}
