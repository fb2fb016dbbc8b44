use crate::adjacency::{AdjacencyGraph, ConjugatePair};
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::One;

/// A spanning tree of the condensed graph, as bundle indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    pub bundles: Vec<usize>,
}

/// One edge of a spanning tree of `G`: a bundle and the chosen pair in it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TreeEdge {
    pub bundle: usize,
    pub selector: usize,
    pub pair: ConjugatePair,
}

/// A spanning tree of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairTree {
    pub edges: Vec<TreeEdge>,
}

impl PairTree {
    pub fn pairs(&self) -> impl Iterator<Item = &ConjugatePair> {
        self.edges.iter().map(|e| &e.pair)
    }
}

/// Depth-first enumeration of the spanning trees of the condensed graph.
///
/// Starting from vertex 0, the lowest visited vertex whose neighborhood is
/// not yet processed adopts a subset of its unvisited neighbors. Subsets
/// are tried in increasing bitmask order over the ascending neighbor list,
/// so the output order is fixed. A subset is skipped when it leaves a
/// neighbor with no remaining vertex that could still adopt it.
pub struct SpanningTrees<'g> {
    graph: &'g AdjacencyGraph,
    visited: Vec<bool>,
    checked: Vec<bool>,
    /// Unchecked neighbors per vertex.
    open: Vec<usize>,
    edges: Vec<usize>,
    frames: Vec<Frame>,
    mode: Mode,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Descend,
    Advance,
    Done,
}

struct Frame {
    vertex: usize,
    /// `(neighbor, bundle)` for the unvisited neighbors.
    candidates: Vec<(usize, usize)>,
    mask: Vec<bool>,
    applied: bool,
}

impl<'g> SpanningTrees<'g> {
    pub fn new(graph: &'g AdjacencyGraph) -> Result<Self> {
        let unreachable = graph.unreachable();
        if !unreachable.is_empty() {
            return Err(Error::Disconnected(
                unreachable.iter().map(|v| v + 1).collect(),
            ));
        }
        let psi = graph.psi();
        let mut visited = vec![false; psi];
        if psi > 0 {
            visited[0] = true;
        }
        Ok(SpanningTrees {
            graph,
            visited,
            checked: vec![false; psi],
            open: (0..psi).map(|v| graph.neighbors(v).len()).collect(),
            edges: Vec::with_capacity(psi),
            frames: Vec::new(),
            mode: if psi == 0 { Mode::Done } else { Mode::Descend },
        })
    }

    fn apply(&mut self, f: usize) {
        let frame = &mut self.frames[f];
        frame.applied = false;
        // Neighbors left out must keep a potential parent.
        for (i, &(w, _)) in frame.candidates.iter().enumerate() {
            if !frame.mask[i] && self.open[w] == 0 {
                return;
            }
        }
        for (i, &(w, b)) in frame.candidates.iter().enumerate() {
            if frame.mask[i] {
                self.visited[w] = true;
                self.edges.push(b);
            }
        }
        frame.applied = true;
    }

    fn unapply(&mut self, f: usize) {
        let frame = &mut self.frames[f];
        if !frame.applied {
            return;
        }
        for (i, &(w, _)) in frame.candidates.iter().enumerate() {
            if frame.mask[i] {
                self.visited[w] = false;
                self.edges.pop();
            }
        }
        frame.applied = false;
    }

    fn push_frame(&mut self, v: usize) {
        self.checked[v] = true;
        for &(w, _) in self.graph.neighbors(v) {
            self.open[w] -= 1;
        }
        let candidates: Vec<(usize, usize)> = self
            .graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&(w, _)| !self.visited[w])
            .collect();
        let mask = vec![false; candidates.len()];
        self.frames.push(Frame {
            vertex: v,
            candidates,
            mask,
            applied: false,
        });
        let top = self.frames.len() - 1;
        self.apply(top);
    }

    fn pop_frame(&mut self) {
        let frame = self.frames.pop().expect("frame to pop");
        self.checked[frame.vertex] = false;
        for &(w, _) in self.graph.neighbors(frame.vertex) {
            self.open[w] += 1;
        }
    }
}

fn increment(mask: &mut [bool]) -> bool {
    for bit in mask.iter_mut() {
        if *bit {
            *bit = false;
        } else {
            *bit = true;
            return true;
        }
    }
    false
}

impl Iterator for SpanningTrees<'_> {
    type Item = SpanningTree;

    fn next(&mut self) -> Option<SpanningTree> {
        let psi = self.graph.psi();
        loop {
            match self.mode {
                Mode::Done => return None,
                Mode::Descend => {
                    let top_ok = self.frames.last().is_none_or(|f| f.applied);
                    if !top_ok {
                        self.mode = Mode::Advance;
                        continue;
                    }
                    if self.edges.len() == psi - 1 {
                        self.mode = Mode::Advance;
                        return Some(SpanningTree {
                            bundles: self.edges.clone(),
                        });
                    }
                    match (0..psi).find(|&v| self.visited[v] && !self.checked[v]) {
                        Some(v) => self.push_frame(v),
                        None => self.mode = Mode::Advance,
                    }
                }
                Mode::Advance => {
                    let Some(top) = self.frames.len().checked_sub(1) else {
                        self.mode = Mode::Done;
                        continue;
                    };
                    self.unapply(top);
                    if increment(&mut self.frames[top].mask) {
                        self.apply(top);
                        if self.frames[top].applied {
                            self.mode = Mode::Descend;
                        }
                    } else {
                        self.pop_frame();
                    }
                }
            }
        }
    }
}

/// Replace each bundle of `tree` by the conjugate pair chosen by
/// `selector`.
pub fn expand_tree(
    tree: &SpanningTree,
    graph: &AdjacencyGraph,
    selector: &[usize],
) -> Result<PairTree> {
    if selector.len() != tree.bundles.len() {
        return Err(Error::LengthMismatch {
            expected: tree.bundles.len(),
            got: selector.len(),
        });
    }
    let edges = tree
        .bundles
        .iter()
        .zip(selector)
        .map(|(&b, &s)| {
            let pairs = &graph.bundle(b).pairs;
            pairs
                .get(s)
                .map(|&pair| TreeEdge {
                    bundle: b,
                    selector: s,
                    pair,
                })
                .ok_or(Error::SelectorOutOfRange {
                    index: s,
                    len: pairs.len(),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PairTree { edges })
}

/// Number of trees of `G` over this condensed tree.
pub fn expansion_count(tree: &SpanningTree, graph: &AdjacencyGraph) -> BigUint {
    tree.bundles.iter().fold(BigUint::one(), |acc, &b| {
        acc * graph.bundle(b).multiplicity()
    })
}

/// Every expansion of `tree`, the first edge's choice changing slowest.
pub fn expansions(
    tree: SpanningTree,
    graph: &AdjacencyGraph,
) -> impl Iterator<Item = PairTree> + '_ {
    let radices: Vec<usize> = tree
        .bundles
        .iter()
        .map(|&b| graph.bundle(b).multiplicity())
        .collect();
    let mut selector = Some(vec![0usize; radices.len()]);
    std::iter::from_fn(move || {
        let current = selector.take()?;
        let out = expand_tree(&tree, graph, &current).expect("selector within radices");
        let mut next = current;
        for i in (0..next.len()).rev() {
            next[i] += 1;
            if next[i] < radices[i] {
                selector = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(out)
    })
}
