use rand::Rng;

use super::{PairTree, TreeEdge};
use crate::adjacency::AdjacencyGraph;
use crate::error::{Error, Result};

/// Uniform spanning tree of the multigraph `G` by Broder's random walk.
///
/// The walk starts at vertex 0 and moves along a uniformly chosen incident
/// edge, parallel edges counted separately. The edge through which a
/// vertex is first entered joins the tree.
pub fn random_spanning_tree<R: Rng + ?Sized>(
    graph: &AdjacencyGraph,
    rng: &mut R,
) -> Result<PairTree> {
    let unreachable = graph.unreachable();
    if !unreachable.is_empty() {
        return Err(Error::Disconnected(
            unreachable.iter().map(|v| v + 1).collect(),
        ));
    }
    let psi = graph.psi();
    let degrees: Vec<usize> = (0..psi).map(|v| graph.degree(v)).collect();
    let mut visited = vec![false; psi];
    let mut edges = Vec::with_capacity(psi.saturating_sub(1));
    let mut current = 0;
    visited[0] = true;
    let mut remaining = psi.saturating_sub(1);
    while remaining > 0 {
        let mut r = rng.gen_range(0..degrees[current]);
        let &(next, bundle) = graph
            .neighbors(current)
            .iter()
            .find(|&&(_, b)| {
                let m = graph.bundle(b).multiplicity();
                if r < m {
                    true
                } else {
                    r -= m;
                    false
                }
            })
            .expect("r below the degree");
        if !visited[next] {
            visited[next] = true;
            remaining -= 1;
            edges.push(TreeEdge {
                bundle,
                selector: r,
                pair: graph.bundle(bundle).pairs[r],
            });
        }
        current = next;
    }
    edges.sort_by_key(|e| e.bundle);
    Ok(PairTree { edges })
}
