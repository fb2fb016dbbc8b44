use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::adjacency::{AdjacencyGraph, EdgeBundle};
use crate::construction::Construction;
use crate::error::{Error, Result};

/// A spanning tree found without building all of `G`.
///
/// Starting from the zero cycle, the reached cycle with the smallest index
/// is expanded: every unreached cycle sharing a conjugate pair with it is
/// attached through the first such pair. The result is a graph with
/// `psi - 1` single-pair bundles.
pub fn greedy_connected_subgraph(cons: &Construction) -> Result<AdjacencyGraph> {
    let psi = cons.psi();
    let mut reached = vec![false; psi];
    let mut frontier = BinaryHeap::new();
    let mut bundles = Vec::with_capacity(psi.saturating_sub(1));
    reached[0] = true;
    frontier.push(Reverse(0usize));
    while let Some(Reverse(v)) = frontier.pop() {
        let unreached: Vec<usize> = (0..psi).filter(|&w| !reached[w]).collect();
        let found: Vec<EdgeBundle> = unreached
            .par_iter()
            .filter_map(|&w| {
                let (a, b) = (v.min(w), v.max(w));
                cons.first_conjugate_pair(a, b).map(|p| EdgeBundle {
                    a,
                    b,
                    pairs: vec![p],
                })
            })
            .collect();
        for bundle in found {
            let w = bundle.other(v);
            reached[w] = true;
            frontier.push(Reverse(w));
            bundles.push(bundle);
        }
    }
    let missing: Vec<usize> = (0..psi).filter(|&w| !reached[w]).map(|w| w + 1).collect();
    if !missing.is_empty() {
        return Err(Error::Disconnected(missing));
    }
    Ok(AdjacencyGraph::new(psi, bundles))
}
