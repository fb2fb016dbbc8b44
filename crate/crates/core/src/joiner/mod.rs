//! From spanning trees of the adjacency graph to de Bruijn sequences.

mod greedy;
mod sample;
mod sequence;
mod trees;

pub use greedy::greedy_connected_subgraph;
pub use sample::random_spanning_tree;
pub use sequence::{
    join_cycles, verify_de_bruijn, DeBruijnSequence, FeedbackFunction, FeedbackModifier,
};
pub use trees::{
    expand_tree, expansion_count, expansions, PairTree, SpanningTree, SpanningTrees, TreeEdge,
};

use crate::adjacency::AdjacencyGraph;
use crate::error::Result;
use crate::lfsr::{LfsrSpec, StateVector};

/// Join the cycles along `tree`.
pub fn sequence_from_tree(
    spec: &LfsrSpec,
    tree: &PairTree,
    init: StateVector,
) -> Result<DeBruijnSequence> {
    join_cycles(spec, &FeedbackModifier::new(tree)?, init)
}

/// Trees of `G` in a fixed order: condensed trees as enumerated, each
/// followed through its expansions.
pub fn pair_trees(graph: &AdjacencyGraph) -> Result<impl Iterator<Item = PairTree> + '_> {
    let trees = SpanningTrees::new(graph)?;
    Ok(trees.flat_map(move |t| expansions(t, graph)))
}
