//! Conjugate pairs between cycles and the adjacency graph they define.
//!
//! A conjugate pair `(v, v + S)` with `S = (1, 0, ..., 0)` splits into
//! per-factor equations `T^u a_j + T^v a_k = T^c a_d`, where
//! `(T^{c_1} a_{d_1}, ...)` is the decomposition of `S`. Local solutions
//! from each factor combine into a global pair exactly when the implied
//! positions on both cycles satisfy a system of congruences.

mod counting;
mod graph;
mod local;

pub use counting::{bareiss_determinant, best_count, cofactor, log2_big};
pub use graph::{AdjacencyGraph, EdgeBundle};
pub use local::LocalPairTable;

use rayon::prelude::*;

use crate::construction::Construction;
use crate::crt::Congruence;
use crate::cycles::FactorData;
use crate::error::{Error, Result};
use crate::lfsr::StateBasis;

/// `S P^{-1} = (T^{c_1} a^1_{d_1}, ..., T^{c_s} a^s_{d_s})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialStateRep {
    blocks: Vec<(u64, usize)>,
}

impl SpecialStateRep {
    /// `(c_i, d_i)` per factor.
    pub fn blocks(&self) -> &[(u64, usize)] {
        &self.blocks
    }
}

/// Locate each block of `S P^{-1}` by scanning the factor's cycles.
pub fn represent_special_state(
    basis: &StateBasis,
    factors: &[FactorData],
) -> Result<SpecialStateRep> {
    let blocks = basis
        .decompose_bits(1)
        .into_iter()
        .zip(factors)
        .map(|(block, f)| {
            (0..f.cycle_count())
                .flat_map(|j| (0..f.order()).map(move |k| (k, j)))
                .find(|&(k, j)| f.state(j, k) == block)
                .ok_or(Error::StateNotFound(block))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpecialStateRep { blocks })
}

/// A conjugate pair `(v, v + S)`.
///
/// `v = T^{first_shift}` of the representative of the first cycle and
/// `v + S = T^{second_shift}` of the representative of the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjugatePair {
    pub v: u64,
    pub first_shift: u64,
    pub second_shift: u64,
}

impl ConjugatePair {
    pub fn conjugate(&self) -> u64 {
        self.v ^ 1
    }

    /// `(v_1, ..., v_{n-1})`, shared by both states.
    pub fn suffix(&self) -> u64 {
        self.v >> 1
    }
}

/// Conjugate pairs between cycles `a` and `b`, stopping after `limit`.
pub fn conjugate_pairs(
    cons: &Construction,
    a: usize,
    b: usize,
    limit: Option<usize>,
) -> Vec<ConjugatePair> {
    if a == b {
        return Vec::new();
    }
    let c1 = cons.cycles().get(a);
    let c2 = cons.cycles().get(b);
    let s = cons.factors().len();
    if (0..s).any(|i| !c1.active[i] && !c2.active[i]) {
        return Vec::new();
    }
    let options: Vec<&[(u64, u64)]> = (0..s)
        .map(|i| cons.locals()[i].get(c1.indices[i], c2.indices[i]))
        .collect();
    if options.iter().any(|o| o.is_empty()) {
        return Vec::new();
    }
    let mut search = PairSearch {
        cons,
        c1_active: &c1.active,
        c2_active: &c2.active,
        c1_shifts: &c1.shifts,
        c2_shifts: &c2.shifts,
        c1_indices: &c1.indices,
        options: &options,
        chosen: vec![0; s],
        limit: limit.unwrap_or(usize::MAX),
        out: Vec::new(),
    };
    search.descend(0, Congruence::default(), Congruence::default());
    search.out.sort();
    search.out
}

struct PairSearch<'a> {
    cons: &'a Construction,
    c1_active: &'a [bool],
    c2_active: &'a [bool],
    c1_shifts: &'a [u64],
    c2_shifts: &'a [u64],
    c1_indices: &'a [usize],
    options: &'a [&'a [(u64, u64)]],
    chosen: Vec<u64>,
    limit: usize,
    out: Vec<ConjugatePair>,
}

impl PairSearch<'_> {
    /// `first` and `second` collect `k = u_i - l_i (mod e_i)` over the
    /// factors placed so far; a failed merge is an inconsistent system.
    fn descend(&mut self, i: usize, first: Congruence, second: Congruence) {
        if self.out.len() >= self.limit {
            return;
        }
        let factors = self.cons.factors();
        if i == factors.len() {
            let comps: Vec<u64> = (0..factors.len())
                .map(|m| factors[m].state(self.c1_indices[m], self.chosen[m]))
                .collect();
            self.out.push(ConjugatePair {
                v: self.cons.basis().compose_bits(&comps),
                first_shift: first.residue,
                second_shift: second.residue,
            });
            return;
        }
        let e = factors[i].order();
        for &(u, v) in self.options[i] {
            let f = if self.c1_active[i] {
                match first.merge((u + e - self.c1_shifts[i] % e) % e, e) {
                    Some(f) => f,
                    None => continue,
                }
            } else {
                first
            };
            let g = if self.c2_active[i] {
                match second.merge((v + e - self.c2_shifts[i] % e) % e, e) {
                    Some(g) => g,
                    None => continue,
                }
            } else {
                second
            };
            self.chosen[i] = u;
            self.descend(i + 1, f, g);
            if self.out.len() >= self.limit {
                return;
            }
        }
    }
}

/// The full adjacency graph, with cycle pairs processed in parallel.
pub fn build_graph(cons: &Construction) -> AdjacencyGraph {
    let psi = cons.psi();
    let bundles: Vec<EdgeBundle> = (0..psi)
        .into_par_iter()
        .flat_map_iter(|a| {
            (a + 1..psi).filter_map(move |b| {
                let pairs = conjugate_pairs(cons, a, b, None);
                (!pairs.is_empty()).then_some(EdgeBundle { a, b, pairs })
            })
        })
        .collect();
    AdjacencyGraph::new(psi, bundles)
}
