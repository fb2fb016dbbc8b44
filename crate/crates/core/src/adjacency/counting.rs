//! Spanning-tree counts as Laplacian cofactors, computed exactly.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::AdjacencyGraph;

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact, so entries stay integral and bounded by minors of the input.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let v = &row[j] * pivot - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `(-1)^{row+col}` times the minor with `row` and `col` removed.
pub fn cofactor(m: &[Vec<i64>], row: usize, col: usize) -> BigInt {
    let minor: Vec<Vec<BigInt>> = m
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, &x)| BigInt::from(x))
                .collect()
        })
        .collect();
    let det = bareiss_determinant(minor);
    if (row + col) % 2 == 1 {
        -det
    } else {
        det
    }
}

/// Number of spanning trees of `G`, or of the condensed graph.
pub fn best_count(graph: &AdjacencyGraph, condensed: bool) -> BigUint {
    if graph.psi() <= 1 {
        return BigUint::one();
    }
    let c = cofactor(&graph.laplacian(condensed), 0, 0);
    debug_assert!(!c.is_negative());
    c.to_biguint().unwrap_or_default()
}

/// `log2(x)` from the leading 64 bits.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    let shift = bits.saturating_sub(64);
    let top: BigUint = x >> shift;
    let lead = top.iter_u64_digits().next().unwrap_or(0) as f64;
    lead.log2() + shift as f64
}
