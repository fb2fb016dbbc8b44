#![allow(dead_code)]

use std::collections::BTreeMap;

use debruijn_cj::gf2::{is_irreducible, BinaryPolynomial};
use debruijn_cj::Construction;
use rand::seq::SliceRandom;
use rand::Rng;

/// Reference counts for factor sets with at most 12 stages, as
/// `(factors, psi, zeta_G, zeta_Ghat, log2 zeta_G, log2 zeta_Ghat)`.
pub struct Row {
    pub factors: &'static [&'static str],
    pub psi: usize,
    pub zeta_g: Option<u64>,
    pub zeta_ghat: Option<u64>,
    pub log2_g: f64,
    pub log2_ghat: f64,
}

pub const ROWS: &[Row] = &[
    Row {
        factors: &["1011", "1101"],
        psi: 10,
        zeta_g: Some(393_216),
        zeta_ghat: Some(51_984),
        log2_g: 18.6,
        log2_ghat: 15.7,
    },
    Row {
        factors: &["11", "111", "11111"],
        psi: 16,
        zeta_g: Some(12_485_394_432),
        zeta_ghat: Some(1_451_520),
        log2_g: 33.5,
        log2_ghat: 20.5,
    },
    Row {
        factors: &["11", "1101", "11001"],
        psi: 8,
        zeta_g: Some(926_016),
        zeta_ghat: Some(15),
        log2_g: 19.8,
        log2_ghat: 3.9,
    },
    Row {
        factors: &["10011", "11111"],
        psi: 20,
        zeta_g: None,
        zeta_ghat: None,
        log2_g: 60.8,
        log2_ghat: 53.0,
    },
    Row {
        factors: &["111", "1011", "11111"],
        psi: 16,
        zeta_g: None,
        zeta_ghat: None,
        log2_g: 54.4,
        log2_ghat: 28.8,
    },
    Row {
        factors: &["11", "100111001"],
        psi: 32,
        zeta_g: None,
        zeta_ghat: None,
        log2_g: 113.4,
        log2_ghat: 86.7,
    },
    Row {
        factors: &["11", "111", "1011", "11111"],
        psi: 32,
        zeta_g: None,
        zeta_ghat: None,
        log2_g: 116.0,
        log2_ghat: 61.1,
    },
    Row {
        factors: &["11111111111"],
        psi: 94,
        zeta_g: None,
        zeta_ghat: None,
        log2_g: 304.9,
        log2_ghat: 299.1,
    },
    Row {
        factors: &["111", "1011", "1001001"],
        psi: 60,
        zeta_g: None,
        zeta_ghat: None,
        log2_g: 251.9,
        log2_ghat: 190.0,
    },
    Row {
        factors: &["101011100011"],
        psi: 90,
        zeta_g: None,
        zeta_ghat: None,
        log2_g: 388.8,
        log2_ghat: 373.8,
    },
    Row {
        factors: &["1001001", "1010111"],
        psi: 74,
        zeta_g: None,
        zeta_ghat: None,
        log2_g: 398.7,
        log2_ghat: 350.7,
    },
];

/// Cycle index of every state, found by walking the product register from
/// each representative. Panics if the walks do not partition the states.
pub fn brute_cycle_labels(cons: &Construction) -> Vec<usize> {
    let n = cons.stages();
    let mut label = vec![usize::MAX; 1 << n];
    for i in 0..cons.psi() {
        let start = cons.representative(i);
        let mut s = start;
        loop {
            assert_eq!(label[s as usize], usize::MAX, "state on two cycles");
            label[s as usize] = i;
            s = cons.spec().step(s);
            if s == start {
                break;
            }
        }
    }
    assert!(
        label.iter().all(|&l| l != usize::MAX),
        "states left uncovered"
    );
    label
}

/// Every state `v` with `v` and `v + S` on different cycles, grouped by
/// the ordered cycle pair.
pub fn brute_pairs(labels: &[usize]) -> BTreeMap<(usize, usize), Vec<u64>> {
    let mut out: BTreeMap<(usize, usize), Vec<u64>> = BTreeMap::new();
    for (v, &a) in labels.iter().enumerate() {
        let b = labels[v ^ 1];
        if a != b {
            out.entry((a, b)).or_default().push(v as u64);
        }
    }
    for list in out.values_mut() {
        list.sort();
    }
    out
}

/// Irreducible polynomials with nonzero constant term, degrees 1..=max.
pub fn irreducibles(max: usize) -> Vec<BinaryPolynomial> {
    (3u64..(1 << (max + 1)))
        .map(BinaryPolynomial::from_bits)
        .filter(|p| p.constant_term() && is_irreducible(*p))
        .collect()
}

/// A random set of distinct irreducible factors with total degree in
/// `2..=max_n`.
pub fn random_factor_set<R: Rng>(rng: &mut R, max_n: usize) -> Vec<BinaryPolynomial> {
    let pool = irreducibles(max_n);
    loop {
        let mut shuffled = pool.clone();
        shuffled.shuffle(rng);
        let k = rng.gen_range(1..=4);
        let mut chosen = Vec::new();
        let mut n = 0;
        for p in shuffled {
            if chosen.len() == k {
                break;
            }
            if n + p.deg() <= max_n {
                n += p.deg();
                chosen.push(p);
            }
        }
        if n >= 2 {
            return chosen;
        }
    }
}
