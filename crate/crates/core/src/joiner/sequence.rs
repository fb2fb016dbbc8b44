use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::PairTree;
use crate::error::{Error, Result};
use crate::lfsr::{LfsrSpec, StateVector};

/// The suffixes `(v_1, ..., v_{n-1})` of the tree's conjugate pairs. The
/// joined register adds 1 to the linear feedback exactly on these.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeedbackModifier {
    suffixes: BTreeSet<u64>,
}

impl FeedbackModifier {
    pub fn new(tree: &PairTree) -> Result<Self> {
        let mut suffixes = BTreeSet::new();
        for p in tree.pairs() {
            if !suffixes.insert(p.suffix()) {
                return Err(Error::SuffixCollision);
            }
        }
        Ok(FeedbackModifier { suffixes })
    }

    pub fn empty() -> Self {
        FeedbackModifier {
            suffixes: BTreeSet::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.suffixes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.suffixes.is_empty()
    }

    pub fn contains(&self, suffix: u64) -> bool {
        self.suffixes.contains(&suffix)
    }

    pub fn suffixes(&self) -> impl Iterator<Item = u64> + '_ {
        self.suffixes.iter().copied()
    }
}

/// `h(x_0, ..., x_{n-1}) + sum over w of prod_{i=1}^{n-1} (x_i + w_i + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeedbackFunction {
    pub n: usize,
    pub taps: u64,
    pub suffixes: Vec<u64>,
}

impl FeedbackFunction {
    pub fn new(spec: &LfsrSpec, modifier: &FeedbackModifier) -> Self {
        FeedbackFunction {
            n: spec.stages(),
            taps: spec.taps(),
            suffixes: modifier.suffixes().collect(),
        }
    }

    /// Term by term evaluation of the formula.
    pub fn eval(&self, state: u64) -> u8 {
        let x = |i: usize| ((state >> i) & 1) as u8;
        let mut acc = (0..self.n).fold(0u8, |a, i| a ^ (((self.taps >> i) & 1) as u8 & x(i)));
        for &w in &self.suffixes {
            let term = (1..self.n).fold(1u8, |p, i| p & (x(i) ^ ((w >> (i - 1)) & 1) as u8 ^ 1));
            acc ^= term;
        }
        acc
    }

    /// `x_0 + c_1 x_1 + ... + [product terms over the suffixes]`.
    pub fn describe(&self) -> String {
        let linear: Vec<String> = (0..self.n)
            .filter(|&i| (self.taps >> i) & 1 == 1)
            .map(|i| format!("x_{i}"))
            .collect();
        let mut out = linear.join(" + ");
        for &w in &self.suffixes {
            let _ = write!(out, " + [x_1..x_{} = ", self.n - 1);
            for i in 0..self.n - 1 {
                out.push(if (w >> i) & 1 == 1 { '1' } else { '0' });
            }
            out.push(']');
        }
        out
    }
}

/// One period of a de Bruijn sequence with what produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeBruijnSequence {
    pub n: usize,
    pub bits: Vec<u8>,
    pub initial: StateVector,
}

impl DeBruijnSequence {
    pub fn to_bit_string(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b == 1 { '1' } else { '0' })
            .collect()
    }

    /// Hex packing, four bits per digit with `s_0` most significant.
    pub fn to_hex(&self) -> String {
        self.bits
            .chunks(4)
            .map(|chunk| {
                let v = chunk
                    .iter()
                    .chain(std::iter::repeat(&0))
                    .take(4)
                    .fold(0u32, |acc, &b| (acc << 1) | b as u32);
                char::from_digit(v, 16).expect("nibble")
            })
            .collect()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }
}

/// Run the joined register for one period: the new bit is
/// `h(state) + [suffix of state in E]`.
pub fn join_cycles(
    spec: &LfsrSpec,
    modifier: &FeedbackModifier,
    init: StateVector,
) -> Result<DeBruijnSequence> {
    let n = spec.stages();
    if init.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: init.len(),
        });
    }
    let len = 1usize << n;
    let mut bits = Vec::with_capacity(len);
    let mut s = init.bits();
    for _ in 0..len {
        bits.push((s & 1) as u8);
        let suffix = s >> 1;
        let flip = modifier.contains(suffix) as u64;
        s = suffix | ((spec.feedback(s) ^ flip) << (n - 1));
    }
    Ok(DeBruijnSequence {
        n,
        bits,
        initial: init,
    })
}

/// Whether the cyclic windows of length `n` are pairwise distinct.
pub fn verify_de_bruijn(seq: &[u8], n: usize) -> Result<bool> {
    let len = 1usize.checked_shl(n as u32).filter(|_| n > 0).unwrap_or(0);
    if len == 0 || seq.len() != len {
        return Err(Error::LengthMismatch {
            expected: len,
            got: seq.len(),
        });
    }
    let mut seen = vec![0u64; len.div_ceil(64)];
    let mask = (len - 1) as u64;
    let mut w = 0u64;
    for &b in &seq[..n - 1] {
        w = (w << 1) | (b & 1) as u64;
    }
    for i in 0..len {
        w = ((w << 1) | (seq[(i + n - 1) % len] & 1) as u64) & mask;
        let (word, bit) = ((w / 64) as usize, w % 64);
        if seen[word] >> bit & 1 == 1 {
            return Ok(false);
        }
        seen[word] |= 1 << bit;
    }
    Ok(true)
}
