//! Linear feedback shift registers over GF(2).
//!
//! A state `(s_i, ..., s_{i+n-1})` is packed into a `u64` with `s_i` in bit
//! 0. The register with characteristic polynomial
//! `x^n + c_{n-1} x^{n-1} + ... + c_0` produces `s_{i+n} = sum_k c_k s_{i+k}`.

mod basis;
mod linear;

pub use basis::StateBasis;
pub use linear::LinearMap;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::BinaryPolynomial;

/// Longest register a state word can hold.
pub const MAX_STAGES: usize = 63;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct StateVector {
    bits: u64,
    len: usize,
}

impl StateVector {
    pub fn new(bits: u64, len: usize) -> Self {
        debug_assert!(len <= 64);
        let mask = if len == 64 {
            u64::MAX
        } else {
            (1u64 << len) - 1
        };
        StateVector {
            bits: bits & mask,
            len,
        }
    }

    pub fn zero(len: usize) -> Self {
        StateVector { bits: 0, len }
    }

    /// `(1, 0, ..., 0)`.
    pub fn unit(len: usize) -> Self {
        StateVector { bits: 1, len }
    }

    pub fn from_slice(bits: &[u8]) -> Self {
        let word = bits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | (((b & 1) as u64) << i));
        StateVector::new(word, bits.len())
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.len
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn get(self, i: usize) -> u8 {
        ((self.bits >> i) & 1) as u8
    }

    pub fn to_vec(self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl FromStr for StateVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<u8> = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidBits(s.to_string())),
            })
            .collect::<Result<_>>()?;
        if digits.len() > 64 {
            return Err(Error::InvalidBits(s.to_string()));
        }
        Ok(StateVector::from_slice(&digits))
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

/// Render a packed state of length `n` as `s_0 s_1 ... s_{n-1}`.
pub fn bits_to_string(bits: u64, n: usize) -> String {
    StateVector::new(bits, n).to_string()
}

/// An LFSR described by its characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LfsrSpec {
    poly: BinaryPolynomial,
    n: usize,
    taps: u64,
}

impl LfsrSpec {
    /// Rejects singular feedback (zero constant term) and degree 0.
    pub fn new(poly: BinaryPolynomial) -> Result<Self> {
        let n = poly.deg();
        if n == 0 || !poly.constant_term() {
            return Err(Error::InvalidFactor(poly));
        }
        if n > MAX_STAGES {
            return Err(Error::DegreeOverflow(n));
        }
        Ok(LfsrSpec {
            poly,
            n,
            taps: poly.low_bits(),
        })
    }

    pub fn poly(&self) -> BinaryPolynomial {
        self.poly
    }

    pub fn stages(&self) -> usize {
        self.n
    }

    /// Coefficient word of the linear feedback `h`.
    pub fn taps(&self) -> u64 {
        self.taps
    }

    /// Linear feedback `h(x_0, ..., x_{n-1})`.
    #[inline]
    pub fn feedback(&self, state: u64) -> u64 {
        ((state & self.taps).count_ones() & 1) as u64
    }

    /// One application of the state operator `T`.
    #[inline]
    pub fn step(&self, state: u64) -> u64 {
        (state >> 1) | (self.feedback(state) << (self.n - 1))
    }

    /// `T` as a linear map.
    pub fn transition(&self) -> LinearMap {
        let rows = (0..self.n).map(|i| self.step(1u64 << i)).collect();
        LinearMap::from_rows(rows, self.n)
    }

    /// `T^k(state)`. Large `k` goes through powers of the transition matrix.
    pub fn apply_t(&self, state: u64, k: u64) -> u64 {
        if k > 4 * self.n as u64 {
            return self.transition().pow(k).apply(state);
        }
        let mut s = state;
        for _ in 0..k {
            s = self.step(s);
        }
        s
    }

    pub fn apply_t_state(&self, state: StateVector, k: u64) -> Result<StateVector> {
        self.check_len(state)?;
        Ok(StateVector::new(self.apply_t(state.bits(), k), self.n))
    }

    fn check_len(&self, state: StateVector) -> Result<()> {
        if state.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: state.len(),
            });
        }
        Ok(())
    }

    /// First `length` output bits from the initial state `init`.
    pub fn generate(&self, init: StateVector, length: usize) -> Result<Vec<u8>> {
        self.check_len(init)?;
        let mut out = Vec::with_capacity(length);
        let mut s = init.bits();
        for _ in 0..length {
            out.push((s & 1) as u8);
            s = self.step(s);
        }
        Ok(out)
    }

    /// Period of the cycle through `state`, by walking it.
    pub fn period_of(&self, state: u64) -> u64 {
        let mut s = self.step(state);
        let mut k = 1;
        while s != state {
            s = self.step(s);
            k += 1;
        }
        k
    }
}

/// `v_j = seq[offset + d * j]` for `j < count`.
pub fn decimate(seq: &[u8], d: usize, offset: usize, count: usize) -> Result<Vec<u8>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let needed = offset + d * (count - 1);
    if needed >= seq.len() {
        return Err(Error::InsufficientLength {
            len: seq.len(),
            needed,
        });
    }
    Ok((0..count).map(|j| seq[offset + d * j]).collect())
}

/// Initial state `s_0` for the register of the primitive `q` whose
/// `t`-decimated output starts with `(1, 0, ..., 0)`.
///
/// The first bits of `s_0 A^{kt}` for `k = 0..n` form a linear function of
/// `s_0`; it is inverted over GF(2).
pub fn solve_initial_state(q: BinaryPolynomial, t: u64) -> Result<StateVector> {
    let spec = LfsrSpec::new(q)?;
    let n = spec.stages();
    if t == 1 {
        return Ok(StateVector::unit(n));
    }
    let jump = spec.transition().pow(t);
    // images[i] = bit pattern (first bit of s A^{kt})_k for s = e_i.
    let images = (0..n)
        .map(|i| {
            let mut s = 1u64 << i;
            let mut word = 0u64;
            for k in 0..n {
                word |= (s & 1) << k;
                s = jump.apply(s);
            }
            word
        })
        .collect();
    let system = LinearMap::from_rows(images, n);
    let inv = system.inverse()?;
    Ok(StateVector::new(inv.apply(1), n))
}
