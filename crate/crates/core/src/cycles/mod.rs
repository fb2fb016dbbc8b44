//! The cycle structure of the product register.
//!
//! A cycle of the register with characteristic polynomial
//! `f = p_1 ... p_s` is the sum of one cycle from each factor register,
//! some of which may be the zero cycle, taken at relative shifts. The
//! shifts are counted modulo the gcd of the active periods so that each
//! cycle appears exactly once.

mod factor;

pub use factor::{states_per_factor, FactorData};

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::crt::{mod_inverse, Congruence};
use crate::gf2::{gcd_u64, lcm_u64};
use crate::lfsr::StateBasis;

/// One cycle of the product register.
///
/// `indices[i]` is the cycle of factor `i`, with the factor's zero index
/// meaning the component is absent. `shifts[i]` is the offset of component
/// `i` relative to the earlier active components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleDescriptor {
    pub active: Vec<bool>,
    pub indices: Vec<usize>,
    pub shifts: Vec<u64>,
    pub period: u64,
}

impl CycleDescriptor {
    pub fn is_zero(&self) -> bool {
        self.active.iter().all(|&a| !a)
    }

    /// `[s^2_0 + L^3 s^3_1]`, factors counted from 1.
    pub fn describe(&self) -> String {
        let terms: Vec<String> = (0..self.active.len())
            .filter(|&i| self.active[i])
            .map(|i| {
                let mut term = String::new();
                if self.shifts[i] > 0 {
                    let _ = write!(term, "L^{} ", self.shifts[i]);
                }
                let _ = write!(term, "s^{}_{}", i + 1, self.indices[i]);
                term
            })
            .collect();
        if terms.is_empty() {
            "[0]".to_string()
        } else {
            format!("[{}]", terms.join(" + "))
        }
    }

    /// The component states the basis is applied to, as `(a^1_j, ...)`.
    pub fn components(&self) -> String {
        let parts: Vec<String> = (0..self.active.len())
            .map(|i| {
                if self.shifts[i] > 0 {
                    format!("T^{} a^{}_{}", self.shifts[i], i + 1, self.indices[i])
                } else {
                    format!("a^{}_{}", i + 1, self.indices[i])
                }
            })
            .collect();
        format!("({})", parts.join(", "))
    }

    fn key(&self) -> Vec<u64> {
        self.indices
            .iter()
            .map(|&j| j as u64)
            .chain(self.shifts.iter().copied())
            .collect()
    }
}

/// All cycles in a fixed order, with lookup from states.
#[derive(Clone, Debug)]
pub struct CycleSet {
    cycles: Vec<CycleDescriptor>,
    zero_index: usize,
    special_index: usize,
    lookup: HashMap<Vec<u64>, usize>,
}

impl CycleSet {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycles(&self) -> &[CycleDescriptor] {
        &self.cycles
    }

    pub fn get(&self, i: usize) -> &CycleDescriptor {
        &self.cycles[i]
    }

    pub fn zero_index(&self) -> usize {
        self.zero_index
    }

    /// Index of the cycle through `S = (1, 0, ..., 0)`.
    pub fn special_index(&self) -> usize {
        self.special_index
    }

    pub fn total_period(&self) -> u128 {
        self.cycles.iter().map(|c| c.period as u128).sum()
    }

    /// Cycle containing the component states `T^{x_i} a^i_{j_i}`, along
    /// with the shift `m` such that the state is `T^m` of the cycle's
    /// representative.
    pub fn locate_components(
        &self,
        factors: &[FactorData],
        located: &[Option<(usize, u64)>],
    ) -> (usize, u64) {
        let mut indices = Vec::with_capacity(factors.len());
        let mut shifts = Vec::with_capacity(factors.len());
        // Running solution m of x_i + m = l_i (mod e_i) over active factors,
        // determined modulo `acc.modulus`.
        let mut acc = Congruence::default();
        for (f, loc) in factors.iter().zip(located) {
            match *loc {
                None => {
                    indices.push(f.zero_index());
                    shifts.push(0);
                }
                Some((j, x)) => {
                    let e = f.order();
                    let l = acc.modulus;
                    let y = (x + acc.residue) % e;
                    let g = gcd_u64(l, e);
                    let target = y % g;
                    let diff = (target + e - y) % e;
                    let inv =
                        mod_inverse((l / g) % (e / g), e / g).expect("coprime after division");
                    let a = ((diff / g) as u128 * inv as u128 % (e / g) as u128) as u64;
                    let modulus = lcm_u64(l, e);
                    let residue =
                        ((acc.residue as u128 + a as u128 * l as u128) % modulus as u128) as u64;
                    acc = Congruence { residue, modulus };
                    indices.push(j);
                    shifts.push(target);
                }
            }
        }
        let key: Vec<u64> = indices
            .iter()
            .map(|&j| j as u64)
            .chain(shifts.iter().copied())
            .collect();
        let idx = *self
            .lookup
            .get(&key)
            .expect("every canonical descriptor is enumerated");
        // state = T^{-m} rep, so rep = T^m state.
        let m = acc.residue;
        let period = acc.modulus;
        (idx, (period - m % period) % period)
    }

    /// Index of the cycle containing `state`.
    pub fn cycle_of(&self, state: u64, factors: &[FactorData], basis: &StateBasis) -> usize {
        self.locate_state(state, factors, basis).0
    }

    /// `(cycle, k)` with `state = T^k` of the cycle's representative.
    pub fn locate_state(
        &self,
        state: u64,
        factors: &[FactorData],
        basis: &StateBasis,
    ) -> (usize, u64) {
        let located: Vec<Option<(usize, u64)>> = basis
            .decompose_bits(state)
            .into_iter()
            .zip(factors)
            .map(|(a, f)| f.locate(a))
            .collect();
        self.locate_components(factors, &located)
    }

    /// Representative state `(T^{l_1} a^1_{j_1}, ..., T^{l_s} a^s_{j_s}) P`.
    pub fn representative(&self, i: usize, factors: &[FactorData], basis: &StateBasis) -> u64 {
        representative_state(&self.cycles[i], factors, basis)
    }
}

pub fn representative_state(
    c: &CycleDescriptor,
    factors: &[FactorData],
    basis: &StateBasis,
) -> u64 {
    let comps: Vec<u64> = factors
        .iter()
        .enumerate()
        .map(|(i, f)| f.state(c.indices[i], c.shifts[i]))
        .collect();
    basis.compose_bits(&comps)
}

/// List every cycle.
///
/// Ordering: the first factor's flag is the slowest, then the remaining
/// flags counted in binary with the second factor as the low bit; within a
/// flag pattern the cycle indices run with the first factor slowest, and
/// finally the shifts with the second factor slowest.
pub fn enumerate_cycles(factors: &[FactorData], basis: &StateBasis) -> CycleSet {
    let s = factors.len();
    let mut cycles = Vec::new();
    for first in [false, true] {
        for rest in 0u64..(1 << (s - 1)) {
            let active: Vec<bool> = (0..s)
                .map(|i| {
                    if i == 0 {
                        first
                    } else {
                        (rest >> (i - 1)) & 1 == 1
                    }
                })
                .collect();
            push_pattern(factors, &active, &mut cycles);
        }
    }
    let lookup: HashMap<Vec<u64>, usize> = cycles
        .iter()
        .enumerate()
        .map(|(i, c)| (c.key(), i))
        .collect();
    let zero_index = cycles.iter().position(|c| c.is_zero()).unwrap_or(0);
    let mut set = CycleSet {
        cycles,
        zero_index,
        special_index: 0,
        lookup,
    };
    set.special_index = set.cycle_of(1, factors, basis);
    set
}

fn push_pattern(factors: &[FactorData], active: &[bool], out: &mut Vec<CycleDescriptor>) {
    let s = factors.len();
    // Index ranges and shift bounds for this pattern.
    let ranges: Vec<usize> = (0..s)
        .map(|i| {
            if active[i] {
                factors[i].cycle_count()
            } else {
                1
            }
        })
        .collect();
    let mut bounds = Vec::with_capacity(s);
    let mut l = 1u64;
    for i in 0..s {
        let f = if active[i] { factors[i].order() } else { 1 };
        bounds.push(gcd_u64(f, l));
        l = lcm_u64(l, f);
    }
    let period = l;

    let radices: Vec<u64> = ranges.iter().map(|&r| r as u64).collect();
    let mut js = vec![0u64; s];
    loop {
        let indices: Vec<usize> = (0..s)
            .map(|i| {
                if active[i] {
                    js[i] as usize
                } else {
                    factors[i].zero_index()
                }
            })
            .collect();
        let mut shifts = vec![0u64; s];
        loop {
            out.push(CycleDescriptor {
                active: active.to_vec(),
                indices: indices.clone(),
                shifts: shifts.clone(),
                period,
            });
            if !odometer(&mut shifts, &bounds) {
                break;
            }
        }
        if !odometer(&mut js, &radices) {
            break;
        }
    }
}

/// Advance a mixed-radix counter whose last digit moves fastest.
fn odometer(digits: &mut [u64], radices: &[u64]) -> bool {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < radices[i] {
            return true;
        }
        digits[i] = 0;
    }
    false
}
