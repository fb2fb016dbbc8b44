//! Simultaneous congruences with moduli that need not be coprime.

use crate::gf2::{gcd_u64, lcm_u64};

/// Extended Euclid on signed values: `(g, x, y)` with `a x + b y = g`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd(a as i128 % m as i128, m as i128);
    (g == 1).then(|| x.rem_euclid(m as i128) as u64)
}

/// Incremental solver for `x = r_k (mod m_k)`.
///
/// Each new congruence is merged into the running solution `x mod L`
/// Garner-style: the correction is a multiple of `L`, so earlier
/// congruences stay satisfied. Merging fails when the residues disagree
/// modulo `gcd(L, m_k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub residue: u64,
    pub modulus: u64,
}

impl Default for Congruence {
    fn default() -> Self {
        Congruence {
            residue: 0,
            modulus: 1,
        }
    }
}

impl Congruence {
    pub fn merge(self, residue: u64, modulus: u64) -> Option<Congruence> {
        let (x, l) = (self.residue, self.modulus);
        let r = residue % modulus;
        let g = gcd_u64(l, modulus);
        let diff = (r + modulus - x % modulus) % modulus;
        if !diff.is_multiple_of(g) {
            return None;
        }
        let m_g = modulus / g;
        let inv = mod_inverse((l / g) % m_g, m_g)?;
        let a = ((diff / g) as u128 * inv as u128 % m_g as u128) as u64;
        let new_mod = lcm_u64(l, modulus);
        let value = ((x as u128 + a as u128 * l as u128) % new_mod as u128) as u64;
        Some(Congruence {
            residue: value,
            modulus: new_mod,
        })
    }
}

/// Smallest nonnegative solution of the system, with the lcm of the moduli.
pub fn solve(system: &[(u64, u64)]) -> Option<Congruence> {
    system
        .iter()
        .try_fold(Congruence::default(), |acc, &(r, m)| acc.merge(r, m))
}
