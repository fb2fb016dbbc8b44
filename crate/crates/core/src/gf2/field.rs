use super::{is_primitive, poly_order, BinaryPolynomial};
use crate::error::{Error, Result};

/// Sentinel stored in the Zech table at `l = 0`, where `alpha^0 + 1 = 0`.
pub const ZECH_INFINITY: u32 = u32::MAX;

/// Largest extension degree for which tables are built.
pub const MAX_FIELD_DEGREE: usize = 28;

/// `GF(2^n)` presented as `GF(2)[x]/(q)` for a primitive `q`, with `alpha`
/// the class of `x`. Power, logarithm and Zech tables are built once.
#[derive(Clone)]
pub struct FieldContext {
    modulus: BinaryPolynomial,
    n: usize,
    /// `exp[l] = alpha^l` for `0 <= l < 2^n - 1`.
    exp: Vec<u32>,
    /// `log[alpha^l] = l`; entry 0 is unused.
    log: Vec<u32>,
    /// `alpha^l + 1 = alpha^zech[l]`, `ZECH_INFINITY` at `l = 0`.
    zech: Vec<u32>,
}

impl std::fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldContext")
            .field("modulus", &self.modulus)
            .field("n", &self.n)
            .finish()
    }
}

impl FieldContext {
    pub fn new(modulus: BinaryPolynomial) -> Result<Self> {
        let n = modulus.deg();
        if n > MAX_FIELD_DEGREE {
            return Err(Error::FactorTooLarge {
                poly: modulus,
                degree: n,
                limit: MAX_FIELD_DEGREE,
            });
        }
        if !is_primitive(modulus) {
            return Err(Error::NotPrimitive(modulus));
        }
        let order = (1usize << n) - 1;
        let mut exp = Vec::with_capacity(order);
        let mut log = vec![0u32; 1 << n];
        let mut acc = BinaryPolynomial::ONE.rem(modulus)?;
        for l in 0..order {
            exp.push(acc.bits() as u32);
            log[acc.bits() as usize] = l as u32;
            acc = acc.mul_mod(BinaryPolynomial::X, modulus);
        }
        let zech = Self::build_zech_table(&exp, &log);
        Ok(FieldContext {
            modulus,
            n,
            exp,
            log,
            zech,
        })
    }

    fn build_zech_table(exp: &[u32], log: &[u32]) -> Vec<u32> {
        exp.iter()
            .map(|&a| {
                let b = a ^ 1;
                if b == 0 {
                    ZECH_INFINITY
                } else {
                    log[b as usize]
                }
            })
            .collect()
    }

    pub fn modulus(&self) -> BinaryPolynomial {
        self.modulus
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Size of the multiplicative group, `2^n - 1`.
    pub fn group_order(&self) -> u64 {
        self.exp.len() as u64
    }

    pub fn zech_table(&self) -> &[u32] {
        &self.zech
    }

    /// Zech logarithm `tau(l)`; `None` stands for infinity (`l = 0 mod 2^n-1`).
    pub fn zech(&self, l: u64) -> Option<u64> {
        let z = self.zech[(l % self.group_order()) as usize];
        (z != ZECH_INFINITY).then_some(z as u64)
    }

    /// `alpha^l` as a coefficient word.
    pub fn pow_alpha(&self, l: u64) -> u64 {
        self.exp[(l % self.group_order()) as usize] as u64
    }

    /// Discrete log of a nonzero element.
    pub fn log(&self, element: u64) -> Option<u64> {
        if element == 0 || element as usize >= self.log.len() {
            return None;
        }
        Some(self.log[element as usize] as u64)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        BinaryPolynomial::from_bits(a)
            .mul_mod(BinaryPolynomial::from_bits(b), self.modulus)
            .bits()
    }

    /// Cyclotomic number `(i, j)_t`: how many `xi` in the class
    /// `C_i = alpha^i <alpha^t>` have `xi + 1` in `C_j`.
    pub fn cyclotomic_number(&self, i: u64, j: u64, params: CyclotomicParams) -> u64 {
        let t = params.t;
        let mut count = 0;
        for s in 0..params.e {
            let l = i + s * t;
            if let Some(z) = self.zech(l) {
                if z % t == j % t {
                    count += 1;
                }
            }
        }
        count
    }

    /// All `(i, j)_t` as a `t x t` row-major matrix.
    pub fn cyclotomic_matrix(&self, params: CyclotomicParams) -> Vec<Vec<u64>> {
        let t = params.t as usize;
        let mut out = vec![vec![0u64; t]; t];
        for l in 1..self.group_order() {
            if let Some(z) = self.zech(l) {
                out[(l % params.t) as usize][(z % params.t) as usize] += 1;
            }
        }
        out
    }
}

/// Order `e` of an irreducible polynomial and the index `t = (2^n-1)/e` of
/// the subgroup generated by its root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclotomicParams {
    pub e: u64,
    pub t: u64,
}

impl CyclotomicParams {
    pub fn of(g: BinaryPolynomial) -> Result<Self> {
        let e = poly_order(g)?;
        let t = ((1u64 << g.deg()) - 1) / e;
        Ok(CyclotomicParams { e, t })
    }
}
