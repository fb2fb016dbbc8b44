use super::{LfsrSpec, LinearMap, StateVector};
use crate::error::{Error, Result};
use crate::gf2::BinaryPolynomial;

/// The change of basis between component states `(a_1, ..., a_s)` of the
/// factor registers and states `v = (a_1, ..., a_s) P` of the product
/// register.
///
/// Row `j` of block `P_i` is the length-`n` output prefix of the `p_i`
/// register started from the unit state `e_j`. Component `a_i` occupies
/// bits `offsets[i] .. offsets[i] + widths[i]` of the concatenated word.
#[derive(Clone, Debug)]
pub struct StateBasis {
    p: LinearMap,
    p_inv: LinearMap,
    offsets: Vec<usize>,
    widths: Vec<usize>,
    n: usize,
}

impl StateBasis {
    pub fn new(factors: &[BinaryPolynomial]) -> Result<Self> {
        let n: usize = factors.iter().map(|f| f.deg()).sum();
        if n > super::MAX_STAGES {
            return Err(Error::DegreeOverflow(n));
        }
        let mut rows = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(factors.len());
        let mut widths = Vec::with_capacity(factors.len());
        for &f in factors {
            let spec = LfsrSpec::new(f)?;
            offsets.push(rows.len());
            widths.push(spec.stages());
            for j in 0..spec.stages() {
                let prefix = spec.generate(StateVector::new(1u64 << j, spec.stages()), n)?;
                rows.push(StateVector::from_slice(&prefix).bits());
            }
        }
        let p = LinearMap::from_rows(rows, n);
        // Rank deficiency means the factors were not pairwise coprime.
        let p_inv = p.inverse()?;
        Ok(StateBasis {
            p,
            p_inv,
            offsets,
            widths,
            n,
        })
    }

    pub fn stages(&self) -> usize {
        self.n
    }

    pub fn factor_count(&self) -> usize {
        self.widths.len()
    }

    pub fn matrix(&self) -> &LinearMap {
        &self.p
    }

    pub fn inverse_matrix(&self) -> &LinearMap {
        &self.p_inv
    }

    /// Rows of block `P_i`.
    pub fn block(&self, i: usize) -> &[u64] {
        &self.p.rows()[self.offsets[i]..self.offsets[i] + self.widths[i]]
    }

    /// `(a_1, ..., a_s) P` from packed component words.
    #[inline]
    pub fn compose_bits(&self, components: &[u64]) -> u64 {
        let mut concat = 0u64;
        for (i, &a) in components.iter().enumerate() {
            concat |= a << self.offsets[i];
        }
        self.p.apply(concat)
    }

    /// Inverse of [`compose_bits`](Self::compose_bits).
    pub fn decompose_bits(&self, v: u64) -> Vec<u64> {
        let concat = self.p_inv.apply(v);
        self.offsets
            .iter()
            .zip(&self.widths)
            .map(|(&off, &w)| (concat >> off) & ((1u64 << w) - 1))
            .collect()
    }

    pub fn compose(&self, components: &[StateVector]) -> Result<StateVector> {
        if components.len() != self.widths.len() {
            return Err(Error::LengthMismatch {
                expected: self.widths.len(),
                got: components.len(),
            });
        }
        for (c, &w) in components.iter().zip(&self.widths) {
            if c.len() != w {
                return Err(Error::LengthMismatch {
                    expected: w,
                    got: c.len(),
                });
            }
        }
        let words: Vec<u64> = components.iter().map(|c| c.bits()).collect();
        Ok(StateVector::new(self.compose_bits(&words), self.n))
    }

    pub fn decompose(&self, v: StateVector) -> Result<Vec<StateVector>> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        Ok(self
            .decompose_bits(v.bits())
            .into_iter()
            .zip(&self.widths)
            .map(|(b, &w)| StateVector::new(b, w))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    fn example_basis() -> StateBasis {
        StateBasis::new(&[p("11"), p("111"), p("11111")]).unwrap()
    }

    fn row(s: &str) -> u64 {
        s.parse::<StateVector>().unwrap().bits()
    }

    #[test]
    fn example_blocks() {
        let b = example_basis();
        assert_eq!(b.block(0), &[row("1111111")]);
        assert_eq!(b.block(1), &[row("1011011"), row("0110110")]);
        assert_eq!(
            b.block(2),
            &[
                row("1000110"),
                row("0100101"),
                row("0010100"),
                row("0001100")
            ]
        );
        assert_eq!(b.matrix().rank(), 7);
    }

    #[test]
    fn compose_example_state() {
        let b = example_basis();
        let v = b
            .compose(&[
                "1".parse().unwrap(),
                "10".parse().unwrap(),
                "1000".parse().unwrap(),
            ])
            .unwrap();
        assert_eq!(v.to_string(), "1100010");
    }

    #[test]
    fn special_state_decomposition() {
        let b = example_basis();
        let parts = b.decompose(StateVector::unit(7)).unwrap();
        let shown: Vec<String> = parts.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["1", "11", "1010"]);
    }

    #[test]
    fn zero_round_trip() {
        let b = example_basis();
        let parts = b.decompose(StateVector::zero(7)).unwrap();
        assert!(parts.iter().all(|s| s.is_zero()));
    }

    #[test]
    fn single_primitive_factor_is_full_rank() {
        let b = StateBasis::new(&[p("10011")]).unwrap();
        assert_eq!(b.matrix().rank(), 4);
        // Impulse-response rows of a single register start with e_j.
        for (j, &r) in b.block(0).iter().enumerate() {
            assert_eq!(r & 0xf, 1 << j);
        }
    }

    #[test]
    fn repeated_factor_is_rank_deficient() {
        assert_eq!(
            StateBasis::new(&[p("111"), p("111")]).unwrap_err(),
            Error::Singular
        );
    }

    #[test]
    fn length_checks() {
        let b = example_basis();
        assert!(b.compose(&["1".parse().unwrap()]).is_err());
        assert!(b.decompose("101".parse().unwrap()).is_err());
    }

    proptest! {
        #[test]
        fn t_commutes_with_p(a0 in 0u64..2, a1 in 0u64..4, a2 in 0u64..16, k in 0u64..40) {
            let factors = [p("11"), p("111"), p("11111")];
            let b = StateBasis::new(&factors).unwrap();
            let f = LfsrSpec::new(p("11").mul(p("111")).unwrap().mul(p("11111")).unwrap()).unwrap();
            let specs: Vec<LfsrSpec> = factors.iter().map(|&q| LfsrSpec::new(q).unwrap()).collect();
            let comps = [a0, a1, a2];
            let shifted: Vec<u64> = comps.iter().zip(&specs).map(|(&a, s)| s.apply_t(a, k)).collect();
            prop_assert_eq!(b.compose_bits(&shifted), f.apply_t(b.compose_bits(&comps), k));
            prop_assert_eq!(b.decompose_bits(b.compose_bits(&comps)), comps.to_vec());
        }

        #[test]
        fn composed_sequence_is_sum_of_components(a0 in 0u64..8, a1 in 0u64..16, a2 in 0u64..64) {
            let factors = [p("1011"), p("11001"), p("1000011")];
            let b = StateBasis::new(&factors).unwrap();
            let f = LfsrSpec::new(factors[0].mul(factors[1]).unwrap().mul(factors[2]).unwrap()).unwrap();
            let comps = [a0, a1, a2];
            let v = StateVector::new(b.compose_bits(&comps), 13);
            let whole = f.generate(v, 200).unwrap();
            let mut sum = vec![0u8; 200];
            for (&a, &q) in comps.iter().zip(&factors) {
                let spec = LfsrSpec::new(q).unwrap();
                let part = spec.generate(StateVector::new(a, q.deg()), 200).unwrap();
                for (s, x) in sum.iter_mut().zip(part) {
                    *s ^= x;
                }
            }
            prop_assert_eq!(whole, sum);
        }
    }
}
