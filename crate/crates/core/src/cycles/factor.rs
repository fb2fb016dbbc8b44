use crate::error::{Error, Result};
use crate::gf2::{find_associated_primitive, BinaryPolynomial, CyclotomicParams, FieldContext};
use crate::lfsr::{decimate, solve_initial_state, LfsrSpec, StateVector};

const NO_SLOT: u32 = u32::MAX;

/// One irreducible factor `p_i` with its cycle representatives and lookup
/// tables.
///
/// Nonzero cycle `j` of the factor register starts from `states[j]`; index
/// `t` stands for the zero cycle. Every nonzero state is tabulated as
/// `T^k a_j`, which makes membership queries constant time.
#[derive(Clone, Debug)]
pub struct FactorData {
    poly: BinaryPolynomial,
    params: CyclotomicParams,
    associate: BinaryPolynomial,
    field: FieldContext,
    spec: LfsrSpec,
    states: Vec<u64>,
    /// `orbit[j * e + k] = T^k a_j`.
    orbit: Vec<u32>,
    /// Inverse of `orbit`, indexed by state.
    slot: Vec<u32>,
}

impl FactorData {
    pub fn new(poly: BinaryPolynomial) -> Result<Self> {
        let spec = LfsrSpec::new(poly)?;
        let params = CyclotomicParams::of(poly)?;
        let associate = find_associated_primitive(poly)?;
        let field = FieldContext::new(associate)?;
        let states = states_per_factor(poly, associate, params.t)?;

        let n = poly.deg();
        let e = params.e as usize;
        let mut orbit = Vec::with_capacity(states.len() * e);
        let mut slot = vec![NO_SLOT; 1 << n];
        for &a in &states {
            let mut s = a;
            for _ in 0..e {
                if slot[s as usize] != NO_SLOT {
                    return Err(Error::StateNotFound(s));
                }
                slot[s as usize] = orbit.len() as u32;
                orbit.push(s as u32);
                s = spec.step(s);
            }
            debug_assert_eq!(s, a);
        }
        Ok(FactorData {
            poly,
            params,
            associate,
            field,
            spec,
            states,
            orbit,
            slot,
        })
    }

    pub fn poly(&self) -> BinaryPolynomial {
        self.poly
    }

    pub fn degree(&self) -> usize {
        self.spec.stages()
    }

    /// Period `e` of the nonzero cycles.
    pub fn order(&self) -> u64 {
        self.params.e
    }

    /// Number `t` of nonzero cycles.
    pub fn cycle_count(&self) -> usize {
        self.params.t as usize
    }

    pub fn params(&self) -> CyclotomicParams {
        self.params
    }

    /// Index used for the zero cycle.
    pub fn zero_index(&self) -> usize {
        self.params.t as usize
    }

    pub fn is_primitive(&self) -> bool {
        self.params.t == 1
    }

    pub fn associate(&self) -> BinaryPolynomial {
        self.associate
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn spec(&self) -> &LfsrSpec {
        &self.spec
    }

    /// The representatives `a_0, ..., a_{t-1}`.
    pub fn states(&self) -> &[u64] {
        &self.states
    }

    /// `T^shift a_j`, or the zero state for the zero index.
    #[inline]
    pub fn state(&self, j: usize, shift: u64) -> u64 {
        if j == self.zero_index() {
            return 0;
        }
        let e = self.params.e;
        self.orbit[j * e as usize + (shift % e) as usize] as u64
    }

    /// `(j, k)` with `state = T^k a_j`; `None` for the zero state.
    #[inline]
    pub fn locate(&self, state: u64) -> Option<(usize, u64)> {
        let idx = *self.slot.get(state as usize)?;
        if idx == NO_SLOT {
            return None;
        }
        let e = self.params.e as u32;
        Some(((idx / e) as usize, (idx % e) as u64))
    }
}

/// One state on each nonzero cycle of the register of the irreducible
/// `p`, ordered by decimation offset of the associated m-sequence.
pub fn states_per_factor(
    p: BinaryPolynomial,
    associate: BinaryPolynomial,
    t: u64,
) -> Result<Vec<u64>> {
    let n = p.deg();
    if t == 1 {
        return Ok(vec![1]);
    }
    let init = solve_initial_state(associate, t)?;
    let t = t as usize;
    let m = LfsrSpec::new(associate)?.generate(init, n * t)?;
    (0..t)
        .map(|j| Ok(StateVector::from_slice(&decimate(&m, t, j, n)?).bits()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfsr::bits_to_string;

    fn p(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    fn shown(f: &FactorData) -> Vec<String> {
        f.states()
            .iter()
            .map(|&s| bits_to_string(s, f.degree()))
            .collect()
    }

    #[test]
    fn non_primitive_quartic() {
        let f = FactorData::new(p("11111")).unwrap();
        assert_eq!(shown(&f), ["1000", "0111", "0010"]);
        assert_eq!(f.order(), 5);
        assert_eq!(f.zero_index(), 3);
        assert_eq!(f.associate(), p("10011"));
    }

    #[test]
    fn small_factors() {
        assert_eq!(shown(&FactorData::new(p("111")).unwrap()), ["10"]);
        assert_eq!(shown(&FactorData::new(p("11")).unwrap()), ["1"]);
    }

    #[test]
    fn locate_inverts_state() {
        for s in ["11111", "1001001", "10011", "100111001"] {
            let f = FactorData::new(p(s)).unwrap();
            assert_eq!(f.locate(0), None);
            for j in 0..f.cycle_count() {
                for k in 0..f.order() {
                    let v = f.state(j, k);
                    assert_eq!(v, f.spec().apply_t(f.states()[j], k));
                    assert_eq!(f.locate(v), Some((j, k)));
                }
            }
            assert_eq!(f.state(f.zero_index(), 7), 0);
        }
    }

    #[test]
    fn representatives_cover_every_nonzero_state() {
        // The constructor fails if two representatives share a cycle.
        for bits in 3u64..(1 << 9) {
            let g = BinaryPolynomial::from_bits(bits);
            if !g.constant_term() || !crate::gf2::is_irreducible(g) {
                continue;
            }
            let f = FactorData::new(g).unwrap();
            let covered = (1u64..(1 << g.deg()))
                .filter(|&s| f.locate(s).is_some())
                .count();
            assert_eq!(covered as u64, (1 << g.deg()) - 1);
        }
    }
}
