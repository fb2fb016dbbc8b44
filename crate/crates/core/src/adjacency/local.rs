use crate::cycles::FactorData;

/// Solutions `(u, v)` of `T^u a_j + T^v a_k = T^c a_d` inside one factor
/// register, for every ordered pair of cycle indices including the zero
/// index `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalPairTable {
    t: usize,
    e: u64,
    c: u64,
    d: usize,
    pairs: Vec<Vec<(u64, u64)>>,
}

impl LocalPairTable {
    /// Zech logarithms for primitive factors, state lookup otherwise.
    pub fn new(factor: &FactorData, c: u64, d: usize) -> Self {
        if factor.is_primitive() {
            Self::from_zech(factor, c)
        } else {
            Self::by_lookup(factor, c, d)
        }
    }

    fn empty(factor: &FactorData, c: u64, d: usize) -> Self {
        let t = factor.cycle_count();
        let mut table = LocalPairTable {
            t,
            e: factor.order(),
            c,
            d,
            pairs: vec![Vec::new(); (t + 1) * (t + 1)],
        };
        let zero = t;
        let (zd, dz) = (table.slot(zero, d), table.slot(d, zero));
        table.pairs[zd].push((0, c));
        table.pairs[dz].push((c, 0));
        table
    }

    /// For each `T^u a_j`, locate `T^u a_j + T^c a_d` among the factor's
    /// states.
    pub fn by_lookup(factor: &FactorData, c: u64, d: usize) -> Self {
        let mut table = Self::empty(factor, c, d);
        let target = factor.state(d, c);
        for j in 0..table.t {
            for u in 0..table.e {
                let w = target ^ factor.state(j, u);
                // w = 0 is the (j, zero) solution already recorded.
                if let Some((k, v)) = factor.locate(w) {
                    let slot = table.slot(j, k);
                    table.pairs[slot].push((u, v));
                }
            }
        }
        table
    }

    /// Primitive factor: `T^y a + T^c a = T^{c + tau(y - c)} a`.
    pub fn from_zech(factor: &FactorData, c: u64) -> Self {
        debug_assert!(factor.is_primitive());
        let mut table = Self::empty(factor, c, 0);
        let e = table.e;
        let field = factor.field();
        let slot = table.slot(0, 0);
        for y in (0..e).filter(|&y| y != c) {
            let tau = field.zech((y + e - c) % e).expect("y != c");
            table.pairs[slot].push((y, (c + tau) % e));
        }
        table
    }

    #[inline]
    fn slot(&self, j: usize, k: usize) -> usize {
        j * (self.t + 1) + k
    }

    /// `Gamma(j, k)`, sorted by `u`.
    #[inline]
    pub fn get(&self, j: usize, k: usize) -> &[(u64, u64)] {
        &self.pairs[self.slot(j, k)]
    }

    pub fn cycle_count(&self) -> usize {
        self.t
    }

    pub fn order(&self) -> u64 {
        self.e
    }

    pub fn special_block(&self) -> (u64, usize) {
        (self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{BinaryPolynomial, CyclotomicParams, FieldContext};

    fn factor(s: &str) -> FactorData {
        FactorData::new(s.parse::<BinaryPolynomial>().unwrap()).unwrap()
    }

    /// Every `(u, v)` in `[0, e)^2`, checked directly.
    fn brute(f: &FactorData, c: u64, d: usize, j: usize, k: usize) -> Vec<(u64, u64)> {
        let target = f.state(d, c);
        let (eu, ev) = (
            if j == f.zero_index() { 1 } else { f.order() },
            if k == f.zero_index() { 1 } else { f.order() },
        );
        let mut out = Vec::new();
        for u in 0..eu {
            for v in 0..ev {
                if f.state(j, u) ^ f.state(k, v) == target {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[test]
    fn quartic_tables_match_brute_force_and_cyclotomic_numbers() {
        let f = factor("11111");
        let ctx = FieldContext::new(f.associate()).unwrap();
        let params = CyclotomicParams { e: 5, t: 3 };
        for d in 0..3 {
            for c in 0..5 {
                let table = LocalPairTable::by_lookup(&f, c, d);
                for j in 0..=3 {
                    for k in 0..=3 {
                        assert_eq!(table.get(j, k), brute(&f, c, d, j, k).as_slice());
                        if j < 3 && k < 3 {
                            let ji = (j as u64 + 3 - d as u64) % 3;
                            let ki = (k as u64 + 3 - d as u64) % 3;
                            assert_eq!(
                                table.get(j, k).len() as u64,
                                ctx.cyclotomic_number(ji, ki, params)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn zech_route_agrees_with_lookup() {
        for s in ["111", "1011", "10011", "100101", "1000011", "10001001"] {
            let f = factor(s);
            for c in 0..f.order() {
                assert_eq!(
                    LocalPairTable::from_zech(&f, c),
                    LocalPairTable::by_lookup(&f, c, 0)
                );
            }
            let table = LocalPairTable::new(&f, 0, 0);
            assert_eq!(table.get(0, 0).len() as u64, (1 << f.degree()) - 2);
        }
    }

    #[test]
    fn x_plus_one_has_empty_diagonal() {
        let f = factor("11");
        let table = LocalPairTable::new(&f, 0, 0);
        assert!(table.get(0, 0).is_empty());
        assert_eq!(table.get(1, 0), &[(0, 0)]);
        assert_eq!(table.get(0, 1), &[(0, 0)]);
        assert!(table.get(1, 1).is_empty());
    }

    #[test]
    fn non_primitive_tables_match_brute_force() {
        for s in ["1001001", "100111001", "1010111"] {
            let f = factor(s);
            let table = LocalPairTable::by_lookup(&f, 2, 1);
            for j in 0..=f.cycle_count() {
                for k in 0..=f.cycle_count() {
                    assert_eq!(
                        table.get(j, k),
                        brute(&f, 2, 1, j, k).as_slice(),
                        "{s} {j} {k}"
                    );
                }
            }
        }
    }
}
