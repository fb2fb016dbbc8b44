use crate::adjacency::{
    self, represent_special_state, AdjacencyGraph, ConjugatePair, LocalPairTable, SpecialStateRep,
};
use crate::cycles::{enumerate_cycles, CycleSet, FactorData};
use crate::error::{Error, Result};
use crate::gf2::{is_irreducible, BinaryPolynomial};
use crate::lfsr::{LfsrSpec, StateBasis, MAX_STAGES};

/// Default cap on the total degree for full-graph work.
pub const DEFAULT_MAX_DEGREE: usize = 24;

/// Everything derived from a factored characteristic polynomial that the
/// adjacency graph and the joiner need.
#[derive(Clone, Debug)]
pub struct Construction {
    factors: Vec<FactorData>,
    n: usize,
    spec: LfsrSpec,
    basis: StateBasis,
    cycles: CycleSet,
    special: SpecialStateRep,
    locals: Vec<LocalPairTable>,
}

/// Check a factor list: nonempty, each factor irreducible with nonzero
/// constant term, no repeats, total degree at least 2 and at most `cap`.
pub fn validate_factors(polys: &[BinaryPolynomial], cap: Option<usize>) -> Result<usize> {
    if polys.is_empty() {
        return Err(Error::NoFactors);
    }
    for (i, &p) in polys.iter().enumerate() {
        if p.deg() == 0 || !p.constant_term() {
            return Err(Error::InvalidFactor(p));
        }
        if !is_irreducible(p) {
            return Err(Error::Reducible(p));
        }
        if polys[..i].contains(&p) {
            return Err(Error::RepeatedFactor(p));
        }
    }
    let n: usize = polys.iter().map(|p| p.deg()).sum();
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    if n > MAX_STAGES {
        return Err(Error::DegreeOverflow(n));
    }
    if let Some(cap) = cap {
        if n > cap {
            return Err(Error::DegreeCap { n, cap });
        }
    }
    Ok(n)
}

impl Construction {
    /// Build with the default degree cap.
    pub fn new(polys: &[BinaryPolynomial]) -> Result<Self> {
        Self::with_cap(polys, Some(DEFAULT_MAX_DEGREE))
    }

    pub fn with_cap(polys: &[BinaryPolynomial], cap: Option<usize>) -> Result<Self> {
        let n = validate_factors(polys, cap)?;
        let factors = polys
            .iter()
            .map(|&p| FactorData::new(p))
            .collect::<Result<Vec<_>>>()?;
        let product = polys
            .iter()
            .try_fold(BinaryPolynomial::ONE, |acc, &p| acc.mul(p))?;
        let spec = LfsrSpec::new(product)?;
        let basis = StateBasis::new(polys)?;
        let cycles = enumerate_cycles(&factors, &basis);
        let special = represent_special_state(&basis, &factors)?;
        let locals = factors
            .iter()
            .zip(special.blocks())
            .map(|(f, &(c, d))| LocalPairTable::new(f, c, d))
            .collect();
        Ok(Construction {
            factors,
            n,
            spec,
            basis,
            cycles,
            special,
            locals,
        })
    }

    pub fn parse(factors: &[&str]) -> Result<Self> {
        let polys = factors
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<BinaryPolynomial>>>()?;
        Self::new(&polys)
    }

    pub fn stages(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[FactorData] {
        &self.factors
    }

    /// The register with the product characteristic polynomial.
    pub fn spec(&self) -> &LfsrSpec {
        &self.spec
    }

    pub fn basis(&self) -> &StateBasis {
        &self.basis
    }

    pub fn cycles(&self) -> &CycleSet {
        &self.cycles
    }

    pub fn psi(&self) -> usize {
        self.cycles.len()
    }

    pub fn special(&self) -> &SpecialStateRep {
        &self.special
    }

    pub fn locals(&self) -> &[LocalPairTable] {
        &self.locals
    }

    pub fn representative(&self, i: usize) -> u64 {
        self.cycles.representative(i, &self.factors, &self.basis)
    }

    pub fn cycle_of(&self, state: u64) -> usize {
        self.cycles.cycle_of(state, &self.factors, &self.basis)
    }

    /// All conjugate pairs `(v, v + S)` with `v` on cycle `a` and `v + S`
    /// on cycle `b`.
    pub fn conjugate_pairs(&self, a: usize, b: usize) -> Vec<ConjugatePair> {
        adjacency::conjugate_pairs(self, a, b, None)
    }

    pub fn first_conjugate_pair(&self, a: usize, b: usize) -> Option<ConjugatePair> {
        adjacency::conjugate_pairs(self, a, b, Some(1)).pop()
    }

    pub fn build_graph(&self) -> AdjacencyGraph {
        adjacency::build_graph(self)
    }
}
