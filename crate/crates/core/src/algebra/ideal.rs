use std::fmt;

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// An ideal generated by monomials, kept with a minimal generating set
/// (no generator divides another), sorted descending in lex order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
    square_free: bool,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, generators: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|m| m.nvars() != nvars) {
            return Err(Error::VariableMismatch { left: nvars, right: bad.nvars() });
        }
        let mut kept: Vec<Monomial> = Vec::new();
        let mut sorted = generators;
        sorted.sort_by_key(|m| m.degree());
        for m in sorted {
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        let square_free = kept.iter().all(Monomial::is_square_free);
        Ok(MonomialIdeal { nvars, generators: kept, square_free })
    }

    /// The zero ideal.
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, generators: Vec::new(), square_free: true }
    }

    /// Square-free ideal from generator supports.
    pub fn from_supports(nvars: usize, supports: &[VertexSet]) -> Result<Self> {
        if let Some(bad) = supports.iter().find(|s| !s.is_subset(VertexSet::full(nvars))) {
            return Err(Error::VariableMismatch { left: nvars, right: bad.last().map_or(0, |v| v + 1) });
        }
        MonomialIdeal::new(nvars, supports.iter().map(|&s| Monomial::from_support(nvars, s)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_square_free(&self) -> bool {
        self.square_free
    }

    /// Supports of the generators (meaningful for square-free ideals).
    pub fn generator_supports(&self) -> Vec<VertexSet> {
        self.generators.iter().map(Monomial::support).collect()
    }

    /// `m ∈ I` iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// The ideal generated by `x_u x_v` over the edges `uv` of `g`.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let gens = g.edges().map(|(u, v)| Monomial::from_support(g.n(), VertexSet::singleton(u).with(v))).collect();
    MonomialIdeal::new(g.n(), gens).expect("edge monomials share the graph's variable count")
}

/// `m` is zero in `K[x]/I`.
pub fn is_zero_in_ring(m: &Monomial, ideal: &MonomialIdeal) -> bool {
    ideal.contains(m)
}
