//! Edge rings `R(G) = K[x_1..x_n] / I(G)` over the rationals and the
//! zero-divisor view of well-coveredness: for a cover by disjoint maximal
//! cliques `C_1..C_s`, the graph is well-covered iff every
//! `θ_i = Σ_{j ∈ C_i} x_j` is a non-zero-divisor.

mod ideal;
mod kernel;
mod monomial;
mod polynomial;
mod zero_divisor;

pub use ideal::{edge_ideal, is_zero_in_ring, MonomialIdeal};
pub use kernel::{kernel_zero_divisor_oracle, kernel_zero_divisor_oracle_default};
pub use monomial::{Monomial, SquareFreeMonomial};
pub use polynomial::{integer, multiply_and_reduce, rational, Coefficient, LinearForm, Polynomial};
pub use zero_divisor::{linear_zero_divisor_witness, monomial_annihilators};

use crate::enumeration::enumerate_maximal_independent_sets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::CliqueCover;

/// `θ_i`: the sum of the variables of part `i`.
pub fn theta(g: &Graph, cover: &CliqueCover, i: usize) -> Result<LinearForm> {
    let part = cover.cliques().get(i).ok_or(Error::IndexOutOfRange { index: i, len: cover.len() })?;
    LinearForm::sum_of(g.n(), *part)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    pub forms: Vec<LinearForm>,
    /// `(part index, annihilating monomial)` for every zero-divisor `θ_i`.
    pub witnesses: Vec<(usize, SquareFreeMonomial)>,
}

impl ThetaReport {
    /// Every `θ_i` is a non-zero-divisor.
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Runs the zero-divisor search on every `θ_i` of `cover`. The cover's
/// size must equal the size of some maximal independent set.
pub fn theta_regularity_check(g: &Graph, cover: &CliqueCover) -> Result<ThetaReport> {
    cover.validate(g)?;
    if !enumerate_maximal_independent_sets(g).has_size(cover.len()) {
        return Err(Error::ClassCondition { s: cover.len() });
    }
    let ideal = edge_ideal(g);
    let mut forms = Vec::with_capacity(cover.len());
    let mut witnesses = Vec::new();
    for i in 0..cover.len() {
        let form = theta(g, cover, i)?;
        if let Some(m) = linear_zero_divisor_witness(&form, &ideal)? {
            witnesses.push((i, m));
        }
        forms.push(form);
    }
    Ok(ThetaReport { forms, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::vertex_set::VertexSet;

    #[test]
    fn theta_examples() {
        let gc = uniformly_well_covered();
        let cover = CliqueCover::from_labels(&gc, "1,5,6;2,3,4").unwrap();
        assert_eq!(theta(&gc, &cover, 0).unwrap().to_string(), "x1 + x5 + x6");
        assert_eq!(theta(&gc, &cover, 2), Err(Error::IndexOutOfRange { index: 2, len: 2 }));

        let c6 = cycle(6);
        let cover = CliqueCover::from_labels(&c6, "1,2;3,4;5,6").unwrap();
        assert_eq!(theta(&c6, &cover, 0).unwrap().to_string(), "x1 + x2");

        let k4 = complete(4);
        let cover = CliqueCover::from_labels(&k4, "1,2,3,4").unwrap();
        assert_eq!(theta(&k4, &cover, 0).unwrap().to_string(), "x1 + x2 + x3 + x4");
    }

    #[test]
    fn regularity_examples() {
        let gc = uniformly_well_covered();
        let r = theta_regularity_check(&gc, &CliqueCover::from_labels(&gc, "1,5,6;2,3,4").unwrap()).unwrap();
        assert!(r.holds());

        let c6 = cycle(6);
        let r = theta_regularity_check(&c6, &CliqueCover::from_labels(&c6, "1,2;3,4;5,6").unwrap()).unwrap();
        assert!(!r.holds());
        assert_eq!(r.witnesses[0], (0, SquareFreeMonomial::new(VertexSet::from_labels("3,6").unwrap())));

        let c4 = cycle(4);
        assert!(theta_regularity_check(&c4, &CliqueCover::from_labels(&c4, "1,2;3,4").unwrap()).unwrap().holds());
    }
}
