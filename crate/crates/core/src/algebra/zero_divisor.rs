//! Zero-divisor tests for linear forms over square-free monomial quotients.
//!
//! Over `R = K[x]/I` with `I` square-free, a linear form `f` is a
//! zero-divisor exactly when some nonzero square-free monomial `m` has
//! `m f = 0`. Since the products `m x_j` are distinct monomials, `m f = 0`
//! means `m x_j ∈ I` for every `j` in the support of `f`. If `m` contained
//! some `x_j` of that support, `m x_j` would share `m`'s radical and stay
//! outside `I`, so the search only considers `m` disjoint from the support.

use super::ideal::MonomialIdeal;
use super::monomial::{Monomial, SquareFreeMonomial};
use super::polynomial::{LinearForm, Polynomial};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

struct Search<'a> {
    generators: &'a [VertexSet],
    targets: VertexSet,
    outside: Vec<usize>,
}

impl Search<'_> {
    fn in_ideal(&self, support: VertexSet) -> bool {
        self.generators.iter().any(|g| g.is_subset(support))
    }

    /// `m x_j ∈ I` for a monomial `m ∉ I` with the given support.
    fn annihilates(&self, chosen: VertexSet, j: usize) -> bool {
        self.in_ideal(chosen.with(j))
    }

    /// Some generator through `j` fits inside `chosen ∪ available ∪ {j}`.
    fn can_annihilate(&self, pool: VertexSet, j: usize) -> bool {
        self.generators.iter().any(|g| g.contains(j) && g.without(j).is_subset(pool))
    }

    fn run(&self, next: usize, chosen: VertexSet) -> Option<VertexSet> {
        let pending: Vec<usize> = self.targets.iter().filter(|&j| !self.annihilates(chosen, j)).collect();
        if pending.is_empty() {
            return Some(chosen);
        }
        if next == self.outside.len() {
            return None;
        }
        let available: VertexSet =
            self.outside[next..].iter().copied().filter(|&v| !self.in_ideal(chosen.with(v))).collect();
        if !pending.iter().all(|&j| self.can_annihilate(chosen | available, j)) {
            return None;
        }
        let v = self.outside[next];
        if available.contains(v) {
            if let Some(found) = self.run(next + 1, chosen.with(v)) {
                return Some(found);
            }
        }
        self.run(next + 1, chosen)
    }
}

/// A nonzero square-free monomial `m` with `m f = 0` in `K[x]/I`, or `None`
/// when `f` is a non-zero-divisor.
///
/// The search decides the variables outside `f`'s support in ascending
/// order, trying inclusion first, and prunes exactly like
/// [`crate::recognition::has_independent_dominating_set_outside`]; on an edge
/// ideal the two return the same set.
pub fn linear_zero_divisor_witness(f: &LinearForm, ideal: &MonomialIdeal) -> Result<Option<SquareFreeMonomial>> {
    if f.nvars() != ideal.nvars() {
        return Err(Error::VariableMismatch { left: f.nvars(), right: ideal.nvars() });
    }
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    let generators = ideal.generator_supports();
    let support = f.support();
    // Variables lying in I vanish in R; f must keep at least one.
    let targets: VertexSet =
        support.iter().filter(|&j| !generators.iter().any(|g| *g == VertexSet::singleton(j))).collect();
    if targets.is_empty() {
        return Err(Error::ZeroInRing);
    }
    if generators.iter().any(|g| g.is_empty()) {
        return Err(Error::ZeroInRing);
    }
    let outside = (VertexSet::full(f.nvars()) - support).iter().collect();
    let search = Search { generators: &generators, targets, outside };
    Ok(search.run(0, VertexSet::EMPTY).map(SquareFreeMonomial::new))
}

/// Every monomial `m ∉ I` of degree at most `max_degree` with `m f = 0`.
/// Brute force over all exponent vectors; works for any monomial ideal.
pub fn monomial_annihilators(f: &LinearForm, ideal: &MonomialIdeal, max_degree: u32) -> Vec<Monomial> {
    let fp = f.to_polynomial();
    let mut out = Vec::new();
    for degree in 0..=max_degree {
        for m in Monomial::all_of_degree(f.nvars(), degree) {
            if ideal.contains(&m) {
                continue;
            }
            let product = fp.mul(&Polynomial::term(m.clone(), num_traits::One::one())).reduce(ideal);
            if product.is_zero() {
                out.push(m);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ideal::edge_ideal;
    use crate::algebra::polynomial::integer;
    use crate::fixtures::*;

    fn sum(nvars: usize, labels: &[usize]) -> LinearForm {
        LinearForm::sum_of(nvars, labels.iter().map(|l| l - 1).collect()).unwrap()
    }

    fn support(labels: &[usize]) -> VertexSet {
        labels.iter().map(|l| l - 1).collect()
    }

    #[test]
    fn witness_examples() {
        let c6 = edge_ideal(&cycle(6));
        let w = linear_zero_divisor_witness(&sum(6, &[1, 2]), &c6).unwrap().unwrap();
        assert_eq!(w.support(), support(&[3, 6]));

        let gc = edge_ideal(&uniformly_well_covered());
        assert_eq!(linear_zero_divisor_witness(&sum(6, &[1, 5, 6]), &gc).unwrap(), None);

        let k2 = edge_ideal(&complete(2));
        let w = linear_zero_divisor_witness(&sum(2, &[1]), &k2).unwrap().unwrap();
        assert_eq!(w.support(), support(&[2]));
    }

    #[test]
    fn witness_rejects_bad_input() {
        let fat = MonomialIdeal::new(2, vec![Monomial::new(vec![2, 0])]).unwrap();
        assert_eq!(linear_zero_divisor_witness(&sum(2, &[1]), &fat), Err(Error::NotSquareFree));

        let kills_x1 = MonomialIdeal::from_supports(2, &[VertexSet::singleton(0)]).unwrap();
        assert_eq!(linear_zero_divisor_witness(&sum(2, &[1]), &kills_x1), Err(Error::ZeroInRing));
        // x1 + x2 survives as x2.
        assert!(linear_zero_divisor_witness(&sum(2, &[1, 2]), &kills_x1).is_ok());

        assert!(linear_zero_divisor_witness(&sum(3, &[1]), &edge_ideal(&cycle(4))).is_err());
    }

    #[test]
    fn witness_annihilates_and_is_nonzero() {
        let ideal = MonomialIdeal::from_supports(5, &[support(&[1, 2, 3]), support(&[3, 4]), support(&[2, 5])]).unwrap();
        let f = LinearForm::new(5, [(0, integer(2)), (1, integer(-1))]).unwrap();
        // x1 m ∈ I needs x3 x4 | m, which puts m itself in I.
        assert_eq!(linear_zero_divisor_witness(&f, &ideal).unwrap(), None);

        let ideal =
            MonomialIdeal::from_supports(5, &[support(&[1, 2, 3]), support(&[3, 4]), support(&[2, 5]), support(&[1, 5])])
                .unwrap();
        let w = linear_zero_divisor_witness(&f, &ideal).unwrap().unwrap();
        let m = w.to_monomial(5);
        assert!(!ideal.contains(&m));
        assert!(f.to_polynomial().mul(&Polynomial::term(m, integer(1))).reduce(&ideal).is_zero());
        assert_eq!(w.support(), support(&[3, 5]));
    }

    #[test]
    fn monomial_annihilators_over_fat_ideal() {
        let fat = MonomialIdeal::new(2, vec![Monomial::new(vec![2, 0]), Monomial::new(vec![1, 1]), Monomial::new(vec![0, 2])])
            .unwrap();
        let found = monomial_annihilators(&sum(2, &[1, 2]), &fat, 3);
        assert_eq!(found, vec![Monomial::new(vec![0, 1]), Monomial::new(vec![1, 0])]);
    }
}
