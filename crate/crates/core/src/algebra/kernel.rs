//! Brute-force annihilator search by exact linear algebra.
//!
//! Multiplication by a linear form `f` maps the span of degree-`k`
//! monomials that are nonzero in `K[x]/I` into degree `k + 1`. The map
//! respects the grading, so `f` has a nonzero annihilator of degree at most
//! `d` iff one of the graded pieces `k = 0..=d` has a nontrivial kernel.
//! Each piece is column-reduced over the rationals: columns are processed in
//! ascending monomial order and every image is reduced against the pivots
//! already found, keyed by their lex-greatest monomial, while the
//! combination of source columns is tracked alongside.

use std::collections::BTreeMap;

use num_traits::One;

use super::ideal::MonomialIdeal;
use super::monomial::Monomial;
use super::polynomial::{Coefficient, LinearForm, Polynomial};
use crate::error::{Error, Result};

struct Pivot {
    image: Polynomial,
    combination: Polynomial,
}

/// First nonzero `g` (monic, lowest degree first) of degree at most
/// `max_degree` with `f g = 0` in `K[x]/I`.
pub fn kernel_zero_divisor_oracle(f: &LinearForm, ideal: &MonomialIdeal, max_degree: u32) -> Result<Option<Polynomial>> {
    if f.nvars() != ideal.nvars() {
        return Err(Error::VariableMismatch { left: f.nvars(), right: ideal.nvars() });
    }
    let fp = f.to_polynomial();
    for degree in 0..=max_degree {
        if let Some(g) = graded_kernel_vector(&fp, ideal, degree) {
            return Ok(Some(g.monic()));
        }
    }
    Ok(None)
}

/// The oracle with its default degree bound: the number of variables,
/// which is complete for square-free ideals (any witness is square-free
/// and so has degree below the variable count). Non-square-free ideals have
/// no such bound and must call [`kernel_zero_divisor_oracle`] explicitly.
pub fn kernel_zero_divisor_oracle_default(f: &LinearForm, ideal: &MonomialIdeal) -> Result<Option<Polynomial>> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    kernel_zero_divisor_oracle(f, ideal, f.nvars() as u32)
}

fn graded_kernel_vector(fp: &Polynomial, ideal: &MonomialIdeal, degree: u32) -> Option<Polynomial> {
    let mut pivots: BTreeMap<Monomial, Pivot> = BTreeMap::new();
    for m in Monomial::all_of_degree(fp.nvars(), degree) {
        if ideal.contains(&m) {
            continue;
        }
        let source = Polynomial::term(m, Coefficient::one());
        let mut image = fp.mul(&source).reduce(ideal);
        let mut combination = source;
        loop {
            let Some((lead, lead_coeff)) = image.leading_term() else {
                return Some(combination);
            };
            match pivots.get(lead) {
                Some(pivot) => {
                    let pivot_coeff = pivot.image.coefficient(lead).expect("pivot leads with its key");
                    let factor = -(lead_coeff / pivot_coeff);
                    image.add_scaled(&pivot.image, &factor);
                    combination.add_scaled(&pivot.combination, &factor);
                }
                None => {
                    let lead = lead.clone();
                    pivots.insert(lead, Pivot { image, combination });
                    break;
                }
            }
        }
    }
    None
}
