use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ideal::MonomialIdeal;
use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Exact coefficients; the base field is the rationals.
pub type Coefficient = BigRational;

pub fn rational(numer: i64, denom: i64) -> Coefficient {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(value))
}

/// A polynomial in canonical form: merged terms, no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::term(Monomial::one(nvars), Coefficient::one())
    }

    pub fn term(m: Monomial, c: Coefficient) -> Self {
        let mut p = Polynomial::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Coefficient)>) -> Result<Self> {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::VariableMismatch { left: nvars, right: m.nvars() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Coefficient> {
        self.terms.get(m)
    }

    /// Lex-greatest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Polynomial, factor: &Coefficient) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &Coefficient) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        out.add_scaled(self, factor);
        out
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::one());
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    /// Drops every term lying in `ideal` (the normal form modulo a monomial ideal).
    pub fn reduce(&self, ideal: &MonomialIdeal) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| !ideal.contains(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Coefficient)>,
) -> fmt::Result {
    let mut first = true;
    for (name, c) in terms {
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        let magnitude = c.abs();
        if magnitude.is_one() {
            write!(f, "{name}")?;
        } else if name == "1" {
            write!(f, "{magnitude}")?;
        } else {
            write!(f, "{magnitude}*{name}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Terms are printed from the lex-greatest down.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(m, c)| (m.to_string(), c)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(f · g) mod I`, exactly.
pub fn multiply_and_reduce(f: &Polynomial, g: &Polynomial, ideal: &MonomialIdeal) -> Result<Polynomial> {
    for nvars in [g.nvars(), ideal.nvars()] {
        if nvars != f.nvars() {
            return Err(Error::VariableMismatch { left: f.nvars(), right: nvars });
        }
    }
    Ok(f.mul(g).reduce(ideal))
}

/// A nonzero homogeneous linear polynomial `Σ a_j x_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearForm {
    nvars: usize,
    coefficients: BTreeMap<usize, Coefficient>,
}

impl LinearForm {
    /// Zero coefficients are dropped; at least one must remain.
    pub fn new(nvars: usize, coefficients: impl IntoIterator<Item = (usize, Coefficient)>) -> Result<Self> {
        let mut map: BTreeMap<usize, Coefficient> = BTreeMap::new();
        for (i, c) in coefficients {
            if i >= nvars {
                return Err(Error::IndexOutOfRange { index: i, len: nvars });
            }
            *map.entry(i).or_insert_with(Coefficient::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            return Err(Error::InvalidAlgebra("linear form has no nonzero coefficient".into()));
        }
        Ok(LinearForm { nvars, coefficients: map })
    }

    /// Sum of the variables in `support`.
    pub fn sum_of(nvars: usize, support: VertexSet) -> Result<Self> {
        LinearForm::new(nvars, support.iter().map(|i| (i, Coefficient::one())))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn support(&self) -> VertexSet {
        self.coefficients.keys().copied().collect()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (usize, &Coefficient)> {
        self.coefficients.iter().map(|(&i, c)| (i, c))
    }

    pub fn scale(&self, factor: &Coefficient) -> Result<Self> {
        LinearForm::new(self.nvars, self.coefficients.iter().map(|(&i, c)| (i, c * factor)))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero(self.nvars);
        for (&i, c) in &self.coefficients {
            p.add_term(Monomial::variable(self.nvars, i), c.clone());
        }
        p
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coefficients.iter().map(|(i, c)| (format!("x{}", i + 1), c)))
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ideal::edge_ideal;
    use crate::fixtures::cycle;

    fn var(nvars: usize, i: usize) -> Polynomial {
        Polynomial::term(Monomial::variable(nvars, i), integer(1))
    }

    fn fat_ideal() -> MonomialIdeal {
        MonomialIdeal::new(2, vec![Monomial::new(vec![2, 0]), Monomial::new(vec![1, 1]), Monomial::new(vec![0, 2])])
            .unwrap()
    }

    #[test]
    fn canonical_form_merges_and_drops_zeros() {
        let x = var(2, 0);
        let p = x.add(&x.scale(&integer(-1)));
        assert!(p.is_zero());
        assert_eq!(x.add(&x).to_string(), "2*x1");
    }

    #[test]
    fn multiply_and_reduce_examples() {
        let c6 = edge_ideal(&cycle(6));
        let f = var(6, 0).add(&var(6, 1));
        assert_eq!(multiply_and_reduce(&f, &Polynomial::one(6), &c6).unwrap(), f.reduce(&c6));

        let i = fat_ideal();
        let plus = var(2, 0).add(&var(2, 1));
        let minus = var(2, 0).add(&var(2, 1).scale(&integer(-1)));
        assert!(multiply_and_reduce(&plus, &minus, &i).unwrap().is_zero());

        let x3x6 = Polynomial::term(Monomial::from_support(6, [2, 5].into_iter().collect()), integer(1));
        assert!(multiply_and_reduce(&f, &x3x6, &c6).unwrap().is_zero());

        assert!(multiply_and_reduce(&f, &Polynomial::one(3), &c6).is_err());
    }

    #[test]
    fn linear_form_display_and_validation() {
        let f = LinearForm::new(3, [(0, integer(1)), (2, rational(-2, 3))]).unwrap();
        assert_eq!(f.to_string(), "x1 - 2/3*x3");
        assert_eq!(f.support(), [0, 2].into_iter().collect());
        assert!(LinearForm::new(3, [(0, integer(0))]).is_err());
        assert!(LinearForm::new(3, [(3, integer(1))]).is_err());
        assert_eq!(LinearForm::sum_of(6, [0, 4, 5].into_iter().collect()).unwrap().to_string(), "x1 + x5 + x6");
    }
}
