use std::cmp::Ordering;
use std::fmt;

use crate::vertex_set::VertexSet;

/// A monomial `x_1^{a_1} ... x_n^{a_n}` given by its exponent vector.
///
/// Ordering is lexicographic with `x_1 ≻ x_2 ≻ ... ≻ x_n`: the monomial
/// with the larger exponent at the first differing variable is greater.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exponents: vec![0; nvars] }
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exponents[i] = 1;
        m
    }

    /// The square-free monomial with the given support.
    pub fn from_support(nvars: usize, support: VertexSet) -> Self {
        let mut m = Monomial::one(nvars);
        for i in support {
            m.exponents[i] = 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn support(&self) -> VertexSet {
        self.exponents.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn is_square_free(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// The square-free part.
    pub fn radical(&self) -> SquareFreeMonomial {
        SquareFreeMonomial::new(self.support())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect() }
    }

    pub fn times_variable(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exponents[i] += 1;
        m
    }

    /// All monomials of total degree `degree` in `nvars` variables, ascending.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        fn fill(exps: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
            if i + 1 == exps.len() {
                exps[i] = left;
                out.push(Monomial { exponents: exps.clone() });
                return;
            }
            for e in 0..=left {
                exps[i] = e;
                fill(exps, i + 1, left - e, out);
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        fill(&mut vec![0; nvars], 0, degree, &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exponents.cmp(&other.exponents)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A product of distinct variables, identified with its support.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SquareFreeMonomial {
    support: VertexSet,
}

impl SquareFreeMonomial {
    pub fn new(support: VertexSet) -> Self {
        SquareFreeMonomial { support }
    }

    pub fn support(self) -> VertexSet {
        self.support
    }

    pub fn degree(self) -> usize {
        self.support.len()
    }

    pub fn to_monomial(self, nvars: usize) -> Monomial {
        Monomial::from_support(nvars, self.support)
    }
}

impl fmt::Display for SquareFreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "1");
        }
        let vars: Vec<String> = self.support.iter().map(|i| format!("x{}", i + 1)).collect();
        write!(f, "{}", vars.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_prefers_earlier_variables() {
        let x1 = Monomial::new(vec![1, 0, 0]);
        let x2x3 = Monomial::new(vec![0, 1, 1]);
        let x2sq = Monomial::new(vec![0, 2, 0]);
        assert!(x1 > x2x3);
        assert!(x2sq > x2x3);
        assert!(Monomial::one(3) < x2x3);
    }

    #[test]
    fn degree_slices() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(6, 6).len(), 462);
        assert_eq!(Monomial::all_of_degree(2, 0), vec![Monomial::one(2)]);
        let slice = Monomial::all_of_degree(4, 3);
        assert!(slice.windows(2).all(|w| w[0] < w[1]));
        assert!(slice.iter().all(|m| m.degree() == 3));
    }

    #[test]
    fn radical_and_divisibility() {
        let m = Monomial::new(vec![2, 0, 1]);
        assert_eq!(m.radical().support(), [0, 2].into_iter().collect());
        assert!(Monomial::new(vec![1, 0, 1]).divides(&m));
        assert!(!Monomial::new(vec![0, 1, 0]).divides(&m));
        assert_eq!(m.to_string(), "x1^2*x3");
        assert_eq!(Monomial::one(2).to_string(), "1");
    }
}
