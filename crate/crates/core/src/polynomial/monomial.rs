use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Exponent vector over a fixed, ordered list of variables.
///
/// `Ord` is graded reverse lexicographic with `x_1 < x_2 < … < x_n`: higher
/// total degree wins, and among equal degrees the monomial with the smaller
/// exponent in the first differing variable (scanning from `x_1`) is larger.
/// With variables `(x, y, z)` this is the usual grevlex order for `z > y > x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some(k)` when this is `x_k^e` with `e >= 1`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        match (nonzero.next(), nonzero.next()) {
            (Some((k, _)), None) => Some(k),
            _ => None,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0) {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::ArityMismatch(a.nvars(), b.nvars()));
    }
    Ok(a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn graded_first() {
        assert_eq!(grevlex_cmp(&m(&[3, 0, 0]), &m(&[0, 1, 1])).unwrap(), Ordering::Greater);
        assert_eq!(grevlex_cmp(&m(&[1, 1, 0]), &m(&[1, 1, 0])).unwrap(), Ordering::Equal);
    }

    #[test]
    fn last_variable_is_largest() {
        // (x, y, z) with z > y > x
        assert!(m(&[0, 0, 1]) > m(&[0, 1, 0]));
        assert!(m(&[0, 1, 0]) > m(&[1, 0, 0]));
        assert!(m(&[1, 1, 0]) > m(&[2, 0, 0]));
        assert!(m(&[0, 2, 0]) > m(&[1, 1, 0]));
        // grevlex, not lex: x*z < y^2
        assert!(m(&[1, 0, 1]) < m(&[0, 2, 0]));
    }

    #[test]
    fn arity_mismatch() {
        assert_eq!(
            grevlex_cmp(&m(&[1]), &m(&[1, 0])),
            Err(Error::ArityMismatch(1, 2))
        );
    }

    #[test]
    fn pure_powers() {
        assert_eq!(m(&[0, 3, 0]).pure_power_of(), Some(1));
        assert_eq!(m(&[1, 3, 0]).pure_power_of(), None);
        assert_eq!(m(&[0, 0, 0]).pure_power_of(), None);
    }
}
