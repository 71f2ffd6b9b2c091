use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::uni::UniPoly;
use crate::numeric::{ComplexInterval, Rational};

/// Sparse polynomial in a fixed number of variables.
///
/// Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose order is grevlex,
/// so the leading term is always the last entry. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::term(Monomial::var(nvars, index), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector has wrong arity");
            p.add_term(Monomial::new(e), c);
        }
        p
    }

    /// `Σ coefficients[k] · x_k`.
    pub fn linear(coefficients: &[Rational]) -> Self {
        let n = coefficients.len();
        let mut p = Self::zero(n);
        for (k, c) in coefficients.iter().enumerate() {
            p.add_term(Monomial::var(n, k), c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.last_key_value().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn remove_term(&mut self, m: &Monomial) -> Option<Rational> {
        self.terms.remove(m)
    }

    /// `self -= c · shift · other`, in place.
    pub fn sub_scaled_shifted(&mut self, c: &Rational, shift: &Monomial, other: &MultiPoly) {
        for (m, a) in &other.terms {
            self.add_term(m.mul(shift), -(c * a));
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, shift: &Monomial) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.mul(shift), a.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive_normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut factor = Rational::new(den_lcm, num_gcd);
        if self.leading_coeff().unwrap().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Exact value at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exponents()
                    .iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Substitutes a univariate polynomial for each variable.
    pub fn substitute(&self, images: &[UniPoly]) -> UniPoly {
        assert_eq!(images.len(), self.nvars);
        let mut acc = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for (e, img) in m.exponents().iter().zip(images) {
                if *e > 0 {
                    t = &t * &img.pow(*e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn display_with(&self, vars: &[impl AsRef<str>]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(if mag.is_integer() {
                    mag.numer().to_string()
                } else {
                    format!("{}/{}", mag.numer(), mag.denom())
                });
            }
            for (e, v) in m.exponents().iter().zip(vars) {
                match e {
                    0 => {}
                    1 => factors.push(v.as_ref().to_string()),
                    _ => factors.push(format!("{}^{}", v.as_ref(), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Encloses `p(ξ)` for every point `ξ` of the box (one complex interval per variable).
pub fn poly_eval_interval(p: &MultiPoly, point: &[ComplexInterval]) -> ComplexInterval {
    assert_eq!(point.len(), p.nvars(), "box arity must match variable count");
    let zero = ComplexInterval::real_point(Rational::zero());
    let mut powers: Vec<Vec<ComplexInterval>> = point
        .iter()
        .map(|b| vec![ComplexInterval::real_point(Rational::one()), b.clone()])
        .collect();
    let mut acc = zero;
    for (m, c) in p.terms() {
        let mut t = ComplexInterval::real_point(c.clone());
        for (k, &e) in m.exponents().iter().enumerate() {
            let e = e as usize;
            while powers[k].len() <= e {
                let next = powers[k].last().unwrap().mul(&point[k]);
                powers[k].push(next);
            }
            if e > 0 {
                t = t.mul(&powers[k][e]);
            }
        }
        acc = acc.add(&t);
    }
    acc
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|k| format!("x{k}")).collect();
        f.write_str(&self.display_with(&names))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}
