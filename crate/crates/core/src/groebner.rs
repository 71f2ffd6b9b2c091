//! Reduced Gröbner bases under grevlex, normal forms, and the monomial basis
//! of the quotient algebra.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::polynomial::{Monomial, MultiPoly};

/// Reduced Gröbner basis under grevlex. Generators are primitive-normalized
/// and sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    generators: Vec<MultiPoly>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    /// True when the ideal is `(1)`.
    pub fn is_trivial(&self) -> bool {
        self.generators.iter().any(|g| !g.is_zero() && g.is_constant())
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        normal_form(f, self).is_zero()
    }
}

/// Standard monomials of a zero-dimensional ideal, ascending in grevlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    monomials: Vec<Monomial>,
}

impl MonomialBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials.binary_search(m).ok()
    }
}

fn reduce(f: &MultiPoly, gens: &[MultiPoly]) -> MultiPoly {
    let mut p = f.clone();
    let mut r = MultiPoly::zero(f.nvars());
    while let Some((m, c)) = p.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = gens
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading_term().unwrap();
                let shift = m.div(lm);
                let factor = &c / lc;
                p.sub_scaled_shifted(&factor, &shift, g);
            }
            None => {
                p.remove_term(&m);
                r.add_term(m, c);
            }
        }
    }
    r
}

/// Remainder of `f` on division by `g`. Supported only on standard monomials.
pub fn normal_form(f: &MultiPoly, g: &GroebnerBasis) -> MultiPoly {
    reduce(f, &g.generators)
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (mf, cf) = f.leading_term().unwrap();
    let (mg, cg) = g.leading_term().unwrap();
    let l = mf.lcm(mg);
    let mut s = f.mul_monomial(&l.div(mf)).scale(&cf.recip());
    s.sub_scaled_shifted(&cg.recip(), &l.div(mg), g);
    s
}

/// Ordered so that iteration picks the pair with the smallest lcm first.
type Pair = (Monomial, usize, usize);

fn pair(gens: &[MultiPoly], i: usize, j: usize) -> Pair {
    let (i, j) = (i.min(j), i.max(j));
    let l = gens[i]
        .leading_monomial()
        .unwrap()
        .lcm(gens[j].leading_monomial().unwrap());
    (l, i, j)
}

fn chain_criterion(gens: &[MultiPoly], pending: &HashSet<(usize, usize)>, p: &Pair) -> bool {
    let (l, i, j) = p;
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    (0..gens.len()).any(|k| {
        k != *i
            && k != *j
            && gens[k].leading_monomial().unwrap().divides(l)
            && !pending.contains(&key(*i, k))
            && !pending.contains(&key(*j, k))
    })
}

/// Buchberger's algorithm with the coprime and chain criteria and the normal
/// selection strategy. Returns the reduced basis; the unit ideal gives `{1}`.
pub fn buchberger(polys: &[MultiPoly]) -> GroebnerBasis {
    let nvars = polys.first().map_or(0, MultiPoly::nvars);
    let mut gens: Vec<MultiPoly> = Vec::new();
    for p in polys {
        assert_eq!(p.nvars(), nvars, "all polynomials must share the variable list");
        let r = reduce(p, &gens);
        if !r.is_zero() {
            gens.push(r.primitive_normalize());
        }
    }
    if gens.iter().any(MultiPoly::is_constant) {
        return GroebnerBasis {
            nvars,
            generators: vec![MultiPoly::one(nvars)],
        };
    }

    let mut queue: BTreeSet<Pair> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..gens.len() {
        for i in 0..j {
            let p = pair(&gens, i, j);
            pending.insert((p.1, p.2));
            queue.insert(p);
        }
    }

    while let Some(p) = queue.pop_first() {
        pending.remove(&(p.1, p.2));
        let (fi, fj) = (&gens[p.1], &gens[p.2]);
        if fi
            .leading_monomial()
            .unwrap()
            .is_coprime(fj.leading_monomial().unwrap())
        {
            continue;
        }
        if chain_criterion(&gens, &pending, &p) {
            continue;
        }
        let h = reduce(&s_polynomial(fi, fj), &gens);
        if h.is_zero() {
            continue;
        }
        let h = h.primitive_normalize();
        if h.is_constant() {
            return GroebnerBasis {
                nvars,
                generators: vec![MultiPoly::one(nvars)],
            };
        }
        gens.push(h);
        let k = gens.len() - 1;
        for i in 0..k {
            let q = pair(&gens, i, k);
            pending.insert((q.1, q.2));
            queue.insert(q);
        }
    }

    GroebnerBasis {
        nvars,
        generators: interreduce(gens),
    }
}

fn interreduce(gens: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let mut minimal: Vec<MultiPoly> = Vec::new();
    let mut sorted = gens;
    sorted.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for g in sorted {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(reduce(&minimal[k], &others).primitive_normalize());
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    reduced
}

/// Monomials outside the leading-term staircase, sorted ascending.
pub fn monomial_basis(g: &GroebnerBasis) -> Result<MonomialBasis> {
    if g.is_trivial() {
        return Err(Error::TrivialIdeal);
    }
    let n = g.nvars();
    let lms = g.leading_monomials();
    for k in 0..n {
        if !lms.iter().any(|m| m.pure_power_of() == Some(k)) {
            return Err(Error::NotZeroDimensional(k));
        }
    }
    let standard = |m: &Monomial| !lms.iter().any(|l| l.divides(m));
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut stack = vec![Monomial::one(n)];
    while let Some(m) = stack.pop() {
        if !standard(&m) || !seen.insert(m.clone()) {
            continue;
        }
        for k in 0..n {
            stack.push(m.mul(&Monomial::var(n, k)));
        }
    }
    Ok(MonomialBasis {
        monomials: seen.into_iter().collect(),
    })
}

/// Whether every S-polynomial of `g` reduces to zero.
pub fn is_groebner(g: &GroebnerBasis) -> bool {
    let gens = g.generators();
    (0..gens.len()).all(|j| (0..j).all(|i| reduce(&s_polynomial(&gens[i], &gens[j]), gens).is_zero()))
}
