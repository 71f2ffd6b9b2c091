//! Exact linear algebra in the quotient algebra `A = Q[x_1..x_n]/(P)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::groebner::{normal_form, GroebnerBasis, MonomialBasis};
use crate::numeric::Rational;
use crate::polynomial::{MultiPoly, UniPoly};

/// Dense square matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for k in 0..dim {
            m.set(k, k, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).fold(Rational::zero(), |acc, k| acc + self.get(k, k))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let m = self.get(i, j);
                if !m.is_zero() {
                    *o += vi * m;
                }
            }
        }
        out
    }

    /// `p(M)` by Horner.
    pub fn eval_poly(&self, p: &UniPoly) -> Self {
        let mut acc = Self::zero(self.dim);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Self::identity(self.dim).scale(c));
        }
        acc
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Coordinates of a normal form in the monomial basis.
pub fn coordinates(f: &MultiPoly, basis: &MonomialBasis) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); basis.len()];
    for (m, c) in f.terms() {
        let k = basis
            .index_of(m)
            .expect("normal form must be supported on the monomial basis");
        v[k] = c.clone();
    }
    v
}

/// Row `k` holds the coordinates of `NF(f · B[k])`.
pub fn mult_matrix(f: &MultiPoly, g: &GroebnerBasis, basis: &MonomialBasis) -> RationalMatrix {
    let rows = basis
        .monomials()
        .iter()
        .map(|b| coordinates(&normal_form(&f.mul_monomial(b), g), basis))
        .collect();
    RationalMatrix::from_rows(rows)
}

/// Multiplication matrices of the coordinate functions `x_1, …, x_n`.
pub fn coordinate_matrices(g: &GroebnerBasis, basis: &MonomialBasis) -> Vec<RationalMatrix> {
    (0..g.nvars())
        .map(|k| mult_matrix(&MultiPoly::var(g.nvars(), k), g, basis))
        .collect()
}

/// `M_f` for the linear form `Σ c_k x_k`, assembled from coordinate matrices.
pub fn linear_form_matrix(coeffs: &[Rational], coordinate: &[RationalMatrix]) -> RationalMatrix {
    assert_eq!(coeffs.len(), coordinate.len());
    let dim = coordinate.first().map_or(0, RationalMatrix::dim);
    coeffs
        .iter()
        .zip(coordinate)
        .filter(|(c, _)| !c.is_zero())
        .fold(RationalMatrix::zero(dim), |acc, (c, m)| acc.add(&m.scale(c)))
}

/// Minimal polynomial of `M` relative to the vector `start`: the monic `p` of
/// least degree with `start · p(M) = 0`, returned primitive-normalized.
pub fn krylov_minimal_polynomial(m: &RationalMatrix, start: &[Rational]) -> UniPoly {
    let n = m.dim();
    // Each echelon row keeps its pivot, the reduced vector and its expression
    // as a combination of the Krylov vectors v_0..v_j.
    let mut echelon: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
    let mut v = start.to_vec();
    for j in 0..=n {
        let mut r = v.clone();
        let mut combo = vec![Rational::zero(); j + 1];
        combo[j] = Rational::one();
        for (pivot, row, rc) in &echelon {
            let c = r[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(row) {
                *x -= &c * y;
            }
            for (x, y) in combo.iter_mut().zip(rc) {
                *x -= &c * y;
            }
        }
        match r.iter().position(|x| !x.is_zero()) {
            None => return UniPoly::new(combo).primitive_normalize().expect("nonzero combination"),
            Some(p) => {
                let inv = r[p].recip();
                for x in r.iter_mut() {
                    *x *= &inv;
                }
                for x in combo.iter_mut() {
                    *x *= &inv;
                }
                echelon.push((p, r, combo));
            }
        }
        v = m.apply_row(&v);
    }
    unreachable!("a Krylov sequence in dimension {n} is dependent after {n} steps")
}

/// Generator of `{p : p(f) ∈ (G)}`, primitive-normalized.
pub fn eliminant(f: &MultiPoly, g: &GroebnerBasis, basis: &MonomialBasis) -> UniPoly {
    eliminant_of_matrix(&mult_matrix(f, g, basis), basis)
}

/// Minimal polynomial of `M` on the coset of `1`.
pub fn eliminant_of_matrix(m: &RationalMatrix, basis: &MonomialBasis) -> UniPoly {
    let mut one = vec![Rational::zero(); basis.len()];
    one[basis
        .index_of(&crate::polynomial::Monomial::one(
            basis.monomials().first().map_or(0, |b| b.nvars()),
        ))
        .expect("1 is a standard monomial")] = Rational::one();
    krylov_minimal_polynomial(m, &one)
}

/// Characteristic polynomial `det(λI − M)` by Faddeev–LeVerrier. Monic.
pub fn char_poly(m: &RationalMatrix) -> UniPoly {
    let n = m.dim();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut mk = RationalMatrix::zero(n);
    for k in 1..=n {
        mk = m.mul(&mk).add(&RationalMatrix::identity(n).scale(&c[n - k + 1]));
        c[n - k] = -m.mul(&mk).trace() / Rational::from_integer(k.into());
    }
    UniPoly::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, monomial_basis};
    use crate::numeric::{int, rat};
    use crate::polynomial::parse_polynomial;

    fn sphere_plane() -> (GroebnerBasis, MonomialBasis) {
        let v: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let p: Vec<MultiPoly> = ["x^2 + y^2 + z^2 - 3", "x^2 + 2*y^2 - 3*z + 1", "x + y - z"]
            .iter()
            .map(|s| parse_polynomial(s, &v, 1).unwrap())
            .collect();
        let g = buchberger(&p);
        let b = monomial_basis(&g).unwrap();
        (g, b)
    }

    #[test]
    fn matrix_of_x() {
        let (g, b) = sphere_plane();
        let m = mult_matrix(&MultiPoly::var(3, 0), &g, &b);
        let expect = RationalMatrix::from_rows(vec![
            vec![int(0), int(1), int(0), int(0)],
            vec![int(0), int(0), int(0), int(1)],
            vec![int(2), rat(-3, 2), rat(-3, 2), rat(-1, 2)],
            vec![int(5), rat(-5, 6), rat(-25, 6), rat(-3, 2)],
        ]);
        assert_eq!(m, expect);
        assert_eq!(mult_matrix(&MultiPoly::one(3), &g, &b), RationalMatrix::identity(4));
        assert!(mult_matrix(&MultiPoly::zero(3), &g, &b).is_zero());
    }

    #[test]
    fn eliminants() {
        let (g, b) = sphere_plane();
        let cases = [
            (vec![int(1), int(0), int(0)], vec![5, -60, 6, 18, 6]),
            (vec![int(0), int(1), int(0)], vec![-29, -66, 60, 0, 12]),
            (vec![int(0), int(0), int(1)], vec![121, -132, -36, 36, 12]),
            (vec![int(1), rat(1, 20), int(0)], vec![863337, -6119640, 360000, 1920000, 640000]),
        ];
        for (form, expect) in cases {
            let f = MultiPoly::linear(&form);
            assert_eq!(eliminant(&f, &g, &b), UniPoly::from_ints(&expect));
        }
    }

    #[test]
    fn char_poly_small() {
        let id = RationalMatrix::identity(3);
        let lm1 = UniPoly::from_ints(&[-1, 1]);
        assert_eq!(char_poly(&id), lm1.pow(3));
        assert_eq!(char_poly(&RationalMatrix::zero(2)), UniPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn char_poly_matches_eliminant_for_separating_form() {
        let (g, b) = sphere_plane();
        let mats = coordinate_matrices(&g, &b);
        let m = linear_form_matrix(&[int(1), rat(1, 20), rat(1, 40)], &mats);
        let cp = char_poly(&m);
        let el = eliminant_of_matrix(&m, &b);
        assert_eq!(cp.primitive_normalize().unwrap(), el);
        assert!(m.eval_poly(&el).is_zero());
    }
}
