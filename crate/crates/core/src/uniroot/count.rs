//! Exact root counting in rectangles by the argument principle.
//!
//! Along an edge `z(t) = z0 + δ t`, `t ∈ [0, 1]`, write `p(z(t)) = R(t) + i I(t)`.
//! The winding number of `p` around the boundary equals `−½ Σ Ind(I/R)`, where
//! each Cauchy index is read off a generalized Sturm sequence of `(R, I)` with
//! half-weight variations at points where exactly one neighbour vanishes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::intpoly::{self, IntPoly};
use crate::error::{Error, Result};
use crate::numeric::{ComplexInterval, ComplexRationalPoint, Rational};

/// `(R, I)` with `D^n p(z0 + δ t) = R + i I` for a positive integer `D`.
pub(crate) fn edge_polys(p: &IntPoly, z0: &ComplexRationalPoint, delta: &ComplexRationalPoint) -> (IntPoly, IntPoly) {
    let den = [&z0.re, &z0.im, &delta.re, &delta.im]
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let int = |q: &Rational| (q * Rational::from_integer(den.clone())).to_integer();
    let (a, b, c, d) = (int(&z0.re), int(&z0.im), int(&delta.re), int(&delta.im));
    let n = p.len().saturating_sub(1);
    let mut re: IntPoly = Vec::new();
    let mut im: IntPoly = Vec::new();
    let mut dpow = BigInt::one();
    let mut dpows = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        dpows.push(dpow.clone());
        dpow *= &den;
    }
    for (k, coeff) in p.iter().enumerate().rev() {
        // (re + i im)(a + c t + i (b + d t))
        let nre = intpoly::add(&intpoly::mul_linear(&re, &a, &c), &intpoly::mul_linear(&im, &-&b, &-&d));
        let nim = intpoly::add(&intpoly::mul_linear(&re, &b, &d), &intpoly::mul_linear(&im, &a, &c));
        re = intpoly::add(&nre, &vec![coeff * &dpows[n - k]]);
        im = nim;
    }
    (re, im)
}

fn edge_has_root(re: &IntPoly, im: &IntPoly) -> bool {
    let g = if re.is_empty() {
        im.clone()
    } else if im.is_empty() {
        re.clone()
    } else {
        intpoly::gcd(re, im)
    };
    intpoly::has_root_in_unit_interval(&g)
}

/// Doubled Cauchy index of `I/R` over `[0, 1]`.
fn doubled_index(re: &IntPoly, im: &IntPoly) -> i64 {
    if im.is_empty() {
        return 0;
    }
    let chain = intpoly::sturm_chain(re.clone(), im.clone());
    let s0: Vec<i32> = chain.iter().map(intpoly::sign_at_zero).collect();
    let s1: Vec<i32> = chain.iter().map(intpoly::sign_at_one).collect();
    intpoly::half_variations_doubled(&s0) - intpoly::half_variations_doubled(&s1)
}

const ROTATIONS: [(i64, i64); 5] = [(1, 0), (1, 1), (1, -1), (2, 1), (1, 2)];

fn corners(rect: &ComplexInterval) -> [ComplexRationalPoint; 4] {
    [
        ComplexRationalPoint::new(rect.re.lo.clone(), rect.im.lo.clone()),
        ComplexRationalPoint::new(rect.re.hi.clone(), rect.im.lo.clone()),
        ComplexRationalPoint::new(rect.re.hi.clone(), rect.im.hi.clone()),
        ComplexRationalPoint::new(rect.re.lo.clone(), rect.im.hi.clone()),
    ]
}

fn vanishes_at(p: &IntPoly, z: &ComplexRationalPoint) -> bool {
    let zero = ComplexRationalPoint::new(Rational::zero(), Rational::zero());
    let (re, im) = edge_polys(p, z, &zero);
    re.is_empty() && im.is_empty()
}

/// Number of roots of `p` strictly inside `rect`; `BoundaryRoot` when a root
/// lies on the boundary. Degenerate rectangles have empty interior.
pub(crate) fn count_in_rectangle(p: &IntPoly, rect: &ComplexInterval) -> Result<usize> {
    if p.len() <= 1 {
        return Ok(0);
    }
    let c = corners(rect);
    let flat_re = rect.re.is_point();
    let flat_im = rect.im.is_point();
    if flat_re && flat_im {
        return if vanishes_at(p, &c[0]) { Err(Error::BoundaryRoot) } else { Ok(0) };
    }
    if flat_re || flat_im {
        let (re, im) = edge_polys(p, &c[0], &c[2].sub(&c[0]));
        return if edge_has_root(&re, &im) { Err(Error::BoundaryRoot) } else { Ok(0) };
    }

    let mut edges = Vec::with_capacity(4);
    for k in 0..4 {
        let (z0, z1) = (&c[k], &c[(k + 1) % 4]);
        let (re, im) = edge_polys(p, z0, &z1.sub(z0));
        if edge_has_root(&intpoly::primitive(re.clone()), &intpoly::primitive(im.clone())) {
            return Err(Error::BoundaryRoot);
        }
        edges.push((re, im));
    }

    // Multiplying p by a nonzero constant u + iv rotates the image curve
    // without changing the winding; pick one where no edge has Re ≡ 0.
    for (u, v) in ROTATIONS {
        let (u, v) = (BigInt::from(u), BigInt::from(v));
        let rotated: Vec<(IntPoly, IntPoly)> = edges
            .iter()
            .map(|(re, im)| {
                let r = intpoly::add(&intpoly::scale(re, &u), &intpoly::scale(im, &-&v));
                let i = intpoly::add(&intpoly::scale(re, &v), &intpoly::scale(im, &u));
                (intpoly::primitive(r), intpoly::primitive(i))
            })
            .collect();
        if rotated.iter().any(|(re, _)| re.is_empty()) {
            continue;
        }
        let total: i64 = rotated.iter().map(|(re, im)| doubled_index(re, im)).sum();
        if total % 4 != 0 || total > 0 {
            return Err(Error::Internal(format!("non-integral winding sum {total}")));
        }
        return Ok((-total / 4) as usize);
    }
    Err(Error::Internal("no admissible rotation".into()))
}
