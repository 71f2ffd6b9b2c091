//! Dense integer polynomials used by the exact counters.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::numeric::Rational;
use crate::polynomial::UniPoly;

pub(crate) type IntPoly = Vec<BigInt>;

pub(crate) fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Integer multiple of `p` with content 1 and positive leading coefficient.
pub(crate) fn from_uni(p: &UniPoly) -> IntPoly {
    if p.is_zero() {
        return Vec::new();
    }
    let q = p.primitive_normalize().expect("nonzero");
    q.coeffs().iter().map(|c| c.numer().clone()).collect()
}

pub(crate) fn deg(p: &IntPoly) -> Option<usize> {
    p.len().checked_sub(1)
}

/// Divides by the positive content.
pub(crate) fn primitive(p: IntPoly) -> IntPoly {
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() || g.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

pub(crate) fn derivative(p: &IntPoly) -> IntPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect()
}

/// Sign of `p(q)` by homogeneous Horner.
pub(crate) fn sign_at(p: &IntPoly, q: &Rational) -> i32 {
    let (a, b) = (q.numer(), q.denom());
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    for c in p.iter().rev() {
        acc = acc * a + c * &bpow;
        bpow *= b;
    }
    sign(&acc)
}

pub(crate) fn sign(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub(crate) fn sign_at_zero(p: &IntPoly) -> i32 {
    p.first().map_or(0, sign)
}

pub(crate) fn sign_at_one(p: &IntPoly) -> i32 {
    sign(&p.iter().sum())
}

/// `−rem(a, b)` up to a positive factor, content removed.
pub(crate) fn neg_prem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    let mut negative = false;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (k, c) in b.iter().enumerate() {
            r[k + shift] -= &lr * c;
        }
        if lb.is_negative() {
            negative = !negative;
        }
        r = trim(r);
    }
    let r = primitive(r);
    if negative {
        r
    } else {
        r.into_iter().map(|c| -c).collect()
    }
}

/// Generalized Sturm sequence `S0 = a, S1 = b, S_{k+1} = −rem(S_{k−1}, S_k)`.
pub(crate) fn sturm_chain(a: IntPoly, b: IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![a];
    if b.is_empty() {
        return chain;
    }
    chain.push(b);
    loop {
        let n = chain.len();
        let r = neg_prem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            return chain;
        }
        chain.push(r);
    }
}

/// Classical Sturm chain of `p` and `p'`.
pub(crate) fn sturm(p: &IntPoly) -> Vec<IntPoly> {
    sturm_chain(p.clone(), primitive(derivative(p)))
}

/// Sign changes, zeros dropped.
pub(crate) fn variations(signs: impl IntoIterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Sign variations with a pair containing exactly one zero counting one half.
/// Returned doubled so it stays integral.
pub(crate) fn half_variations_doubled(signs: &[i32]) -> i64 {
    signs
        .windows(2)
        .map(|w| match (w[0], w[1]) {
            (0, 0) => 0,
            (0, _) | (_, 0) => 1,
            (a, b) if a != b => 2,
            _ => 0,
        })
        .sum()
}

/// Distinct real roots of the chain's head in `(a, b]`.
pub(crate) fn count_half_open(chain: &[IntPoly], a: &Rational, b: &Rational) -> usize {
    let va = variations(chain.iter().map(|s| sign_at(s, a)));
    let vb = variations(chain.iter().map(|s| sign_at(s, b)));
    va.saturating_sub(vb)
}

/// Whether `p` has a real root in `[0, 1]`.
pub(crate) fn has_root_in_unit_interval(p: &IntPoly) -> bool {
    if deg(p).is_none_or(|d| d == 0) {
        return false;
    }
    if sign_at_zero(p) == 0 || sign_at_one(p) == 0 {
        return true;
    }
    let chain = sturm(p);
    let v0 = variations(chain.iter().map(sign_at_zero));
    let v1 = variations(chain.iter().map(sign_at_one));
    v0 > v1
}

/// Primitive gcd with positive leading coefficient.
pub(crate) fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut x, mut y) = (primitive(a.clone()), primitive(b.clone()));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = neg_prem(&x, &y);
        x = y;
        y = r;
    }
    if x.last().is_some_and(Signed::is_negative) {
        x = x.into_iter().map(|c| -c).collect();
    }
    x
}

pub(crate) fn add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|k| a.get(k).unwrap_or(&z) + b.get(k).unwrap_or(&z)).collect())
}

pub(crate) fn scale(a: &IntPoly, c: &BigInt) -> IntPoly {
    trim(a.iter().map(|x| x * c).collect())
}

/// `a · (u + v t)`.
pub(crate) fn mul_linear(a: &IntPoly, u: &BigInt, v: &BigInt) -> IntPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + 1];
    for (k, c) in a.iter().enumerate() {
        out[k] += c * u;
        out[k + 1] += c * v;
    }
    trim(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn sturm_counts() {
        // (t − 1)(t − 2)(t + 3)
        let p = ip(&[6, -7, 0, 1]);
        let chain = sturm(&p);
        let q = |n: i64| Rational::from_integer(n.into());
        assert_eq!(count_half_open(&chain, &q(-10), &q(10)), 3);
        assert_eq!(count_half_open(&chain, &q(0), &q(2)), 2);
        assert_eq!(count_half_open(&chain, &q(1), &q(2)), 1);
    }

    #[test]
    fn unit_interval_roots() {
        assert!(has_root_in_unit_interval(&ip(&[-1, 2])));
        assert!(has_root_in_unit_interval(&ip(&[0, 1])));
        assert!(!has_root_in_unit_interval(&ip(&[1, 0, 1])));
        assert!(!has_root_in_unit_interval(&ip(&[-3, 2])));
    }

    #[test]
    fn gcd_of_products() {
        let a = ip(&[-2, 1, 1]); // (t − 1)(t + 2)
        let b = ip(&[-3, 2, 1]); // (t − 1)(t + 3)
        assert_eq!(gcd(&a, &b), ip(&[-1, 1]));
    }
}
