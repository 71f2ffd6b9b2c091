use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::Rational;

/// Dense univariate polynomial; `coeffs[k]` multiplies `t^k`.
///
/// Trailing zeros are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `t`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `t - root`.
    pub fn linear_root(root: Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Sign of the value at `t` (-1, 0 or 1).
    pub fn sign_at(&self, t: &Rational) -> i32 {
        let v = self.eval(t);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Euclidean division over Q. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] -= &q * c;
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        self.div_rem(divisor).1
    }

    /// True when `divisor` divides `self` exactly over Q.
    pub fn is_divisible_by(&self, divisor: &UniPoly) -> bool {
        !divisor.is_zero() && self.rem(divisor).is_zero()
    }

    /// Positive rational `c` such that `self / c` has coprime integer coefficients.
    pub fn content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rational::one();
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Divides by the (positive) content; keeps the sign of every coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.content().recip())
    }

    /// Integer coefficients, content 1, positive leading coefficient.
    pub fn primitive_normalize(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        let p = self.primitive_part();
        Ok(if lead.is_negative() { -p } else { p })
    }

    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lead.recip()))
    }

    /// Greatest common divisor via the primitive remainder sequence, normalized
    /// with [`UniPoly::primitive_normalize`]. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_normalize().unwrap_or_default()
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(UniPoly::one());
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q.primitive_normalize()
    }

    /// Yun's algorithm: returns `[a_1, a_2, …]` with `p = c · ∏ a_k^k`, each
    /// `a_k` squarefree, pairwise coprime and primitive-normalized.
    pub fn squarefree_decomposition(&self) -> Result<Vec<UniPoly>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut factors = Vec::new();
        if self.is_constant() {
            return Ok(factors);
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.div_rem(&a0).0;
        let mut c = d.div_rem(&a0).0;
        let mut dd = &c - &b.derivative();
        loop {
            let a = b.gcd(&dd);
            factors.push(a.primitive_normalize()?);
            b = b.div_rem(&a).0;
            if b.is_constant() {
                break;
            }
            c = dd.div_rem(&a).0;
            dd = &c - &b.derivative();
        }
        while factors.last().is_some_and(|f| f.is_constant()) {
            factors.pop();
        }
        Ok(factors)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Largest bit length over the numerators and denominators of the coefficients.
    pub fn max_coefficient_bits(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coef = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            match k {
                0 => out.push_str(&coef),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&coef);
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};

    #[test]
    fn primitive_normalize_examples() {
        let p = UniPoly::new(vec![rat(5, 6), int(-10), int(1), int(3), int(1)]);
        assert_eq!(
            p.primitive_normalize().unwrap(),
            UniPoly::from_ints(&[5, -60, 6, 18, 6])
        );
        assert_eq!(
            UniPoly::from_ints(&[-4, 2]).primitive_normalize().unwrap(),
            UniPoly::from_ints(&[-2, 1])
        );
        assert_eq!(
            UniPoly::from_ints(&[0, -1]).primitive_normalize().unwrap(),
            UniPoly::from_ints(&[0, 1])
        );
        assert_eq!(UniPoly::zero().primitive_normalize(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squarefree_examples() {
        let x1 = UniPoly::from_ints(&[-1, 1]);
        assert_eq!((&x1 * &x1).squarefree_part().unwrap(), x1);
        let p = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(p.squarefree_part().unwrap(), p);
        assert_eq!(
            UniPoly::from_ints(&[0, 0, 0, 1]).squarefree_part().unwrap(),
            UniPoly::x()
        );
        assert_eq!(UniPoly::zero().squarefree_part(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn yun_decomposition() {
        // (t-1) (t+2)^2 t^3
        let a = UniPoly::from_ints(&[-1, 1]);
        let b = UniPoly::from_ints(&[2, 1]);
        let p = &(&a * &b.pow(2)) * &UniPoly::x().pow(3);
        let f = p.squarefree_decomposition().unwrap();
        assert_eq!(f, vec![a, b, UniPoly::x()]);

        let sq = UniPoly::from_ints(&[1, 0, 1]).pow(2);
        let f = sq.squarefree_decomposition().unwrap();
        assert_eq!(f.len(), 2);
        assert!(f[0].is_constant());
    }

    #[test]
    fn division_identity() {
        let a = UniPoly::from_ints(&[3, -2, 0, 5, 7]);
        let b = UniPoly::new(vec![rat(1, 2), int(0), int(-3)]);
        let (q, r) = a.div_rem(&b);
        assert!(r.deg() < b.deg());
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = UniPoly::from_ints(&[-2, 0, 1]);
        let a = &f * &UniPoly::from_ints(&[1, 1]);
        let b = &f * &UniPoly::from_ints(&[5, 0, 3]);
        assert_eq!(a.gcd(&b), f);
        assert_eq!(UniPoly::from_ints(&[1, 1]).gcd(&UniPoly::from_ints(&[2, 1])), UniPoly::one());
    }

    #[test]
    fn display() {
        let p = UniPoly::from_ints(&[5, -60, 6, 18, 6]);
        assert_eq!(p.to_string(), "6*t^4 + 18*t^3 + 6*t^2 - 60*t + 5");
        assert_eq!(UniPoly::from_ints(&[0, -1]).to_string(), "-t");
    }
}
