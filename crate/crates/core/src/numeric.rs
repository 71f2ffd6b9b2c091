//! Exact scalars, real intervals and rectangle-shaped complex intervals.
//!
//! Every value here has rational endpoints and every operation is exact.
//! Complex numbers are measured with the max-norm `|a + bi| = max(|a|, |b|)`,
//! so the "disc" of radius `r` around a point is an axis-aligned open square.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `2^exp` for any signed exponent.
pub fn pow2(exp: i32) -> Rational {
    let two = int(2);
    if exp >= 0 {
        num_traits::pow(two, exp as usize)
    } else {
        num_traits::pow(two, (-exp) as usize).recip()
    }
}

/// Serializes as `num/den`, also for integers (`5/1`).
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `n`, `n/d` and plain decimals such as `-0.125`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse(1, 1, format!("invalid rational `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n = BigInt::from_str(&digits).map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let q = Rational::new(n, d);
        return Ok(if neg { -q } else { q });
    }
    BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad())
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn min_ref<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if a <= b {
        a
    } else {
        b
    }
}

fn max_ref<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if a >= b {
        a
    } else {
        b
    }
}

/// A rational extended with `+∞`, used for separations of fewer than two boxes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Extended {
    Finite(Rational),
    Infinity,
}

impl Extended {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Extended::Finite(q) => Some(q),
            Extended::Infinity => None,
        }
    }

    pub fn min_with(&self, q: &Rational) -> Rational {
        match self {
            Extended::Finite(s) => min_ref(s, q).clone(),
            Extended::Infinity => q.clone(),
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(q) => write!(f, "{}", format_rational(q)),
            Extended::Infinity => f.write_str("inf"),
        }
    }
}

/// A complex number with rational parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexRationalPoint {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRationalPoint {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.re - &other.re, &self.im - &other.im)
    }
}

/// `max(|re|, |im|)`.
pub fn cnorm(c: &ComplexRationalPoint) -> Rational {
    max_ref(&c.re.abs(), &c.im.abs()).clone()
}

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RealInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        Self {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_interval(&self, other: &RealInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &RealInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn magnitude(&self) -> Rational {
        max_ref(&self.lo.abs(), &self.hi.abs()).clone()
    }

    pub fn inflate(&self, delta: &Rational) -> Self {
        Self::new(&self.lo - delta, &self.hi + delta)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.hi, -&self.lo)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Self::new(lo, hi)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Self::new(a, b)
        } else {
            Self::new(b, a)
        }
    }
}

/// Gap between two closed intervals; zero when they meet.
pub fn interval_dis(a: &RealInterval, b: &RealInterval) -> Rational {
    let (first, second) = if a.lo <= b.lo { (a, b) } else { (b, a) };
    if first.hi >= second.lo {
        Rational::zero()
    } else {
        &second.lo - &first.hi
    }
}

/// The rectangle `re × im` in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexInterval {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexInterval {
    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        Self { re, im }
    }

    pub fn from_bounds(re_lo: Rational, re_hi: Rational, im_lo: Rational, im_hi: Rational) -> Self {
        Self::new(RealInterval::new(re_lo, re_hi), RealInterval::new(im_lo, im_hi))
    }

    pub fn point(c: &ComplexRationalPoint) -> Self {
        Self::new(
            RealInterval::point(c.re.clone()),
            RealInterval::point(c.im.clone()),
        )
    }

    pub fn real_point(q: Rational) -> Self {
        Self::new(RealInterval::point(q), RealInterval::zero())
    }

    /// Square `[-r, r] × [-r, r]`.
    pub fn centered_square(r: &Rational) -> Self {
        let side = RealInterval::new(-r, r.clone());
        Self::new(side.clone(), side)
    }

    /// `max(|re|, |im|)`.
    pub fn width(&self) -> Rational {
        max_ref(&self.re.width(), &self.im.width()).clone()
    }

    pub fn contains(&self, c: &ComplexRationalPoint) -> bool {
        self.re.contains(&c.re) && self.im.contains(&c.im)
    }

    pub fn contains_box(&self, other: &ComplexInterval) -> bool {
        self.re.contains_interval(&other.re) && self.im.contains_interval(&other.im)
    }

    pub fn intersects(&self, other: &ComplexInterval) -> bool {
        self.re.intersects(&other.re) && self.im.intersects(&other.im)
    }

    /// True when the imaginary part is exactly `[0, 0]`.
    pub fn is_real(&self) -> bool {
        self.im.lo.is_zero() && self.im.hi.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg())
    }

    pub fn inflate(&self, delta: &Rational) -> Self {
        Self::new(self.re.inflate(delta), self.im.inflate(delta))
    }

    pub fn center(&self) -> ComplexRationalPoint {
        ComplexRationalPoint::new(self.re.mid(), self.im.mid())
    }

    /// Largest max-norm of any point of the rectangle.
    pub fn magnitude(&self) -> Rational {
        max_ref(&self.re.magnitude(), &self.im.magnitude()).clone()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.re.add(&other.re), self.im.add(&other.im))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.re.sub(&other.re), self.im.sub(&other.im))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let re = self.re.mul(&other.re).sub(&self.im.mul(&other.im));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        Self::new(re, im)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.re.scale(c), self.im.scale(c))
    }

    /// `[re.lo, re.hi, im.lo, im.hi]` as `num/den` strings.
    pub fn to_strings(&self) -> [String; 4] {
        [
            format_rational(&self.re.lo),
            format_rational(&self.re.hi),
            format_rational(&self.im.lo),
            format_rational(&self.im.hi),
        ]
    }

    pub fn from_strings(parts: &[impl AsRef<str>]) -> Result<Self> {
        if parts.len() != 4 {
            return Err(Error::parse(1, 1, "complex interval needs four endpoints"));
        }
        let q: Vec<Rational> = parts
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<_>>()?;
        if q[0] > q[1] || q[2] > q[3] {
            return Err(Error::parse(1, 1, "interval endpoints out of order"));
        }
        Ok(Self::from_bounds(
            q[0].clone(),
            q[1].clone(),
            q[2].clone(),
            q[3].clone(),
        ))
    }

    /// Order used to sort boxes deterministically: by `re.lo`, then `im.lo`.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.re
            .lo
            .cmp(&other.re.lo)
            .then_with(|| self.im.lo.cmp(&other.im.lo))
            .then_with(|| self.re.hi.cmp(&other.re.hi))
            .then_with(|| self.im.hi.cmp(&other.im.hi))
    }
}

impl fmt::Display for ComplexInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<[{}, {}], [{}, {}]>",
            format_rational(&self.re.lo),
            format_rational(&self.re.hi),
            format_rational(&self.im.lo),
            format_rational(&self.im.hi)
        )
    }
}

/// Max of the real-part gap and the imaginary-part gap.
pub fn box_dis(a: &ComplexInterval, b: &ComplexInterval) -> Rational {
    let re = interval_dis(&a.re, &b.re);
    let im = interval_dis(&a.im, &b.im);
    max_ref(&re, &im).clone()
}

/// `(K - I) / s`: encloses `(κ - ι) / s` for all `κ ∈ K`, `ι ∈ I`.
pub fn box_sub_scale(k: &ComplexInterval, i: &ComplexInterval, s: &Rational) -> Result<ComplexInterval> {
    if !s.is_positive() {
        return Err(Error::NonPositiveScale(format_rational(s)));
    }
    let inv = s.recip();
    Ok(k.sub(i).scale(&inv))
}
