//! Certified isolation of the complex roots of rational univariate polynomials.
//!
//! Real roots are isolated by Sturm bisection and reported with a zero-width
//! imaginary part. Non-real roots are isolated by quadrisection of the upper
//! half-plane with exact argument-principle counts and mirrored to the lower
//! half-plane by conjugation.

mod count;
mod intpoly;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use self::intpoly::IntPoly;
use crate::error::{Error, Result};
use crate::numeric::{box_dis, int, ComplexInterval, Extended, RealInterval, Rational};
use crate::polynomial::UniPoly;

/// Disjoint boxes, each holding exactly one root of `poly`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolationSet {
    poly: UniPoly,
    boxes: Vec<ComplexInterval>,
}

impl IsolationSet {
    pub(crate) fn from_parts(poly: UniPoly, boxes: Vec<ComplexInterval>) -> Self {
        Self { poly, boxes }
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn boxes(&self) -> &[ComplexInterval] {
        &self.boxes
    }

    pub fn into_boxes(self) -> Vec<ComplexInterval> {
        self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn max_width(&self) -> Rational {
        self.boxes
            .iter()
            .map(ComplexInterval::width)
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn separation(&self) -> Extended {
        min_box_separation(&self.boxes)
    }

    /// Refines every box to width at most `eps`.
    pub fn refine(&self, eps: &Rational) -> Result<IsolationSet> {
        let prep = Prepared::new(&self.poly)?;
        let boxes = self
            .boxes
            .iter()
            .map(|b| prep.refine(b, eps))
            .collect::<Result<Vec<_>>>()?;
        Ok(IsolationSet {
            poly: self.poly.clone(),
            boxes,
        })
    }
}

/// Cauchy bound `1 + max |a_i| / |a_n|`; every root has modulus below it.
pub fn root_bound(p: &UniPoly) -> Result<Rational> {
    let lead = p.leading().ok_or(Error::ZeroPolynomial)?.abs();
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let max = p.coeffs()[..p.deg()]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(int(1) + max / lead)
}

/// Roots strictly inside `rect`, counted with multiplicity.
pub fn count_roots_in_rectangle(p: &UniPoly, rect: &ComplexInterval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    count::count_in_rectangle(&intpoly::from_uni(p), rect)
}

/// Distinct roots in the closed box. Boxes with imaginary part `[0, 0]` are
/// counted on the real line; other boxes must have a root-free boundary.
pub fn count_roots_in_box(p: &UniPoly, b: &ComplexInterval) -> Result<usize> {
    let sf = p.squarefree_part()?;
    let prep = Prepared::new(&sf)?;
    if b.is_real() {
        return Ok(prep.real_count_closed(&b.re.lo, &b.re.hi));
    }
    prep.count_rect(b)
}

/// Isolates every root of `p` inside `region` into boxes of width at most `eps`.
///
/// `p` is reduced to its squarefree part first. If roots lie on the border of
/// `region` the region is widened by a tiny amount until its border is root-free.
pub fn isolate_roots(p: &UniPoly, region: &ComplexInterval, eps: &Rational) -> Result<IsolationSet> {
    if !eps.is_positive() {
        return Err(Error::InvalidScale(format!("isolation width must be positive, got {eps}")));
    }
    let sf = p.squarefree_part()?;
    if sf.is_constant() {
        return Ok(IsolationSet {
            poly: sf,
            boxes: Vec::new(),
        });
    }
    let prep = Prepared::new(&sf)?;
    let boxes = prep.isolate(region, eps)?;
    Ok(IsolationSet { poly: sf, boxes })
}

/// Isolates all complex roots, starting from the root-bound square.
pub fn isolate_all_roots(p: &UniPoly, eps: &Rational) -> Result<IsolationSet> {
    let sf = p.squarefree_part()?;
    if sf.is_constant() {
        return isolate_roots(&sf, &ComplexInterval::centered_square(&int(1)), eps);
    }
    let rb = root_bound(&sf)?;
    isolate_roots(&sf, &ComplexInterval::centered_square(&rb), eps)
}

/// Sub-box of `b` containing its single root of `p`, with width at most `eps`.
pub fn refine_box(p: &UniPoly, b: &ComplexInterval, eps: &Rational) -> Result<ComplexInterval> {
    let sf = p.squarefree_part()?;
    Prepared::new(&sf)?.refine(b, eps)
}

/// Minimum pairwise `box_dis`; infinite with fewer than two boxes.
pub fn min_box_separation(boxes: &[ComplexInterval]) -> Extended {
    let mut best = Extended::Infinity;
    for (i, a) in boxes.iter().enumerate() {
        for b in &boxes[i + 1..] {
            let d = Extended::Finite(box_dis(a, b));
            if d < best {
                best = d;
            }
        }
    }
    best
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Cells lie in the closed upper half-plane; those resting on the real
    /// axis count only roots with positive imaginary part.
    Upper,
    Direct,
}

/// Squarefree integer polynomial with its Sturm chain.
struct Prepared {
    p: IntPoly,
    dp: IntPoly,
    sturm: Vec<IntPoly>,
    deg: usize,
}

const MAX_NUDGES: i64 = 64;

impl Prepared {
    fn new(sf: &UniPoly) -> Result<Self> {
        if sf.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = intpoly::from_uni(sf);
        let sturm = intpoly::sturm(&p);
        let deg = p.len() - 1;
        let dp = intpoly::derivative(&p);
        Ok(Self { p, dp, sturm, deg })
    }

    fn sign(&self, q: &Rational) -> i32 {
        intpoly::sign_at(&self.p, q)
    }

    fn count_rect(&self, r: &ComplexInterval) -> Result<usize> {
        count::count_in_rectangle(&self.p, r)
    }

    /// Real roots in the open interval `(a, b)`.
    fn real_count_open(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b {
            return 0;
        }
        let n = intpoly::count_half_open(&self.sturm, a, b);
        n - usize::from(self.sign(b) == 0)
    }

    fn real_count_closed(&self, a: &Rational, b: &Rational) -> usize {
        if a > b {
            return 0;
        }
        intpoly::count_half_open(&self.sturm, a, b) + usize::from(self.sign(a) == 0)
    }

    /// Roots with `0 < Im z < h` and `a < Re z < b` for the cell `[a,b] × [0,h]`,
    /// using conjugate symmetry of real polynomials.
    fn count_upper_on_axis(&self, cell: &ComplexInterval) -> Result<usize> {
        let h = &cell.im.hi;
        let sym = ComplexInterval::new(cell.re.clone(), RealInterval::new(-h, h.clone()));
        let total = self.count_rect(&sym)?;
        let real = self.real_count_open(&cell.re.lo, &cell.re.hi);
        if total < real || !(total - real).is_multiple_of(2) {
            return Err(Error::Internal("inconsistent symmetric count".into()));
        }
        Ok((total - real) / 2)
    }

    fn count_cell(&self, mode: Mode, cell: &ComplexInterval) -> Result<usize> {
        if mode == Mode::Upper && cell.im.lo.is_zero() {
            self.count_upper_on_axis(cell)
        } else {
            self.count_rect(cell)
        }
    }

    fn nudge_step(&self, width: &Rational) -> Rational {
        width / int(8 * (self.deg as i64 + 1))
    }

    /// Quadrisects `cell` along lines nudged off the roots. Returns the
    /// children holding at least one root, with their counts.
    fn split(&self, mode: Mode, cell: &ComplexInterval) -> Result<Vec<(ComplexInterval, usize)>> {
        let (sx, sy) = (self.nudge_step(&cell.re.width()), self.nudge_step(&cell.im.width()));
        let (cx, cy) = (cell.re.mid(), cell.im.mid());
        for k in nudge_offsets() {
            let mx = &cx + &sx * int(k);
            let my = &cy + &sy * int(k);
            let quads = [
                ComplexInterval::from_bounds(cell.re.lo.clone(), mx.clone(), cell.im.lo.clone(), my.clone()),
                ComplexInterval::from_bounds(mx.clone(), cell.re.hi.clone(), cell.im.lo.clone(), my.clone()),
                ComplexInterval::from_bounds(cell.re.lo.clone(), mx.clone(), my.clone(), cell.im.hi.clone()),
                ComplexInterval::from_bounds(mx, cell.re.hi.clone(), my, cell.im.hi.clone()),
            ];
            let counts: Result<Vec<usize>> = quads.iter().map(|q| self.count_cell(mode, q)).collect();
            match counts {
                Ok(counts) => {
                    return Ok(quads
                        .into_iter()
                        .zip(counts)
                        .filter(|(_, n)| *n > 0)
                        .collect())
                }
                Err(Error::BoundaryRoot) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::Internal("no root-free split line found".into()))
    }

    /// Splits `cell` until every piece holds exactly one root.
    fn isolate_cells(&self, mode: Mode, cell: ComplexInterval, n: usize) -> Result<Vec<ComplexInterval>> {
        let mut out = Vec::new();
        let mut stack = vec![(cell, n)];
        while let Some((c, n)) = stack.pop() {
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push(c);
                continue;
            }
            let children = self.split(mode, &c)?;
            if children.iter().map(|(_, k)| k).sum::<usize>() != n {
                return Err(Error::Internal("child counts do not add up".into()));
            }
            stack.extend(children);
        }
        Ok(out)
    }

    /// Shrinks an upper-mode box until it no longer rests on the real axis.
    fn lift_off_axis(&self, mut b: ComplexInterval) -> Result<ComplexInterval> {
        while b.im.lo.is_zero() {
            b = self.refine_step(Mode::Upper, &b)?;
        }
        Ok(b)
    }

    /// Quarter of `b` holding its single root. Stops counting at the first
    /// quarter that holds it; the last one needs no count.
    fn refine_step(&self, mode: Mode, b: &ComplexInterval) -> Result<ComplexInterval> {
        let (sx, sy) = (self.nudge_step(&b.re.width()), self.nudge_step(&b.im.width()));
        let (cx, cy) = (b.re.mid(), b.im.mid());
        'nudge: for k in nudge_offsets() {
            let mx = &cx + &sx * int(k);
            let my = &cy + &sy * int(k);
            let quads = [
                ComplexInterval::from_bounds(b.re.lo.clone(), mx.clone(), b.im.lo.clone(), my.clone()),
                ComplexInterval::from_bounds(mx.clone(), b.re.hi.clone(), b.im.lo.clone(), my.clone()),
                ComplexInterval::from_bounds(b.re.lo.clone(), mx.clone(), my.clone(), b.im.hi.clone()),
                ComplexInterval::from_bounds(mx, b.re.hi.clone(), my, b.im.hi.clone()),
            ];
            for q in &quads[..3] {
                match self.count_cell(mode, q) {
                    Ok(0) => {}
                    Ok(1) => return Ok(q.clone()),
                    Ok(_) => return Err(Error::Internal("box does not hold exactly one root".into())),
                    Err(Error::BoundaryRoot) => continue 'nudge,
                    Err(e) => return Err(e),
                }
            }
            // The shared split lines are root-free, so the last quarter holds it.
            let [.., last] = quads;
            if mode == Mode::Upper && last.im.lo.is_zero() {
                return Err(Error::Internal("upper quarter cannot rest on the axis".into()));
            }
            return Ok(last);
        }
        Err(Error::Internal("no root-free split line found".into()))
    }

    /// `2^{k·deg q} q((a + ib) / 2^k)` as a pair of integers.
    fn horner_complex(q: &IntPoly, a: &BigInt, b: &BigInt, k: u32) -> (BigInt, BigInt) {
        let n = q.len().saturating_sub(1);
        let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
        let scale = BigInt::one() << k;
        let mut pow = BigInt::one();
        let mut pows = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            pows.push(pow.clone());
            pow *= &scale;
        }
        for (j, c) in q.iter().enumerate().rev() {
            let nre = &re * a - &im * b;
            let nim = &re * b + &im * a;
            re = nre + c * &pows[n - j];
            im = nim;
        }
        (re, im)
    }

    /// A few Newton steps from `z`, on the grid `2^−k`.
    fn newton_point(&self, z: (&Rational, &Rational), k: u32) -> Option<(Rational, Rational)> {
        let scale = Rational::from_integer(BigInt::one() << k);
        let grid = |q: &Rational| (q * &scale).round().to_integer();
        let (mut a, mut b) = (grid(z.0), grid(z.1));
        for _ in 0..6 {
            let (pr, pi) = Self::horner_complex(&self.p, &a, &b, k);
            let (dr, di) = Self::horner_complex(&self.dp, &a, &b, k);
            let den = &dr * &dr + &di * &di;
            if den.is_zero() {
                return None;
            }
            // z − p/p' scaled by 2^k: (p/p')·2^k = (P/D), since P carries one more 2^k.
            let num_re = &pr * &dr + &pi * &di;
            let num_im = &pi * &dr - &pr * &di;
            let step_re = Rational::new(num_re, den.clone());
            let step_im = Rational::new(num_im, den);
            let na = (Rational::from_integer(a.clone()) - step_re).round().to_integer();
            let nb = (Rational::from_integer(b.clone()) - step_im).round().to_integer();
            if na == a && nb == b {
                break;
            }
            a = na;
            b = nb;
        }
        Some((Rational::new(a, BigInt::one() << k), Rational::new(b, BigInt::one() << k)))
    }

    /// Shrinks `cur` around a Newton point, accepted only if an exact count
    /// confirms the root is inside.
    fn newton_shrink(&self, cur: &ComplexInterval, eps: &Rational) -> Option<ComplexInterval> {
        let h = std::cmp::max(eps / int(4), cur.width() / int(1024));
        let bits = h.denom().bits() as i64 - h.numer().bits() as i64 + 3;
        let k = u32::try_from(bits.max(1)).ok()?;
        let c = cur.center();
        let (x, y) = self.newton_point((&c.re, &c.im), k)?;
        let lo_re = std::cmp::max(&x - &h, cur.re.lo.clone());
        let hi_re = std::cmp::min(&x + &h, cur.re.hi.clone());
        let lo_im = std::cmp::max(&y - &h, cur.im.lo.clone());
        let hi_im = std::cmp::min(&y + &h, cur.im.hi.clone());
        if lo_re >= hi_re || lo_im >= hi_im {
            return None;
        }
        let cand = ComplexInterval::from_bounds(lo_re, hi_re, lo_im, hi_im);
        match self.count_rect(&cand) {
            Ok(1) if cand.width() < cur.width() => Some(cand),
            _ => None,
        }
    }

    /// Point to split `[lo, hi]` at where `p` does not vanish.
    fn real_split_point(&self, lo: &Rational, hi: &Rational) -> Rational {
        let step = self.nudge_step(&(hi - lo));
        let mid = (lo + hi) / int(2);
        nudge_offsets()
            .map(|k| &mid + &step * int(k))
            .find(|m| self.sign(m) != 0)
            .expect("finitely many roots")
    }

    /// Isolates the real roots in `(a, b)`, where `p(a), p(b) ≠ 0`.
    fn isolate_real(&self, a: &Rational, b: &Rational, n: usize, eps: &Rational) -> Vec<ComplexInterval> {
        let mut out = Vec::new();
        let mut stack = vec![(a.clone(), b.clone(), n)];
        while let Some((lo, hi, n)) = stack.pop() {
            match n {
                0 => {}
                1 => {
                    let iv = self.refine_real(&RealInterval::new(lo, hi), eps);
                    out.push(ComplexInterval::new(iv, RealInterval::zero()));
                }
                _ => {
                    let m = self.real_split_point(&lo, &hi);
                    let left = self.real_count_open(&lo, &m);
                    stack.push((lo, m.clone(), left));
                    stack.push((m, hi, n - left));
                }
            }
        }
        out
    }

    /// Bisects a closed interval holding exactly one simple root.
    fn refine_real(&self, iv: &RealInterval, eps: &Rational) -> RealInterval {
        let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
        if self.sign(&lo) == 0 {
            return RealInterval::point(lo);
        }
        if self.sign(&hi) == 0 {
            return RealInterval::point(hi);
        }
        let shi = self.sign(&hi);
        while &(&hi - &lo) > eps {
            let m = (&lo + &hi) / int(2);
            let sm = self.sign(&m);
            if sm == 0 {
                return RealInterval::point(m);
            }
            if sm == shi {
                hi = m;
            } else {
                lo = m;
            }
        }
        RealInterval::new(lo, hi)
    }

    fn refine(&self, b: &ComplexInterval, eps: &Rational) -> Result<ComplexInterval> {
        if b.is_real() {
            return Ok(ComplexInterval::new(self.refine_real(&b.re, eps), RealInterval::zero()));
        }
        if &b.width() <= eps {
            return Ok(b.clone());
        }
        if b.re.is_point() || b.im.is_point() {
            return Err(Error::Internal("cannot refine a degenerate non-real box".into()));
        }
        let (mode, flip) = if !b.im.lo.is_negative() {
            (Mode::Upper, false)
        } else if !b.im.hi.is_positive() {
            (Mode::Upper, true)
        } else {
            (Mode::Direct, false)
        };
        let mut cur = if flip { b.conj() } else { b.clone() };
        while &cur.width() > eps {
            let off_axis = mode == Mode::Direct || cur.im.lo.is_positive();
            cur = match off_axis.then(|| self.newton_shrink(&cur, eps)).flatten() {
                Some(next) => next,
                None => self.refine_step(mode, &cur)?,
            };
        }
        Ok(if flip { cur.conj() } else { cur })
    }

    /// Widens `region` slightly until no root lies on any border used by the
    /// isolation, returning the settled region with its root counts
    /// `(upper, lower, real)`.
    fn settle(&self, region: &ComplexInterval) -> Result<(ComplexInterval, usize, usize, usize)> {
        let scale = std::cmp::max(region.width(), int(1));
        let step = &scale / int(1024 * (self.deg as i64 + 1));
        for k in 0..MAX_NUDGES {
            if k == 0 && (region.re.is_point() || region.im.is_point()) {
                continue;
            }
            let r = region.inflate(&(&step * int(k)));
            match self.region_counts(&r) {
                Ok((up, low, real)) => return Ok((r, up, low, real)),
                Err(Error::BoundaryRoot) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::Internal("could not settle isolation region".into()))
    }

    fn region_counts(&self, r: &ComplexInterval) -> Result<(usize, usize, usize)> {
        let total = self.count_rect(r)?;
        let up = match upper_part(r) {
            Some(c) => self.count_cell(Mode::Upper, &c)?,
            None => 0,
        };
        let low = match upper_part(&r.conj()) {
            Some(c) => self.count_cell(Mode::Upper, &c)?,
            None => 0,
        };
        let real = if r.im.contains(&Rational::zero()) {
            self.real_count_open(&r.re.lo, &r.re.hi)
        } else {
            0
        };
        if up + low + real != total {
            return Err(Error::Internal(format!(
                "region counts disagree: {up} + {low} + {real} != {total}"
            )));
        }
        Ok((up, low, real))
    }

    fn isolate(&self, region: &ComplexInterval, eps: &Rational) -> Result<Vec<ComplexInterval>> {
        let (r, n_up, n_low, n_real) = self.settle(region)?;
        let mut boxes = Vec::new();
        if let Some(c) = upper_part(&r) {
            for b in self.isolate_cells(Mode::Upper, c, n_up)? {
                let b = self.lift_off_axis(b)?;
                boxes.push(self.refine(&b, eps)?);
            }
        }
        if let Some(c) = upper_part(&r.conj()) {
            for b in self.isolate_cells(Mode::Upper, c, n_low)? {
                let b = self.lift_off_axis(b)?;
                boxes.push(self.refine(&b, eps)?.conj());
            }
        }
        if n_real > 0 {
            boxes.extend(self.isolate_real(&r.re.lo, &r.re.hi, n_real, eps));
        }
        self.separate(&mut boxes)?;
        boxes.sort_by(ComplexInterval::lex_cmp);
        Ok(boxes)
    }

    /// Refines pairs of boxes that touch until every pair is strictly apart.
    fn separate(&self, boxes: &mut [ComplexInterval]) -> Result<()> {
        loop {
            let touching = (0..boxes.len())
                .flat_map(|i| (i + 1..boxes.len()).map(move |j| (i, j)))
                .find(|&(i, j)| box_dis(&boxes[i], &boxes[j]).is_zero());
            let Some((i, j)) = touching else {
                return Ok(());
            };
            for k in [i, j] {
                let w = boxes[k].width();
                if w.is_positive() {
                    boxes[k] = self.refine(&boxes[k], &(w / int(2)))?;
                }
            }
        }
    }
}

/// `0, 1, −1, 2, −2, …`
fn nudge_offsets() -> impl Iterator<Item = i64> {
    (0..MAX_NUDGES).map(|k| if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) })
}

fn upper_part(r: &ComplexInterval) -> Option<ComplexInterval> {
    if !r.im.hi.is_positive() {
        return None;
    }
    let lo = if r.im.lo.is_negative() { Rational::zero() } else { r.im.lo.clone() };
    Some(ComplexInterval::new(r.re.clone(), RealInterval::new(lo, r.im.hi.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, ComplexRationalPoint};

    fn ci(a: Rational, b: Rational, c: Rational, d: Rational) -> ComplexInterval {
        ComplexInterval::from_bounds(a, b, c, d)
    }

    #[test]
    fn cauchy_bounds() {
        assert_eq!(root_bound(&UniPoly::from_ints(&[-4, 0, 1])), Ok(int(5)));
        assert_eq!(root_bound(&UniPoly::from_ints(&[-29, -66, 60, 0, 12])), Ok(rat(13, 2)));
        assert_eq!(root_bound(&UniPoly::from_ints(&[-7, 1])), Ok(int(8)));
        assert_eq!(root_bound(&UniPoly::from_ints(&[3])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn rectangle_counts() {
        let p = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(count_roots_in_rectangle(&p, &ci(int(-2), int(2), int(-2), int(2))), Ok(2));
        assert_eq!(
            count_roots_in_rectangle(&p, &ci(int(0), int(2), int(0), int(2))),
            Err(Error::BoundaryRoot)
        );
        let q = UniPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(count_roots_in_rectangle(&q, &ci(int(1), int(2), int(-1), int(1))), Ok(1));
    }

    #[test]
    fn isolates_imaginary_pair() {
        let p = UniPoly::from_ints(&[1, 0, 1]);
        let s = isolate_all_roots(&p, &rat(1, 4)).unwrap();
        assert_eq!(s.len(), 2);
        let i = ComplexRationalPoint::new(int(0), int(1));
        let mi = ComplexRationalPoint::new(int(0), int(-1));
        assert!(s.boxes().iter().any(|b| b.contains(&i)));
        assert!(s.boxes().iter().any(|b| b.contains(&mi)));
        assert!(s.max_width() <= rat(1, 4));
    }

    #[test]
    fn isolates_linear() {
        let p = UniPoly::from_ints(&[-3, 1]);
        let s = isolate_all_roots(&p, &rat(1, 1000)).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.boxes()[0].contains(&ComplexRationalPoint::real(int(3))));
        assert_eq!(s.separation(), Extended::Infinity);
    }

    #[test]
    fn sphere_plane_eliminant_roots() {
        let t1 = UniPoly::from_ints(&[5, -60, 6, 18, 6]);
        let s = isolate_all_roots(&t1, &rat(1, 1024)).unwrap();
        assert_eq!(s.len(), 4);
        let centers: Vec<(f64, f64)> = s
            .boxes()
            .iter()
            .map(|b| {
                let c = b.center();
                (crate::numeric::to_f64(&c.re), crate::numeric::to_f64(&c.im))
            })
            .collect();
        let expect = [(-2.2208, -1.5352), (-2.2208, 1.5352), (0.08423, 0.0), (1.35740, 0.0)];
        for (e, c) in expect.iter().zip(&centers) {
            assert!((e.0 - c.0).abs() < 2e-3 && (e.1 - c.1).abs() < 2e-3, "{centers:?}");
        }
        assert_eq!(s.boxes().iter().filter(|b| b.is_real()).count(), 2);
    }

    #[test]
    fn refine_to_exact_rational_root() {
        let p = UniPoly::new(vec![rat(-1, 3), int(1)]);
        let b = refine_box(&p, &ci(int(0), int(1), int(-1), int(1)), &rat(1, 64)).unwrap();
        assert!(b.width() <= rat(1, 64));
        assert!(b.contains(&ComplexRationalPoint::real(rat(1, 3))));
    }

    #[test]
    fn separation_examples() {
        let a = ci(int(0), int(1), int(0), int(1));
        let b = ci(int(1), int(2), int(0), int(1));
        assert_eq!(min_box_separation(&[a.clone(), b]), Extended::Finite(int(0)));
        assert_eq!(min_box_separation(&[a]), Extended::Infinity);
    }

    #[test]
    fn clustered_real_roots_are_separated() {
        // (t − 1/2)(t − 1/2 − 1/1000)(t + 1)
        let p = &(&UniPoly::linear_root(rat(1, 2)) * &UniPoly::linear_root(rat(501, 1000)))
            * &UniPoly::linear_root(int(-1));
        let s = isolate_all_roots(&p, &int(1)).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.separation().finite().unwrap().is_positive());
    }
}
