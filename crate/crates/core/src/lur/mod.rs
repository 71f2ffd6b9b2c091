//! Linear univariate representations and the isolation boxes they induce.
//!
//! The ladder parameters follow the usual notation: `T_i` is the eliminant of
//! `x_1 + s_1 x_2 + … + s_1⋯s_{i−1} x_i`, `prefix_i = s_1⋯s_{i−1}`,
//! `ρ_i = prefix_i · d_i`, and `S_i` is half the minimal distance between
//! isolation boxes of `T_i`.

mod solve;

pub use solve::{lur_solve, LurSolution, SolveConfig, SolveStats};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{box_dis, box_sub_scale, format_rational, int, pow2, ComplexInterval, Extended, Rational};
use crate::polynomial::UniPoly;
use crate::uniroot::{self, count_roots_in_box, min_box_separation, IsolationSet};

/// The tower `T_1..T_n` with its ladder parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LurData {
    /// Primitive-normalized eliminants `T_1..T_n`.
    pub t: Vec<UniPoly>,
    /// `s_1..s_{n−1}`.
    pub s: Vec<Rational>,
    /// `d_1..d_n`.
    pub d: Vec<Rational>,
    /// `r_1..r_n`.
    pub r: Vec<Rational>,
    /// `ρ_i = prefix_i · d_i`.
    pub rho: Vec<Rational>,
    /// `prefix_i = s_1⋯s_{i−1}`, so `prefix_1 = 1`.
    pub prefix: Vec<Rational>,
    /// Half the measured box separations, `S_1..S_n`.
    pub separations: Vec<Extended>,
}

impl LurData {
    pub fn nvars(&self) -> usize {
        self.t.len()
    }

    /// Coefficients of the separating form `x_1 + s_1 x_2 + …`.
    pub fn separating_form(&self) -> &[Rational] {
        &self.prefix
    }
}

/// Per-level isolation widths `ε_1..ε_n` for a target width `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonSchedule {
    pub target: Rational,
    pub eps: Vec<Rational>,
}

/// A parent box and the rectangle that must contain the roots lifted from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftRegion {
    pub base: ComplexInterval,
    pub expanded: ComplexInterval,
}

/// One root of the system, as the chain of level boxes it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveredRoot {
    /// Index into each level's boxes, level 1 first.
    pub chain: Vec<usize>,
    /// One interval per variable.
    pub coords: Vec<ComplexInterval>,
    pub multiplicity: Option<u32>,
}

impl RecoveredRoot {
    pub fn is_real(&self) -> bool {
        self.coords.iter().all(ComplexInterval::is_real)
    }

    pub fn max_width(&self) -> Rational {
        self.coords
            .iter()
            .map(ComplexInterval::width)
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

/// Level boxes, their parent links and the recovered system roots.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RootBoxChain {
    /// Isolation boxes of the squarefree `T_i`, one set per level.
    pub levels: Vec<IsolationSet>,
    /// `parents[i][j]` is the level-`i` parent of box `j` on level `i + 1`
    /// (zero-based levels).
    pub parents: Vec<Vec<usize>>,
    pub roots: Vec<RecoveredRoot>,
}

/// `S_i`: half the minimal distance between boxes of one level.
pub fn level_separation(level: &IsolationSet) -> Extended {
    match level.separation() {
        Extended::Finite(s) => Extended::Finite(s / int(2)),
        Extended::Infinity => Extended::Infinity,
    }
}

/// `d_1 = S_1`, or 1 for a single root.
pub fn compute_d1(level1: &IsolationSet) -> Rational {
    match level_separation(level1) {
        Extended::Finite(s) => s,
        Extended::Infinity => Rational::one(),
    }
}

/// `2 · RB(g)` from the Cauchy bound.
pub fn compute_r(g: &UniPoly) -> Result<Rational> {
    Ok(int(2) * uniroot::root_bound(g)?)
}

/// `2 · (M + w)` where `M` bounds the max-norm of the isolation boxes of the
/// roots of `g` and `w` is their width; strictly above twice every root.
pub fn compute_r_tight(g: &UniPoly) -> Result<Rational> {
    let w = pow2(-6);
    let set = uniroot::isolate_all_roots(g, &w)?;
    let m = set
        .boxes()
        .iter()
        .map(ComplexInterval::magnitude)
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(int(2) * (m + w))
}

/// Largest `2^−k`, `k ≥ 0`, not exceeding `d / r`.
pub fn choose_s(d: &Rational, r: &Rational) -> Rational {
    let bound = d / r;
    let mut s = Rational::one();
    while s > bound {
        s /= int(2);
    }
    s
}

/// Accepts `s` when `0 < s ≤ d / r`.
pub fn validate_s(s: &Rational, d: &Rational, r: &Rational, index: usize) -> Result<()> {
    if !s.is_positive() {
        return Err(Error::InvalidScale(format!("s_{index} = {} is not positive", format_rational(s))));
    }
    if s * r > *d {
        return Err(Error::InvalidScale(format!(
            "s_{index} = {} exceeds d_{index}/r_{} = {}",
            format_rational(s),
            index + 1,
            format_rational(&(d / r))
        )));
    }
    Ok(())
}

/// `min(S_{i+1} / prefix_{i+1}, d_i / (2 s_i))`, where `S_{i+1}` is already
/// the half distance.
pub fn compute_d_next(s_next: &Extended, prefix_next: &Rational, d_i: &Rational, s_i: &Rational) -> Rational {
    let from_d = d_i / (int(2) * s_i);
    match s_next {
        Extended::Finite(sep) => std::cmp::min(sep / prefix_next, from_d),
        Extended::Infinity => from_d,
    }
}

/// Widths `ε_i` satisfying the five precision and separation inequalities.
pub fn epsilon_schedule(eps: &Rational, lur: &LurData) -> EpsilonSchedule {
    let n = lur.nvars();
    let quarter = |q: Rational| q / int(4);
    let half = |q: Rational| q / int(2);
    let sep = |i: usize| lur.separations.get(i).cloned().unwrap_or(Extended::Infinity);
    let mut out = Vec::with_capacity(n);
    if n == 1 {
        out.push(std::cmp::min(eps.clone(), quarter(lur.d[0].clone())));
    } else {
        let mut e1 = [
            eps.clone(),
            half(&lur.s[0] * eps),
            quarter(lur.d[0].clone()),
        ]
        .into_iter()
        .min()
        .unwrap();
        e1 = sep(1).min_with(&e1);
        out.push(e1);
        for i in 1..n {
            let prefix_next = if i + 1 < n { lur.prefix[i + 1].clone() } else { lur.prefix[i].clone() };
            let e = [
                half(&lur.prefix[i] * eps),
                half(prefix_next * eps),
                quarter(&lur.prefix[i] * &lur.d[i]),
                quarter(&lur.prefix[i - 1] * &lur.d[i - 1]),
            ]
            .into_iter()
            .min()
            .unwrap();
            out.push(sep(i + 1).min_with(&e));
        }
    }
    EpsilonSchedule {
        target: eps.clone(),
        eps: out,
    }
}

/// Checks the five inequalities the schedule must satisfy. Returns the first
/// violated one as a message.
pub fn check_schedule(schedule: &EpsilonSchedule, lur: &LurData) -> std::result::Result<(), String> {
    let e = &schedule.eps;
    let eps = &schedule.target;
    if e[0] > *eps {
        return Err("ε_1 > ε".into());
    }
    for i in 0..e.len().saturating_sub(1) {
        let k = i + 1;
        if &e[i] + &e[i + 1] > &lur.prefix[i + 1] * eps {
            return Err(format!("ε_{k} + ε_{} > prefix·ε", k + 1));
        }
        let rq = &lur.rho[i] / int(4);
        if e[i] > rq {
            return Err(format!("ε_{k} > ρ_{k}/4"));
        }
        if e[i + 1] > rq {
            return Err(format!("ε_{} > ρ_{k}/4", k + 1));
        }
        if let Extended::Finite(s) = &lur.separations[i + 1] {
            if e[i] > *s {
                return Err(format!("ε_{k} > S_{}", k + 1));
            }
        }
    }
    Ok(())
}

/// `I` padded by `ρ/2` on every side; requires `|I| < ρ/4`.
pub fn lift_region(base: &ComplexInterval, rho: &Rational) -> Result<LiftRegion> {
    let limit = rho / int(4);
    if base.width() >= limit {
        return Err(Error::LiftPrecondition {
            width: format_rational(&base.width()),
            limit: format_rational(&limit),
        });
    }
    Ok(LiftRegion {
        base: base.clone(),
        expanded: base.inflate(&(rho / int(2))),
    })
}

/// Refines `base` until its width is below the separation of its children.
pub fn ensure_separation(base: &ComplexInterval, children: &[ComplexInterval], parent: &UniPoly) -> Result<ComplexInterval> {
    match min_box_separation(children) {
        Extended::Infinity => Ok(base.clone()),
        Extended::Finite(sep) => {
            if base.width() < sep {
                Ok(base.clone())
            } else {
                uniroot::refine_box(parent, base, &(sep / int(2)))
            }
        }
    }
}

/// Assigns each next-level box the unique current-level box within `ρ/2`.
/// `level` is the zero-based index of `current`, used in error reports.
pub fn match_boxes(current: &[ComplexInterval], next: &[ComplexInterval], rho: &Rational, level: usize) -> Result<Vec<usize>> {
    let half = rho / int(2);
    next.iter()
        .enumerate()
        .map(|(j, k)| {
            let candidates: Vec<usize> = current
                .iter()
                .enumerate()
                .filter(|(_, b)| box_dis(k, b) < half)
                .map(|(i, _)| i)
                .collect();
            match candidates.as_slice() {
                [one] => Ok(*one),
                _ => Err(Error::MatchViolation {
                    level: level + 1,
                    index: j,
                    candidates: candidates.len(),
                }),
            }
        })
        .collect()
}

/// Builds `B_1 × (B_2 − B_1)/prefix_2 × … × (B_n − B_{n−1})/prefix_n` for each
/// chain ending at a last-level box.
pub fn recover_boxes(levels: &[IsolationSet], parents: &[Vec<usize>], prefix: &[Rational]) -> Result<Vec<RecoveredRoot>> {
    let Some(last) = levels.last() else {
        return Ok(Vec::new());
    };
    let n = levels.len();
    let mut roots = Vec::with_capacity(last.len());
    for j in 0..last.len() {
        let mut chain = vec![0; n];
        chain[n - 1] = j;
        for i in (0..n - 1).rev() {
            chain[i] = parents[i][chain[i + 1]];
        }
        let mut coords = Vec::with_capacity(n);
        coords.push(levels[0].boxes()[chain[0]].clone());
        for i in 1..n {
            let k = &levels[i].boxes()[chain[i]];
            let b = &levels[i - 1].boxes()[chain[i - 1]];
            coords.push(box_sub_scale(k, b, &prefix[i])?);
        }
        roots.push(RecoveredRoot {
            chain,
            coords,
            multiplicity: None,
        });
    }
    roots.sort_by(compare_roots);
    Ok(roots)
}

pub(crate) fn compare_roots(a: &RecoveredRoot, b: &RecoveredRoot) -> std::cmp::Ordering {
    a.coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| x.lex_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

/// Keeps the roots whose boxes are real on every level.
pub fn real_filter(chain: &RootBoxChain) -> RootBoxChain {
    let roots = chain
        .roots
        .iter()
        .filter(|r| {
            r.chain
                .iter()
                .zip(&chain.levels)
                .all(|(&k, level)| level.boxes()[k].is_real())
        })
        .cloned()
        .collect();
    RootBoxChain {
        levels: chain.levels.clone(),
        parents: chain.parents.clone(),
        roots,
    }
}

/// Multiplicity of the root in each box, read from the squarefree
/// decomposition `C = ∏ C_k^k`.
pub fn multiplicities(boxes: &[ComplexInterval], c: &UniPoly) -> Result<Vec<u32>> {
    let factors = c.squarefree_decomposition()?;
    boxes
        .iter()
        .map(|b| {
            let mut found = None;
            for (k, f) in factors.iter().enumerate() {
                if f.is_constant() {
                    continue;
                }
                if count_roots_in_box(f, b)? > 0 {
                    if found.is_some() {
                        return Err(Error::Internal("box meets two squarefree factors".into()));
                    }
                    found = Some(k as u32 + 1);
                }
            }
            found.ok_or_else(|| Error::Internal("box meets no squarefree factor".into()))
        })
        .collect()
}
