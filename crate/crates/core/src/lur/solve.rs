//! End-to-end solver: Gröbner basis, eliminant ladder, lifting, refinement and
//! coordinate recovery.

use std::time::{Duration, Instant};

use num_traits::{One, Signed};

use super::{
    check_schedule, choose_s, compare_roots, compute_d1, compute_d_next, compute_r, compute_r_tight, ensure_separation, level_separation,
    epsilon_schedule, lift_region, match_boxes, multiplicities, real_filter, recover_boxes, validate_s, EpsilonSchedule,
    LurData, RootBoxChain,
};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, monomial_basis, GroebnerBasis};
use crate::numeric::{format_rational, int, pow2, ComplexInterval, Extended, Rational};
use crate::polynomial::{MultiPoly, UniPoly};
use crate::quotient::{char_poly, coordinate_matrices, eliminant_of_matrix, linear_form_matrix, RationalMatrix};
use crate::uniroot::{self, IsolationSet};

/// Solver options.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    /// Target width of every coordinate interval.
    pub eps: Rational,
    /// Explicit `s_1..s_{n−1}`; each is checked against `d_i / r_{i+1}`.
    pub s_override: Option<Vec<Rational>>,
    /// Explicit `d_1`; must not exceed half the level-1 separation.
    pub d1_override: Option<Rational>,
    /// Use root-box magnitudes instead of the Cauchy bound for `r_i`.
    pub tight_bounds: bool,
    pub real_only: bool,
    pub multiplicities: bool,
    /// Refine level boxes to at most this width before measuring `S_i`.
    pub separation_width: Option<Rational>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            eps: pow2(-10),
            s_override: None,
            d1_override: None,
            tight_bounds: false,
            real_only: false,
            multiplicities: false,
            separation_width: None,
        }
    }
}

impl SolveConfig {
    pub fn with_eps(eps: Rational) -> Self {
        Self {
            eps,
            ..Self::default()
        }
    }
}

/// Sizes and optional timings of one run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub basis_size: usize,
    pub groebner_size: usize,
    /// Largest coefficient bit length of each `T_i`.
    pub t_bits: Vec<u64>,
    pub groebner_time: Duration,
    pub ladder_time: Duration,
    pub refine_time: Duration,
}

/// Result of [`lur_solve`]. `lur` is `None` for an inconsistent system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LurSolution {
    pub nvars: usize,
    pub groebner: GroebnerBasis,
    pub lur: Option<LurData>,
    pub schedule: Option<EpsilonSchedule>,
    pub chain: RootBoxChain,
    pub stats: SolveStats,
}

impl LurSolution {
    pub fn roots(&self) -> &[super::RecoveredRoot] {
        &self.chain.roots
    }
}

/// Isolates every root of a zero-dimensional system to width `config.eps`.
pub fn lur_solve(polys: &[MultiPoly], config: &SolveConfig) -> Result<LurSolution> {
    let nvars = polys.first().map_or(0, MultiPoly::nvars);
    if let Some(p) = polys.iter().find(|p| p.nvars() != nvars) {
        return Err(Error::ArityMismatch(nvars, p.nvars()));
    }
    if !config.eps.is_positive() {
        return Err(Error::InvalidScale(format!("eps = {} is not positive", format_rational(&config.eps))));
    }
    if nvars == 0 {
        return Err(Error::Internal("a system needs at least one variable".into()));
    }
    let clock = Instant::now();
    let groebner = buchberger(polys);
    let mut stats = SolveStats {
        groebner_size: groebner.generators().len(),
        groebner_time: clock.elapsed(),
        ..SolveStats::default()
    };
    if groebner.is_trivial() {
        return Ok(LurSolution {
            nvars,
            groebner,
            lur: None,
            schedule: None,
            chain: RootBoxChain::default(),
            stats,
        });
    }
    let basis = monomial_basis(&groebner)?;
    stats.basis_size = basis.len();

    let clock = Instant::now();
    let mats = coordinate_matrices(&groebner, &basis);
    let mut ladder = Ladder::start(&mats, &basis, config)?;
    for i in 1..nvars {
        ladder.step(i, &mats, &basis, config)?;
    }
    let (lur, mut levels, lift_parents) = ladder.finish(config)?;
    stats.t_bits = lur.t.iter().map(UniPoly::max_coefficient_bits).collect();
    stats.ladder_time = clock.elapsed();

    let clock = Instant::now();
    let schedule = epsilon_schedule(&config.eps, &lur);
    check_schedule(&schedule, &lur).map_err(Error::Ladder)?;
    for (k, level) in levels.iter_mut().enumerate() {
        // Lifting and matching need |I| < ρ/4 strictly.
        let mut e = schedule.eps[k].clone();
        if k + 1 < nvars && &e * int(4) >= lur.rho[k] {
            e /= int(2);
        }
        if level.max_width() > e {
            *level = level.refine(&e)?;
        }
    }
    let mut parents = Vec::with_capacity(nvars.saturating_sub(1));
    for k in (0..nvars.saturating_sub(1)).rev() {
        let refined = levels[k]
            .boxes()
            .iter()
            .enumerate()
            .map(|(a, base)| {
                let children: Vec<ComplexInterval> = lift_parents[k]
                    .iter()
                    .zip(levels[k + 1].boxes())
                    .filter(|(&p, _)| p == a)
                    .map(|(_, b)| b.clone())
                    .collect();
                ensure_separation(base, &children, levels[k].poly())
            })
            .collect::<Result<Vec<_>>>()?;
        levels[k] = IsolationSet::from_parts(levels[k].poly().clone(), refined);
    }
    for k in 0..nvars.saturating_sub(1) {
        let matched = match_boxes(levels[k].boxes(), levels[k + 1].boxes(), &lur.rho[k], k)?;
        if matched != lift_parents[k] {
            return Err(Error::Ladder(format!("matching on level {} disagrees with lifting", k + 1)));
        }
        parents.push(matched);
    }
    let roots = recover_boxes(&levels, &parents, &lur.prefix)?;
    let mut chain = RootBoxChain {
        levels,
        parents,
        roots,
    };
    if config.real_only {
        chain = real_filter(&chain);
    }
    if config.multiplicities {
        let form = linear_form_matrix(&lur.prefix, &mats);
        let c = char_poly(&form);
        let last: Vec<ComplexInterval> = chain
            .roots
            .iter()
            .map(|r| chain.levels[nvars - 1].boxes()[r.chain[nvars - 1]].clone())
            .collect();
        let mults = multiplicities(&last, &c)?;
        for (r, m) in chain.roots.iter_mut().zip(mults) {
            r.multiplicity = Some(m);
        }
        if !config.real_only {
            let total: u32 = chain.roots.iter().filter_map(|r| r.multiplicity).sum();
            if total as usize != basis.len() {
                return Err(Error::Internal(format!(
                    "multiplicities sum to {total}, quotient has dimension {}",
                    basis.len()
                )));
            }
        }
    }
    chain.roots.sort_by(compare_roots);
    stats.refine_time = clock.elapsed();

    Ok(LurSolution {
        nvars,
        groebner,
        lur: Some(lur),
        schedule: Some(schedule),
        chain,
        stats,
    })
}

/// Level-by-level state while building the tower.
struct Ladder {
    t: Vec<UniPoly>,
    s: Vec<Rational>,
    d: Vec<Rational>,
    r_next: Vec<Rational>,
    prefix: Vec<Rational>,
    separations: Vec<Extended>,
    levels: Vec<IsolationSet>,
    lift_parents: Vec<Vec<usize>>,
}

/// Refines until boxes are small next to their separation, then measures `S`.
fn tighten(mut set: IsolationSet, config: &SolveConfig) -> Result<(IsolationSet, Extended)> {
    loop {
        let sep = level_separation(&set);
        let Extended::Finite(s) = &sep else {
            return Ok((set, sep));
        };
        let mut target = s / int(8);
        if let Some(w) = &config.separation_width {
            target = std::cmp::min(target, w.clone());
        }
        if set.max_width() <= target {
            return Ok((set, sep));
        }
        set = set.refine(&target)?;
    }
}

fn bound_for(g: &UniPoly, tight: bool) -> Result<Rational> {
    if g.is_constant() {
        return Ok(int(2));
    }
    if tight {
        compute_r_tight(g)
    } else {
        compute_r(g)
    }
}

impl Ladder {
    fn start(mats: &[RationalMatrix], basis: &crate::groebner::MonomialBasis, config: &SolveConfig) -> Result<Self> {
        let t1 = eliminant_of_matrix(&mats[0], basis);
        let first = uniroot::isolate_all_roots(&t1, &config.eps)?;
        let (first, sep) = tighten(first, config)?;
        let computed = compute_d1(&first);
        let d1 = match &config.d1_override {
            None => computed,
            Some(d) if d.is_positive() && *d <= computed => d.clone(),
            Some(d) => {
                return Err(Error::InvalidScale(format!(
                    "d_1 = {} must lie in (0, {}]",
                    format_rational(d),
                    format_rational(&computed)
                )))
            }
        };
        if let Some(s) = &config.s_override {
            if s.len() + 1 != mats.len() {
                return Err(Error::InvalidScale(format!(
                    "expected {} scale factors, got {}",
                    mats.len() - 1,
                    s.len()
                )));
            }
        }
        Ok(Self {
            t: vec![t1],
            s: Vec::new(),
            d: vec![d1],
            r_next: Vec::new(),
            prefix: vec![Rational::one()],
            separations: vec![sep],
            levels: vec![first],
            lift_parents: Vec::new(),
        })
    }

    /// Builds level `i + 1` (zero-based `i`) from level `i`.
    fn step(&mut self, i: usize, mats: &[RationalMatrix], basis: &crate::groebner::MonomialBasis, config: &SolveConfig) -> Result<()> {
        let k = i - 1;
        let g = eliminant_of_matrix(&mats[i], basis);
        let r = bound_for(&g, config.tight_bounds)?;
        let d = self.d[k].clone();
        let s = match &config.s_override {
            Some(list) => {
                let s = list[k].clone();
                let tight = if config.tight_bounds { r.clone() } else { bound_for(&g, true)? };
                validate_s(&s, &d, &tight, i)?;
                s
            }
            None => choose_s(&d, &r),
        };
        let prefix = &self.prefix[k] * &s;
        let mut form = self.prefix.clone();
        form.push(prefix.clone());
        form.resize(mats.len(), Rational::from_integer(0.into()));
        let t = eliminant_of_matrix(&linear_form_matrix(&form, mats), basis);
        let rho = &self.prefix[k] * &d;

        let parent_level = &self.levels[k];
        let lift_width = &rho / int(8);
        let parent_level = if parent_level.max_width() >= &rho / int(4) {
            parent_level.refine(&lift_width)?
        } else {
            parent_level.clone()
        };
        let sf = t.squarefree_part()?;
        let mut found: Vec<(ComplexInterval, usize)> = Vec::new();
        for (a, base) in parent_level.boxes().iter().enumerate() {
            let region = lift_region(base, &rho)?;
            let set = uniroot::isolate_roots(&sf, &region.expanded, &(&rho / int(4)))?;
            found.extend(set.into_boxes().into_iter().map(|b| (b, a)));
        }
        if found.len() != sf.deg() {
            return Err(Error::Ladder(format!(
                "lifted {} roots of T_{} but it has {} distinct roots",
                found.len(),
                i + 1,
                sf.deg()
            )));
        }
        found.sort_by(|x, y| x.0.lex_cmp(&y.0));
        let (boxes, owners): (Vec<_>, Vec<_>) = found.into_iter().unzip();
        let (next, sep) = tighten(IsolationSet::from_parts(sf, boxes), config)?;
        let d_next = compute_d_next(&sep, &prefix, &d, &s);

        self.levels[k] = parent_level;
        self.levels.push(next);
        self.lift_parents.push(owners);
        self.t.push(t);
        self.s.push(s);
        self.d.push(d_next);
        self.r_next.push(r);
        self.prefix.push(prefix);
        self.separations.push(sep);
        Ok(())
    }

    fn finish(self, config: &SolveConfig) -> Result<(LurData, Vec<IsolationSet>, Vec<Vec<usize>>)> {
        let mut r = vec![bound_for(&self.t[0], config.tight_bounds)?];
        r.extend(self.r_next);
        let rho = self.prefix.iter().zip(&self.d).map(|(p, d)| p * d).collect();
        Ok((
            LurData {
                t: self.t,
                s: self.s,
                d: self.d,
                r,
                rho,
                prefix: self.prefix,
                separations: self.separations,
            },
            self.levels,
            self.lift_parents,
        ))
    }
}
