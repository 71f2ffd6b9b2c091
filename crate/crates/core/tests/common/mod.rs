#![allow(dead_code)]

use lur::numeric::{to_f64, ComplexInterval, Rational};
use lur::numeric::parse_rational;
use lur::lur::{check_schedule, LurSolution};
use lur::numeric::{box_dis, int};
use lur::polynomial::{parse_polynomial, poly_eval_interval, MultiPoly, UniPoly};
use nalgebra::{Complex, DMatrix};
use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Complex roots from the eigenvalues of the companion matrix, polished by a
/// few Newton steps.
pub fn companion_roots(p: &UniPoly) -> Vec<Complex<f64>> {
    let n = p.deg();
    let lead = to_f64(p.leading().unwrap());
    let c: Vec<f64> = p.coeffs().iter().map(|x| to_f64(x) / lead).collect();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for k in 1..n {
        m[(k, k - 1)] = 1.0;
    }
    for k in 0..n {
        m[(k, n - 1)] = -c[k];
    }
    m.complex_eigenvalues()
        .iter()
        .map(|&z| newton(&c, z))
        .collect()
}

fn newton(c: &[f64], mut z: Complex<f64>) -> Complex<f64> {
    for _ in 0..4 {
        let (mut v, mut d) = (Complex::new(0.0, 0.0), Complex::new(0.0, 0.0));
        for &a in c.iter().rev() {
            d = d * z + v;
            v = v * z + a;
        }
        if d.norm() == 0.0 {
            break;
        }
        let step = v / d;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
    }
    z
}

pub fn box_contains_f64(b: &ComplexInterval, z: Complex<f64>, slack: f64) -> bool {
    let f = |q: &Rational| q.to_f64().unwrap();
    f(&b.re.lo) - slack <= z.re
        && z.re <= f(&b.re.hi) + slack
        && f(&b.im.lo) - slack <= z.im
        && z.im <= f(&b.im.hi) + slack
}

/// Random squarefree integer polynomial of degree in `1..=max_deg`.
pub fn random_squarefree(rng: &mut ChaCha8Rng, max_deg: usize, coeff: i64) -> UniPoly {
    loop {
        let d = rng.gen_range(1..=max_deg);
        let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-coeff..=coeff)).collect();
        if c[d] == 0 {
            c[d] = 1;
        }
        let p = UniPoly::from_ints(&c);
        if p.squarefree_part().unwrap().deg() == p.deg() {
            return p;
        }
    }
}

pub const SPHERE_PLANE: [&str; 3] = ["x^2 + y^2 + z^2 - 3", "x^2 + 2*y^2 - 3*z + 1", "x + y - z"];

pub const SYMMETRIC_QUARTIC: [&str; 3] = [
    "24*u*z - u^2 - z^2 - u^2*z^2 - 13",
    "24*y*z - y^2 - z^2 - y^2*z^2 - 13",
    "24*u*y - u^2 - y^2 - u^2*y^2 - 13",
];

pub fn system(vars: &[&str], polys: &[&str]) -> Vec<MultiPoly> {
    let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    polys
        .iter()
        .enumerate()
        .map(|(k, p)| parse_polynomial(p, &vars, k + 1).unwrap())
        .collect()
}

/// Univariate polynomial from decimal coefficients, constant term first.
pub fn uni(coeffs: &[&str]) -> UniPoly {
    UniPoly::new(coeffs.iter().map(|c| parse_rational(c).unwrap()).collect())
}

/// `Σ c_k t^{2k}` from decimal coefficients of the even powers.
pub fn even_uni(coeffs: &[&str]) -> UniPoly {
    let mut out = Vec::new();
    for c in coeffs {
        out.push(*c);
        out.push("0");
    }
    out.pop();
    uni(&out)
}

/// Random polynomial in `nvars` variables of total degree `deg` with a pure
/// power of variable `lead` and a few extra terms.
fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, lead: usize, deg: u32, coeff: i64) -> MultiPoly {
    let mut terms = Vec::new();
    let mut e = vec![0u32; nvars];
    e[lead] = deg;
    terms.push((e, lur::numeric::int(rng.gen_range(1..=coeff))));
    for _ in 0..rng.gen_range(2..=4) {
        let mut e = vec![0u32; nvars];
        let mut left = rng.gen_range(0..=deg);
        while left > 0 {
            e[rng.gen_range(0..nvars)] += 1;
            left -= 1;
        }
        let c = rng.gen_range(-coeff..=coeff);
        if c != 0 {
            terms.push((e, lur::numeric::int(c)));
        }
    }
    MultiPoly::from_terms(nvars, terms)
}

/// Random system with 2 or 3 variables, degrees at most 3, that has finitely
/// many and at least one root.
pub fn random_system(rng: &mut ChaCha8Rng) -> Vec<MultiPoly> {
    use lur::groebner::{buchberger, monomial_basis};
    loop {
        let nvars = rng.gen_range(2..=3);
        let polys: Vec<MultiPoly> = (0..nvars)
            .map(|k| {
                let max = if nvars == 2 || k == 0 { 3 } else { 2 };
                let deg = rng.gen_range(1..=max);
                random_poly(rng, nvars, k, deg, 5)
            })
            .collect();
        let g = buchberger(&polys);
        if !g.is_trivial() && monomial_basis(&g).is_ok() {
            return polys;
        }
    }
}

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn contains_zero(b: &ComplexInterval) -> bool {
    b.re.contains(&int(0)) && b.im.contains(&int(0))
}

/// Residuals, schedule, unique parents, box count, multiplicities and the
/// eigenvalue oracle for one solved system.
pub fn certify(polys: &[MultiPoly], sol: &LurSolution) -> Result<(), String> {
    let lur = sol.lur.as_ref().ok_or("no representation")?;
    let n = lur.nvars();
    for root in sol.roots() {
        for p in polys {
            ensure(contains_zero(&poly_eval_interval(p, &root.coords)), || "residual excludes 0".into())?;
        }
    }
    check_schedule(sol.schedule.as_ref().ok_or("no schedule")?, lur)?;
    let levels = &sol.chain.levels;
    for i in 0..n - 1 {
        let half = &lur.rho[i] / int(2);
        for (j, k) in levels[i + 1].boxes().iter().enumerate() {
            let parents = levels[i].boxes().iter().filter(|b| box_dis(k, b) < half).count();
            ensure(parents == 1, || format!("level {} box {j} has {parents} parents", i + 2))?;
        }
    }
    let sf = lur.t[n - 1].squarefree_part().map_err(|e| e.to_string())?;
    ensure(sol.roots().len() == sf.deg(), || format!("{} boxes, deg {}", sol.roots().len(), sf.deg()))?;
    let total: u32 = sol.roots().iter().filter_map(|r| r.multiplicity).sum();
    ensure(total as usize == sol.stats.basis_size, || format!("multiplicities sum {total}"))?;
    for z in companion_roots(&sf) {
        let hit = sol
            .roots()
            .iter()
            .any(|r| box_contains_f64(&levels[n - 1].boxes()[r.chain[n - 1]], z, 1e-6));
        ensure(hit, || format!("oracle root {z} outside every chain"))?;
    }
    Ok(())
}

