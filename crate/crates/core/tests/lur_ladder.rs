mod common;

use common::{even_uni, system, SPHERE_PLANE, SYMMETRIC_QUARTIC};
use lur::lur::{check_schedule, lur_solve, SolveConfig};
use lur::numeric::{int, parse_rational, pow2, rat, ComplexInterval, Extended, Rational};
use lur::polynomial::{poly_eval_interval, UniPoly};
use lur::Error;
use num_traits::Signed;

fn sphere_config() -> SolveConfig {
    SolveConfig {
        s_override: Some(vec![rat(1, 20), rat(1, 2)]),
        d1_override: Some(rat(1, 2)),
        separation_width: Some(pow2(-30)),
        ..SolveConfig::default()
    }
}

fn contains_zero(b: &ComplexInterval) -> bool {
    b.re.contains(&int(0)) && b.im.contains(&int(0))
}

#[test]
fn sphere_plane_override_ladder() {
    let polys = system(&["x", "y", "z"], &SPHERE_PLANE);
    let sol = lur_solve(&polys, &sphere_config()).unwrap();
    let lur = sol.lur.as_ref().unwrap();
    assert_eq!(lur.t[0], UniPoly::from_ints(&[5, -60, 6, 18, 6]));
    assert_eq!(lur.t[1], UniPoly::from_ints(&[863337, -6119640, 360000, 1920000, 640000]));
    assert_eq!(lur.t[2], UniPoly::from_ints(&[53294617, -309903360, 11884800, 94464000, 30720000]));
    assert_eq!(lur.d[1], int(5));
    let Extended::Finite(s2) = &lur.separations[1] else { panic!("two roots on level 2") };
    assert!(*s2 >= rat(598699, 1_000_000) && *s2 <= rat(598700, 1_000_000), "{s2}");
    let sched = sol.schedule.as_ref().unwrap();
    let eps = pow2(-10);
    assert_eq!(sched.eps, vec![&eps / int(40), &eps / int(80), &eps / int(80)]);
    assert_eq!(check_schedule(sched, lur), Ok(()));

    assert_eq!(sol.roots().len(), 4);
    for root in sol.roots() {
        assert!(root.max_width() <= eps);
        for p in &polys {
            assert!(contains_zero(&poly_eval_interval(p, &root.coords)));
        }
    }
}

#[test]
fn sphere_plane_real_roots_and_multiplicities() {
    let polys = system(&["x", "y", "z"], &SPHERE_PLANE);
    let config = SolveConfig {
        real_only: true,
        multiplicities: true,
        ..sphere_config()
    };
    let sol = lur_solve(&polys, &config).unwrap();
    assert_eq!(sol.roots().len(), 2);
    assert!(sol.roots().iter().all(|r| r.is_real() && r.multiplicity == Some(1)));
    let printed = [
        rat(5519, 65536),
        rat(345, 4096),
        rat(4835, 4096),
        rat(38695, 32768),
        rat(20715, 16384),
        rat(20725, 16384),
    ];
    let hits = sol
        .roots()
        .iter()
        .filter(|r| {
            (0..3).all(|k| {
                let c = &r.coords[k].re;
                c.lo <= printed[2 * k + 1] && printed[2 * k] <= c.hi
            })
        })
        .count();
    assert_eq!(hits, 1);
}

#[test]
fn default_policy_solves_sphere_plane() {
    let polys = system(&["x", "y", "z"], &SPHERE_PLANE);
    let config = SolveConfig {
        multiplicities: true,
        ..SolveConfig::default()
    };
    let sol = lur_solve(&polys, &config).unwrap();
    let lur = sol.lur.as_ref().unwrap();
    assert_eq!(sol.roots().len(), 4);
    assert_eq!(sol.roots().iter().filter_map(|r| r.multiplicity).sum::<u32>(), 4);
    for (i, s) in lur.s.iter().enumerate() {
        assert!(s * &lur.r[i + 1] <= lur.d[i]);
    }
}

#[test]
fn rejected_scale_overrides() {
    let polys = system(&["x", "y", "z"], &SPHERE_PLANE);
    let too_big = SolveConfig {
        s_override: Some(vec![int(1), int(1)]),
        ..SolveConfig::default()
    };
    assert!(matches!(lur_solve(&polys, &too_big), Err(Error::InvalidScale(_))));
    let short = SolveConfig {
        s_override: Some(vec![rat(1, 20)]),
        ..SolveConfig::default()
    };
    assert!(matches!(lur_solve(&polys, &short), Err(Error::InvalidScale(_))));
    let wide = SolveConfig {
        d1_override: Some(int(1)),
        ..SolveConfig::default()
    };
    assert!(matches!(lur_solve(&polys, &wide), Err(Error::InvalidScale(_))));
}

#[test]
fn inconsistent_and_positive_dimensional() {
    let empty = lur_solve(&system(&["x", "y"], &["x*y - 1", "x", "y"]), &SolveConfig::default()).unwrap();
    assert!(empty.lur.is_none() && empty.roots().is_empty());
    let curve = lur_solve(&system(&["x", "y"], &["x^2 + y^2 - 1"]), &SolveConfig::default());
    assert!(matches!(curve, Err(Error::NotZeroDimensional(_))));
}

#[test]
fn double_root_multiplicity() {
    let polys = system(&["x", "y"], &["x^2", "y - x - 1"]);
    let config = SolveConfig {
        multiplicities: true,
        ..SolveConfig::default()
    };
    let sol = lur_solve(&polys, &config).unwrap();
    assert_eq!(sol.roots().len(), 1);
    assert_eq!(sol.roots()[0].multiplicity, Some(2));
}

fn near(q: &Rational, decimal: &str) -> bool {
    (q - parse_rational(decimal).unwrap()).abs() <= rat(1, 1_000_000)
}

#[test]
fn symmetric_quartic_tower() {
    let polys = system(&["u", "y", "z"], &SYMMETRIC_QUARTIC);
    let config = SolveConfig {
        s_override: Some(vec![rat(1, 200), rat(1, 15)]),
        separation_width: Some(pow2(-30)),
        ..SolveConfig::default()
    };
    let sol = lur_solve(&polys, &config).unwrap();
    let lur = sol.lur.as_ref().unwrap();
    assert_eq!(lur.t[0], UniPoly::from_ints(&[169, 0, -1820, 0, 2622, 0, -140, 0, 1]));
    assert_eq!(
        lur.t[1],
        even_uni(&[
            "12034552627604020308981441166197",
            "-133523438810776274535699687120000",
            "334257305564156882138712000000000",
            "-256456971612085383936000000000000",
            "23629005541670400000000000000000",
            "-665288908800000000000000000000",
            "4096000000000000000000000000",
        ])
    );
    assert_eq!(
        lur.t[2],
        even_uni(&[
            "398658124842757922827990174525891734024598098970801",
            "-5057045016775809265742737650285696238919118781687500",
            "18306568462902747682078658662680830721818866699218750",
            "-26971016274307991838575084944533427932357788085937500",
            "15563591910271113423505114668403939783573150634765625",
            "-1936419155067693199961145026385784149169921875000000",
            "94190634217706926258139312267303466796875000000000",
            "-1851048158439662307500839233398437500000000000000",
            "10022595757618546485900878906250000000000000000",
        ])
    );
    assert!(near(&lur.d[0], "0.2237374734"), "{}", lur.d[0]);
    assert!(near(&lur.d[1], "2.146554200"), "{}", lur.d[1]);
    assert_eq!(sol.roots().len(), 16);
    for root in sol.roots() {
        for p in &polys {
            assert!(contains_zero(&poly_eval_interval(p, &root.coords)));
        }
    }
}
