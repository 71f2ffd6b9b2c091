//! Full solve: ladder parameters, per-level boxes and recovered roots.

use lur::lur::{lur_solve, SolveConfig};
use lur::numeric::{format_rational, rat, to_f64};
use lur::polynomial::parse_polynomial;

fn main() -> lur::Result<()> {
    let vars: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
    let polys = ["x^2 + y^2 + z^2 - 3", "x^2 + 2*y^2 - 3*z + 1", "x + y - z"]
        .iter()
        .map(|s| parse_polynomial(s, &vars, 1))
        .collect::<lur::Result<Vec<_>>>()?;

    let config = SolveConfig {
        s_override: Some(vec![rat(1, 20), rat(1, 2)]),
        d1_override: Some(rat(1, 2)),
        ..SolveConfig::default()
    };
    let sol = lur_solve(&polys, &config)?;
    let lur = sol.lur.as_ref().expect("consistent system");
    for (i, t) in lur.t.iter().enumerate() {
        println!("T_{}(t) = {}", i + 1, t.display_with("t"));
    }
    let show = |v: &[lur::numeric::Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(", ");
    println!("s = [{}]  d = [{}]  rho = [{}]", show(&lur.s), show(&lur.d), show(&lur.rho));

    for root in sol.roots() {
        let coords: Vec<String> = root
            .coords
            .iter()
            .map(|c| {
                let m = c.center();
                format!("{:.6}{:+.6}i", to_f64(&m.re), to_f64(&m.im))
            })
            .collect();
        println!("({})  width {}", coords.join(", "), format_rational(&root.max_width()));
    }
    Ok(())
}
