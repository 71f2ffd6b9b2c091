//! Only the real solutions of a circle meeting a cubic curve.

use lur::lur::{lur_solve, SolveConfig};
use lur::numeric::pow2;
use lur::polynomial::parse_polynomial;

fn main() -> lur::Result<()> {
    let vars: Vec<String> = ["x", "y"].map(String::from).to_vec();
    let polys = ["x^2 + y^2 - 4", "y - x^3 + x"]
        .iter()
        .map(|s| parse_polynomial(s, &vars, 1))
        .collect::<lur::Result<Vec<_>>>()?;
    let config = SolveConfig {
        eps: pow2(-20),
        real_only: true,
        ..SolveConfig::default()
    };
    let sol = lur_solve(&polys, &config)?;
    println!("{} real roots", sol.roots().len());
    for root in sol.roots() {
        println!("x in {}, y in {}", root.coords[0], root.coords[1]);
    }
    Ok(())
}
