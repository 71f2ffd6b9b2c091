//! Multiplicities from the characteristic polynomial of the separating form.

use lur::lur::{lur_solve, SolveConfig};
use lur::polynomial::parse_polynomial;

fn main() -> lur::Result<()> {
    let vars: Vec<String> = ["x", "y"].map(String::from).to_vec();
    // a parabola tangent to a line at the origin, crossing it nowhere else
    let polys = ["y - x^2", "y*(x - 2)"]
        .iter()
        .map(|s| parse_polynomial(s, &vars, 1))
        .collect::<lur::Result<Vec<_>>>()?;
    let config = SolveConfig {
        multiplicities: true,
        ..SolveConfig::default()
    };
    let sol = lur_solve(&polys, &config)?;
    println!("quotient dimension {}", sol.stats.basis_size);
    for root in sol.roots() {
        println!(
            "x in {}, y in {}, multiplicity {}",
            root.coords[0],
            root.coords[1],
            root.multiplicity.unwrap_or(0)
        );
    }
    Ok(())
}
