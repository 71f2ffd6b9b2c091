//! Reduced grevlex basis and the standard monomials of a small system.

use lur::groebner::{buchberger, monomial_basis};
use lur::polynomial::parse_polynomial;

fn main() -> lur::Result<()> {
    let vars: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
    let polys = ["x^2 + y^2 + z^2 - 3", "x^2 + 2*y^2 - 3*z + 1", "x + y - z"]
        .iter()
        .enumerate()
        .map(|(k, s)| parse_polynomial(s, &vars, k + 1))
        .collect::<lur::Result<Vec<_>>>()?;

    let g = buchberger(&polys);
    for p in g.generators() {
        println!("{}", p.display_with(&vars));
    }
    let b = monomial_basis(&g)?;
    let names: Vec<String> = b
        .monomials()
        .iter()
        .map(|m| lur::polynomial::MultiPoly::term(m.clone(), lur::numeric::int(1)).display_with(&vars))
        .collect();
    println!("standard monomials: [{}]", names.join(", "));
    Ok(())
}
