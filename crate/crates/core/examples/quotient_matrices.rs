//! Multiplication matrices of the quotient algebra and the eliminants they give.

use lur::groebner::{buchberger, monomial_basis};
use lur::numeric::{int, rat};
use lur::polynomial::{parse_polynomial, MultiPoly};
use lur::quotient::{char_poly, coordinate_matrices, eliminant, linear_form_matrix};

fn main() -> lur::Result<()> {
    let vars: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
    let polys = ["x^2 + y^2 + z^2 - 3", "x^2 + 2*y^2 - 3*z + 1", "x + y - z"]
        .iter()
        .map(|s| parse_polynomial(s, &vars, 1))
        .collect::<lur::Result<Vec<_>>>()?;
    let g = buchberger(&polys);
    let b = monomial_basis(&g)?;

    let mats = coordinate_matrices(&g, &b);
    println!("M_x =\n{}", mats[0]);
    for (k, v) in vars.iter().enumerate() {
        let e = eliminant(&MultiPoly::var(3, k), &g, &b);
        println!("eliminant of {v}: {}", e.display_with("t"));
    }

    let form = [int(1), rat(1, 20), rat(1, 40)];
    let m = linear_form_matrix(&form, &mats);
    println!("char poly of x + y/20 + z/40: {}", char_poly(&m).display_with("t"));
    Ok(())
}
