//! Certified isolation of every complex root of one polynomial.

use lur::numeric::{pow2, to_f64};
use lur::polynomial::UniPoly;
use lur::uniroot::{count_roots_in_rectangle, isolate_all_roots, root_bound};

fn main() -> lur::Result<()> {
    // t^5 - 3t + 1: three real roots and a conjugate pair
    let p = UniPoly::from_ints(&[1, -3, 0, 0, 0, 1]);
    println!("root bound: {}", root_bound(&p)?);

    let set = isolate_all_roots(&p, &pow2(-24))?;
    for b in set.boxes() {
        let c = b.center();
        println!("{b}  ~ {:.6} {:+.6}i", to_f64(&c.re), to_f64(&c.im));
    }
    println!("separation: {}", set.separation());

    let right_half = lur::numeric::ComplexInterval::from_bounds(
        lur::numeric::int(0),
        lur::numeric::int(4),
        lur::numeric::int(-4),
        lur::numeric::int(4),
    );
    println!("roots with 0 < Re < 4: {}", count_roots_in_rectangle(&p, &right_half)?);
    Ok(())
}
