//! Parse polynomials, compute a reduced Gröbner basis and reduce modulo it.

use chernlab::groebner::standard_monomials_of_degree;
use chernlab::{buchberger, normal_form, poly_parse, RingContext};

fn main() -> chernlab::Result<()> {
    let ring = RingContext::grevlex(&["x", "y", "z"])?;
    let gens: Vec<_> = ["x^2 - y*z", "x*y - z^2", "y^2 - x*z"]
        .iter()
        .map(|s| poly_parse(s, &ring))
        .collect::<Result<_, _>>()?;

    let gb = buchberger(&gens, &ring)?;
    println!("reduced Gröbner basis ({} elements):", gb.len());
    for g in gb.elements() {
        println!("  {g}");
    }

    let f = poly_parse("x^3 + y^3 + z^3", &ring)?;
    println!("normal form of {f}: {}", normal_form(&f, &gb)?);

    for s in 0..4 {
        let basis = standard_monomials_of_degree(&gb, s);
        println!("degree {s}: {} standard monomials", basis.len());
    }
    Ok(())
}
