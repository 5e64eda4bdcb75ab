//! Sums, products, powers and intersections of ideals, with dimensions,
//! Hilbert series and colengths.

use chernlab::ideal::{
    ideal_intersect, ideal_power, ideal_sum, is_mprimary, krull_dimension, length_quotient,
};
use chernlab::{Ideal, RingContext};

fn main() -> chernlab::Result<()> {
    let ring = RingContext::grevlex(&["x", "y", "z", "w"])?;
    let p1 = Ideal::parse(&ring, &["x", "y"])?;
    let p2 = Ideal::parse(&ring, &["z", "w"])?;

    let core = ideal_intersect(&p1, &p2)?;
    println!("(x,y) ∩ (z,w) = {:?}", core.groebner_basis().elements());
    println!("dim S/core = {}", krull_dimension(&core));
    println!("Hilbert series of S/core: {:?}", core.hilbert_series());
    println!(
        "(x,y) + (z,w) primary to the maximal ideal: {}",
        is_mprimary(&ideal_sum(&p1, &p2)?)
    );

    let j = Ideal::parse(&ring, &["x + z", "y + w"])?;
    for n in 1..=4 {
        let k = ideal_sum(&core, &ideal_power(&j, n)?)?;
        println!("λ(S/(core + J^{n})) = {}", length_quotient(&k)?);
    }
    Ok(())
}
