//! Hilbert-Samuel values of a parameter ideal in the union of two planes,
//! the fitted coefficients, and the Cohen-Macaulay and sign verdicts.

use chernlab::hilbert::{chern_sign, cm_test, hilbert_values, HilbertDataset};
use chernlab::ideal::ideal_intersect;
use chernlab::{Ideal, RingContext};

fn main() -> chernlab::Result<()> {
    let ring = RingContext::grevlex(&["x", "y", "z", "w"])?;
    let core = ideal_intersect(
        &Ideal::parse(&ring, &["x", "y"])?,
        &Ideal::parse(&ring, &["z", "w"])?,
    )?;
    let j = Ideal::parse(&ring, &["x + z", "y + w"])?;

    let values = hilbert_values(&core, &j, 8)?;
    for (n, h) in &values {
        println!("H({n}) = {h}");
    }
    let data = HilbertDataset::fit(2, values)?;
    println!(
        "e = {:?}, stable from n = {}",
        data.coefficients, data.stabilization_index
    );

    let verdict = cm_test(data.e(0), &data.values[&1]);
    println!(
        "e0 = {}, λ(R/K) = {}, Cohen-Macaulay: {}",
        verdict.e0, verdict.colength, verdict.cohen_macaulay
    );
    println!("sign of e1: {}", chern_sign(data.e(1)));
    Ok(())
}
