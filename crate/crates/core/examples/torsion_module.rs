//! The finite-length cokernel L of S/∩I_i → ⊕ S/I_i: its graded pieces,
//! its length, and whether a parameter ideal kills it.

use chernlab::graded_module::{annihilates, build_l, jn_colength};
use chernlab::{Ideal, RingContext};

fn main() -> chernlab::Result<()> {
    let ring = RingContext::grevlex(&["x", "y", "z", "w"])?;
    let ideals = vec![
        Ideal::parse(&ring, &["x", "y^2"])?,
        Ideal::parse(&ring, &["z", "w"])?,
    ];
    let model = build_l(&ideals)?;
    println!("dims of L by degree: {:?}", model.dims());
    println!(
        "λ(L) = {}, top degree {:?}",
        model.lambda(),
        model.top_degree()
    );
    for s in 0..=model.top_degree().unwrap_or(0) {
        println!("  basis of L_{s}: {:?}", model.basis_labels(s));
    }

    for gens in [["x + z", "y + w"], ["x + z", "y^2 + w^2"]] {
        let j = Ideal::parse(&ring, &gens)?;
        let colengths: Vec<String> = (0..=3)
            .map(|n| jn_colength(&model, &j, n).map(|c| c.to_string()))
            .collect::<Result<_, _>>()?;
        println!(
            "J = ({}): annihilates L = {}, λ(L/J^n L) for n = 0..3: {}",
            gens.join(", "),
            annihilates(&j, &model)?,
            colengths.join(" ")
        );
    }
    Ok(())
}
