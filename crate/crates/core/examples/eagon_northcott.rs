//! The banded matrix whose maximal minors generate J^n, Betti numbers of
//! S/J^n, and the Koszul complex on the same sequence.

use chernlab::ideal::ideal_power;
use chernlab::resolution::{betti_table, en_matrix, koszul_complex};
use chernlab::{poly_parse, Ideal, RingContext};

fn main() -> chernlab::Result<()> {
    let ring = RingContext::grevlex(&["a", "b", "c"])?;
    let a: Vec<_> = ["a", "b", "c"]
        .iter()
        .map(|s| poly_parse(s, &ring))
        .collect::<Result<_, _>>()?;
    let j = Ideal::new(&ring, a.clone())?;

    let en = en_matrix(&a, 2)?;
    println!("matrix: {:?}", en.matrix);
    let minors = en.maximal_minors()?;
    let shown: Vec<String> = minors.iter().map(|m| m.to_string()).collect();
    println!("maximal minors: {}", shown.join(", "));
    println!(
        "minor ideal equals J^2: {}",
        en.minor_ideal()?.same_ideal(&ideal_power(&j, 2)?)
    );

    for d in 2..=4 {
        for n in 1..=3 {
            let t = betti_table(d, n)?;
            let b: Vec<String> = t.betti.iter().map(|x| x.to_string()).collect();
            println!(
                "d={d} n={n}: β = ({}), Euler characteristic {}",
                b.join(", "),
                t.euler_characteristic
            );
        }
    }

    let k = koszul_complex(&a)?;
    println!("Koszul ranks {:?}, ∂∘∂ = 0: {}", k.ranks, k.is_complex()?);
    println!("∂_2 = {:?}", k.differentials[1]);
    Ok(())
}
