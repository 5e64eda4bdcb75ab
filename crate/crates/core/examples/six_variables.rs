//! Two transversal 3-planes in six variables: fitted coefficients against
//! the closed form 2C(n+2,3) + C(n+1,2) + n.

use std::time::Instant;

use chernlab::algebra::binomial;
use chernlab::verify::{hilbert_dataset, ProblemInstance};
use chernlab::{poly_parse, Ideal, RingContext};

fn main() -> chernlab::Result<()> {
    let ring = RingContext::grevlex(&["x1", "x2", "x3", "x4", "x5", "x6"])?;
    let ideals = vec![
        Ideal::parse(&ring, &["x1", "x2", "x3"])?,
        Ideal::parse(&ring, &["x4", "x5", "x6"])?,
    ];
    let params = ["x1 + x4", "x2 + x5", "x3 + x6"]
        .iter()
        .map(|s| poly_parse(s, &ring))
        .collect::<Result<_, _>>()?;
    let inst = ProblemInstance::new(&ring, ideals, params, Some(10))?;

    let start = Instant::now();
    let data = hilbert_dataset(&inst)?;
    println!("e = {:?} ({:?})", data.coefficients, start.elapsed());
    for (n, h) in data.tail(1) {
        let n = n as i64;
        let closed = binomial(n + 2, 3) * 2 + binomial(n + 1, 2) + n;
        println!("n = {n:>2}: H = {h:>4}, closed form = {closed:>4}");
    }
    Ok(())
}
