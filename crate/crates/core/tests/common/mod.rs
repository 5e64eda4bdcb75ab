#![allow(dead_code)]

use std::path::PathBuf;

use chernlab::algebra::Polynomial;
use chernlab::cli::ProblemFile;
use chernlab::linalg::Matrix;
use chernlab::verify::ProblemInstance;
use chernlab::{Ideal, MonomialOrder, RingContext};
use rand::Rng;

pub const PRIMES: [u64; 5] = [101, 1009, 7919, 32003, 65521];

pub fn problem_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/problems")
        .join(format!("{name}.json"))
}

pub fn problem(name: &str) -> ProblemInstance {
    ProblemFile::load(&problem_path(name))
        .and_then(|f| f.instance(None))
        .unwrap_or_else(|e| panic!("{name}: {}", e.message))
}

/// Two transversal `h`-planes in `2h` variables (or only the first when
/// `g == 1`), with parameters `x_i + x_{h+i}`.
pub fn planes(p: u64, h: usize, g: usize, max_power: Option<u32>) -> ProblemInstance {
    let names: Vec<String> = (1..=2 * h).map(|i| format!("x{i}")).collect();
    let ring = RingContext::new(&names, p, MonomialOrder::Grevlex).unwrap();
    let var = |i: usize| Polynomial::variable(&ring, i);
    let mut ideals = vec![Ideal::new(&ring, (0..h).map(var).collect()).unwrap()];
    if g == 2 {
        ideals.push(Ideal::new(&ring, (h..2 * h).map(var).collect()).unwrap());
    }
    let params = (0..h).map(|i| &var(i) + &var(h + i)).collect();
    ProblemInstance::new(&ring, ideals, params, max_power).unwrap()
}

/// Images of the variables under a random invertible linear map.
pub fn random_coordinates<R: Rng>(ring: &RingContext, rng: &mut R) -> Vec<Polynomial> {
    let r = ring.nvars();
    loop {
        let rows: Vec<Vec<u32>> = (0..r)
            .map(|_| {
                (0..r)
                    .map(|_| rng.gen_range(0..ring.characteristic()))
                    .collect()
            })
            .collect();
        if Matrix::from_rows(rows.clone(), r).rank(ring.field()) < r {
            continue;
        }
        return rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .fold(Polynomial::zero(ring), |acc, (k, &c)| {
                        &acc + &Polynomial::variable(ring, k).scale(c)
                    })
            })
            .collect();
    }
}

pub fn ints(v: &[i64]) -> Vec<num_bigint::BigInt> {
    v.iter().map(|&x| x.into()).collect()
}
