//! Random linear changes of coordinates applied to unions of planes, over
//! several primes: e1 stays negative, while a single plane keeps e1 = 0.

use chernlab::algebra::Polynomial;
use chernlab::linalg::Matrix;
use chernlab::verify::{coefficient_summary, ProblemInstance};
use chernlab::{Ideal, RingContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_coordinates(ring: &RingContext, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let r = ring.nvars();
    let field = ring.field();
    loop {
        let rows: Vec<Vec<u32>> = (0..r)
            .map(|_| {
                (0..r)
                    .map(|_| rng.gen_range(0..ring.characteristic()))
                    .collect()
            })
            .collect();
        if Matrix::from_rows(rows.clone(), r).rank(field) < r {
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

fn planes(p: u64, r: usize, g: usize) -> chernlab::Result<ProblemInstance> {
    let names: Vec<String> = (1..=r).map(|i| format!("x{i}")).collect();
    let ring = RingContext::new(&names, p, chernlab::MonomialOrder::Grevlex)?;
    let h = r / 2;
    let var = |i: usize| Polynomial::variable(&ring, i);
    let mut ideals = vec![Ideal::new(&ring, (0..h).map(var).collect())?];
    if g == 2 {
        ideals.push(Ideal::new(&ring, (h..r).map(var).collect())?);
    }
    let params = (0..h).map(|i| &var(i) + &var(h + i)).collect();
    ProblemInstance::new(&ring, ideals, params, None)
}

fn main() -> chernlab::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for p in [32003, 101, 65521] {
        for (r, g) in [(4, 2), (4, 1), (6, 2)] {
            let base = planes(p, r, g)?;
            let images = random_coordinates(base.ring(), &mut rng);
            let inst = base.substitute(&images)?;
            let s = coefficient_summary(&inst)?;
            println!("p={p:<6} r={r} g={g}: e = {:?}, e1 {}", s.e, s.chern_sign);
        }
    }
    Ok(())
}
