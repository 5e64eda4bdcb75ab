//! Full verification of a JSON problem file.
//!
//! ```text
//! cargo run --example verify_problem -- crates/core/examples/problems/e4.json
//! ```

use chernlab::cli::ProblemFile;
use chernlab::verify::{verify, Status};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/examples/problems/e1.json").into()
    });
    let inst = match ProblemFile::load(path.as_ref()).and_then(|f| f.instance(None)) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("{}", e.message);
            std::process::exit(e.code);
        }
    };
    let report = verify(&inst).expect("verification runs");
    for c in &report.hypotheses.checks {
        println!("{:<22} {:<5} {}", c.name, c.passed, c.witness);
    }
    println!(
        "e = {:?}, λ(L) = {}",
        report.hilbert_k.coefficients, report.lambda_l
    );
    for i in &report.identities {
        let failed: Vec<_> = i.comparisons.iter().filter(|c| !c.equal).collect();
        println!("{:<22} {:?} {}", i.name, i.status, i.message);
        for c in failed {
            println!("    {}: {} != {}", c.at, c.lhs, c.rhs);
        }
    }
    std::process::exit(if report.overall == Status::Pass { 0 } else { 1 });
}
