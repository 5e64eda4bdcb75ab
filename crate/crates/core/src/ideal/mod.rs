//! Homogeneous ideals of the graded ring `S`: sums, products, powers,
//! intersections, Krull dimension, Hilbert series and colengths.

mod series;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{poly_parse, Monomial, Polynomial, RingContext};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, normal_form, standard_monomials_of_degree, GroebnerBasis};

pub use series::{hilbert_series_monomial, HilbertSeries};

/// A homogeneous ideal given by generators. The reduced Gröbner basis is
/// computed on first use and cached.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: RingContext,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    /// Zero generators are dropped; every other generator must be
    /// homogeneous and live in `ring`.
    pub fn new(ring: &RingContext, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.ring() != ring {
                return Err(Error::ContextMismatch);
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(g.to_string()));
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            gb: OnceLock::new(),
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &RingContext, generators: &[S]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| poly_parse(s.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &RingContext) -> Self {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &RingContext) -> Self {
        Ideal::new(ring, vec![Polynomial::constant(ring, 1)]).unwrap()
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &RingContext) -> Self {
        Ideal::new(
            ring,
            (0..ring.nvars())
                .map(|i| Polynomial::variable(ring, i))
                .collect(),
        )
        .unwrap()
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            buchberger(&self.generators, &self.ring).expect("generators share the ideal's ring")
        })
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self.groebner_basis())?.is_zero())
    }

    /// Equality as ideals (equal reduced Gröbner bases).
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.groebner_basis() == other.groebner_basis()
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        hilbert_series(self)
    }

    /// `dim_k (S/I)_s`.
    pub fn quotient_dimension_in_degree(&self, s: u32) -> usize {
        standard_monomials_of_degree(self.groebner_basis(), s).len()
    }
}

fn check_same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.ring == b.ring {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same_ring(a, b)?;
    let gens = a.generators.iter().chain(&b.generators).cloned().collect();
    Ideal::new(&a.ring, gens)
}

pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same_ring(a, b)?;
    let mut gens = Vec::with_capacity(a.generators.len() * b.generators.len());
    for f in &a.generators {
        for g in &b.generators {
            gens.push(f * g);
        }
    }
    Ideal::new(&a.ring, gens)
}

/// `A^n`, generated by all products of `n` generators of `A` (with
/// repetition, unordered).
pub fn ideal_power(a: &Ideal, n: u32) -> Result<Ideal> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("ideal power {n} < 1")));
    }
    fn rec(
        gens: &[Polynomial],
        from: usize,
        left: u32,
        acc: &Polynomial,
        out: &mut Vec<Polynomial>,
    ) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for k in from..gens.len() {
            rec(gens, k, left - 1, &(acc * &gens[k]), out);
        }
    }
    let mut out = Vec::new();
    rec(
        &a.generators,
        0,
        n,
        &Polynomial::constant(&a.ring, 1),
        &mut out,
    );
    Ideal::new(&a.ring, out)
}

/// `A ∩ B` by eliminating `t` from `t·A + (1 - t)·B`.
pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same_ring(a, b)?;
    let ext = a.ring.with_elimination_variable();
    let embed = |f: &Polynomial| f.map_monomials(&ext, Monomial::prepend_variable);
    let t = Polynomial::variable(&ext, 0);
    let one_minus_t = &Polynomial::constant(&ext, 1) - &t;
    let mut gens: Vec<Polynomial> = a.generators.iter().map(|f| &t * &embed(f)).collect();
    gens.extend(b.generators.iter().map(|g| &one_minus_t * &embed(g)));
    let gb = buchberger(&gens, &ext)?;
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
        .map(|g| g.map_monomials(&a.ring, Monomial::drop_first_variable))
        .collect();
    Ideal::new(&a.ring, kept).map_err(|e| Error::Internal(format!("intersection: {e}")))
}

/// Krull dimension of `S/A`: the largest set of variables that supports no
/// leading monomial of the Gröbner basis. `-1` for the unit ideal.
pub fn krull_dimension(a: &Ideal) -> i64 {
    let gb = a.groebner_basis();
    if gb.is_unit() {
        return -1;
    }
    let r = a.ring.nvars();
    assert!(r < 64, "dimension search supports fewer than 64 variables");
    let supports: Vec<u64> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support().fold(0u64, |acc, v| acc | (1 << v)))
        .collect();
    let mut best = 0;
    for set in 0u64..(1u64 << r) {
        let size = set.count_ones() as i64;
        if size > best && supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    best
}

pub fn is_mprimary(a: &Ideal) -> bool {
    krull_dimension(a) == 0
}

pub fn hilbert_series(a: &Ideal) -> HilbertSeries {
    hilbert_series_monomial(&a.groebner_basis().leading_monomials(), a.ring.nvars())
}

/// `λ(S/A) = dim_k S/A` for a zero-dimensional (or unit) ideal.
pub fn length_quotient(a: &Ideal) -> Result<BigInt> {
    let dimension = krull_dimension(a);
    if dimension > 0 {
        return Err(Error::NotFiniteLength { dimension });
    }
    if dimension < 0 {
        return Ok(BigInt::zero());
    }
    let gb = a.groebner_basis();
    let lms = gb.leading_monomials();
    for v in 0..a.ring.nvars() {
        let has_power = lms.iter().any(|m| m.support().all(|u| u == v));
        if !has_power {
            return Err(Error::Internal(format!(
                "zero-dimensional ideal without a pure power of variable {v}"
            )));
        }
    }
    let mut total = BigInt::zero();
    let mut s = 0;
    loop {
        let count = standard_monomials_of_degree(gb, s).len();
        if count == 0 {
            return Ok(total);
        }
        total += count;
        s += 1;
    }
}
