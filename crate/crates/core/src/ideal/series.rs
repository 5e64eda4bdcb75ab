//! Hilbert series of monomial quotients, kept as `numerator / (1 - t)^s`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{binomial, Monomial};

#[derive(Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    /// Coefficient of `t^i` at index `i`; no trailing zeros.
    numerator: Vec<BigInt>,
    denominator_exponent: usize,
}

impl HilbertSeries {
    /// Builds `numerator / (1 - t)^s` and reduces it to lowest terms.
    pub fn new(numerator: Vec<BigInt>, denominator_exponent: usize) -> Self {
        let mut hs = HilbertSeries {
            numerator,
            denominator_exponent,
        };
        trim(&mut hs.numerator);
        hs.reduce();
        hs
    }

    pub fn zero() -> Self {
        HilbertSeries::new(Vec::new(), 0)
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator_exponent(&self) -> usize {
        self.denominator_exponent
    }

    /// `true` iff the series is a polynomial (finite total dimension).
    pub fn is_polynomial(&self) -> bool {
        self.denominator_exponent == 0
    }

    pub fn numerator_at_one(&self) -> BigInt {
        self.numerator.iter().sum()
    }

    /// Degree of the numerator; `None` when the series is zero.
    pub fn numerator_degree(&self) -> Option<usize> {
        self.numerator.len().checked_sub(1)
    }

    fn reduce(&mut self) {
        while self.denominator_exponent > 0
            && !self.numerator.is_empty()
            && self.numerator_at_one().is_zero()
        {
            // divide by (1 - t): quotient coefficients are prefix sums
            let mut acc = BigInt::zero();
            let mut q = Vec::with_capacity(self.numerator.len() - 1);
            for c in &self.numerator[..self.numerator.len() - 1] {
                acc += c;
                q.push(acc.clone());
            }
            self.numerator = q;
            trim(&mut self.numerator);
            self.denominator_exponent -= 1;
        }
        if self.numerator.is_empty() {
            self.denominator_exponent = 0;
        }
    }

    /// Dimension of the degree-`s` component.
    pub fn coefficient(&self, s: usize) -> BigInt {
        let d = self.denominator_exponent as i64;
        if d == 0 {
            return self.numerator.get(s).cloned().unwrap_or_default();
        }
        self.numerator
            .iter()
            .enumerate()
            .take(s + 1)
            .map(|(j, c)| c * binomial(s as i64 - j as i64 + d - 1, d - 1))
            .sum()
    }

    fn numerator_over(&self, exponent: usize) -> Vec<BigInt> {
        debug_assert!(exponent >= self.denominator_exponent);
        let mut num = self.numerator.clone();
        for _ in self.denominator_exponent..exponent {
            num = mul_one_minus_t_power(&num, 1);
        }
        num
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, true)
    }

    fn combine(&self, other: &HilbertSeries, negate: bool) -> HilbertSeries {
        let s = self.denominator_exponent.max(other.denominator_exponent);
        let a = self.numerator_over(s);
        let b = other.numerator_over(s);
        let n = a.len().max(b.len());
        let num = (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_default();
                let y = b.get(i).cloned().unwrap_or_default();
                if negate {
                    x - y
                } else {
                    x + y
                }
            })
            .collect();
        HilbertSeries::new(num, s)
    }
}

impl fmt::Debug for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})/(1-t)^{}",
            format_poly(&self.numerator),
            self.denominator_exponent
        )
    }
}

fn format_poly(num: &[BigInt]) -> String {
    if num.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in num.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let abs = c.abs();
        match i {
            0 => out.push_str(&abs.to_string()),
            _ => {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                }
                out.push('t');
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
    }
    out
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// `num * (1 - t^k)`.
fn mul_one_minus_t_power(num: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); num.len() + k];
    for (i, c) in num.iter().enumerate() {
        out[i] += c;
        out[i + k] -= c;
    }
    trim(&mut out);
    out
}

fn add_shifted(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
    trim(a);
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.exponents().cmp(b.exponents()))
    });
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of `HS(S/I)` over `(1 - t)^r`, by the pivot recursion
/// `N(I) = N(I + (x)) + t * N(I : x)`.
fn numerator(gens: Vec<Monomial>) -> Vec<BigInt> {
    let gens = minimalize(gens);
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    let nvars = match gens.first() {
        Some(m) => m.nvars(),
        None => return vec![BigInt::one()],
    };
    let mut freq = vec![0usize; nvars];
    let mut mixed = false;
    for g in &gens {
        if g.support().count() > 1 {
            mixed = true;
            for v in g.support() {
                freq[v] += 1;
            }
        }
    }
    if !mixed {
        // pure powers of distinct variables
        return gens.iter().fold(vec![BigInt::one()], |acc, g| {
            mul_one_minus_t_power(&acc, g.degree() as usize)
        });
    }
    let pivot = (0..nvars)
        .max_by(|&a, &b| freq[a].cmp(&freq[b]).then_with(|| b.cmp(&a)))
        .unwrap();
    let x = Monomial::variable(nvars, pivot);

    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exponents()[pivot] == 0)
        .cloned()
        .collect();
    plus.push(x);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let e = g.exponents()[pivot];
            if e > 0 {
                let mut h = g.clone();
                h.set_exponent(pivot, e - 1);
                h
            } else {
                g.clone()
            }
        })
        .collect();

    let mut n = numerator(plus);
    add_shifted(&mut n, &numerator(colon), 1);
    n
}

/// Exact Hilbert series of `S / (monomial ideal)` for the given generators
/// in a ring with `nvars` variables.
pub fn hilbert_series_monomial(leading_terms: &[Monomial], nvars: usize) -> HilbertSeries {
    HilbertSeries::new(numerator(leading_terms.to_vec()), nvars)
}
