//! Hilbert-Samuel values `λ(R/K^n)`, exact fitting of the Hilbert
//! polynomial in the alternating binomial basis
//!
//! ```text
//! P(n) = e_0 C(n+d-1, d) - e_1 C(n+d-2, d-1) + ... + (-1)^d e_d
//! ```
//!
//! and the Cohen-Macaulay / Chern-number verdicts built on it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::binomial;
use crate::error::{Error, Result};
use crate::ideal::{ideal_power, ideal_sum, length_quotient, Ideal};

/// `λ(S/(core + J^n))`, which is `λ(R/K^n)` for `R = S/core`, `K = JR`.
pub fn hilbert_samuel(core: &Ideal, j: &Ideal, n: u32) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "Hilbert-Samuel index {n} < 1"
        )));
    }
    length_quotient(&ideal_sum(core, &ideal_power(j, n)?)?)
}

/// `H(n)` for `n = 1..=max_power`, each power computed independently.
pub fn hilbert_values(core: &Ideal, j: &Ideal, max_power: u32) -> Result<Vec<(u32, BigInt)>> {
    (1..=max_power)
        .into_par_iter()
        .map(|n| hilbert_samuel(core, j, n).map(|h| (n, h)))
        .collect()
}

/// `(-1)^i C(n+d-1-i, d-i)`, the `i`-th basis polynomial at `n`.
fn basis_value(n: i64, d: usize, i: usize) -> BigInt {
    let b = binomial(n + d as i64 - 1 - i as i64, (d - i) as i64);
    if i % 2 == 1 {
        -b
    } else {
        b
    }
}

/// Evaluates `Σ (-1)^i e_i C(n+d-1-i, d-i)` with `d = coefficients.len() - 1`.
pub fn hilbert_polynomial(coefficients: &[BigInt], n: i64) -> BigInt {
    let d = coefficients.len() - 1;
    coefficients
        .iter()
        .enumerate()
        .map(|(i, e)| e * basis_value(n, d, i))
        .sum()
}

/// Solves the square system `A x = b` exactly: fraction-free (Bareiss)
/// forward elimination over the integers, back substitution over the
/// rationals.
fn solve_exact(mut a: Vec<Vec<BigInt>>, mut b: Vec<BigInt>) -> Result<Vec<BigRational>> {
    let k = a.len();
    let mut prev = BigInt::one();
    for p in 0..k {
        if a[p][p].is_zero() {
            let swap = (p + 1..k)
                .find(|&r| !a[r][p].is_zero())
                .ok_or_else(|| Error::Internal("singular binomial system".into()))?;
            a.swap(p, swap);
            b.swap(p, swap);
        }
        for r in p + 1..k {
            for c in p + 1..k {
                a[r][c] = (&a[r][c] * &a[p][p] - &a[r][p] * &a[p][c]) / &prev;
            }
            b[r] = (&b[r] * &a[p][p] - &a[r][p] * &b[p]) / &prev;
            a[r][p] = BigInt::zero();
        }
        prev = a[p][p].clone();
    }
    let mut x = vec![BigRational::zero(); k];
    for i in (0..k).rev() {
        let mut acc = BigRational::from_integer(b[i].clone());
        for j in i + 1..k {
            acc -= BigRational::from_integer(a[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(a[i][i].clone());
    }
    Ok(x)
}

fn fit_window(window: &[(u32, BigInt)], d: usize) -> Result<Vec<BigInt>> {
    let a = window
        .iter()
        .map(|(n, _)| (0..=d).map(|i| basis_value(*n as i64, d, i)).collect())
        .collect();
    let b = window.iter().map(|(_, h)| h.clone()).collect();
    solve_exact(a, b)?
        .into_iter()
        .map(|q| {
            if q.is_integer() {
                Ok(q.to_integer())
            } else {
                Err(Error::NonIntegralFit(format!(
                    "coefficient {q} on window starting at n = {}",
                    window[0].0
                )))
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertFit {
    /// `(e_0, ..., e_d)`.
    #[serde(serialize_with = "crate::json::decimals")]
    pub coefficients: Vec<BigInt>,
    /// Smallest recorded `n` from which the polynomial reproduces every
    /// recorded value.
    pub stabilization_index: u32,
}

/// Fits `(e_0, ..., e_d)` to consecutive values.
///
/// Windows of width `d + 1` are solved exactly, starting from the largest
/// `n`. The fit is accepted when the two topmost windows give the same
/// coefficients.
pub fn fit_coefficients(values: &[(u32, BigInt)], d: usize) -> Result<HilbertFit> {
    let mut sorted = values.to_vec();
    sorted.sort_by_key(|v| v.0);
    if sorted.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(Error::InvalidArgument(
            "values must cover consecutive n".into(),
        ));
    }
    let width = d + 1;
    if sorted.len() < width + 1 {
        return Err(Error::FitUnstable(format!(
            "{} values cannot yield two windows of width {width}",
            sorted.len()
        )));
    }
    let top = sorted.len() - width;
    let upper = fit_window(&sorted[top..], d)?;
    let lower = fit_window(&sorted[top - 1..top - 1 + width], d)?;
    if upper != lower {
        return Err(Error::FitUnstable(format!(
            "windows starting at n = {} and n = {} disagree",
            sorted[top - 1].0,
            sorted[top].0
        )));
    }
    let mut n0 = sorted[sorted.len() - 1].0;
    for (n, h) in sorted.iter().rev() {
        if hilbert_polynomial(&upper, *n as i64) != *h {
            break;
        }
        n0 = *n;
    }
    Ok(HilbertFit {
        coefficients: upper,
        stabilization_index: n0,
    })
}

/// A recorded Hilbert function together with its fitted polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct HilbertDataset {
    pub d: usize,
    #[serde(serialize_with = "crate::json::length_table")]
    pub values: BTreeMap<u32, BigInt>,
    #[serde(serialize_with = "crate::json::decimals")]
    pub coefficients: Vec<BigInt>,
    pub stabilization_index: u32,
}

impl HilbertDataset {
    pub fn fit(d: usize, values: Vec<(u32, BigInt)>) -> Result<Self> {
        let fit = fit_coefficients(&values, d)?;
        Ok(HilbertDataset {
            d,
            values: values.into_iter().collect(),
            coefficients: fit.coefficients,
            stabilization_index: fit.stabilization_index,
        })
    }

    pub fn polynomial_at(&self, n: i64) -> BigInt {
        hilbert_polynomial(&self.coefficients, n)
    }

    pub fn e(&self, i: usize) -> &BigInt {
        &self.coefficients[i]
    }

    pub fn max_n(&self) -> u32 {
        self.values.keys().next_back().copied().unwrap_or(0)
    }

    /// Recorded values at `n ≥ from`.
    pub fn tail(&self, from: u32) -> impl Iterator<Item = (u32, &BigInt)> {
        self.values.range(from..).map(|(n, h)| (*n, h))
    }
}

/// `k`-th forward differences of a sequence.
pub fn forward_difference(values: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut cur = values.to_vec();
    for _ in 0..k {
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    cur
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    #[serde(serialize_with = "crate::json::decimal")]
    pub e0: BigInt,
    #[serde(serialize_with = "crate::json::decimal")]
    pub colength: BigInt,
}

/// Cohen-Macaulay test for a parameter ideal: `e_0 = λ(R/K)`.
pub fn cm_test(e0: &BigInt, lambda_rk: &BigInt) -> CmVerdict {
    CmVerdict {
        cohen_macaulay: e0 == lambda_rk,
        e0: e0.clone(),
        colength: lambda_rk.clone(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChernSign {
    Negative,
    Zero,
    Positive,
}

impl fmt::Display for ChernSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChernSign::Negative => "negative",
            ChernSign::Zero => "zero",
            ChernSign::Positive => "positive",
        })
    }
}

pub fn chern_sign(e1: &BigInt) -> ChernSign {
    if e1.is_negative() {
        ChernSign::Negative
    } else if e1.is_zero() {
        ChernSign::Zero
    } else {
        ChernSign::Positive
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingContext;

    fn vals(start: u32, v: &[i64]) -> Vec<(u32, BigInt)> {
        v.iter()
            .enumerate()
            .map(|(k, h)| (start + k as u32, BigInt::from(*h)))
            .collect()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn fits() {
        let f = fit_coefficients(&vals(1, &[1, 3, 6, 10]), 2).unwrap();
        assert_eq!(f.coefficients, ints(&[1, 0, 0]));
        let f = fit_coefficients(&vals(1, &[3, 8, 15, 24]), 2).unwrap();
        assert_eq!(f.coefficients, ints(&[2, -1, 0]));
        assert_eq!(f.stabilization_index, 1);
        let f = fit_coefficients(&vals(1, &[4, 13, 29, 54, 90]), 3).unwrap();
        assert_eq!(f.coefficients, ints(&[2, -1, 1, 0]));
    }

    #[test]
    fn stabilization_after_irregular_start() {
        // H(1) off the polynomial n^2 + 2n
        let f = fit_coefficients(&vals(1, &[5, 8, 15, 24, 35]), 2).unwrap();
        assert_eq!(f.coefficients, ints(&[2, -1, 0]));
        assert_eq!(f.stabilization_index, 2);
    }

    #[test]
    fn fit_errors() {
        assert!(matches!(
            fit_coefficients(&vals(1, &[3, 8, 15]), 2),
            Err(Error::FitUnstable(_))
        ));
        // top windows disagree
        assert!(matches!(
            fit_coefficients(&vals(1, &[3, 8, 15, 24, 40]), 2),
            Err(Error::FitUnstable(_))
        ));
        assert!(matches!(
            fit_coefficients(&vals(1, &[1, 1, 2]), 1),
            Err(Error::FitUnstable(_))
        ));
        assert!(matches!(
            fit_coefficients(
                &[
                    (1, BigInt::from(1)),
                    (3, BigInt::from(2)),
                    (4, BigInt::from(3))
                ],
                1
            ),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn verdicts() {
        assert!(cm_test(&BigInt::from(1), &BigInt::from(1)).cohen_macaulay);
        assert!(!cm_test(&BigInt::from(2), &BigInt::from(3)).cohen_macaulay);
        assert!(!cm_test(&BigInt::from(2), &BigInt::from(4)).cohen_macaulay);
        assert_eq!(chern_sign(&BigInt::from(-1)), ChernSign::Negative);
        assert_eq!(chern_sign(&BigInt::from(0)), ChernSign::Zero);
        assert_eq!(chern_sign(&BigInt::from(5)), ChernSign::Positive);
    }

    #[test]
    fn two_planes_values() {
        let r = RingContext::grevlex(&["x", "y", "z", "w"]).unwrap();
        let core = Ideal::parse(&r, &["x*z", "x*w", "y*z", "y*w"]).unwrap();
        let j = Ideal::parse(&r, &["x+z", "y+w"]).unwrap();
        assert_eq!(hilbert_samuel(&core, &j, 1).unwrap(), BigInt::from(3));
        assert_eq!(hilbert_samuel(&core, &j, 2).unwrap(), BigInt::from(8));
        assert!(hilbert_samuel(&core, &j, 0).is_err());
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        let j = Ideal::parse(&r, &["z", "w"]).unwrap();
        assert_eq!(hilbert_samuel(&i, &j, 3).unwrap(), BigInt::from(6));
        let bad = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert!(matches!(
            hilbert_samuel(&core, &bad, 1),
            Err(Error::NotFiniteLength { .. })
        ));
    }

    #[test]
    fn differences() {
        let h = ints(&[3, 8, 15, 24, 35]);
        assert!(forward_difference(&h, 3).iter().all(|x| x.is_zero()));
        assert_eq!(forward_difference(&h, 2), ints(&[2, 2, 2]));
    }
}
