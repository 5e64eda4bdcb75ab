//! Koszul and Eagon-Northcott data for a sequence `a_1, ..., a_d`, and the
//! two routes to `λ(Tor_1(L, S/J^n))`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{binomial, Polynomial, RingContext};
use crate::error::{Error, Result};
use crate::graded_module::{jn_colength, TorsionModuleModel};
use crate::ideal::{ideal_power, ideal_sum, length_quotient, Ideal};

/// A dense matrix of polynomials.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(ring: &RingContext, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, f: Polynomial) {
        self.entries[i * self.cols + j] = f;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = self
            .entries
            .first()
            .or(other.entries.first())
            .map(|f| f.ring().clone());
        let Some(ring) = ring else {
            return Ok(PolyMatrix {
                rows: self.rows,
                cols: other.cols,
                entries: Vec::new(),
            });
        };
        let mut out = PolyMatrix::zeros(&ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.try_add(&a.try_mul(b)?)?;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Determinant of the square submatrix on the given columns, by
    /// cofactor expansion along the first row.
    pub fn minor(&self, columns: &[usize]) -> Result<Polynomial> {
        assert_eq!(columns.len(), self.rows, "maximal minors only");
        let rows: Vec<usize> = (0..self.rows).collect();
        self.det(&rows, columns)
    }

    fn det(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
        let ring = self.get(0, 0).ring();
        if rows.is_empty() {
            return Ok(Polynomial::constant(ring, 1));
        }
        let mut acc = Polynomial::zero(ring);
        for (k, &c) in cols.iter().enumerate() {
            let entry = self.get(rows[0], c);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let sub = entry.try_mul(&self.det(&rows[1..], &rest)?)?;
            acc = if k % 2 == 0 {
                acc.try_add(&sub)?
            } else {
                acc.try_sub(&sub)?
            };
        }
        Ok(acc)
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn check_sequence(a: &[Polynomial]) -> Result<&RingContext> {
    let first = a
        .first()
        .ok_or_else(|| Error::InvalidArgument("need at least one element".into()))?;
    if a.iter().any(|f| f.ring() != first.ring()) {
        return Err(Error::ContextMismatch);
    }
    Ok(first.ring())
}

/// The banded `n × (n+d-1)` matrix whose maximal minors generate `J^n`,
/// together with the Betti numbers of `S/J^n`.
#[derive(Debug, Clone)]
pub struct EnResolutionData {
    pub n: usize,
    pub d: usize,
    pub matrix: PolyMatrix,
    pub betti: Vec<BigInt>,
}

impl EnResolutionData {
    /// All `n × n` minors, columns taken in lexicographic order.
    pub fn maximal_minors(&self) -> Result<Vec<Polynomial>> {
        subsets(self.matrix.cols(), self.n)
            .iter()
            .map(|cols| self.matrix.minor(cols))
            .collect()
    }

    pub fn minor_ideal(&self) -> Result<Ideal> {
        let ring = self.matrix.get(0, 0).ring().clone();
        Ideal::new(&ring, self.maximal_minors()?)
    }
}

/// Row `i` carries `a_1, ..., a_d` starting at column `i`.
pub fn en_matrix(a: &[Polynomial], n: usize) -> Result<EnResolutionData> {
    let ring = check_sequence(a)?;
    if n < 1 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let d = a.len();
    let mut matrix = PolyMatrix::zeros(ring, n, n + d - 1);
    for i in 0..n {
        for (k, f) in a.iter().enumerate() {
            matrix.set(i, i + k, f.clone());
        }
    }
    Ok(EnResolutionData {
        n,
        d,
        matrix,
        betti: en_betti_vector(n as u32, d as u32)?,
    })
}

/// `β_i(S/J^n) = C(n+d-1, d-i) C(n+i-2, i-1)` for a complete intersection
/// `J` of `d` elements, `1 ≤ i ≤ d`.
pub fn en_betti(n: u32, d: u32, i: u32) -> Result<BigInt> {
    if n < 1 || i < 1 || i > d {
        return Err(Error::InvalidArgument(format!(
            "Betti index out of range: n={n}, d={d}, i={i}"
        )));
    }
    let (n, d, i) = (n as i64, d as i64, i as i64);
    Ok(binomial(n + d - 1, d - i) * binomial(n + i - 2, i - 1))
}

/// `(β_0, ..., β_d)` with `β_0 = 1`.
pub fn en_betti_vector(n: u32, d: u32) -> Result<Vec<BigInt>> {
    std::iter::once(Ok(BigInt::from(1)))
        .chain((1..=d).map(|i| en_betti(n, d, i)))
        .collect()
}

pub fn euler_characteristic(betti: &[BigInt]) -> BigInt {
    betti
        .iter()
        .enumerate()
        .map(|(i, b)| if i % 2 == 0 { b.clone() } else { -b })
        .sum()
}

/// `C(n+d-1, d-1) λ(L)`, valid when `J` annihilates `L`.
pub fn tor1_closed_form(n: u32, d: u32, lambda_l: &BigInt) -> BigInt {
    binomial(n as i64 + d as i64 - 1, d as i64 - 1) * lambda_l
}

/// `λ(R/K^n) - Σ λ(S/(I_i + J^n)) + λ(L/J^n L)`.
pub fn tor1_from_lengths(quotient: &BigInt, components: &[BigInt], l_colength: &BigInt) -> BigInt {
    quotient - components.iter().sum::<BigInt>() + l_colength
}

pub fn tor1_via_lengths(
    ideals: &[Ideal],
    j: &Ideal,
    model: &TorsionModuleModel,
    n: u32,
) -> Result<BigInt> {
    let jn = ideal_power(j, n)?;
    let quotient = length_quotient(&ideal_sum(model.core(), &jn)?)?;
    let components = ideals
        .iter()
        .map(|i| length_quotient(&ideal_sum(i, &jn)?))
        .collect::<Result<Vec<_>>>()?;
    let colength = jn_colength(model, j, n)?;
    Ok(tor1_from_lengths(&quotient, &components, &colength))
}

/// The Koszul complex `0 → Λ^d → ... → Λ^1 → Λ^0` on `a_1, ..., a_d`.
#[derive(Debug, Clone)]
pub struct KoszulData {
    pub d: usize,
    /// `C(d, k)` for `k = 0..=d`.
    pub ranks: Vec<usize>,
    /// `differentials[k-1]` is `∂_k : Λ^k → Λ^{k-1}`; rows and columns are
    /// indexed by subsets in lexicographic order.
    pub differentials: Vec<PolyMatrix>,
}

impl KoszulData {
    /// Whether `∂_{k-1} ∘ ∂_k = 0` for every `k`.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.differentials.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn rank_sum(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, r)| if k % 2 == 0 { *r as i64 } else { -(*r as i64) })
            .sum()
    }
}

/// `∂(e_{i_1...i_k}) = Σ_j (-1)^{j+1} a_{i_j} e_{i_1..î_j..i_k}`.
pub fn koszul_complex(a: &[Polynomial]) -> Result<KoszulData> {
    let ring = check_sequence(a)?;
    let field = ring.field();
    let d = a.len();
    let bases: Vec<Vec<Vec<usize>>> = (0..=d).map(|k| subsets(d, k)).collect();
    let mut differentials = Vec::with_capacity(d);
    for k in 1..=d {
        let (src, dst) = (&bases[k], &bases[k - 1]);
        let mut m = PolyMatrix::zeros(ring, dst.len(), src.len());
        for (c, set) in src.iter().enumerate() {
            for (j, &idx) in set.iter().enumerate() {
                let face: Vec<usize> = set.iter().copied().filter(|&x| x != idx).collect();
                let r = dst.binary_search(&face).expect("face is a subset");
                let entry = if j % 2 == 0 {
                    a[idx].clone()
                } else {
                    a[idx].scale(field.neg(1))
                };
                m.set(r, c, entry);
            }
        }
        differentials.push(m);
    }
    Ok(KoszulData {
        d,
        ranks: bases.iter().map(Vec::len).collect(),
        differentials,
    })
}

/// Betti table line for the CLI and reports.
#[derive(Debug, Clone, Serialize)]
pub struct BettiTable {
    pub d: u32,
    pub n: u32,
    #[serde(serialize_with = "crate::json::decimals")]
    pub betti: Vec<BigInt>,
    #[serde(serialize_with = "crate::json::decimal")]
    pub euler_characteristic: BigInt,
}

pub fn betti_table(d: u32, n: u32) -> Result<BettiTable> {
    if d < 1 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let betti = en_betti_vector(n, d)?;
    let euler = euler_characteristic(&betti);
    debug_assert!(d < 2 || euler.is_zero());
    Ok(BettiTable {
        d,
        n,
        betti,
        euler_characteristic: euler,
    })
}
